#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dwt2d/bench.hpp"
#include "dwt2d/equiv.hpp"
#include "dwt2d/executor.hpp"
#include "dwt2d/io_error.hpp"
#include "dwt2d/pgm.hpp"
#include "dwt2d/scheme.hpp"
#include "dwt2d/subbands.hpp"
#include "dwt2d/wavelet.hpp"

namespace {

using namespace dwt2d;

Extension parse_extension(const std::string& s) {
  if (s == "periodic") return Extension::periodic;
  if (s == "symmetric") return Extension::symmetric;
  throw std::invalid_argument("unknown extension: " + s);
}

Scheme make_scheme(const std::string& wavelet, const std::string& scheme_id_s,
                   bool optimize) {
  const WaveletSpec w = resolve_wavelet(wavelet);
  Scheme s = build_scheme(scheme_from_id(scheme_id_s), w);
  if (optimize) s = optimize_constant_split(s, w);
  return s;
}

int cmd_describe(const std::string& wavelet, const std::string& scheme_id_s,
                 bool optimize) {
  std::cout << describe(make_scheme(wavelet, scheme_id_s, optimize));
  return 0;
}

int cmd_count(const std::string& wavelet) {
  const WaveletSpec w = resolve_wavelet(wavelet);
  std::cout << "wavelet,scheme,variant,steps,operations\n";
  for (SchemeKind kind : all_scheme_kinds()) {
    const Scheme base = build_scheme(kind, w);
    const Scheme opt = optimize_constant_split(base, w);
    for (const Scheme* s : {&base, &opt})
      std::cout << w.name() << "," << scheme_id(kind) << ","
                << (s->optimized ? "optimized" : "baseline") << ","
                << count_steps(*s) << "," << count_operations(*s) << "\n";
  }
  return 0;
}

int cmd_equiv(const std::string& wavelet, int size, std::uint64_t seed,
              const std::string& ext_s) {
  EquivResult r = run_equivalence(wavelet, size, seed, parse_extension(ext_s));
  std::cout << format_report(r) << "\n";
  return r.ok ? 0 : 1;
}

template <typename T>
void transform_and_write(const ImagePlane<double>& img, const Scheme& s,
                         Extension ext, int workers,
                         const std::filesystem::path& out_dir) {
  ImagePlane<T> plane(img.width, img.height);
  for (std::size_t i = 0; i < img.samples.size(); ++i)
    plane.samples[i] = static_cast<T>(img.samples[i]);
  auto poly = polyphase_split(plane, ext);
  ExecPlan<T> plan = compile<T>(s, ext, workers);
  auto out = run(plan, poly);
  write_subbands(out, out_dir);
}

int cmd_transform(const std::string& input, const std::string& out_dir,
                  const std::string& wavelet, const std::string& scheme_id_s,
                  bool optimize, const std::string& ext_s, int precision,
                  int workers) {
  if (precision != 32 && precision != 64)
    throw std::invalid_argument("precision must be 32 or 64");
  const Extension ext = parse_extension(ext_s);
  const Scheme s = make_scheme(wavelet, scheme_id_s, optimize);
  const ImagePlane<double> img = read_pgm(input);
  if (precision == 32)
    transform_and_write<float>(img, s, ext, workers, out_dir);
  else
    transform_and_write<double>(img, s, ext, workers, out_dir);
  std::cout << "wrote " << out_dir << "/{ee,oe,eo,oo}.raw: " << img.width / 2
            << "x" << img.height / 2 << " per component, " << precision
            << "-bit, scheme " << s.label << ", wavelet " << s.wavelet << "\n";
  return 0;
}

int cmd_bench(const BenchConfig& cfg, const std::string& out_path) {
  const auto records = run_bench(cfg);
  if (out_path.empty()) {
    write_csv(std::cout, records);
  } else {
    std::ofstream out(out_path);
    if (!out) throw IoError("bench: cannot create " + out_path);
    write_csv(out, records);
    if (!out) throw IoError("bench: write failed: " + out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-D discrete wavelet transform schemes: analysis, execution, benchmarks"};
  app.require_subcommand(1);

  std::string wavelet = "cdf53";
  std::string scheme_id_s = "separable-lifting";
  std::string extension = "periodic";
  std::string input, out_path;
  std::string bench_scheme = "all";
  bool optimize = false;
  int size = 64, precision = 64, workers = 1, repeats = 3;
  int bench_precision = 32;
  std::uint64_t seed = 1;
  std::vector<int> sizes = {256, 512, 1024, 2048, 4096};

  auto* describe_cmd = app.add_subcommand("describe", "print a scheme's factor matrices");
  describe_cmd->add_option("--wavelet", wavelet, "built-in name or definition file");
  describe_cmd->add_option("--scheme", scheme_id_s, "scheme id");
  describe_cmd->add_flag("--optimize", optimize, "apply the constant-split optimization");

  auto* count_cmd = app.add_subcommand("count", "per-scheme step and operation counts (CSV)");
  count_cmd->add_option("--wavelet", wavelet);

  auto* equiv_cmd = app.add_subcommand("equiv", "cross-scheme equivalence check on a seeded image");
  equiv_cmd->add_option("--wavelet", wavelet);
  equiv_cmd->add_option("--size", size, "square image size (must be even)");
  equiv_cmd->add_option("--seed", seed);
  equiv_cmd->add_option("--extension", extension)
      ->check(CLI::IsMember({"periodic", "symmetric"}));

  auto* transform_cmd = app.add_subcommand("transform", "transform a PGM image and write raw subbands");
  transform_cmd->add_option("input", input, "input PGM (P2 or P5)")->required();
  transform_cmd->add_option("--out", out_path, "output directory")->required();
  transform_cmd->add_option("--wavelet", wavelet);
  transform_cmd->add_option("--scheme", scheme_id_s);
  transform_cmd->add_flag("--optimize", optimize);
  transform_cmd->add_option("--extension", extension)
      ->check(CLI::IsMember({"periodic", "symmetric"}));
  transform_cmd->add_option("--precision", precision, "32 or 64");
  transform_cmd->add_option("--workers", workers);

  auto* bench_cmd = app.add_subcommand("bench", "timing sweep, CSV output");
  bench_cmd->add_option("--wavelet", wavelet);
  bench_cmd->add_option("--scheme", bench_scheme, "scheme id or 'all'");
  bench_cmd->add_flag("--optimize", optimize);
  bench_cmd->add_option("--sizes", sizes, "square sizes to sweep");
  bench_cmd->add_option("--workers", workers);
  bench_cmd->add_option("--repeats", repeats, "timed runs per point (>= 3)");
  bench_cmd->add_option("--precision", bench_precision, "32 or 64");
  bench_cmd->add_option("--seed", seed);
  bench_cmd->add_option("--extension", extension)
      ->check(CLI::IsMember({"periodic", "symmetric"}));
  bench_cmd->add_option("--out", out_path, "CSV file (stdout when omitted)");

  try {
    app.parse(argc, argv);

    if (app.got_subcommand(describe_cmd))
      return cmd_describe(wavelet, scheme_id_s, optimize);
    if (app.got_subcommand(count_cmd)) return cmd_count(wavelet);
    if (app.got_subcommand(equiv_cmd))
      return cmd_equiv(wavelet, size, seed, extension);
    if (app.got_subcommand(transform_cmd))
      return cmd_transform(input, out_path, wavelet, scheme_id_s, optimize,
                           extension, precision, workers);
    if (app.got_subcommand(bench_cmd)) {
      BenchConfig cfg;
      cfg.wavelet = wavelet;
      if (bench_scheme != "all") cfg.kinds = {scheme_from_id(bench_scheme)};
      cfg.optimize = optimize;
      cfg.sizes = sizes;
      cfg.workers = workers;
      cfg.repeats = repeats;
      cfg.precision_bits = bench_precision;
      cfg.seed = seed;
      cfg.extension = parse_extension(extension);
      return cmd_bench(cfg, out_path);
    }
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const PgmError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
