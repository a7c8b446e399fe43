#include "dwt2d/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "dwt2d/executor.hpp"
#include "dwt2d/random.hpp"
#include "dwt2d/wavelet.hpp"

namespace dwt2d {

namespace {

double steady_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

template <typename T>
double time_scheme(const Scheme& s, int size, const BenchConfig& cfg,
                   const std::function<double()>& clock) {
  const auto img = random_image<T>(size, size, cfg.seed);
  const auto poly = polyphase_split(img, cfg.extension);
  ExecPlan<T> plan = compile<T>(s, cfg.extension, cfg.workers);
  (void)run(plan, poly);  // warmup, untimed
  std::vector<double> samples;
  samples.reserve(cfg.repeats);
  for (int r = 0; r < cfg.repeats; ++r) {
    const double t0 = clock();
    auto out = run(plan, poly);
    const double t1 = clock();
    samples.push_back(t1 - t0);
  }
  return median(std::move(samples));
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  if (cfg.repeats < 3)
    throw std::invalid_argument("bench: repeats must be at least 3");
  if (cfg.workers < 1)
    throw std::invalid_argument("bench: workers must be at least 1");
  if (cfg.precision_bits != 32 && cfg.precision_bits != 64)
    throw std::invalid_argument("bench: precision must be 32 or 64");
  if (cfg.sizes.empty()) throw std::invalid_argument("bench: no sizes given");
  for (int s : cfg.sizes)
    if (s <= 0 || s % 2 != 0)
      throw std::invalid_argument("bench: sizes must be positive and even");
  if (cfg.kinds.empty()) throw std::invalid_argument("bench: no schemes given");

  const WaveletSpec w = resolve_wavelet(cfg.wavelet);
  const std::function<double()> clock =
      cfg.clock ? cfg.clock : std::function<double()>(steady_seconds);
  const int bytes = cfg.precision_bits / 8;

  std::vector<BenchRecord> records;
  for (SchemeKind kind : cfg.kinds) {
    Scheme s = build_scheme(kind, w);
    if (cfg.optimize) s = optimize_constant_split(s, w);
    for (int size : cfg.sizes) {
      const double secs =
          cfg.precision_bits == 32
              ? time_scheme<float>(s, size, cfg, clock)
              : time_scheme<double>(s, size, cfg, clock);
      BenchRecord r;
      r.scheme = scheme_id(kind) + std::string(cfg.optimize ? "-optimized" : "");
      r.wavelet = w.name();
      r.width = size;
      r.height = size;
      r.megapixels = static_cast<double>(size) * size / 1e6;
      r.precision_bits = cfg.precision_bits;
      r.workers = cfg.workers;
      r.seconds = secs;
      r.throughput_gbps =
          2.0 * size * size * bytes / std::max(secs, 1e-300) / 1e9;
      records.push_back(std::move(r));
    }
  }
  return records;
}

const char* const kCsvHeader =
    "scheme,wavelet,width,height,megapixels,precision,workers,seconds,"
    "throughput_gbps";

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kCsvHeader << "\n";
  char buf[256];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof(buf), "%s,%s,%d,%d,%.3f,%d,%d,%.6f,%.3f\n",
                  r.scheme.c_str(), r.wavelet.c_str(), r.width, r.height,
                  r.megapixels, r.precision_bits, r.workers, r.seconds,
                  r.throughput_gbps);
    out << buf;
  }
}

}  // namespace dwt2d
