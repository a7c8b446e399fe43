#include "dwt2d/equiv.hpp"

#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

#include "dwt2d/executor.hpp"
#include "dwt2d/random.hpp"
#include "dwt2d/scheme.hpp"
#include "dwt2d/wavelet.hpp"

namespace dwt2d {

double max_relative_deviation(const PolyphaseImage<double>& a,
                              const PolyphaseImage<double>& b, int margin) {
  const int w2 = a.comp_width(), h2 = a.comp_height();
  if (b.comp_width() != w2 || b.comp_height() != h2)
    throw std::invalid_argument("max_relative_deviation: size mismatch");
  double max_abs = 0.0, max_diff = 0.0;
  for (int c = 0; c < 4; ++c)
    for (int y = margin; y < h2 - margin; ++y)
      for (int x = margin; x < w2 - margin; ++x) {
        const double va = a.comp[c].at(x, y), vb = b.comp[c].at(x, y);
        max_abs = std::max({max_abs, std::abs(va), std::abs(vb)});
        max_diff = std::max(max_diff, std::abs(va - vb));
      }
  return max_diff / std::max(max_abs, 1e-300);
}

EquivResult run_equivalence(const std::string& wavelet, int size,
                            std::uint64_t seed, Extension ext) {
  const WaveletSpec w = resolve_wavelet(wavelet);

  bool all_exact = true;
  for (const auto& pr : w.pairs()) {
    for (const auto& t : pr.predict.terms()) all_exact &= t.c.is_exact();
    for (const auto& t : pr.update.terms()) all_exact &= t.c.is_exact();
  }

  EquivResult res;
  res.wavelet = w.name();
  res.size = size;
  res.seed = seed;
  res.extension = ext;
  res.margin = ext == Extension::symmetric ? 8 : 0;
  res.tolerance = all_exact ? 1e-12 : 1e-9;

  const auto img = random_image<double>(size, size, seed);
  const auto poly = polyphase_split(img, ext);

  std::vector<std::pair<std::string, PolyphaseImage<double>>> outputs;
  for (SchemeKind kind : all_scheme_kinds()) {
    Scheme base = build_scheme(kind, w);
    Scheme opt = optimize_constant_split(base, w);
    for (const Scheme* s : {&base, &opt}) {
      ExecPlan<double> plan = compile<double>(*s, ext, 1);
      outputs.emplace_back(s->label, run(plan, poly));
    }
  }
  res.variants = static_cast<int>(outputs.size());

  for (std::size_t i = 0; i < outputs.size(); ++i)
    for (std::size_t j = i + 1; j < outputs.size(); ++j) {
      const double dev = max_relative_deviation(outputs[i].second,
                                                outputs[j].second, res.margin);
      if (dev > res.max_deviation) {
        res.max_deviation = dev;
        res.worst_pair = outputs[i].first + " vs " + outputs[j].first;
      }
    }
  res.ok = res.max_deviation <= res.tolerance;
  return res;
}

std::string format_report(const EquivResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "equivalence wavelet=%s size=%d seed=%llu extension=%s "
                "variants=%d margin=%d\nmax relative deviation %.3e "
                "(tolerance %.0e)",
                r.wavelet.c_str(), r.size,
                static_cast<unsigned long long>(r.seed),
                r.extension == Extension::periodic ? "periodic" : "symmetric",
                r.variants, r.margin, r.max_deviation, r.tolerance);
  std::string out = buf;
  if (!r.worst_pair.empty()) out += " between " + r.worst_pair;
  out += r.ok ? "\nPASS" : "\nFAIL";
  return out;
}

}  // namespace dwt2d
