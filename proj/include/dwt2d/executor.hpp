#pragma once

#include <algorithm>
#include <barrier>
#include <cstddef>
#include <thread>
#include <type_traits>
#include <vector>

#include "dwt2d/image.hpp"
#include "dwt2d/scheme.hpp"

namespace dwt2d {

template <typename T>
struct Tap {
  int dm = 0;  // horizontal component-grid offset (key m reads x + m)
  int dn = 0;
  T w = T(0);
};

// Everything needed to produce one output component of one kernel. Taps are
// ordered by source component, then row-major by offset; the accumulation
// order is part of the contract so results are bit-identical regardless of
// the worker partition.
template <typename T>
struct OutputStencil {
  std::array<std::vector<Tap<T>>, 4> taps;
  bool identity = false;  // plain copy of the matching input component
  T scale = T(1);
  int min_dm = 0, max_dm = 0, min_dn = 0, max_dn = 0;
};

template <typename T>
struct Kernel {
  std::array<OutputStencil<T>, 4> out;
};

// Compiled form of a scheme: one stencil kernel per fused group, each group
// composed symbolically into a single matrix beforehand. Size-agnostic.
template <typename T>
struct ExecPlan {
  static_assert(std::is_floating_point_v<T>);
  std::vector<Kernel<T>> kernels;
  Extension extension = Extension::periodic;
  int worker_count = 1;
  // set by run: one barrier per step, counting the entry barrier, matching
  // the scheme's step structure
  long barrier_count = 0;
};

template <typename T>
ExecPlan<T> compile(const Scheme& s, Extension ext, int workers) {
  if (workers < 1)
    throw std::invalid_argument("compile: worker count must be at least 1");
  ExecPlan<T> plan;
  plan.extension = ext;
  plan.worker_count = workers;
  const std::size_t nsteps = s.steps.size();
  plan.kernels.reserve(nsteps);
  for (std::size_t i = 0; i < nsteps; ++i) {
    PolyMatrix c = s.steps[i].composed();
    if (c.rows() != 4 || c.cols() != 4)
      throw std::invalid_argument("compile: scheme matrices must be 4x4");
    const bool first = (i == 0), last = (i + 1 == nsteps);
    Kernel<T> k;
    for (int r = 0; r < 4; ++r) {
      OutputStencil<T>& st = k.out[r];
      bool ident_row = true;
      for (int j = 0; j < 4; ++j) {
        const LaurentPoly& p = c.at(r, j);
        if (j == r ? !p.is_one() : !p.is_zero()) {
          ident_row = false;
          break;
        }
      }
      const double post = last ? s.post_scale[r] : 1.0;
      if (ident_row && post == 1.0 && (!first || s.pre_scale[r] == 1.0)) {
        st.identity = true;
        continue;
      }
      st.scale = static_cast<T>(post);
      for (int j = 0; j < 4; ++j) {
        const double pre = first ? s.pre_scale[j] : 1.0;
        std::vector<Term> terms = c.at(r, j).terms();
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) {
                    return std::pair(a.e.n, a.e.m) < std::pair(b.e.n, b.e.m);
                  });
        for (const auto& t : terms) {
          Tap<T> tap{t.e.m, t.e.n, static_cast<T>(t.c.value() * pre)};
          st.min_dm = std::min(st.min_dm, tap.dm);
          st.max_dm = std::max(st.max_dm, tap.dm);
          st.min_dn = std::min(st.min_dn, tap.dn);
          st.max_dn = std::max(st.max_dn, tap.dn);
          st.taps[j].push_back(tap);
        }
      }
    }
    plan.kernels.push_back(std::move(k));
  }
  return plan;
}

namespace detail {

template <typename T>
struct FlatTap {
  std::ptrdiff_t off;  // dn * width + dm, valid away from the borders
  int dm, dn, comp;
  T w;
};

template <typename T>
struct FlatRow {
  std::vector<FlatTap<T>> taps;
  bool identity = false;
  T scale = T(1);
  int min_dm = 0, max_dm = 0, min_dn = 0, max_dn = 0;
};

template <typename T>
using FlatKernel = std::array<FlatRow<T>, 4>;

template <typename T>
std::vector<FlatKernel<T>> flatten(const ExecPlan<T>& plan, int w2) {
  std::vector<FlatKernel<T>> out(plan.kernels.size());
  for (std::size_t k = 0; k < plan.kernels.size(); ++k)
    for (int r = 0; r < 4; ++r) {
      const OutputStencil<T>& st = plan.kernels[k].out[r];
      FlatRow<T>& fr = out[k][r];
      fr.identity = st.identity;
      fr.scale = st.scale;
      fr.min_dm = st.min_dm;
      fr.max_dm = st.max_dm;
      fr.min_dn = st.min_dn;
      fr.max_dn = st.max_dn;
      for (int j = 0; j < 4; ++j)
        for (const Tap<T>& t : st.taps[j])
          fr.taps.push_back(
              {static_cast<std::ptrdiff_t>(t.dn) * w2 + t.dm, t.dm, t.dn, j, t.w});
    }
  return out;
}

template <typename T>
void apply_rows(const FlatKernel<T>& k, const PolyphaseImage<T>& src,
                PolyphaseImage<T>& dst, Extension ext, int y0, int y1) {
  const int w2 = src.comp_width(), h2 = src.comp_height();
  std::array<const T*, 4> sp;
  for (int j = 0; j < 4; ++j) sp[j] = src.comp[j].samples.data();
  for (int r = 0; r < 4; ++r) {
    const FlatRow<T>& fr = k[r];
    if (fr.identity) {
      for (int y = y0; y < y1; ++y)
        std::copy_n(src.comp[r].row(y), w2, dst.comp[r].row(y));
      continue;
    }
    auto eval_edge = [&](int x, int y) {
      T acc = T(0);
      for (const auto& f : fr.taps) {
        const int xx = extend_index(x + f.dm, w2, ext);
        const int yy = extend_index(y + f.dn, h2, ext);
        acc += f.w * sp[f.comp][static_cast<std::size_t>(yy) * w2 + xx];
      }
      return acc * fr.scale;
    };
    for (int y = y0; y < y1; ++y) {
      T* out = dst.comp[r].row(y);
      const bool ysafe = (y + fr.min_dn >= 0) && (y + fr.max_dn < h2);
      if (!ysafe) {
        for (int x = 0; x < w2; ++x) out[x] = eval_edge(x, y);
        continue;
      }
      const int xa = std::min(w2, std::max(0, -fr.min_dm));
      const int xb = std::max(xa, w2 - std::max(0, fr.max_dm));
      for (int x = 0; x < xa; ++x) out[x] = eval_edge(x, y);
      const std::ptrdiff_t rowbase = static_cast<std::ptrdiff_t>(y) * w2;
      for (int x = xa; x < xb; ++x) {
        T acc = T(0);
        const std::ptrdiff_t pos = rowbase + x;
        for (const auto& f : fr.taps) acc += f.w * sp[f.comp][pos + f.off];
        out[x] = acc * fr.scale;
      }
      for (int x = xb; x < w2; ++x) out[x] = eval_edge(x, y);
    }
  }
}

}  // namespace detail

// Executes the plan on a polyphase image. Double-buffered: kernels never
// write the buffer they read, so any worker count yields bit-identical
// output. Work is split into horizontal bands of component rows, one band
// per worker, with a full barrier separating consecutive kernels.
template <typename T>
PolyphaseImage<T> run(ExecPlan<T>& plan, const PolyphaseImage<T>& in) {
  const int w2 = in.comp_width(), h2 = in.comp_height();
  if (w2 <= 0 || h2 <= 0) throw std::invalid_argument("run: empty input");
  for (const auto& c : in.comp)
    if (c.width != w2 || c.height != h2)
      throw std::invalid_argument("run: component size mismatch");
  if (in.extension != plan.extension)
    throw std::invalid_argument("run: extension mode mismatch");

  plan.barrier_count = 0;
  PolyphaseImage<T> a = in;
  if (plan.kernels.empty()) return a;
  PolyphaseImage<T> b;
  b.extension = in.extension;
  for (auto& c : b.comp) c = ImagePlane<T>(w2, h2);

  const auto flat = detail::flatten(plan, w2);
  const int workers = plan.worker_count;
  const int rows_per = (h2 + workers - 1) / workers;

  std::barrier<> bar(workers);
  auto worker_fn = [&](int wi) {
    PolyphaseImage<T>* src = &a;
    PolyphaseImage<T>* dst = &b;
    const int y0 = std::min(h2, wi * rows_per);
    const int y1 = std::min(h2, y0 + rows_per);
    for (std::size_t k = 0; k < flat.size(); ++k) {
      bar.arrive_and_wait();
      if (wi == 0) ++plan.barrier_count;
      detail::apply_rows(flat[k], *src, *dst, plan.extension, y0, y1);
      std::swap(src, dst);
    }
  };
  {
    // The calling thread serves as worker 0; only the rest are spawned.
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (int wi = 1; wi < workers; ++wi) pool.emplace_back(worker_fn, wi);
    worker_fn(0);
  }
  return plan.kernels.size() % 2 == 1 ? std::move(b) : std::move(a);
}

// Undoes any forward scheme of the same wavelet by running the reversed
// lifting steps with negated polynomials, using the image's extension mode.
template <typename T>
PolyphaseImage<T> inverse_lifting(const WaveletSpec& w,
                                  const PolyphaseImage<T>& p, int workers = 1) {
  Scheme inv = build_inverse_lifting(w);
  ExecPlan<T> plan = compile<T>(inv, p.extension, workers);
  return run(plan, p);
}

}  // namespace dwt2d
