#include "dwt2d/scheme.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dwt2d {

namespace {

LaurentPoly one() { return LaurentPoly::constant(Coeff(1)); }

PolyMatrix lift4(int r1, int c1, int r2, int c2, const LaurentPoly& p) {
  PolyMatrix m = PolyMatrix::identity(4);
  m.at(r1, c1) = p;
  m.at(r2, c2) = p;
  return m;
}

std::array<double, 4> scale_diag(double zeta) {
  // per axis the low band gains zeta and the high band 1/zeta
  return {zeta * zeta, 1.0, 1.0, 1.0 / (zeta * zeta)};
}

Scheme make_scheme(SchemeKind kind, const WaveletSpec& w,
                   std::vector<FusedGroup> steps) {
  Scheme s;
  s.kind = kind;
  s.label = scheme_label(kind);
  s.wavelet = w.name();
  s.steps = std::move(steps);
  s.post_scale = scale_diag(w.scaling());
  return s;
}

bool same_steps(const Scheme& a, const Scheme& b) {
  if (a.steps.size() != b.steps.size()) return false;
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    if (a.steps[i].factors.size() != b.steps[i].factors.size()) return false;
    for (std::size_t j = 0; j < a.steps[i].factors.size(); ++j)
      if (a.steps[i].factors[j] != b.steps[i].factors[j]) return false;
  }
  return a.pre_scale == b.pre_scale && a.post_scale == b.post_scale;
}

}  // namespace

const char* scheme_id(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::separable_convolution: return "separable-convolution";
    case SchemeKind::separable_lifting: return "separable-lifting";
    case SchemeKind::nonseparable_convolution:
      return "nonseparable-convolution";
    case SchemeKind::nonseparable_polyconvolution:
      return "nonseparable-polyconvolution";
    case SchemeKind::nonseparable_lifting: return "nonseparable-lifting";
    case SchemeKind::inverse_lifting: return "inverse-lifting";
  }
  return "?";
}

const char* scheme_label(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::separable_convolution: return "separable convolution";
    case SchemeKind::separable_lifting: return "separable lifting";
    case SchemeKind::nonseparable_convolution:
      return "non-separable convolution";
    case SchemeKind::nonseparable_polyconvolution:
      return "non-separable polyconvolution";
    case SchemeKind::nonseparable_lifting: return "non-separable lifting";
    case SchemeKind::inverse_lifting: return "inverse separable lifting";
  }
  return "?";
}

SchemeKind scheme_from_id(const std::string& id) {
  for (SchemeKind k : all_scheme_kinds())
    if (id == scheme_id(k)) return k;
  std::string msg = "unknown scheme: " + id + " (valid:";
  for (SchemeKind k : all_scheme_kinds()) msg += std::string(" ") + scheme_id(k);
  msg += ")";
  throw std::invalid_argument(msg);
}

std::vector<SchemeKind> all_scheme_kinds() {
  return {SchemeKind::separable_convolution, SchemeKind::separable_lifting,
          SchemeKind::nonseparable_convolution,
          SchemeKind::nonseparable_polyconvolution,
          SchemeKind::nonseparable_lifting};
}

PolyMatrix FusedGroup::composed() const {
  if (factors.empty()) throw std::logic_error("empty fused group");
  PolyMatrix acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i)
    acc = mat_mul(acc, factors[i]);
  return acc;
}

PolyMatrix Scheme::total() const {
  PolyMatrix acc = PolyMatrix::identity(4);
  for (const auto& step : steps) acc = mat_mul(step.composed(), acc);
  return acc;
}

PolyMatrix predict_h(const LaurentPoly& p) {
  return lift4(1, 0, 3, 2, embed(p, Axis::horizontal));
}

PolyMatrix predict_v(const LaurentPoly& p) {
  return lift4(2, 0, 3, 1, embed(p, Axis::vertical));
}

PolyMatrix update_h(const LaurentPoly& u) {
  return lift4(0, 1, 2, 3, embed(u, Axis::horizontal));
}

PolyMatrix update_v(const LaurentPoly& u) {
  return lift4(0, 2, 1, 3, embed(u, Axis::vertical));
}

LiftingSteps2D lifting_steps_2d(const LaurentPoly& p, const LaurentPoly& u) {
  return {predict_h(p), predict_v(p), update_h(u), update_v(u)};
}

PolyMatrix spatial_predict(const LaurentPoly& p) {
  LaurentPoly ph = embed(p, Axis::horizontal);
  LaurentPoly pv = transpose(ph);
  PolyMatrix m = PolyMatrix::identity(4);
  m.at(1, 0) = ph;
  m.at(2, 0) = pv;
  m.at(3, 0) = ph * pv;
  m.at(3, 1) = pv;
  m.at(3, 2) = ph;
  return m;
}

PolyMatrix spatial_update(const LaurentPoly& u) {
  LaurentPoly uh = embed(u, Axis::horizontal);
  LaurentPoly uv = transpose(uh);
  PolyMatrix m = PolyMatrix::identity(4);
  m.at(0, 1) = uh;
  m.at(0, 2) = uv;
  m.at(0, 3) = uh * uv;
  m.at(1, 3) = uv;
  m.at(2, 3) = uh;
  return m;
}

PolyMatrix polyconv_matrix(const LaurentPoly& p, const LaurentPoly& u) {
  LaurentPoly ph = embed(p, Axis::horizontal);
  LaurentPoly uh = embed(u, Axis::horizontal);
  LaurentPoly v = ph * uh + one();
  LaurentPoly pt = transpose(ph);
  LaurentPoly ut = transpose(uh);
  LaurentPoly vt = transpose(v);
  PolyMatrix m(4, 4);
  m.at(0, 0) = vt * v;
  m.at(0, 1) = vt * uh;
  m.at(0, 2) = ut * v;
  m.at(0, 3) = ut * uh;
  m.at(1, 0) = vt * ph;
  m.at(1, 1) = vt;
  m.at(1, 2) = ut * ph;
  m.at(1, 3) = ut;
  m.at(2, 0) = pt * v;
  m.at(2, 1) = pt * uh;
  m.at(2, 2) = v;
  m.at(2, 3) = uh;
  m.at(3, 0) = pt * ph;
  m.at(3, 1) = pt;
  m.at(3, 2) = ph;
  m.at(3, 3) = one();
  return m;
}

PolyMatrix polyphase_1d(const WaveletSpec& w) {
  PolyMatrix acc = PolyMatrix::identity(2);
  for (const auto& pr : w.pairs()) {
    PolyMatrix t = PolyMatrix::identity(2);
    t.at(1, 0) = embed(pr.predict, Axis::horizontal);
    PolyMatrix s = PolyMatrix::identity(2);
    s.at(0, 1) = embed(pr.update, Axis::horizontal);
    acc = mat_mul(s, mat_mul(t, acc));
  }
  return acc;
}

Scheme build_separable_convolution(const WaveletSpec& w) {
  PolyMatrix nh = PolyMatrix::identity(4);
  PolyMatrix nv = PolyMatrix::identity(4);
  for (const auto& pr : w.pairs()) {
    nh = mat_mul(update_h(pr.update), mat_mul(predict_h(pr.predict), nh));
    nv = mat_mul(update_v(pr.update), mat_mul(predict_v(pr.predict), nv));
  }
  std::vector<FusedGroup> steps;
  steps.push_back({{nh}});
  steps.push_back({{nv}});
  return make_scheme(SchemeKind::separable_convolution, w, std::move(steps));
}

Scheme build_separable_lifting(const WaveletSpec& w) {
  std::vector<FusedGroup> steps;
  for (const auto& pr : w.pairs()) {
    steps.push_back({{predict_h(pr.predict)}});
    steps.push_back({{predict_v(pr.predict)}});
    steps.push_back({{update_h(pr.update)}});
    steps.push_back({{update_v(pr.update)}});
  }
  return make_scheme(SchemeKind::separable_lifting, w, std::move(steps));
}

Scheme build_nonseparable_convolution(const WaveletSpec& w) {
  PolyMatrix nh = PolyMatrix::identity(4);
  PolyMatrix nv = PolyMatrix::identity(4);
  for (const auto& pr : w.pairs()) {
    nh = mat_mul(update_h(pr.update), mat_mul(predict_h(pr.predict), nh));
    nv = mat_mul(update_v(pr.update), mat_mul(predict_v(pr.predict), nv));
  }
  std::vector<FusedGroup> steps;
  steps.push_back({{mat_mul(nv, nh)}});
  return make_scheme(SchemeKind::nonseparable_convolution, w, std::move(steps));
}

Scheme build_nonseparable_polyconvolution(const WaveletSpec& w) {
  std::vector<FusedGroup> steps;
  for (const auto& pr : w.pairs())
    steps.push_back({{polyconv_matrix(pr.predict, pr.update)}});
  return make_scheme(SchemeKind::nonseparable_polyconvolution, w,
                     std::move(steps));
}

Scheme build_nonseparable_lifting(const WaveletSpec& w) {
  std::vector<FusedGroup> steps;
  for (const auto& pr : w.pairs()) {
    steps.push_back({{spatial_predict(pr.predict)}});
    steps.push_back({{spatial_update(pr.update)}});
  }
  return make_scheme(SchemeKind::nonseparable_lifting, w, std::move(steps));
}

Scheme build_scheme(SchemeKind kind, const WaveletSpec& w) {
  switch (kind) {
    case SchemeKind::separable_convolution:
      return build_separable_convolution(w);
    case SchemeKind::separable_lifting: return build_separable_lifting(w);
    case SchemeKind::nonseparable_convolution:
      return build_nonseparable_convolution(w);
    case SchemeKind::nonseparable_polyconvolution:
      return build_nonseparable_polyconvolution(w);
    case SchemeKind::nonseparable_lifting:
      return build_nonseparable_lifting(w);
    case SchemeKind::inverse_lifting: break;
  }
  throw std::invalid_argument("build_scheme: not a forward scheme kind");
}

Scheme build_inverse_lifting(const WaveletSpec& w) {
  std::vector<FusedGroup> steps;
  const auto& pairs = w.pairs();
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    steps.push_back({{update_v(-it->update)}});
    steps.push_back({{update_h(-it->update)}});
    steps.push_back({{predict_v(-it->predict)}});
    steps.push_back({{predict_h(-it->predict)}});
  }
  Scheme s;
  s.kind = SchemeKind::inverse_lifting;
  s.label = scheme_label(s.kind);
  s.wavelet = w.name();
  s.steps = std::move(steps);
  std::array<double, 4> d = scale_diag(w.scaling());
  s.pre_scale = {1.0 / d[0], 1.0 / d[1], 1.0 / d[2], 1.0 / d[3]};
  return s;
}

Scheme optimize_constant_split(const Scheme& s, const WaveletSpec& w) {
  if (s.optimized)
    throw std::invalid_argument("optimize_constant_split: already optimized");
  if (s.kind == SchemeKind::inverse_lifting)
    throw std::invalid_argument(
        "optimize_constant_split: inverse schemes are not optimizable");
  if (s.wavelet != w.name() || !same_steps(s, build_scheme(s.kind, w)))
    throw std::invalid_argument(
        "optimize_constant_split: scheme was not built from this wavelet");

  Scheme out = s;
  out.optimized = true;
  out.label = std::string(scheme_label(s.kind)) + " (optimized)";
  if (s.kind == SchemeKind::separable_lifting) return out;

  const auto& pairs = w.pairs();
  out.steps.clear();

  if (s.kind == SchemeKind::nonseparable_lifting) {
    for (const auto& pr : pairs) {
      auto [p0, p1] = split_constant(pr.predict);
      FusedGroup predict;
      predict.factors.push_back(spatial_predict(p1));
      if (!p0.is_zero()) {
        predict.factors.push_back(predict_v(p0));
        predict.factors.push_back(predict_h(p0));
      }
      out.steps.push_back(std::move(predict));

      auto [u0, u1] = split_constant(pr.update);
      FusedGroup update;
      update.factors.push_back(spatial_update(u1));
      if (!u0.is_zero()) {
        update.factors.push_back(update_v(u0));
        update.factors.push_back(update_h(u0));
      }
      out.steps.push_back(std::move(update));
    }
    return out;
  }

  if (s.kind == SchemeKind::nonseparable_polyconvolution) {
    for (const auto& pr : pairs) {
      auto [p0, p1] = split_constant(pr.predict);
      auto [u0, u1] = split_constant(pr.update);
      FusedGroup g;
      if (!u0.is_zero()) {
        g.factors.push_back(update_v(u0));
        g.factors.push_back(update_h(u0));
      }
      g.factors.push_back(polyconv_matrix(p1, u1));
      if (!p0.is_zero()) {
        g.factors.push_back(predict_v(p0));
        g.factors.push_back(predict_h(p0));
      }
      out.steps.push_back(std::move(g));
    }
    return out;
  }

  // convolution schemes: only the outermost constants can move across the
  // collapsed product, i.e. the first predict and the last update
  auto [pf0, pf1] = split_constant(pairs.front().predict);
  auto [ul0, ul1] = split_constant(pairs.back().update);
  PolyMatrix mh = PolyMatrix::identity(4);
  PolyMatrix mv = PolyMatrix::identity(4);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const LaurentPoly& p = (k == 0) ? pf1 : pairs[k].predict;
    const LaurentPoly& u = (k + 1 == pairs.size()) ? ul1 : pairs[k].update;
    mh = mat_mul(update_h(u), mat_mul(predict_h(p), mh));
    mv = mat_mul(update_v(u), mat_mul(predict_v(p), mv));
  }

  if (s.kind == SchemeKind::separable_convolution) {
    FusedGroup h, v;
    if (!ul0.is_zero()) h.factors.push_back(update_h(ul0));
    h.factors.push_back(mh);
    if (!pf0.is_zero()) h.factors.push_back(predict_h(pf0));
    if (!ul0.is_zero()) v.factors.push_back(update_v(ul0));
    v.factors.push_back(mv);
    if (!pf0.is_zero()) v.factors.push_back(predict_v(pf0));
    out.steps.push_back(std::move(h));
    out.steps.push_back(std::move(v));
    return out;
  }

  // non-separable convolution
  FusedGroup g;
  if (!ul0.is_zero()) {
    g.factors.push_back(update_v(ul0));
    g.factors.push_back(update_h(ul0));
  }
  g.factors.push_back(mat_mul(mv, mh));
  if (!pf0.is_zero()) {
    g.factors.push_back(predict_v(pf0));
    g.factors.push_back(predict_h(pf0));
  }
  out.steps.push_back(std::move(g));
  return out;
}

std::size_t count_steps(const Scheme& s) { return s.steps.size(); }

long count_operations(const Scheme& s) {
  long ops = 0;
  for (const auto& g : s.steps)
    for (const auto& m : g.factors)
      for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r) {
          const LaurentPoly& p = m.at(r, c);
          ops += static_cast<long>(r == c ? (p - one()).term_count()
                                          : p.term_count());
        }
  return ops;
}

std::pair<int, int> row_image_support(const PolyMatrix& m, int row) {
  if (m.cols() != 4 && m.cols() != 2)
    throw std::invalid_argument("row_image_support: expected 2x2 or 4x4");
  int lo_m = std::numeric_limits<int>::max(), hi_m = std::numeric_limits<int>::min();
  int lo_n = lo_m, hi_n = hi_m;
  for (int j = 0; j < m.cols(); ++j) {
    const int jm = (m.cols() == 4) ? (j & 1) : j;
    const int jn = (m.cols() == 4) ? (j >> 1) : 0;
    for (const auto& t : m.at(row, j).terms()) {
      // component-grid tap (m, n) sits 2m+jm, 2n+jn samples away on the
      // full-resolution grid
      lo_m = std::min(lo_m, 2 * t.e.m + jm);
      hi_m = std::max(hi_m, 2 * t.e.m + jm);
      lo_n = std::min(lo_n, 2 * t.e.n + jn);
      hi_n = std::max(hi_n, 2 * t.e.n + jn);
    }
  }
  if (lo_m > hi_m) return {0, 0};
  return {hi_m - lo_m + 1, hi_n - lo_n + 1};
}

std::string describe(const Scheme& s) {
  std::ostringstream out;
  out << "scheme: " << s.label << "\n";
  out << "id: " << scheme_id(s.kind) << "\n";
  out << "wavelet: " << s.wavelet << "\n";
  out << "steps: " << count_steps(s) << "\n";
  out << "operations: " << count_operations(s) << "\n";
  auto print_scale = [&](const char* name, const std::array<double, 4>& sc) {
    if (sc == std::array<double, 4>{1.0, 1.0, 1.0, 1.0}) return;
    char buf[32];
    out << name << ":";
    for (double v : sc) {
      std::snprintf(buf, sizeof(buf), " %.16g", v);
      out << buf;
    }
    out << "\n";
  };
  print_scale("pre-scale", s.pre_scale);
  print_scale("post-scale", s.post_scale);
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const auto& g = s.steps[i];
    out << "step " << (i + 1) << ": " << g.factors.size()
        << (g.factors.size() == 1 ? " factor" : " factors (rightmost applied first)")
        << "\n";
    for (std::size_t f = 0; f < g.factors.size(); ++f) {
      const auto& m = g.factors[f];
      out << "  factor " << (f + 1) << ":\n";
      for (int r = 0; r < m.rows(); ++r) {
        out << "    [ ";
        for (int c = 0; c < m.cols(); ++c) {
          if (c) out << " | ";
          out << to_string(m.at(r, c));
        }
        out << " ]\n";
      }
    }
  }
  return out.str();
}

}  // namespace dwt2d
