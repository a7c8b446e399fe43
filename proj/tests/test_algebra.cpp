#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "dwt2d/polymatrix.hpp"
#include "dwt2d/random.hpp"
#include "dwt2d/scheme.hpp"
#include "dwt2d/wavelet.hpp"

using namespace dwt2d;

namespace {

LaurentPoly one() { return LaurentPoly::constant(Coeff(1)); }

LaurentPoly random_univariate(Lcg64& rng) {
  std::vector<Term> terms;
  const int count = 1 + static_cast<int>(rng.next_u64() % 4);
  for (int i = 0; i < count; ++i) {
    const int m = static_cast<int>(rng.next_u64() % 7) - 3;
    const std::int64_t num = static_cast<int>(rng.next_u64() % 9) - 4;
    terms.push_back({{m, 0}, Coeff::ratio(num, 4)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

// identity everywhere except the listed entries
bool is_lift(const PolyMatrix& m,
             const std::vector<std::pair<std::pair<int, int>, LaurentPoly>>& entries) {
  if (m.rows() != 4 || m.cols() != 4) return false;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      LaurentPoly want = (r == c) ? one() : LaurentPoly();
      for (const auto& [rc, p] : entries)
        if (rc.first == r && rc.second == c) want = p;
      if (m.at(r, c) != want) return false;
    }
  return true;
}

bool totals_match(const Scheme& a, const Scheme& b, bool exact) {
  if (exact) return a.total() == b.total();
  return approx_equal(a.total(), b.total(), 1e-12);
}

}  // namespace

TEST_CASE("polymatrix: multiplication against a 2x2 example") {
  const LaurentPoly p = LaurentPoly::univariate(
      {{0, Coeff::ratio(-1, 2)}, {1, Coeff::ratio(-1, 2)}});
  const LaurentPoly u = LaurentPoly::univariate(
      {{-1, Coeff::ratio(1, 4)}, {0, Coeff::ratio(1, 4)}});
  PolyMatrix t = PolyMatrix::identity(2);
  t.at(1, 0) = p;
  PolyMatrix s = PolyMatrix::identity(2);
  s.at(0, 1) = u;
  const PolyMatrix prod = s * t;
  CHECK(prod.at(0, 0) == one() + u * p);
  CHECK(prod.at(0, 1) == u);
  CHECK(prod.at(1, 0) == p);
  CHECK(prod.at(1, 1) == one());
  CHECK_THROWS_AS(mat_mul(prod, PolyMatrix::identity(4)),
                  std::invalid_argument);
  CHECK(PolyMatrix::identity(4).is_identity());
  CHECK(!prod.is_identity());
}

TEST_CASE("lifting factors place the polynomial on the paired components") {
  Lcg64 rng(3);
  const LaurentPoly p = random_univariate(rng);
  const LaurentPoly pt = transpose(p);
  // horizontal: odd columns predicted from even columns, (ee,oe) and (eo,oo)
  CHECK(is_lift(predict_h(p), {{{1, 0}, p}, {{3, 2}, p}}));
  CHECK(is_lift(update_h(p), {{{0, 1}, p}, {{2, 3}, p}}));
  // vertical: transposed polynomial, (ee,eo) and (oe,oo)
  CHECK(is_lift(predict_v(p), {{{2, 0}, pt}, {{3, 1}, pt}}));
  CHECK(is_lift(update_v(p), {{{0, 2}, pt}, {{1, 3}, pt}}));
  const LiftingSteps2D st = lifting_steps_2d(p, p);
  CHECK(st.predict_h == predict_h(p));
  CHECK(st.update_v == update_v(p));
  // bivariate input has no place in a separable factor
  CHECK_THROWS_AS(predict_h(LaurentPoly::monomial(Coeff(1), 1, 1)),
                  std::invalid_argument);
}

TEST_CASE("spatial factors equal the product of their separable parts") {
  Lcg64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const LaurentPoly p = random_univariate(rng);
    const LaurentPoly u = random_univariate(rng);
    CHECK(spatial_predict(p) == predict_v(p) * predict_h(p));
    CHECK(spatial_update(u) == update_v(u) * update_h(u));
    // horizontal and vertical factors act on independent axes, so they
    // commute in either pairing
    CHECK(predict_h(p) * predict_v(p) == predict_v(p) * predict_h(p));
    CHECK(update_h(u) * predict_v(p) == predict_v(p) * update_h(u));
    CHECK(update_v(u) * predict_h(p) == predict_h(p) * update_v(u));
    // one full pair collapses to the polyconvolution matrix
    CHECK(polyconv_matrix(p, u) == spatial_update(u) * spatial_predict(p));
  }
}

TEST_CASE("polyconvolution matrix entries follow the closed form") {
  const WaveletSpec& w = get_wavelet("cdf53");
  const LaurentPoly p = w.pairs()[0].predict;
  const LaurentPoly u = w.pairs()[0].update;
  const LaurentPoly v = p * u + one();
  const PolyMatrix n = polyconv_matrix(p, u);
  CHECK(n.at(0, 0) == transpose(v) * v);
  CHECK(n.at(0, 3) == transpose(u) * u);
  CHECK(n.at(1, 1) == transpose(v));
  CHECK(n.at(2, 2) == v);
  CHECK(n.at(2, 3) == u);
  CHECK(n.at(3, 0) == transpose(p) * p);
  CHECK(n.at(3, 3) == one());
}

TEST_CASE("adjacent lifting factors of the same type merge by addition") {
  Lcg64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const LaurentPoly a = random_univariate(rng);
    const LaurentPoly b = random_univariate(rng);
    CHECK(predict_h(a) * predict_h(b) == predict_h(a + b));
    CHECK(predict_v(a) * predict_v(b) == predict_v(a + b));
    CHECK(update_h(a) * update_h(b) == update_h(a + b));
    CHECK(update_v(a) * update_v(b) == update_v(a + b));
    CHECK(spatial_predict(a) * spatial_predict(b) == spatial_predict(a + b));
    CHECK(spatial_update(a) * spatial_update(b) == spatial_update(a + b));
  }
}

TEST_CASE("five builders produce the same total transfer matrix") {
  for (const auto& name : wavelet_names()) {
    const WaveletSpec& w = get_wavelet(name);
    const bool exact = (name != "cdf97");
    const Scheme ref = build_separable_lifting(w);
    for (SchemeKind kind : all_scheme_kinds()) {
      const Scheme s = build_scheme(kind, w);
      CAPTURE(name);
      CAPTURE(scheme_id(kind));
      CHECK(totals_match(s, ref, exact));
      CHECK(s.post_scale == ref.post_scale);
      CHECK(s.pre_scale == std::array<double, 4>{1.0, 1.0, 1.0, 1.0});
      // optimization regroups factors without changing any step's product
      const Scheme opt = optimize_constant_split(s, w);
      CHECK(opt.optimized);
      CHECK(opt.steps.size() == s.steps.size());
      for (std::size_t i = 0; i < s.steps.size(); ++i) {
        const PolyMatrix a = s.steps[i].composed();
        const PolyMatrix b = opt.steps[i].composed();
        CHECK((exact ? a == b : approx_equal(a, b, 1e-12)));
      }
    }
  }
}

TEST_CASE("2-D totals are the tensor square of the 1-D polyphase matrix") {
  // entry (r, c) of the 4x4 total is the product of the 1-D entries selected
  // by the row/column parities, with the vertical one transposed
  for (const auto& name : wavelet_names()) {
    const WaveletSpec& w = get_wavelet(name);
    const PolyMatrix m1 = polyphase_1d(w);
    const PolyMatrix m2 = build_nonseparable_convolution(w).total();
    const bool exact = (name != "cdf97");
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        const LaurentPoly want =
            m1.at(r & 1, c & 1) * transpose(m1.at(r >> 1, c >> 1));
        CAPTURE(name);
        if (exact)
          CHECK(m2.at(r, c) == want);
        else
          CHECK(approx_equal(m2.at(r, c), want, 1e-12));
      }
  }
}

TEST_CASE("inverse lifting undoes the forward transfer matrix exactly") {
  for (const auto& name : wavelet_names()) {
    const WaveletSpec& w = get_wavelet(name);
    const Scheme fwd = build_separable_lifting(w);
    const Scheme inv = build_inverse_lifting(w);
    CHECK(inv.steps.size() == fwd.steps.size());
    const PolyMatrix prod = inv.total() * fwd.total();
    CAPTURE(name);
    if (name != "cdf97")
      CHECK(prod.is_identity());
    else
      CHECK(approx_equal(prod, PolyMatrix::identity(4), 1e-12));
    // the diagonal gain is undone up front
    for (int j = 0; j < 4; ++j)
      CHECK(inv.pre_scale[j] * fwd.post_scale[j] == doctest::Approx(1.0));
  }
}

TEST_CASE("step counts per scheme") {
  struct Row {
    const char* wavelet;
    std::size_t pairs;
  };
  for (const Row& row : {Row{"cdf53", 1}, Row{"cdf97", 2}, Row{"dd137", 1}}) {
    const WaveletSpec& w = get_wavelet(row.wavelet);
    REQUIRE(w.pairs().size() == row.pairs);
    const std::size_t k = row.pairs;
    CHECK(count_steps(build_separable_convolution(w)) == 2);
    CHECK(count_steps(build_separable_lifting(w)) == 4 * k);
    CHECK(count_steps(build_nonseparable_convolution(w)) == 1);
    CHECK(count_steps(build_nonseparable_polyconvolution(w)) == k);
    CHECK(count_steps(build_nonseparable_lifting(w)) == 2 * k);
    CHECK(count_steps(build_inverse_lifting(w)) == 4 * k);
    // optimization must not change the barrier structure
    for (SchemeKind kind : all_scheme_kinds()) {
      const Scheme s = build_scheme(kind, w);
      CHECK(count_steps(optimize_constant_split(s, w)) == count_steps(s));
    }
  }
}

TEST_CASE("operation counts, baseline and optimized") {
  struct Row {
    const char* wavelet;
    SchemeKind kind;
    long baseline;
    long optimized;
  };
  const Row rows[] = {
      {"cdf53", SchemeKind::separable_convolution, 28, 20},
      {"cdf53", SchemeKind::separable_lifting, 16, 16},
      {"cdf53", SchemeKind::nonseparable_convolution, 63, 23},
      {"cdf53", SchemeKind::nonseparable_polyconvolution, 63, 23},
      {"cdf53", SchemeKind::nonseparable_lifting, 24, 18},
      {"cdf97", SchemeKind::separable_convolution, 64, 56},
      {"cdf97", SchemeKind::separable_lifting, 32, 32},
      {"cdf97", SchemeKind::nonseparable_convolution, 256, 152},
      {"cdf97", SchemeKind::nonseparable_polyconvolution, 126, 46},
      {"cdf97", SchemeKind::nonseparable_lifting, 48, 36},
      {"dd137", SchemeKind::separable_convolution, 60, 60},
      {"dd137", SchemeKind::separable_lifting, 32, 32},
      {"dd137", SchemeKind::nonseparable_convolution, 255, 203},
      {"dd137", SchemeKind::nonseparable_polyconvolution, 255, 203},
      {"dd137", SchemeKind::nonseparable_lifting, 64, 50},
  };
  for (const Row& row : rows) {
    const WaveletSpec& w = get_wavelet(row.wavelet);
    const Scheme s = build_scheme(row.kind, w);
    CAPTURE(row.wavelet);
    CAPTURE(scheme_id(row.kind));
    CHECK(count_operations(s) == row.baseline);
    CHECK(count_operations(optimize_constant_split(s, w)) == row.optimized);
  }
}

TEST_CASE("optimizer input validation") {
  const WaveletSpec& w53 = get_wavelet("cdf53");
  const WaveletSpec& w97 = get_wavelet("cdf97");
  const Scheme s = build_nonseparable_lifting(w53);
  const Scheme opt = optimize_constant_split(s, w53);
  CHECK_THROWS_AS(optimize_constant_split(opt, w53), std::invalid_argument);
  CHECK_THROWS_AS(optimize_constant_split(s, w97), std::invalid_argument);
  CHECK_THROWS_AS(optimize_constant_split(build_inverse_lifting(w53), w53),
                  std::invalid_argument);
  // separable lifting has no fusible constants; it passes through unchanged
  const Scheme lift = build_separable_lifting(w53);
  const Scheme lopt = optimize_constant_split(lift, w53);
  CHECK(lopt.optimized);
  CHECK(count_operations(lopt) == count_operations(lift));
}

TEST_CASE("filter supports in image samples") {
  // 1-D: analysis filter pair lengths 5/3, 9/7, 13/7
  struct Row {
    const char* wavelet;
    int low, high;
  };
  for (const Row& row : {Row{"cdf53", 5, 3}, Row{"cdf97", 9, 7},
                         Row{"dd137", 13, 7}}) {
    const PolyMatrix m1 = polyphase_1d(get_wavelet(row.wavelet));
    CAPTURE(row.wavelet);
    CHECK(row_image_support(m1, 0) == std::pair<int, int>{row.low, 1});
    CHECK(row_image_support(m1, 1) == std::pair<int, int>{row.high, 1});
  }
  // 2-D, one full 9/7 transform: LL 9x9, HL 7x9, LH 9x7, HH 7x7
  const PolyMatrix n97 = build_nonseparable_convolution(get_wavelet("cdf97")).total();
  CHECK(row_image_support(n97, 0) == std::pair<int, int>{9, 9});
  CHECK(row_image_support(n97, 1) == std::pair<int, int>{7, 9});
  CHECK(row_image_support(n97, 2) == std::pair<int, int>{9, 7});
  CHECK(row_image_support(n97, 3) == std::pair<int, int>{7, 7});
  // 2-D, one 5/3 polyconvolution step
  const WaveletSpec& w53 = get_wavelet("cdf53");
  const PolyMatrix n53 =
      polyconv_matrix(w53.pairs()[0].predict, w53.pairs()[0].update);
  CHECK(row_image_support(n53, 0) == std::pair<int, int>{5, 5});
  CHECK(row_image_support(n53, 1) == std::pair<int, int>{3, 5});
  CHECK(row_image_support(n53, 2) == std::pair<int, int>{5, 3});
  CHECK(row_image_support(n53, 3) == std::pair<int, int>{3, 3});
  CHECK(row_image_support(PolyMatrix::identity(4), 2) ==
        std::pair<int, int>{1, 1});
}

TEST_CASE("scheme ids round-trip and reject unknown names") {
  for (SchemeKind kind : all_scheme_kinds())
    CHECK(scheme_from_id(scheme_id(kind)) == kind);
  CHECK_THROWS_AS(scheme_from_id("fast-lifting"), std::invalid_argument);
  CHECK_THROWS_AS(build_scheme(SchemeKind::inverse_lifting, get_wavelet("cdf53")),
                  std::invalid_argument);
}
