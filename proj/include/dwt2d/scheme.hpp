#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "dwt2d/polymatrix.hpp"
#include "dwt2d/wavelet.hpp"

namespace dwt2d {

enum class SchemeKind {
  separable_convolution,
  separable_lifting,
  nonseparable_convolution,
  nonseparable_polyconvolution,
  nonseparable_lifting,
  inverse_lifting,
};

const char* scheme_id(SchemeKind kind);
const char* scheme_label(SchemeKind kind);
SchemeKind scheme_from_id(const std::string& id);
std::vector<SchemeKind> all_scheme_kinds();

// One calculation step: a list of matrix factors applied without any barrier
// between them. factors[0] is the leftmost factor in matrix-product order,
// i.e. the one applied last; the executor composes the product symbolically.
struct FusedGroup {
  std::vector<PolyMatrix> factors;
  PolyMatrix composed() const;
};

// A full 2-D transform recipe: an ordered list of fused groups separated by
// barriers, plus diagonal gains applied around the steps. steps[0] runs
// first. pre_scale multiplies the input components before the first step,
// post_scale the outputs of the last one; neither takes part in operation
// counting.
struct Scheme {
  std::string label;
  SchemeKind kind;
  std::string wavelet;
  bool optimized = false;
  std::vector<FusedGroup> steps;
  std::array<double, 4> pre_scale{1.0, 1.0, 1.0, 1.0};
  std::array<double, 4> post_scale{1.0, 1.0, 1.0, 1.0};

  // product of every factor of every step, later steps on the left
  PolyMatrix total() const;
};

// the four 2-D lifting matrices of one predict/update pair
struct LiftingSteps2D {
  PolyMatrix predict_h;  // T[P]^H
  PolyMatrix predict_v;  // T[P]^V
  PolyMatrix update_h;   // S[U]^H
  PolyMatrix update_v;   // S[U]^V
};

LiftingSteps2D lifting_steps_2d(const LaurentPoly& p, const LaurentPoly& u);

PolyMatrix predict_h(const LaurentPoly& p);
PolyMatrix predict_v(const LaurentPoly& p);
PolyMatrix update_h(const LaurentPoly& u);
PolyMatrix update_v(const LaurentPoly& u);

// spatial (non-separable) one-pair matrices: T[P], S[U], and N[P,U] = S.T
PolyMatrix spatial_predict(const LaurentPoly& p);
PolyMatrix spatial_update(const LaurentPoly& u);
PolyMatrix polyconv_matrix(const LaurentPoly& p, const LaurentPoly& u);

// 1-D 2x2 polyphase product of all lifting pairs (even/odd component order)
PolyMatrix polyphase_1d(const WaveletSpec& w);

Scheme build_separable_convolution(const WaveletSpec& w);
Scheme build_separable_lifting(const WaveletSpec& w);
Scheme build_nonseparable_convolution(const WaveletSpec& w);
Scheme build_nonseparable_polyconvolution(const WaveletSpec& w);
Scheme build_nonseparable_lifting(const WaveletSpec& w);
Scheme build_scheme(SchemeKind kind, const WaveletSpec& w);

// inverse of the separable lifting scheme: steps reversed with negated
// polynomials, the diagonal gain undone before the first step
Scheme build_inverse_lifting(const WaveletSpec& w);

// Splits every lifting polynomial into its constant tap plus the remainder
// and regroups each step so that the constant parts ride along as separable
// factors inside the same fused group. Step count is preserved and each
// group's composed matrix equals the original step exactly. Separable
// lifting has nothing to fuse and is returned unchanged.
Scheme optimize_constant_split(const Scheme& s, const WaveletSpec& w);

std::size_t count_steps(const Scheme& s);
// Number of polynomial terms across all factors, counted per column, with
// unit diagonal entries free of charge: a diagonal entry d contributes the
// term count of (d - 1).
long count_operations(const Scheme& s);

// bounding-box size (width, height) in input-image samples of the composite
// filter formed by one matrix row
std::pair<int, int> row_image_support(const PolyMatrix& m, int row);

std::string describe(const Scheme& s);

}  // namespace dwt2d
