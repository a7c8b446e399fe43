#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dwt2d/coeff.hpp"

namespace dwt2d {

// Exponent key of one term. A term with key (m, n) stands for
// c * zm^-m * zn^-n, so positive keys are causal taps: on sampled data the
// term reads the neighbor m samples forward horizontally and n samples
// forward vertically.
struct Exponent {
  int m = 0;
  int n = 0;
  auto operator<=>(const Exponent&) const = default;
};

struct Term {
  Exponent e;
  Coeff c;
};

enum class Axis { horizontal, vertical };

// Sparse bivariate Laurent polynomial over Coeff. Terms are kept sorted by
// (m, n) key and never hold zero coefficients, so iteration order and
// structural equality are deterministic.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero polynomial

  static LaurentPoly constant(Coeff c);
  static LaurentPoly monomial(Coeff c, int m, int n);
  // univariate helper: keys land on the horizontal axis
  static LaurentPoly univariate(std::initializer_list<std::pair<int, Coeff>> taps);
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  Coeff coeff(int m, int n) const;
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // true when no term uses the other formal variable (constants qualify)
  bool univariate_m() const;
  bool univariate_n() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

 private:
  std::vector<Term> terms_;
};

// swaps the two formal variables: zm^-a zn^-b  ->  zm^-b zn^-a
LaurentPoly transpose(const LaurentPoly& p);

// places a univariate polynomial on the requested axis; rejects genuinely
// bivariate input
LaurentPoly embed(const LaurentPoly& p, Axis axis);

// splits p into (constant part, remainder); the first element carries the
// (0,0) term only, the second everything else, and they sum back to p
std::pair<LaurentPoly, LaurentPoly> split_constant(const LaurentPoly& p);

// absolute per-coefficient comparison over the union of keys
bool approx_equal(const LaurentPoly& a, const LaurentPoly& b, double tol);

std::string to_string(const LaurentPoly& p);

}  // namespace dwt2d
