#pragma once

#include <cstdint>
#include <string>

namespace dwt2d {

// Coefficient of a Laurent polynomial term: an exact rational (the default)
// or a binary double for wavelets with irrational lifting constants.
// Rational/rational arithmetic stays exact; mixing in a real demotes the
// result to double. Rationals are kept normalized (gcd 1, positive
// denominator) so equality is structural.
class Coeff {
 public:
  constexpr Coeff() = default;  // exact zero
  Coeff(std::int64_t n) : num_(n) {}
  Coeff(int n) : num_(n) {}

  static Coeff ratio(std::int64_t num, std::int64_t den);
  static Coeff real(double v);

  bool is_exact() const { return exact_; }
  bool is_zero() const { return exact_ ? num_ == 0 : real_ == 0.0; }
  bool is_one() const { return exact_ ? (num_ == 1 && den_ == 1) : real_ == 1.0; }

  // valid only for exact coefficients
  std::int64_t num() const;
  std::int64_t den() const;

  double value() const;

  friend Coeff operator+(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a, const Coeff& b);
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a);
  friend bool operator==(const Coeff& a, const Coeff& b);
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

  std::string str() const;

 private:
  bool exact_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double real_ = 0.0;
};

}  // namespace dwt2d
