#include "dwt2d/coeff.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace dwt2d {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 checked_narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("rational coefficient overflow");
  return static_cast<i64>(v);
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Coeff Coeff::ratio(i64 num, i64 den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i64 g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Coeff c;
  c.exact_ = true;
  c.num_ = num;
  c.den_ = den;
  return c;
}

Coeff Coeff::real(double v) {
  Coeff c;
  c.exact_ = false;
  c.real_ = v;
  return c;
}

std::int64_t Coeff::num() const {
  if (!exact_) throw std::logic_error("num() on a real coefficient");
  return num_;
}

std::int64_t Coeff::den() const {
  if (!exact_) throw std::logic_error("den() on a real coefficient");
  return den_;
}

double Coeff::value() const {
  return exact_ ? static_cast<double>(num_) / static_cast<double>(den_) : real_;
}

Coeff operator+(const Coeff& a, const Coeff& b) {
  if (a.exact_ && b.exact_) {
    i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    i128 d = i128(a.den_) * b.den_;
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return Coeff::ratio(checked_narrow(n), checked_narrow(d));
  }
  return Coeff::real(a.value() + b.value());
}

Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }

Coeff operator*(const Coeff& a, const Coeff& b) {
  if (a.exact_ && b.exact_) {
    // cross-reduce before multiplying to keep intermediates small
    i64 g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
    i64 g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
    i128 n = i128(a.num_ / g1) * (b.num_ / g2);
    i128 d = i128(a.den_ / g2) * (b.den_ / g1);
    return Coeff::ratio(checked_narrow(n), checked_narrow(d));
  }
  return Coeff::real(a.value() * b.value());
}

Coeff operator-(const Coeff& a) {
  if (a.exact_) return Coeff::ratio(-a.num_, a.den_);
  return Coeff::real(-a.real_);
}

bool operator==(const Coeff& a, const Coeff& b) {
  if (a.exact_ && b.exact_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.value() == b.value();
}

std::string Coeff::str() const {
  char buf[64];
  if (exact_) {
    if (den_ == 1)
      std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(num_));
    else
      std::snprintf(buf, sizeof(buf), "%lld/%lld", static_cast<long long>(num_),
                    static_cast<long long>(den_));
  } else {
    std::snprintf(buf, sizeof(buf), "%.16g", real_);
  }
  return buf;
}

}  // namespace dwt2d
