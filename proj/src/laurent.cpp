#include "dwt2d/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace dwt2d {

namespace {

std::vector<Term> normalized(std::vector<Term> terms) {
  std::map<Exponent, Coeff> acc;
  for (const auto& t : terms) {
    auto it = acc.find(t.e);
    if (it == acc.end())
      acc.emplace(t.e, t.c);
    else
      it->second = it->second + t.c;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [e, c] : acc)
    if (!c.is_zero()) out.push_back({e, c});
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::constant(Coeff c) { return monomial(c, 0, 0); }

LaurentPoly LaurentPoly::monomial(Coeff c, int m, int n) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.push_back({{m, n}, c});
  return p;
}

LaurentPoly LaurentPoly::univariate(
    std::initializer_list<std::pair<int, Coeff>> taps) {
  std::vector<Term> terms;
  terms.reserve(taps.size());
  for (const auto& [k, c] : taps) terms.push_back({{k, 0}, c});
  return from_terms(std::move(terms));
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = normalized(std::move(terms));
  return p;
}

Coeff LaurentPoly::coeff(int m, int n) const {
  Exponent e{m, n};
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const Term& t, const Exponent& key) { return t.e < key; });
  if (it != terms_.end() && it->e == e) return it->c;
  return Coeff{};
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].e == Exponent{0, 0});
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].e == Exponent{0, 0} &&
         terms_[0].c.is_one();
}

bool LaurentPoly::univariate_m() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.e.n == 0; });
}

bool LaurentPoly::univariate_n() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.e.m == 0; });
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_)
      terms.push_back({{ta.e.m + tb.e.m, ta.e.n + tb.e.n}, ta.c * tb.c});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly p = a;
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c)
      return false;
  return true;
}

LaurentPoly transpose(const LaurentPoly& p) {
  std::vector<Term> terms = p.terms();
  for (auto& t : terms) std::swap(t.e.m, t.e.n);
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly embed(const LaurentPoly& p, Axis axis) {
  if (p.univariate_m())
    return axis == Axis::horizontal ? p : transpose(p);
  if (p.univariate_n())
    return axis == Axis::vertical ? p : transpose(p);
  throw std::invalid_argument("embed: polynomial is not univariate");
}

std::pair<LaurentPoly, LaurentPoly> split_constant(const LaurentPoly& p) {
  LaurentPoly c = LaurentPoly::constant(p.coeff(0, 0));
  return {c, p - c};
}

bool approx_equal(const LaurentPoly& a, const LaurentPoly& b, double tol) {
  auto within = [&](const LaurentPoly& x, const LaurentPoly& y) {
    for (const auto& t : x.terms()) {
      double d = t.c.value() - y.coeff(t.e.m, t.e.n).value();
      if (std::abs(d) > tol) return false;
    }
    return true;
  };
  return within(a, b) && within(b, a);
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = t.c.value() < 0.0;
    Coeff mag = neg ? -t.c : t.c;
    // stored key k stands for z^-k
    auto var = [](const char* name, int key) {
      return key == -1 ? std::string(name)
                       : std::string(name) + "^" + std::to_string(-key);
    };
    std::string vars;
    if (t.e.m != 0) vars += var("zm", t.e.m);
    if (t.e.n != 0) {
      if (!vars.empty()) vars += "*";
      vars += var("zn", t.e.n);
    }
    std::string body;
    if (vars.empty())
      body = mag.str();
    else if (mag.is_one())
      body = vars;
    else
      body = mag.str() + "*" + vars;
    if (first) {
      out += neg ? "-" + body : body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace dwt2d
