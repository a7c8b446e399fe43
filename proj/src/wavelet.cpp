#include "dwt2d/wavelet.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dwt2d/io_error.hpp"

namespace dwt2d {

namespace {

// CDF 9/7 lifting constants
constexpr double kAlpha = -1.586134342059924;
constexpr double kBeta = -0.052980118572961;
constexpr double kGamma = 0.882911075530934;
constexpr double kDelta = 0.443506852043971;
constexpr double kZeta = 1.149604398860241;

LaurentPoly uni(std::initializer_list<std::pair<int, Coeff>> taps) {
  return LaurentPoly::univariate(taps);
}

std::map<std::string, WaveletSpec, std::less<>> make_registry() {
  std::map<std::string, WaveletSpec, std::less<>> reg;

  // CDF 5/3: P(z) = -1/2 (1 + z^-1), U(z) = 1/4 (1 + z)
  reg.emplace("cdf53",
              WaveletSpec("cdf53",
                          {{uni({{0, Coeff::ratio(-1, 2)}, {1, Coeff::ratio(-1, 2)}}),
                            uni({{-1, Coeff::ratio(1, 4)}, {0, Coeff::ratio(1, 4)}})}}));

  // CDF 9/7: two pairs, alpha/beta then gamma/delta, plus the zeta gain
  reg.emplace(
      "cdf97",
      WaveletSpec("cdf97",
                  {{uni({{0, Coeff::real(kAlpha)}, {1, Coeff::real(kAlpha)}}),
                    uni({{-1, Coeff::real(kBeta)}, {0, Coeff::real(kBeta)}})},
                   {uni({{0, Coeff::real(kGamma)}, {1, Coeff::real(kGamma)}}),
                    uni({{-1, Coeff::real(kDelta)}, {0, Coeff::real(kDelta)}})}},
                  kZeta));

  // Deslauriers-Dubuc 13/7: four-point interpolating predict and update
  reg.emplace(
      "dd137",
      WaveletSpec("dd137",
                  {{uni({{-1, Coeff::ratio(1, 16)},
                         {0, Coeff::ratio(-9, 16)},
                         {1, Coeff::ratio(-9, 16)},
                         {2, Coeff::ratio(1, 16)}}),
                    uni({{-2, Coeff::ratio(-1, 32)},
                         {-1, Coeff::ratio(9, 32)},
                         {0, Coeff::ratio(9, 32)},
                         {1, Coeff::ratio(-1, 32)}})}}));

  return reg;
}

const std::map<std::string, WaveletSpec, std::less<>>& registry() {
  static const auto reg = make_registry();
  return reg;
}

Coeff parse_coeff(const std::string& tok, int line_no) {
  auto bad = [&](const char* why) {
    throw std::invalid_argument("wavelet definition line " +
                                std::to_string(line_no) + ": " + why + ": " +
                                tok);
  };
  auto slash = tok.find('/');
  if (slash != std::string::npos) {
    long long num = 0, den = 0;
    auto r1 = std::from_chars(tok.data(), tok.data() + slash, num);
    auto r2 =
        std::from_chars(tok.data() + slash + 1, tok.data() + tok.size(), den);
    if (r1.ec != std::errc{} || r1.ptr != tok.data() + slash ||
        r2.ec != std::errc{} || r2.ptr != tok.data() + tok.size() || den == 0)
      bad("malformed rational");
    return Coeff::ratio(num, den);
  }
  if (tok.find('.') != std::string::npos ||
      tok.find('e') != std::string::npos || tok.find('E') != std::string::npos) {
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      bad("malformed real");
    }
    if (pos != tok.size()) bad("malformed real");
    return Coeff::real(v);
  }
  long long n = 0;
  auto r = std::from_chars(tok.data(), tok.data() + tok.size(), n);
  if (r.ec != std::errc{} || r.ptr != tok.data() + tok.size())
    bad("malformed integer");
  return Coeff(static_cast<std::int64_t>(n));
}

LaurentPoly parse_poly(std::istringstream& line, int line_no) {
  std::vector<Term> terms;
  std::string tok;
  while (line >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("wavelet definition line " +
                                  std::to_string(line_no) +
                                  ": expected offset:coeff, got: " + tok);
    int key = 0;
    auto r = std::from_chars(tok.data(), tok.data() + colon, key);
    if (r.ec != std::errc{} || r.ptr != tok.data() + colon)
      throw std::invalid_argument("wavelet definition line " +
                                  std::to_string(line_no) +
                                  ": malformed offset: " + tok);
    terms.push_back({{key, 0}, parse_coeff(tok.substr(colon + 1), line_no)});
  }
  if (terms.empty())
    throw std::invalid_argument("wavelet definition line " +
                                std::to_string(line_no) + ": empty polynomial");
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

WaveletSpec::WaveletSpec(std::string name, std::vector<LiftingPair> pairs,
                         double scaling)
    : name_(std::move(name)), pairs_(std::move(pairs)), scaling_(scaling) {
  for (const auto& pr : pairs_)
    if (!pr.predict.univariate_m() || !pr.update.univariate_m())
      throw std::invalid_argument(
          "lifting polynomials must be univariate in the horizontal variable");
  if (!(scaling_ > 0.0))
    throw std::invalid_argument("scaling factor must be positive");
}

const WaveletSpec& get_wavelet(std::string_view name) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) {
    std::string msg = "unknown wavelet: ";
    msg += name;
    msg += " (valid:";
    for (const auto& [k, v] : reg) msg += " " + k;
    msg += ")";
    throw std::invalid_argument(msg);
  }
  return it->second;
}

std::vector<std::string> wavelet_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : registry()) names.push_back(k);
  return names;
}

WaveletSpec parse_wavelet_definition(std::istream& in, std::string name) {
  std::vector<LiftingPair> pairs;
  double scaling = 1.0;
  bool saw_scaling = false;
  LaurentPoly pending_predict;
  bool have_predict = false;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string kw;
    if (!(line >> kw)) continue;
    if (kw == "name") {
      std::string n;
      if (!(line >> n))
        throw std::invalid_argument("wavelet definition line " +
                                    std::to_string(line_no) + ": missing name");
      name = n;
    } else if (kw == "predict") {
      if (have_predict)
        throw std::invalid_argument(
            "wavelet definition line " + std::to_string(line_no) +
            ": predict without a matching update before it");
      pending_predict = parse_poly(line, line_no);
      have_predict = true;
    } else if (kw == "update") {
      if (!have_predict)
        throw std::invalid_argument("wavelet definition line " +
                                    std::to_string(line_no) +
                                    ": update without a preceding predict");
      pairs.push_back({pending_predict, parse_poly(line, line_no)});
      have_predict = false;
    } else if (kw == "scaling") {
      if (saw_scaling)
        throw std::invalid_argument("wavelet definition line " +
                                    std::to_string(line_no) +
                                    ": duplicate scaling");
      if (!(line >> scaling))
        throw std::invalid_argument("wavelet definition line " +
                                    std::to_string(line_no) +
                                    ": malformed scaling");
      saw_scaling = true;
    } else {
      throw std::invalid_argument("wavelet definition line " +
                                  std::to_string(line_no) +
                                  ": unknown keyword: " + kw);
    }
  }
  if (have_predict)
    throw std::invalid_argument(
        "wavelet definition: trailing predict without update");
  if (pairs.empty())
    throw std::invalid_argument(
        "wavelet definition: no predict/update pairs found");
  return WaveletSpec(std::move(name), std::move(pairs), scaling);
}

WaveletSpec load_wavelet_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open wavelet definition: " + path.string());
  return parse_wavelet_definition(in, path.stem().string());
}

WaveletSpec resolve_wavelet(const std::string& name_or_path) {
  const auto& reg = registry();
  if (auto it = reg.find(name_or_path); it != reg.end()) return it->second;
  if (std::filesystem::exists(name_or_path))
    return load_wavelet_file(name_or_path);
  return get_wavelet(name_or_path);  // throws with the valid-name list
}

}  // namespace dwt2d
