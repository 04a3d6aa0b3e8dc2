#include "paucity/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "paucity/error.hpp"

namespace paucity {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPolynomial::leading() const {
  static const BigInt zero(0);
  return coeffs_.empty() ? zero : coeffs_.back();
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
  std::vector<BigInt> v(p.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * p.coeffs_[i];
  return IntPolynomial(std::move(v));
}

BigInt eval(const IntPolynomial& p, const BigInt& x) {
  BigInt acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

BigInt eval(const IntPolynomial& p, std::int64_t x) { return eval(p, big_from_i64(x)); }

IntPolynomial derivative(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<BigInt> v(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) v[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial compose(const IntPolynomial& p, const IntPolynomial& q) {
  IntPolynomial acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + IntPolynomial::constant(*it);
  return acc;
}

IntPolynomial power(const IntPolynomial& p, unsigned exponent) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

IntPolynomial reflect(const IntPolynomial& p) {
  std::vector<BigInt> v = p.coeffs();
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial even_part(const IntPolynomial& p) {
  std::vector<BigInt> v = p.coeffs();
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = 0;
  return IntPolynomial(std::move(v));
}

IntPolynomial odd_part(const IntPolynomial& p) {
  std::vector<BigInt> v = p.coeffs();
  for (std::size_t i = 0; i < v.size(); i += 2) v[i] = 0;
  return IntPolynomial(std::move(v));
}

namespace {

constexpr std::size_t kMaxParsedDegree = 4096;

[[noreturn]] void parse_fail(const std::string& text, const std::string& why) {
  throw Error(ErrorKind::ParseError, "cannot parse polynomial \"" + text + "\": " + why);
}

void add_term(std::vector<BigInt>& acc, std::size_t degree, const BigInt& c) {
  if (acc.size() <= degree) acc.resize(degree + 1);
  acc[degree] += c;
}

IntPolynomial parse_coefficient_list(const std::string& text, const std::string& compact) {
  std::vector<BigInt> coeffs;
  std::stringstream ss(compact);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) parse_fail(text, "empty coefficient");
    std::size_t start = (item[0] == '+' || item[0] == '-') ? 1 : 0;
    if (start == item.size() ||
        !std::all_of(item.begin() + static_cast<long>(start), item.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      parse_fail(text, "coefficient \"" + item + "\" is not an integer");
    }
    coeffs.emplace_back(item[0] == '+' ? item.substr(1) : item, 10);
  }
  if (coeffs.empty() || compact.back() == ',') parse_fail(text, "empty coefficient");
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

ParsedPolynomial parse_polynomial(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) parse_fail(text, "empty input");

  const bool has_letter = std::any_of(s.begin(), s.end(), [](unsigned char ch) { return std::isalpha(ch); });
  if (!has_letter) return {parse_coefficient_list(text, s), '\0'};

  char variable = '\0';
  std::vector<BigInt> acc;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      parse_fail(text, "expected '+' or '-' at position " + std::to_string(i));
    }
    first = false;

    std::size_t digits_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    const bool has_coeff = i > digits_start;
    BigInt coeff = has_coeff ? BigInt(s.substr(digits_start, i - digits_start), 10) : BigInt(1);
    if (has_coeff && i < s.size() && s[i] == '*') ++i;

    std::size_t degree = 0;
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      if (variable != '\0' && s[i] != variable) parse_fail(text, "mixed variables");
      variable = s[i];
      ++i;
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t exp_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == exp_start) parse_fail(text, "missing exponent");
        std::string exp = s.substr(exp_start, i - exp_start);
        if (exp.size() > 5 || std::stoul(exp) > kMaxParsedDegree) parse_fail(text, "exponent too large");
        degree = std::stoul(exp);
      }
    } else if (!has_coeff) {
      parse_fail(text, "empty term at position " + std::to_string(i));
    } else if (i > 0 && s[i - 1] == '*') {
      parse_fail(text, "dangling '*'");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') {
      parse_fail(text, std::string("unexpected character '") + s[i] + "'");
    }
    add_term(acc, degree, sign < 0 ? BigInt(-coeff) : coeff);
  }
  return {IntPolynomial(std::move(acc)), variable};
}

std::string format_polynomial(const IntPolynomial& p, char variable) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (int d = p.degree(); d >= 0; --d) {
    const BigInt& a = c[static_cast<std::size_t>(d)];
    if (sgn(a) == 0) continue;
    BigInt mag = abs(a);
    if (sgn(a) < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (d == 0 || mag != 1) out += mag.get_str();
    if (d >= 1) out += variable;
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

std::string format_coefficients(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ",";
    out += p.coeffs()[i].get_str();
  }
  return out;
}

}  // namespace paucity
