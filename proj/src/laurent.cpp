#include "catalan/laurent.hpp"

#include <cctype>
#include <ostream>
#include <vector>

namespace catalan {

Laurent::Laurent(long long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

Laurent Laurent::monomial(const Integer& coefficient, int exponent) {
  Laurent p;
  if (coefficient != 0) p.terms_.emplace(exponent, coefficient);
  return p;
}

Laurent Laurent::from_terms(Terms terms) {
  Laurent p;
  for (auto& [e, c] : terms)
    if (c != 0) p.terms_.emplace(e, std::move(c));
  return p;
}

int Laurent::min_degree() const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial");
  return terms_.begin()->first;
}

int Laurent::max_degree() const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

Integer Laurent::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer Laurent::coefficient_sum() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& other) {
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) { return *this += -other; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.terms_[ea + eb] += ca * cb;
  std::erase_if(r.terms_, [](const auto& t) { return t.second == 0; });
  return r;
}

Laurent& Laurent::operator*=(const Laurent& other) { return *this = *this * other; }

std::string Laurent::to_string(std::string_view variable) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer magnitude = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) out += magnitude.str() + "*";
    out += variable;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view s) : s_(s) {}

  Laurent run() {
    skip();
    if (at_end()) fail("empty polynomial");
    Laurent result;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result += term(sign);
      skip();
    }
    return result;
  }

 private:
  Laurent term(int sign) {
    Integer coefficient = 1;
    bool have_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = Integer(digits());
      have_coefficient = true;
      skip();
      if (peek() == '*') {
        get();
        skip();
      } else {
        return Laurent::monomial(sign * coefficient, 0);
      }
    }
    if (!std::isalpha(static_cast<unsigned char>(peek())))
      fail(have_coefficient ? "expected variable after '*'" : "expected a term");
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += get();
    if (variable_.empty()) variable_ = name;
    if (name != variable_) fail("mixed variables '" + variable_ + "' and '" + name + "'");
    skip();
    int exponent = 1;
    if (peek() == '^') {
      get();
      skip();
      int esign = 1;
      if (peek() == '-' || peek() == '+') esign = get() == '-' ? -1 : 1;
      skip();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      exponent = esign * std::stoi(digits());
    }
    return Laurent::monomial(sign * coefficient, exponent);
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    return d;
  }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::string variable_;
};

}  // namespace

Laurent Laurent::parse(std::string_view text) { return LaurentParser(text).run(); }

Laurent add(const Laurent& a, const Laurent& b) { return a + b; }
Laurent mul(const Laurent& a, const Laurent& b) { return a * b; }

Laurent pow(const Laurent& base, unsigned exponent) {
  Laurent result = 1, b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

Laurent monomial_shift(const Laurent& p, int k) {
  Laurent::Terms t;
  for (const auto& [e, c] : p.terms()) t.emplace(e + k, c);
  return Laurent::from_terms(std::move(t));
}

Laurent star_normalize(const Laurent& p) {
  return p.is_zero() ? p : monomial_shift(p, -p.min_degree());
}

Laurent substitute_power(const Laurent& p, int e) {
  if (e == 0) throw std::domain_error("substitute_power: exponent must be nonzero");
  Laurent::Terms t;
  for (const auto& [d, c] : p.terms()) t.emplace(d * e, c);
  return Laurent::from_terms(std::move(t));
}

Laurent q_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Laurent();
  // row[j] holds [i choose j] while i runs up to n
  std::vector<Laurent> row(static_cast<std::size_t>(k) + 1);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 1; --j)
      row[j] = row[j - 1] + monomial_shift(row[j], j);
  return row[k];
}

Laurent div_exact(const Laurent& p, const Laurent& d) {
  if (d.is_zero()) throw NotDivisible("division by zero polynomial");
  if (p.is_zero()) return p;
  const int shift = p.min_degree() - d.min_degree();
  Laurent r = star_normalize(p);
  const Laurent divisor = star_normalize(d);
  const int dd = divisor.max_degree();
  const Integer& lead = divisor.terms().rbegin()->second;
  Laurent::Terms quotient;
  while (!r.is_zero() && r.max_degree() >= dd) {
    const int e = r.max_degree();
    const Integer& c = r.terms().rbegin()->second;
    if (c % lead != 0) throw NotDivisible(p.to_string() + " is not divisible by " + d.to_string());
    Laurent step = Laurent::monomial(c / lead, e - dd);
    quotient.emplace(e - dd, c / lead);
    r -= step * divisor;
  }
  if (!r.is_zero()) throw NotDivisible(p.to_string() + " is not divisible by " + d.to_string());
  return monomial_shift(Laurent::from_terms(std::move(quotient)), shift);
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.to_string(); }

}  // namespace catalan
