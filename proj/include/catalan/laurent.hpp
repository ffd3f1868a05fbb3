#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace catalan {

using Integer = boost::multiprecision::cpp_int;

/// Malformed text handed to one of the parsers.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by div_exact when the divisor does not divide the dividend.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * Laurent polynomial with integer coefficients in a single variable.
 *
 * Terms are kept in a sorted map from exponent to a nonzero coefficient, so
 * two polynomials are equal exactly when their maps are equal. The same type
 * serves the plucking variable q and the bracket variable A; only rendering
 * cares about the name.
 */
class Laurent {
 public:
  using Terms = std::map<int, Integer>;

  Laurent() = default;
  Laurent(long long constant);  // NOLINT: constants convert implicitly

  static Laurent monomial(const Integer& coefficient, int exponent);
  static Laurent from_terms(Terms terms);
  /// Parses "A^-2 + 2*A^3 - 1" style text. The variable is any identifier.
  static Laurent parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  int min_degree() const;
  int max_degree() const;
  Integer coefficient(int exponent) const;
  /// Value at 1, the sum of the coefficients.
  Integer coefficient_sum() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  Laurent& operator*=(const Laurent& other);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) = default;

  std::string to_string(std::string_view variable = "A") const;

 private:
  Terms terms_;
};

Laurent add(const Laurent& a, const Laurent& b);
Laurent mul(const Laurent& a, const Laurent& b);
Laurent pow(const Laurent& base, unsigned exponent);

/// Multiplies by the monomial x^k.
Laurent monomial_shift(const Laurent& p, int k);

/// Shifts p so that its lowest exponent is 0. Zero stays zero.
Laurent star_normalize(const Laurent& p);

/// Replaces x by x^e. e must be nonzero.
Laurent substitute_power(const Laurent& p, int e);

/// Gaussian binomial [n choose k]_q; zero when k < 0 or k > n.
Laurent q_binomial(int n, int k);

/// Quotient p / d, throwing NotDivisible unless d divides p exactly.
Laurent div_exact(const Laurent& p, const Laurent& d);

std::ostream& operator<<(std::ostream& os, const Laurent& p);

}  // namespace catalan
