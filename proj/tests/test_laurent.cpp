#include "doctest.h"
#include "support/oracles.hpp"

#include "catalan/laurent.hpp"

#include <random>

using catalan::Laurent;

namespace {

Laurent P(const char* s) { return Laurent::parse(s); }

Laurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 5), exponent(-8, 8), coefficient(-9, 9);
  Laurent p;
  for (int i = terms(rng); i > 0; --i) p += Laurent::monomial(coefficient(rng), exponent(rng));
  return p;
}

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("add") {
  CHECK(catalan::add(P("1 + q"), Laurent()) == P("1 + q"));
  CHECK(catalan::add(P("A^-2 + A^2"), P("-A^-2 - A^2")).is_zero());
  // term by term: (1+q) + (q+q^2)
  Laurent expected = Laurent::monomial(1, 0) + Laurent::monomial(2, 1) + Laurent::monomial(1, 2);
  CHECK(catalan::add(P("1 + q"), P("q + q^2")) == expected);
}

TEST_CASE("mul") {
  CHECK(catalan::mul(P("A^-2 + A^2"), P("A^-12 + 2*A^-8 + 3*A^-4 + 2 + A^4")) ==
        P("A^-14 + 3*A^-10 + 5*A^-6 + 5*A^-2 + 3*A^2 + A^6"));
  CHECK(catalan::mul(P("3*A^-1 - A^5"), 1) == P("3*A^-1 - A^5"));
  auto dense = oracle::dense_mul({1, 1}, {1, 1, 1});
  CHECK(catalan::mul(P("1 + q"), P("1 + q + q^2")) == oracle::to_laurent(dense));
  CHECK(oracle::to_laurent(dense) == P("1 + 2*q + 2*q^2 + q^3"));
}

TEST_CASE("monomial_shift") {
  CHECK(catalan::monomial_shift(P("1 + q"), 2) == P("q^2 + q^3"));
  CHECK(catalan::monomial_shift(P("A^-2 - 4*A"), 0) == P("A^-2 - 4*A"));
  CHECK(catalan::monomial_shift(P("A^-3"), 3) == 1);
}

TEST_CASE("star_normalize") {
  CHECK(catalan::star_normalize(P("q^-3 + q^-1")) == P("1 + q^2"));
  CHECK(catalan::star_normalize(Laurent()).is_zero());
  const Laurent one_q = P("1 + q"), three = P("1 + q + q^2");
  for (int k = 1; k <= 4; ++k) {
    Laurent body = catalan::pow(one_q, k + 1) * catalan::pow(three, k);
    CHECK(catalan::star_normalize(catalan::monomial_shift(body, k * k)) == body);
  }
}

TEST_CASE("substitute_power") {
  CHECK(catalan::substitute_power(P("1 + q"), -4) == P("1 + A^-4"));
  CHECK(catalan::substitute_power(P("2 - q^3"), 1) == P("2 - q^3"));
  CHECK(catalan::substitute_power(P("1 + q + q^2"), -4) == P("1 + A^-4 + A^-8"));
  CHECK_THROWS(catalan::substitute_power(P("1 + q"), 0));
}

TEST_CASE("q_binomial") {
  for (int n = 0; n <= 6; ++n) CHECK(catalan::q_binomial(n, 0) == 1);
  CHECK(catalan::q_binomial(2, 1) == P("1 + q"));
  CHECK(catalan::q_binomial(4, 2) == oracle::q_binomial_by_product(4, 2));
  CHECK(oracle::q_binomial_by_product(4, 2) == P("1 + q + 2*q^2 + q^3 + q^4"));
  CHECK(catalan::q_binomial(3, -1).is_zero());
  CHECK(catalan::q_binomial(3, 4).is_zero());
}

TEST_CASE("q_binomial matches the product formula") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) CHECK(catalan::q_binomial(n, k) == oracle::q_binomial_by_product(n, k));
}

TEST_CASE("q_binomial symmetry and both Pascal rules") {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(catalan::q_binomial(n, k) == catalan::q_binomial(n, n - k));
      Laurent left = catalan::q_binomial(n - 1, k - 1) +
                     catalan::monomial_shift(catalan::q_binomial(n - 1, k), k);
      Laurent right = catalan::monomial_shift(catalan::q_binomial(n - 1, k - 1), n - k) +
                      catalan::q_binomial(n - 1, k);
      CHECK(catalan::q_binomial(n, k) == left);
      CHECK(catalan::q_binomial(n, k) == right);
    }
  }
}

TEST_CASE("div_exact") {
  Laurent x = P("A^-2 + A^2");
  CHECK(catalan::div_exact(x * x - 1, P("A^-4 + 1 + A^4")) == 1);
  CHECK(catalan::div_exact(P("5*A^-3 + A"), 1) == P("5*A^-3 + A"));
  CHECK_THROWS_AS(catalan::div_exact(P("1 + q"), P("1 + q + q^2")), catalan::NotDivisible);
  CHECK_THROWS(catalan::div_exact(P("1 + q"), Laurent()));
}

TEST_CASE("text form round trips") {
  CHECK(P("A^-14 + 3*A^-10 + 5*A^-6 + 5*A^-2 + 3*A^2 + A^6").to_string() ==
        "A^-14 + 3*A^-10 + 5*A^-6 + 5*A^-2 + 3*A^2 + A^6");
  CHECK(P("1+q").to_string("q") == "1 + q");
  CHECK(P("-A^-1 - 2").to_string() == "-A^-1 - 2");
  CHECK(Laurent().to_string() == "0");
  CHECK(P(" 2 * A ^ 3 - A ") == P("-A + 2*A^3"));
  CHECK_THROWS_AS(P("A^"), catalan::ParseError);
  CHECK_THROWS_AS(P("2**A"), catalan::ParseError);
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Laurent p = random_laurent(rng);
    CHECK(P(p.to_string().c_str()) == p);
  }
}

TEST_CASE("no stored zero coefficients") {
  Laurent p = P("A + A^2") - P("A");
  CHECK(p.terms().size() == 1);
  for (const auto& [e, c] : p.terms()) CHECK(c != 0);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(20240601);
  for (int i = 0; i < 300; ++i) {
    Laurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == Laurent());
  }
}

TEST_CASE("star_normalize is idempotent with min degree 0") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Laurent p = random_laurent(rng);
    Laurent s = catalan::star_normalize(p);
    CHECK(catalan::star_normalize(s) == s);
    if (!p.is_zero()) CHECK(s.min_degree() == 0);
  }
}

TEST_CASE("div_exact undoes mul") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    Laurent p = random_laurent(rng), d = random_laurent(rng);
    if (d.is_zero()) continue;
    CHECK(catalan::div_exact(p * d, d) == p);
  }
}

TEST_CASE("substitute_power is multiplicative") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    Laurent p = random_laurent(rng), q = random_laurent(rng);
    for (int e : {-4, -1, 2, 3})
      CHECK(catalan::substitute_power(p * q, e) ==
            catalan::substitute_power(p, e) * catalan::substitute_power(q, e));
  }
}

TEST_CASE("coefficients beyond 64 bits stay exact") {
  Laurent big = catalan::pow(P("1 + A"), 80);
  // C(80,40) > 2^64
  CHECK(big.coefficient(40) == catalan::Integer("107507208733336176461620"));
  CHECK(catalan::div_exact(big, catalan::pow(P("1 + A"), 79)) == P("1 + A"));
}

}
