#include <doctest.h>

#include <map>
#include <random>

#include "qroot/cyclotomic.hpp"

using namespace qroot;

namespace {

Cyclotomic random_element(unsigned level, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  size_t deg = cyclotomic_polynomial(level).size() - 1;
  std::vector<Rational> coeffs(deg);
  for (auto& c : coeffs) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  return Cyclotomic::reduce(level, coeffs);
}

// Independent inverse oracle: solve the linear system b * a = 1 for the
// coefficients of b via dense Gaussian elimination on the multiplication
// matrix of a.
Cyclotomic inverse_by_linear_solve(const Cyclotomic& a) {
  unsigned l = a.level();
  size_t d = a.coeffs().size();
  // Column j of the matrix is a * eps^j.
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, Rational(0)));
  for (size_t j = 0; j < d; ++j) {
    Cyclotomic col = a * Cyclotomic::eps_pow(l, (long)j);
    for (size_t i = 0; i < d; ++i) m[i][j] = col.coeffs()[i];
  }
  m[0][d] = 1;
  for (size_t c = 0, r = 0; c < d && r < d; ++c) {
    size_t piv = r;
    while (piv < d && m[piv][c] == 0) ++piv;
    REQUIRE(piv < d);
    std::swap(m[piv], m[r]);
    for (size_t i = 0; i < d; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (size_t j = c; j <= d; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  std::vector<Rational> sol(d);
  for (size_t r = 0; r < d; ++r) {
    size_t c = 0;
    while (c < d && m[r][c] == 0) ++c;
    if (c < d) sol[c] = m[r][d] / m[r][c];
  }
  return Cyclotomic::reduce(l, sol);
}

// Symmetric Gaussian binomial by the q-Pascal recurrence
// [m,k] = q^k [m-1,k] + q^{k-m} [m-1,k-1], computed as a Laurent
// polynomial and evaluated at eps.  Used as an oracle independent of the
// factorial-quotient route in the library.
std::map<long, Rational> pascal_binomial(unsigned m, unsigned k) {
  if (k > m) return {};
  if (k == 0 || k == m) return {{0, Rational(1)}};
  std::map<long, Rational> out;
  for (const auto& [e, c] : pascal_binomial(m - 1, k)) out[e + (long)k] += c;
  for (const auto& [e, c] : pascal_binomial(m - 1, k - 1))
    out[e + (long)k - (long)m] += c;
  return out;
}

Cyclotomic eval_laurent(unsigned level, const std::map<long, Rational>& p) {
  Cyclotomic out = Cyclotomic::zero(level);
  for (const auto& [e, c] : p) out += Cyclotomic::eps_pow(level, e) * c;
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("cyclotomic");

TEST_CASE("cyclotomic polynomials have the right degree and roots") {
  // degrees: totients of 3, 5, 7, 9, 15
  CHECK(cyclotomic_polynomial(3).size() == 3);
  CHECK(cyclotomic_polynomial(5).size() == 5);
  CHECK(cyclotomic_polynomial(7).size() == 7);
  CHECK(cyclotomic_polynomial(9).size() == 7);
  CHECK(cyclotomic_polynomial(15).size() == 9);

  for (unsigned l : {3u, 5u, 7u, 9u, 15u}) {
    Cyclotomic e = Cyclotomic::eps(l);
    CHECK(e.pow(l).is_one());
    // Phi_l(eps) = 0 by construction of the quotient.
    const auto& phi = cyclotomic_polynomial(l);
    Cyclotomic v = Cyclotomic::zero(l);
    for (size_t i = 0; i < phi.size(); ++i) v += Cyclotomic::eps_pow(l, (long)i) * phi[i];
    CHECK(v.is_zero());
  }

  // x^l - 1 factors through the divisor product.
  CHECK(cyclotomic_polynomial(9) ==
        std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(1),
                              Rational(0), Rational(0), Rational(1)});
}

TEST_CASE("reduce canonicalizes powers and relations") {
  CHECK(Cyclotomic::eps(3).pow(3) == Cyclotomic::one(3));
  Cyclotomic s = Cyclotomic::one(3) + Cyclotomic::eps(3) + Cyclotomic::eps_pow(3, 2);
  CHECK(s.is_zero());
  CHECK(Cyclotomic::eps_pow(5, 7) == Cyclotomic::eps_pow(5, 2));
  CHECK_THROWS_AS(Cyclotomic::zero(4), std::invalid_argument);
  CHECK_THROWS_AS(Cyclotomic::zero(1), std::invalid_argument);
}

TEST_CASE("inverse matches the linear-solve oracle") {
  CHECK(Cyclotomic::one(3).inverse() == Cyclotomic::one(3));
  CHECK(Cyclotomic::eps(5).inverse() == Cyclotomic::eps_pow(5, 4));

  // eps - eps^{-1} at l=3 is 1 + 2 eps; its inverse is (-1 - 2 eps)/3.
  Cyclotomic x = Cyclotomic::eps(3) - Cyclotomic::eps_pow(3, -1);
  CHECK(x == Cyclotomic::one(3) + Cyclotomic::eps(3) * Rational(2));
  Cyclotomic expect = Cyclotomic::reduce(3, {Rational(-1, 3), Rational(-2, 3)});
  CHECK(x.inverse() == expect);
  CHECK(x.inverse() == inverse_by_linear_solve(x));
  CHECK((x * x.inverse()).is_one());

  CHECK_THROWS_AS(Cyclotomic::zero(3).inverse(), DivisionByZero);
}

TEST_CASE("inverse is a two-sided inverse on random elements") {
  std::mt19937_64 rng(7);
  for (unsigned l : {3u, 5u, 7u}) {
    for (int iter = 0; iter < 334; ++iter) {
      Cyclotomic a = random_element(l, rng);
      if (a.is_zero()) continue;
      Cyclotomic b = a.inverse();
      CHECK((a * b).is_one());
      CHECK((b * a).is_one());
      CHECK(b == inverse_by_linear_solve(a));
    }
  }
}

TEST_CASE("ring axioms hold on random triples") {
  std::mt19937_64 rng(11);
  for (unsigned l : {3u, 5u, 7u}) {
    for (int iter = 0; iter < 30; ++iter) {
      Cyclotomic a = random_element(l, rng);
      Cyclotomic b = random_element(l, rng);
      Cyclotomic c = random_element(l, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
    }
  }
}

TEST_CASE("q-integers") {
  CHECK(q_integer(3, 0).is_zero());
  CHECK(q_integer(3, 3).is_zero());
  CHECK(q_integer(5, 5).is_zero());
  // [2] at l=3 equals eps + eps^{-1} = -1.
  CHECK(q_integer(3, 2) == -Cyclotomic::one(3));

  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> dist(-20, 20);
  for (unsigned l : {3u, 5u, 7u}) {
    for (int iter = 0; iter < 20; ++iter) {
      long a = dist(rng);
      CHECK(q_integer(l, -a) == -q_integer(l, a));
      CHECK(q_integer(l, a + (long)l) == q_integer(l, a));
    }
  }
}

TEST_CASE("gaussian multinomials are computed in polynomial form") {
  CHECK(gaussian_multinomial(3, 4, {4}).is_one());
  // [3 choose 1] in polynomial form is 1 + q + q^2, which vanishes at a
  // primitive cube root.
  CHECK(gaussian_multinomial(3, 3, {1, 2}).is_zero());
  CHECK(gaussian_multinomial(3, 2, {1, 1}) == -Cyclotomic::one(3));
  CHECK_THROWS_AS(gaussian_multinomial(3, 3, {1, 1}), std::invalid_argument);

  // [l choose k] vanishes at a primitive l-th root for all 0 < k < l.
  for (unsigned l : {3u, 5u, 7u})
    for (unsigned k = 1; k < l; ++k)
      CHECK(gaussian_multinomial(l, l, {k, l - k}).is_zero());

  // Binomials agree with the q-Pascal oracle.
  for (unsigned l : {3u, 5u}) {
    for (unsigned m = 1; m <= 8; ++m)
      for (unsigned k = 1; k < m; ++k)
        CHECK(gaussian_multinomial(l, m, {k, m - k}) ==
              eval_laurent(l, pascal_binomial(m, k)));
  }

  // Multinomial = product of nested binomials.
  for (unsigned l : {3u, 5u}) {
    Cyclotomic lhs = gaussian_multinomial(l, 6, {1, 2, 3});
    Cyclotomic rhs = gaussian_multinomial(l, 6, {3, 3}) *
                     gaussian_multinomial(l, 3, {1, 2});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("brace") {
  CHECK(brace(Cyclotomic::one(3)).is_zero());
  CHECK(brace(Cyclotomic::eps(3)).is_one());
  CHECK(brace(Cyclotomic::eps_pow(3, 2)) == -Cyclotomic::one(3));
  CHECK_THROWS_AS(brace(Cyclotomic::zero(3)), DivisionByZero);

  for (unsigned l : {3u, 5u, 7u})
    for (long a = -6; a <= 6; ++a)
      CHECK(brace(Cyclotomic::eps_pow(l, a)) == q_integer(l, a));
}

TEST_CASE("conjugation is the eps -> eps^{-1} automorphism") {
  std::mt19937_64 rng(17);
  for (unsigned l : {3u, 5u, 7u}) {
    CHECK(Cyclotomic::eps(l).conj() == Cyclotomic::eps_pow(l, -1));
    for (int iter = 0; iter < 20; ++iter) {
      Cyclotomic a = random_element(l, rng);
      Cyclotomic b = random_element(l, rng);
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a + b).conj() == a.conj() + b.conj());
    }
  }
}

TEST_CASE("eps_log recovers pure powers") {
  for (unsigned l : {3u, 5u}) {
    for (unsigned j = 0; j < l; ++j) {
      auto log = Cyclotomic::eps_pow(l, j).eps_log();
      REQUIRE(log.has_value());
      CHECK(*log == j);
    }
  }
  CHECK(!(Cyclotomic::one(3) + Cyclotomic::one(3)).eps_log().has_value());
  CHECK(!Cyclotomic::zero(5).eps_log().has_value());
}

TEST_CASE("text serialization round-trips") {
  Cyclotomic x = Cyclotomic::reduce(3, {Rational(-1, 3), Rational(-2, 3)});
  CHECK(x.str() == "3; -1/3, -2/3");
  CHECK(Cyclotomic::parse(x.str()) == x);

  std::mt19937_64 rng(19);
  for (unsigned l : {3u, 5u, 7u}) {
    for (int iter = 0; iter < 20; ++iter) {
      Cyclotomic a = random_element(l, rng);
      CHECK(Cyclotomic::parse(a.str()) == a);
    }
  }
  CHECK_THROWS_AS(Cyclotomic::parse("nonsense"), std::invalid_argument);
}

TEST_SUITE_END();
