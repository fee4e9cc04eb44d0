#include <doctest.h>

#include <random>

#include "qroot/weyl_space.hpp"

using namespace qroot;

namespace {

MonomialOp random_monomial(const SpaceShape& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ent(0, (int)s.level() - 1);
  std::uniform_int_distribution<long> epow(0, (long)s.level() - 1);
  std::uniform_int_distribution<int> num(1, 3);
  MonomialOp m;
  Rational scale(num(rng), num(rng));
  scale.canonicalize();
  m.coeff = Cyclotomic::eps_pow(s.level(), epow(rng)) * scale;
  m.shift.resize(s.factors());
  m.phase.resize(s.factors());
  for (auto& v : m.shift) v = ent(rng);
  for (auto& v : m.phase) v = ent(rng);
  return m;
}

LinearOp random_op(const SpaceShape& s, std::mt19937_64& rng, int terms = 3) {
  std::vector<MonomialOp> ts;
  for (int i = 0; i < terms; ++i) ts.push_back(random_monomial(s, rng));
  return LinearOp(s, std::move(ts));
}

SparseVector random_vector(const SpaceShape& s, std::mt19937_64& rng, int terms = 3) {
  std::uniform_int_distribution<int> ent(0, (int)s.level() - 1);
  std::uniform_int_distribution<long> epow(0, (long)s.level() - 1);
  SparseVector v;
  for (int i = 0; i < terms; ++i) {
    BasisIndex m = BasisIndex::zero(s);
    for (auto& e : m.e) e = ent(rng);
    add_term(v, m, Cyclotomic::eps_pow(s.level(), epow(rng)));
  }
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("weyl-space");

TEST_CASE("shape bookkeeping") {
  SpaceShape s(3, 3);
  CHECK(s.factors() == 6);
  CHECK(s.dimension() == 729);
  std::vector<std::pair<unsigned, unsigned>> expect = {{1, 1}, {1, 2}, {1, 3},
                                                       {2, 2}, {2, 3}, {3, 3}};
  CHECK(s.pairs() == expect);
  for (unsigned p = 0; p < s.factors(); ++p) {
    auto [j, k] = s.pair_at(p);
    CHECK(s.position(j, k) == p);
  }
  // mirror (j,k) -> (k+1-j,k): (1,2) <-> (2,2), (1,3) <-> (3,3)
  CHECK(s.pair_at(s.mirror(s.position(1, 2))) == std::make_pair(2u, 2u));
  CHECK(s.pair_at(s.mirror(s.position(1, 3))) == std::make_pair(3u, 3u));
  CHECK(s.pair_at(s.mirror(s.position(2, 3))) == std::make_pair(2u, 3u));
  CHECK_THROWS_AS(s.position(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(SpaceShape(1, 4), std::invalid_argument);
}

TEST_CASE("basis index arithmetic") {
  SpaceShape s(2, 3);
  BasisIndex a{{1, 2, 0}};
  BasisIndex b{{2, 2, 1}};
  CHECK(a.add(s, b) == BasisIndex{{0, 1, 1}});
  CHECK(a.sub(s, b) == BasisIndex{{2, 0, 2}});
  for (std::int64_t v = 0; v < s.dimension(); ++v)
    CHECK(BasisIndex::from_linear(s, v).linear(s) == v);
  // lexicographic tuple order agrees with linear order
  CHECK(BasisIndex{{0, 1, 2}} < BasisIndex{{1, 0, 0}});
}

TEST_CASE("monomial products realize the group law") {
  SpaceShape s(2, 3);
  std::mt19937_64 rng(23);
  LinearOp id = LinearOp::identity(s);
  for (int iter = 0; iter < 10; ++iter) {
    LinearOp p = LinearOp::monomial(s, random_monomial(s, rng));
    CHECK(id * p == p);
    CHECK(p * id == p);
  }

  // z x = eps x z on the same factor: the normal form of Z*X carries
  // coefficient eps, the reversed product coefficient 1.
  LinearOp zx = LinearOp::z_op(s, 1, 2) * LinearOp::x_op(s, 1, 2);
  LinearOp xz = LinearOp::x_op(s, 1, 2) * LinearOp::z_op(s, 1, 2);
  REQUIRE(zx.terms().size() == 1);
  REQUIRE(xz.terms().size() == 1);
  CHECK(zx.terms()[0].coeff == Cyclotomic::eps(3));
  CHECK(xz.terms()[0].coeff.is_one());
  CHECK(zx.terms()[0].shift == xz.terms()[0].shift);
  CHECK(zx.terms()[0].phase == xz.terms()[0].phase);
  CHECK(zx == xz.scaled(Cyclotomic::eps(3)));

  // generators at distinct factors commute
  CHECK(LinearOp::z_op(s, 1, 1) * LinearOp::x_op(s, 2, 2) ==
        LinearOp::x_op(s, 2, 2) * LinearOp::z_op(s, 1, 1));

  CHECK_THROWS_AS(LinearOp::x_op(s, 1, 1) * LinearOp::x_op(SpaceShape(1, 3), 1, 1),
                  std::invalid_argument);

  for (int iter = 0; iter < 20; ++iter) {
    MonomialOp a = random_monomial(s, rng);
    MonomialOp b = random_monomial(s, rng);
    MonomialOp c = random_monomial(s, rng);
    CHECK(monomial_product(s, monomial_product(s, a, b), c) ==
          monomial_product(s, a, monomial_product(s, b, c)));
    MonomialOp ai = monomial_inverse(s, a);
    CHECK(LinearOp::monomial(s, monomial_product(s, a, ai)).is_identity());
    CHECK(LinearOp::monomial(s, monomial_product(s, ai, a)).is_identity());
  }
}

TEST_CASE("action on basis vectors") {
  SpaceShape s(2, 3);
  BasisIndex m{{1, 2, 0}};
  SparseVector um = unit_vector(s, m);

  CHECK(LinearOp::identity(s).apply(um) == um);
  // X shifts the indexed entry
  SparseVector xm = LinearOp::x_op(s, 1, 2).apply(um);
  CHECK(xm == unit_vector(s, m.add(s, BasisIndex::unit(s, 1, 2))));
  // Z is diagonal with eigenvalue eps^{m_{jk}}
  SparseVector zm = LinearOp::z_op(s, 1, 2).apply(um);
  CHECK(zm == vec_scale(um, Cyclotomic::eps_pow(3, 2)));

  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 20; ++iter) {
    MonomialOp p = random_monomial(s, rng);
    MonomialOp q = random_monomial(s, rng);
    SparseVector v = random_vector(s, rng);
    SparseVector lhs = LinearOp::monomial(s, monomial_product(s, p, q)).apply(v);
    SparseVector rhs = LinearOp::monomial(s, p).apply(LinearOp::monomial(s, q).apply(v));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("sums merge to canonical form") {
  SpaceShape s(1, 3);
  LinearOp x = LinearOp::x_op(s, 1, 1);
  LinearOp sum = x + x.scaled(-Cyclotomic::one(3));
  CHECK(sum.is_zero());
  LinearOp twice = x + x;
  REQUIRE(twice.terms().size() == 1);
  CHECK(twice.terms()[0].coeff == Cyclotomic::from_int(3, 2));
}

TEST_CASE("op_power") {
  SpaceShape s(2, 3);
  LinearOp x = LinearOp::x_op(s, 1, 2);
  LinearOp z = LinearOp::z_op(s, 2, 2);
  CHECK(op_power(x, 0).is_identity());
  CHECK(op_power(x, 3).is_identity());
  CHECK(op_power(z, 3).is_identity());
  std::mt19937_64 rng(31);
  LinearOp a = random_op(s, rng);
  CHECK(op_power(a, 3) == a * a * a);
}

TEST_CASE("star is a conjugate-linear anti-involution") {
  SpaceShape s(2, 3);
  CHECK(star(LinearOp::identity(s)).is_identity());

  // star of an x-generator is the inverse x at the mirrored factor
  LinearOp sx = star(LinearOp::x_op(s, 1, 2));
  CHECK(sx == LinearOp::x_op(s, 2, 2, -1));
  CHECK(star(LinearOp::z_op(s, 1, 2)) == LinearOp::z_op(s, 2, 2, -1));

  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 100; ++iter) {
    LinearOp a = random_op(s, rng);
    CHECK(star(star(a)) == a);
  }
  for (int iter = 0; iter < 25; ++iter) {
    LinearOp a = random_op(s, rng);
    LinearOp b = random_op(s, rng);
    CHECK(star(a * b) == star(b) * star(a));
  }

  // star applied to both sides of z x = eps x z agrees exactly
  LinearOp zx = LinearOp::z_op(s, 1, 1) * LinearOp::x_op(s, 1, 1);
  LinearOp xz = LinearOp::x_op(s, 1, 1) * LinearOp::z_op(s, 1, 1);
  CHECK(star(zx) == star(xz.scaled(Cyclotomic::eps(3))));
}

TEST_CASE("to_matrix") {
  SpaceShape s(1, 3);
  CHECK(to_matrix(LinearOp::identity(s)) == SparseMatrixQ::identity(s));

  // X at n=1, l=3 is the cyclic shift matrix.
  SparseMatrixQ xm = to_matrix(LinearOp::x_op(s, 1, 1));
  REQUIRE(xm.entries.size() == 3);
  for (std::int64_t c = 0; c < 3; ++c) {
    auto it = xm.entries.find({(c + 1) % 3, c});
    REQUIRE(it != xm.entries.end());
    CHECK(it->second.is_one());
  }

  SpaceShape s2(2, 3);
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 50; ++iter) {
    LinearOp a = random_op(s2, rng, 2);
    LinearOp b = random_op(s2, rng, 2);
    // operator composition then matrix vs matrix product
    CHECK(to_matrix(a * b) == to_matrix(a).mul(to_matrix(b)));
  }
  for (int iter = 0; iter < 10; ++iter) {
    LinearOp a = random_op(s2, rng);
    SparseVector v = random_vector(s2, rng);
    SparseVector image = a.apply(v);
    // column-by-column matrix action agrees with apply
    SparseMatrixQ am = to_matrix(a);
    SparseVector via_matrix;
    for (const auto& [m, c] : v) {
      for (const auto& [rc, mc] : am.entries) {
        if (rc.second != m.linear(s2)) continue;
        add_term(via_matrix, BasisIndex::from_linear(s2, rc.first), mc * c);
      }
    }
    CHECK(image == via_matrix);
  }

  CHECK_THROWS_AS(to_matrix(LinearOp::identity(SpaceShape(3, 3)), 100), CapExceeded);
}

TEST_SUITE_END();
