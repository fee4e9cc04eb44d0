#include "qroot/verify_suites.hpp"

#include <random>

namespace qroot {

namespace {

SuiteReport make_report(const std::string& suite, const ParamSet& P,
                        const std::string& flag = "") {
  SuiteReport rep;
  rep.suite = suite;
  rep.params_digest = P.digest();
  rep.flag = flag;
  return rep;
}

}  // namespace

SuiteReport power_suite(const ParamSet& P, unsigned m_max) {
  SuiteReport rep = make_report("power", P);
  for (unsigned i = 1; i <= P.n; ++i) {
    for (Gen g : {Gen::E, Gen::F}) {
      LinearOp gen = gen_image(g, i, P);
      LinearOp acc = LinearOp::identity(P.shape());
      for (unsigned m = 1; m <= m_max; ++m) {
        acc = acc * gen;
        rep.instances.push_back(SuiteInstance{
            g == Gen::E ? "power-e" : "power-f",
            {(int)i, (int)m},
            divided_power_image(g, i, m, P) == acc,
            false,
            ""});
      }
    }
  }
  return rep;
}

SuiteReport action_suite(const ParamSet& P) {
  SuiteReport rep = make_report("action", P);
  SpaceShape s = P.shape();
  auto entry = [&](const BasisIndex& m, long j, long k) -> long {
    return s.in_range(j, k) ? m.e[s.position((unsigned)j, (unsigned)k)] : 0;
  };
  for (unsigned i = 1; i <= P.n; ++i) {
    LinearOp ei = gen_image(Gen::E, i, P);
    bool all_ok = true;
    std::string witness;
    for (std::int64_t v = 0; v < s.dimension(); ++v) {
      BasisIndex m = BasisIndex::from_linear(s, v);
      SparseVector expect;
      for (unsigned k = i; k <= P.n; ++k) {
        long bracket = entry(m, i, k) + entry(m, i, (long)k - 1) -
                       entry(m, (long)i - 1, (long)k - 1) - entry(m, i + 1, k);
        Cyclotomic c = q_integer(P.l, bracket);
        if (c.is_zero()) continue;
        BasisIndex target = m;
        for (unsigned c2 = k; c2 <= P.n; ++c2)
          target = target.add(s, BasisIndex::unit(s, i, c2));
        add_term(expect, target, c);
      }
      if (!(ei.apply(unit_vector(s, m)) == expect)) {
        all_ok = false;
        witness = "first mismatch at m = " + m.str();
        break;
      }
    }
    rep.instances.push_back(SuiteInstance{"action-formula", {(int)i}, all_ok, false, witness});
  }
  return rep;
}

SuiteReport shift_suite(const ParamSet& P, std::uint64_t seed) {
  SuiteReport rep = make_report("shift", P);
  SpaceShape s = P.shape();

  auto transported = [&](const BasisIndex& xi, const BasisIndex& mu) {
    ParamSet Ps = shift_params(P, xi);
    for (unsigned i = 1; i <= P.n; ++i) {
      for (Gen g : {Gen::E, Gen::F, Gen::T}) {
        SparseVector base = gen_image(g, i, P).apply(unit_vector(s, mu));
        SparseVector moved =
            gen_image(g, i, Ps).apply(unit_vector(s, mu.add(s, xi)));
        SparseVector expect;
        for (const auto& [m, c] : base) add_term(expect, m.add(s, xi), c);
        if (!(moved == expect)) return false;
      }
    }
    return true;
  };

  if (s.dimension() <= 32) {
    for (std::int64_t x = 0; x < s.dimension(); ++x) {
      BasisIndex xi = BasisIndex::from_linear(s, x);
      bool ok = true;
      for (std::int64_t m = 0; m < s.dimension() && ok; ++m)
        ok = transported(xi, BasisIndex::from_linear(s, m));
      rep.instances.push_back(SuiteInstance{"shift-transport", xi.e, ok, false,
                                            ok ? "" : "exhaustive check failed"});
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> pick(0, s.dimension() - 1);
    for (int t = 0; t < 5; ++t) {
      BasisIndex xi = BasisIndex::from_linear(s, pick(rng));
      bool ok = true;
      for (int q = 0; q < 20 && ok; ++q)
        ok = transported(xi, BasisIndex::from_linear(s, pick(rng)));
      rep.instances.push_back(SuiteInstance{"shift-transport", xi.e, ok, false,
                                            ok ? "" : "sampled check failed"});
    }
  }
  return rep;
}

SuiteReport primitive_suite(const ParamSet& P, std::uint64_t seed, std::int64_t cap) {
  SuiteReport rep = make_report("primitive", P);
  SpaceShape s = P.shape();
  SparseVector u0 = unit_vector(s, BasisIndex::zero(s));

  Subspace prim = primitive_subspace(P, cap);
  bool unique = prim.dim() == 1 && prim.rows().begin()->second == u0;
  rep.instances.push_back(SuiteInstance{
      "primitive-unique", {}, unique, false,
      "dimension " + std::to_string(prim.dim())});

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(0, s.dimension() - 1);
  for (int t = 0; t < 5; ++t) {
    BasisIndex xi = BasisIndex::from_linear(s, pick(rng));
    Subspace moved = primitive_subspace(shift_params(P, xi), cap);
    bool ok = moved.dim() == 1 && moved.rows().begin()->second == unit_vector(s, xi);
    rep.instances.push_back(SuiteInstance{"primitive-shifted", xi.e, ok, false,
                                          "dimension " + std::to_string(moved.dim())});
  }
  return rep;
}

SuiteReport constants_suite(const ParamSet& P) {
  SuiteReport rep = make_report("constants", P);
  ScalarConstantTables t = lth_power_constants(P);
  auto rows = [&rep](const char* name,
                     const std::map<std::pair<unsigned, unsigned>, Cyclotomic>& table) {
    for (const auto& [ik, v] : table)
      rep.instances.push_back(SuiteInstance{name,
                                            {(int)ik.first, (int)ik.second},
                                            v.is_one(),
                                            false,
                                            v.is_one() ? "" : v.str()});
  };
  rows("constant-c", t.c);
  rows("constant-c-bar", t.c_bar);
  rows("constant-d", t.d);
  rows("constant-d-bar", t.d_bar);
  return rep;
}

SuiteReport degree_suite(const ParamSet& P, ConventionFlag flag, unsigned samples,
                         std::uint64_t seed, std::int64_t cap) {
  SuiteReport rep = make_report("degree", P, flag.str());
  SpaceShape s = P.shape();
  unsigned J = degree_bound(P.n, P.l);
  rep.instances.push_back(SuiteInstance{
      "degree-bound", {(int)J}, true, true, "J = " + std::to_string(J)});

  SparseVector u0 = unit_vector(s, BasisIndex::zero(s));
  Subspace L = submodule_closure(s, {u0}, module_generators(P), cap);
  GenImages g = all_gen_images(P);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> pick(1, P.n);
  for (unsigned t = 0; t < samples; ++t) {
    std::vector<int> word;
    for (unsigned step = 0; step <= J; ++step) word.push_back((int)pick(rng));
    // apply the word vector by vector; the letters act right to left
    auto apply_word = [&](SparseVector v) {
      for (auto it = word.rbegin(); it != word.rend() && !v.empty(); ++it)
        v = g.e[*it - 1].apply(v);
      return v;
    };
    bool kills_module = true;
    for (const auto& [pivot, row] : L.rows())
      if (!vec_is_zero(apply_word(row))) {
        kills_module = false;
        break;
      }
    rep.instances.push_back(
        SuiteInstance{"degree-annihilation", word, kills_module, false, ""});
    bool zero_everywhere = true;
    for (std::int64_t v = 0; v < s.dimension() && zero_everywhere; ++v)
      zero_everywhere =
          vec_is_zero(apply_word(unit_vector(s, BasisIndex::from_linear(s, v))));
    rep.instances.push_back(SuiteInstance{
        "degree-zero-on-space", word, zero_everywhere, true,
        zero_everywhere ? "vanishes on the whole space"
                        : "nonzero off the highest-weight module"});
  }
  return rep;
}

std::vector<GridPoint> default_grid() {
  std::vector<GridPoint> grid;
  grid.push_back({1, 3, {{0}, {1}, {2}}});
  grid.push_back({1, 5, {{0}, {1}, {2}, {3}, {4}}});
  grid.push_back({2, 3, {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {0, 2}}});
  grid.push_back({2, 5, {{0, 0}, {1, 1}, {4, 4}, {1, 4}, {0, 2}}});
  grid.push_back({3, 3, {{1, 1, 1}, {0, 1, 2}, {2, 2, 2}}});
  return grid;
}

}  // namespace qroot
