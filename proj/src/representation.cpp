#include "qroot/representation.hpp"

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

namespace qroot {

namespace {

Cyclotomic param_or_one(const std::map<std::pair<unsigned, unsigned>, Cyclotomic>& m,
                        unsigned l, long j, long k, long n) {
  if (j < 1 || k < j || k > n) return Cyclotomic::one(l);
  auto it = m.find({(unsigned)j, (unsigned)k});
  if (it == m.end())
    throw std::invalid_argument("missing parameter at (" + std::to_string(j) + "," +
                                std::to_string(k) + ")");
  return it->second;
}

// Monomial with integer x/z exponent vectors; the parameter coefficients
// a^x b^z are attached here, while the operator exponents collapse mod l.
MonomialOp psi_monomial(const ParamSet& P, const Cyclotomic& scalar,
                        const std::vector<int>& xexp, const std::vector<int>& zexp) {
  SpaceShape s = P.shape();
  MonomialOp m;
  m.coeff = scalar;
  m.shift.resize(s.factors());
  m.phase.resize(s.factors());
  for (unsigned p = 0; p < s.factors(); ++p) {
    auto [j, k] = s.pair_at(p);
    if (xexp[p] != 0) m.coeff *= P.a_at(j, k).pow(xexp[p]);
    if (zexp[p] != 0) m.coeff *= P.b_at(j, k).pow(zexp[p]);
    m.shift[p] = ((xexp[p] % (int)P.l) + (int)P.l) % (int)P.l;
    m.phase[p] = ((zexp[p] % (int)P.l) + (int)P.l) % (int)P.l;
  }
  return m;
}

// {W} = (W - W^{-1}) / (eps - eps^{-1}) for an invertible monomial W.
LinearOp brace_op(const SpaceShape& s, const MonomialOp& w) {
  Cyclotomic den = Cyclotomic::eps(s.level()) - Cyclotomic::eps_pow(s.level(), -1);
  Cyclotomic dinv = den.inverse("brace denominator");
  MonomialOp pos = w;
  pos.coeff *= dinv;
  MonomialOp neg = monomial_inverse(s, w);
  neg.coeff *= -dinv;
  return LinearOp(s, {std::move(pos), std::move(neg)});
}

void check_gen_index(const ParamSet& P, unsigned i) {
  if (i < 1 || i > P.n)
    throw std::invalid_argument("generator index " + std::to_string(i) +
                                " out of range for rank " + std::to_string(P.n));
}

}  // namespace

Cyclotomic ParamSet::a_at(long j, long k) const {
  return param_or_one(a, l, j, k, n);
}

Cyclotomic ParamSet::b_at(long j, long k) const {
  return param_or_one(b, l, j, k, n);
}

std::string ParamSet::canonical_str() const {
  std::ostringstream os;
  os << "n=" << n << ";l=" << l;
  for (unsigned i = 1; i <= n; ++i) os << ";r" << i << "=" << r_at(i).str();
  for (unsigned i = 1; i <= n; ++i) os << ";s" << i << "=" << s_at(i).str();
  for (const auto& [jk, v] : a) os << ";a" << jk.first << "," << jk.second << "=" << v.str();
  for (const auto& [jk, v] : b) os << ";b" << jk.first << "," << jk.second << "=" << v.str();
  return os.str();
}

std::string ParamSet::digest() const {
  // FNV-1a, 64 bit; stable across platforms and runs.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical_str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

ParamSet default_params(unsigned n, unsigned l, const std::vector<unsigned>& lambda) {
  SpaceShape s(n, l);
  if (lambda.size() != n)
    throw std::invalid_argument("lambda must have " + std::to_string(n) + " entries");
  for (unsigned v : lambda)
    if (v >= l)
      throw std::invalid_argument("lambda entry " + std::to_string(v) +
                                  " out of range [0," + std::to_string(l) + ")");
  ParamSet P;
  P.n = n;
  P.l = l;
  for (unsigned i = 1; i <= n; ++i) {
    P.r.push_back(Cyclotomic::one(l));
    P.s.push_back(Cyclotomic::eps_pow(l, -(long)lambda[i - 1]));
  }
  for (const auto& [j, k] : s.pairs()) {
    P.a.emplace(std::make_pair(j, k), Cyclotomic::one(l));
    P.b.emplace(std::make_pair(j, k), Cyclotomic::one(l));
  }
  P.lambda = lambda;
  return P;
}

ParamSet random_specialization(unsigned n, unsigned l,
                               const std::vector<unsigned>& lambda,
                               std::uint64_t seed) {
  ParamSet P = default_params(n, l, lambda);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> epow(0, (long)l - 1);
  std::uniform_int_distribution<int> small(1, 4);
  for (unsigned i = 1; i <= n; ++i) {
    Rational q(small(rng), small(rng));
    q.canonicalize();
    P.r[i - 1] = Cyclotomic::eps_pow(l, epow(rng)) * q;
  }
  // The rb_cycle constraints determine every b from r: the equation at
  // (i,k) is solved for b_{ik}, walking diagonals k-i upward.
  for (unsigned d = 0; d < n; ++d) {
    for (unsigned i = 1; i + d <= n; ++i) {
      unsigned k = i + d;
      Cyclotomic v = P.r_at(i).inverse() * P.b_at(i, (long)k - 1).inverse() *
                     P.b_at((long)i - 1, (long)k - 1) * P.b_at(i + 1, k);
      P.b[{i, k}] = v;
    }
  }
  // t_weight fixes s.
  for (unsigned i = 1; i <= n; ++i) {
    P.s[i - 1] = P.r_at(i) * P.b_at(i, n).pow(2) * P.b_at((long)i - 1, n).inverse() *
                 P.b_at(i + 1, n).inverse() * Cyclotomic::eps_pow(l, -(long)lambda[i - 1]);
  }
  return P;
}

ParamSet random_generic_params(unsigned n, unsigned l, std::uint64_t seed) {
  ParamSet P = default_params(n, l, std::vector<unsigned>(n, 0));
  P.lambda.reset();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> epow(0, (long)l - 1);
  std::uniform_int_distribution<int> small(1, 5);
  auto rand_val = [&]() {
    Rational q(small(rng), small(rng));
    q.canonicalize();
    return Cyclotomic::eps_pow(l, epow(rng)) * q;
  };
  for (unsigned i = 0; i < n; ++i) {
    P.r[i] = rand_val();
    P.s[i] = rand_val();
  }
  for (auto& [jk, v] : P.a) v = rand_val();
  for (auto& [jk, v] : P.b) v = rand_val();
  return P;
}

SpecializationReport validate_params(const ParamSet& P) {
  SpecializationReport rep;
  unsigned n = P.n, l = P.l;
  auto fail = [](EqFamilyResult& fam, unsigned i, unsigned k, const Cyclotomic& v) {
    if (fam.pass) {
      fam.pass = false;
      fam.first_failure = FamilyWitness{i, k, v.str()};
    }
  };

  for (unsigned i = 1; i <= n; ++i)
    for (unsigned k = i; k <= n; ++k) {
      Cyclotomic prod = Cyclotomic::one(l);
      for (unsigned c = k; c <= n; ++c) prod *= P.a_at(i, c);
      if (!prod.is_one()) fail(rep.a_chain, i, k, prod);
    }

  for (unsigned i = 1; i <= n; ++i)
    for (unsigned k = i; k <= n; ++k) {
      Cyclotomic v = P.r_at(i) * P.b_at(i, k) * P.b_at(i, (long)k - 1) *
                     P.b_at((long)i - 1, (long)k - 1).inverse() *
                     P.b_at(i + 1, k).inverse();
      if (!v.is_one()) fail(rep.rb_cycle, i, k, v);
    }

  rep.derived_lambda.assign(n, 0);
  for (unsigned i = 1; i <= n; ++i) {
    Cyclotomic v = P.r_at(i) * P.s_at(i).inverse("t_weight ratio") *
                   P.b_at(i, n).pow(2) * P.b_at((long)i - 1, n).inverse() *
                   P.b_at(i + 1, n).inverse();
    auto log = v.eps_log();
    if (!log)
      throw std::domain_error(
          "weight undefined: the t-parameter ratio at i=" + std::to_string(i) +
          " is not a power of eps: " + v.str());
    rep.derived_lambda[i - 1] = *log;
    if (P.lambda && (*P.lambda)[i - 1] != *log) fail(rep.t_weight, i, i, v);
  }

  for (unsigned i = 1; i <= n; ++i)
    for (unsigned k = 1; k <= i; ++k) {
      Cyclotomic v = P.s_at(i) * P.b_at((long)i + 1 - k, (long)n - k) *
                     P.b_at((long)i + 1 - k, (long)n + 1 - k).inverse() *
                     P.b_at((long)i - k, (long)n + 1 - k) *
                     P.b_at((long)i - k, (long)n - k).inverse();
      if (v != Cyclotomic::eps_pow(l, -(long)rep.derived_lambda[i - 1]))
        fail(rep.s_cycle, i, k, v);
    }

  // The s_cycle family is a consequence of rb_cycle + t_weight; seeing it
  // fail while those pass means the implication chain itself is broken.
  if (rep.rb_cycle.pass && rep.t_weight.pass && !rep.s_cycle.pass)
    throw std::logic_error("specialization invariant violated: s_cycle failed "
                           "although rb_cycle and t_weight hold");
  return rep;
}

MonomialOp building_block(BlockKind kind, unsigned i, unsigned k, const ParamSet& P) {
  SpaceShape s = P.shape();
  if (!s.in_range(i, k))
    throw std::invalid_argument("building block index (" + std::to_string(i) + "," +
                                std::to_string(k) + ") out of range");
  std::vector<int> xexp(s.factors(), 0), zexp(s.factors(), 0);
  bool base_a = (kind == BlockKind::A || kind == BlockKind::AStar);
  if (base_a) {
    for (unsigned c = k; c <= P.n; ++c) xexp[s.position(i, c)] += 1;
  } else {
    zexp[s.position(i, k)] += 1;
    if (s.in_range(i, (long)k - 1)) zexp[s.position(i, k - 1)] += 1;
    if (s.in_range((long)i - 1, (long)k - 1)) zexp[s.position(i - 1, k - 1)] -= 1;
    if (s.in_range(i + 1, k)) zexp[s.position(i + 1, k)] -= 1;
  }
  if (kind == BlockKind::AStar || kind == BlockKind::BStar) {
    // Star at the group level: mirror every factor position and invert.
    std::vector<int> xs(s.factors(), 0), zs(s.factors(), 0);
    for (unsigned p = 0; p < s.factors(); ++p) {
      xs[s.mirror(p)] = -xexp[p];
      zs[s.mirror(p)] = -zexp[p];
    }
    xexp = std::move(xs);
    zexp = std::move(zs);
  }
  return psi_monomial(P, Cyclotomic::one(P.l), xexp, zexp);
}

LinearOp gen_image(Gen g, unsigned i, const ParamSet& P) {
  check_gen_index(P, i);
  SpaceShape s = P.shape();
  unsigned n = P.n;
  switch (g) {
    case Gen::E: {
      LinearOp sum = LinearOp::zero(s);
      for (unsigned k = i; k <= n; ++k) {
        MonomialOp a = building_block(BlockKind::A, i, k, P);
        MonomialOp b = building_block(BlockKind::B, i, k, P);
        b.coeff *= P.r_at(i);
        sum = sum + LinearOp::monomial(s, a) * brace_op(s, b);
      }
      return sum;
    }
    case Gen::F: {
      LinearOp sum = LinearOp::zero(s);
      for (unsigned k = 1; k <= i; ++k) {
        MonomialOp a = building_block(BlockKind::AStar, n + 1 - i, n + 1 - k, P);
        MonomialOp b = building_block(BlockKind::BStar, n + 1 - i, n + 1 - k, P);
        b.coeff *= P.s_at(i);
        sum = sum + LinearOp::monomial(s, a) * brace_op(s, b);
      }
      return sum;
    }
    case Gen::T: {
      std::vector<int> xexp(s.factors(), 0), zexp(s.factors(), 0);
      zexp[s.position(i, n)] += 2;
      if (s.in_range((long)i - 1, n)) zexp[s.position(i - 1, n)] -= 1;
      if (s.in_range(i + 1, n)) zexp[s.position(i + 1, n)] -= 1;
      Cyclotomic c = P.r_at(i) * P.s_at(i).inverse("t-image parameter ratio");
      return LinearOp::monomial(s, psi_monomial(P, c, xexp, zexp));
    }
  }
  throw std::logic_error("unreachable");
}

LinearOp gen_image_t_inverse(unsigned i, const ParamSet& P) {
  LinearOp t = gen_image(Gen::T, i, P);
  return LinearOp::monomial(P.shape(), monomial_inverse(P.shape(), t.terms().at(0)));
}

GenImages all_gen_images(const ParamSet& P) {
  GenImages g;
  for (unsigned i = 1; i <= P.n; ++i) {
    g.e.push_back(gen_image(Gen::E, i, P));
    g.f.push_back(gen_image(Gen::F, i, P));
    g.t.push_back(gen_image(Gen::T, i, P));
    g.t_inv.push_back(gen_image_t_inverse(i, P));
  }
  return g;
}

LinearOp divided_power_image(Gen g, unsigned i, unsigned m, const ParamSet& P) {
  check_gen_index(P, i);
  if (g == Gen::T) throw std::invalid_argument("divided powers exist for e and f only");
  if (m == 0) return LinearOp::identity(P.shape());
  SpaceShape s = P.shape();
  unsigned n = P.n;

  // The k-range of the chain sum: [i, n] on the e side, [1, i] on the f
  // side, matching the k-range of the single-power image.
  std::vector<unsigned> krange;
  if (g == Gen::E)
    for (unsigned k = i; k <= n; ++k) krange.push_back(k);
  else
    for (unsigned k = 1; k <= i; ++k) krange.push_back(k);

  auto x_block = [&](unsigned k) {
    return g == Gen::E ? building_block(BlockKind::A, i, k, P)
                       : building_block(BlockKind::AStar, n + 1 - i, n + 1 - k, P);
  };
  auto brace_base = [&](unsigned k) {
    MonomialOp b = g == Gen::E
                       ? building_block(BlockKind::B, i, k, P)
                       : building_block(BlockKind::BStar, n + 1 - i, n + 1 - k, P);
    b.coeff *= (g == Gen::E ? P.r_at(i) : P.s_at(i));
    return b;
  };

  LinearOp total = LinearOp::zero(s);

  // Chains: subsets {k_1 > k_2 > ... > k_p} of the k-range and exponent
  // ladders m = nu_1 > nu_2 > ... > nu_p >= 1, nu_{p+1} = 0.  Each term is
  //   [m; c_1,...,c_p] * prod_r A_{k_r}^{c_r}
  //                    * prod_r prod_{t=0}^{c_r-1} {base_r eps^{nu_r-1-t}}
  // with c_r = nu_r - nu_{r+1}.
  unsigned kr = (unsigned)krange.size();
  for (unsigned p = 1; p <= std::min((unsigned)m, kr); ++p) {
    std::vector<unsigned> ksel(p), nusel(p);
    // enumerate descending k-chains as combinations
    std::function<void(unsigned, unsigned)> loop_k = [&](unsigned pos, unsigned start) {
      if (pos == p) {
        // enumerate descending nu ladders with nu_1 = m
        nusel[0] = m;
        std::function<void(unsigned, unsigned)> loop_nu = [&](unsigned qpos,
                                                              unsigned upper) {
          if (qpos == p) {
            std::vector<unsigned> parts(p);
            for (unsigned rr = 0; rr < p; ++rr)
              parts[rr] = nusel[rr] - (rr + 1 < p ? nusel[rr + 1] : 0);
            Cyclotomic coeff = gaussian_multinomial(P.l, m, parts);
            if (coeff.is_zero()) return;
            LinearOp term = LinearOp::scalar(s, coeff);
            for (unsigned rr = 0; rr < p; ++rr) {
              MonomialOp apow = x_block(ksel[rr]);
              LinearOp ap = LinearOp::monomial(s, apow);
              for (unsigned t = 1; t < parts[rr]; ++t)
                ap = ap * LinearOp::monomial(s, apow);
              term = term * ap;
            }
            for (unsigned rr = 0; rr < p; ++rr) {
              MonomialOp base = brace_base(ksel[rr]);
              for (unsigned t = 0; t < parts[rr]; ++t) {
                MonomialOp scaled = base;
                scaled.coeff *= Cyclotomic::eps_pow(P.l, (long)nusel[rr] - 1 - (long)t);
                term = term * brace_op(s, scaled);
              }
            }
            total = total + term;
            return;
          }
          for (unsigned nu = upper; nu >= 1; --nu) {
            nusel[qpos] = nu;
            loop_nu(qpos + 1, nu - 1);
            if (nu == 1) break;
          }
        };
        loop_nu(1, m - 1);
        return;
      }
      for (unsigned idx = start; idx < kr; ++idx) {
        // The chain runs against the commutation grading of the blocks:
        // descending in k for e, ascending for f (the star mirrors the
        // second block index, which reverses the ladder).
        ksel[pos] = g == Gen::E ? krange[kr - 1 - idx] : krange[idx];
        loop_k(pos + 1, idx + 1);
      }
    };
    loop_k(0, 0);
  }
  return total;
}

ParamSet shift_params(const ParamSet& P, const BasisIndex& xi) {
  SpaceShape s = P.shape();
  if (xi.e.size() != s.factors())
    throw std::invalid_argument("shift index does not match the space shape");
  ParamSet out = P;
  for (auto& [jk, v] : out.b) {
    unsigned pos = s.position(jk.first, jk.second);
    v *= Cyclotomic::eps_pow(P.l, -(long)xi.e[pos]);
  }
  return out;
}

}  // namespace qroot
