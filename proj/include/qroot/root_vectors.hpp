#ifndef QROOT_ROOT_VECTORS_HPP
#define QROOT_ROOT_VECTORS_HPP

#include <map>
#include <string>
#include <vector>

#include "qroot/representation.hpp"

namespace qroot {

/// Cartan matrix entry of type A_n (rank checks are the caller's job).
inline int cartan_a(unsigned i, unsigned j) {
  if (i == j) return 2;
  return (i + 1 == j || j + 1 == i) ? -1 : 0;
}

/// A positive root alpha_lo + alpha_{lo+1} + ... + alpha_hi.
struct RootInterval {
  unsigned lo = 0, hi = 0;

  unsigned height() const { return hi - lo + 1; }
  /// Largest simple-root index appearing in the expansion.
  unsigned g() const { return hi; }
  /// Pairing (alpha_i, alpha) in the type-A bilinear form.
  int pairing_with_simple(unsigned i, unsigned n) const;

  auto operator<=>(const RootInterval&) const = default;
  std::string str() const;
};

/// All positive roots in the convex order induced by the fixed reduced
/// word s_1 (s_2 s_1) (s_3 s_2 s_1) ... of the longest Weyl element.
std::vector<RootInterval> positive_roots(unsigned n);

/// The two free choices left open by the recursive root-vector
/// definitions: the factor order of the twisted commutator for the plain
/// recursion, and which interval goes first in the bar splitting.
enum class PlainOrder { AlphaThenSimple, SimpleThenAlpha };
enum class BarOrder { LowHigh, HighLow };

struct ConventionFlag {
  PlainOrder plain = PlainOrder::SimpleThenAlpha;
  BarOrder bar = BarOrder::LowHigh;

  std::string str() const;
  static ConventionFlag parse(const std::string& text);
  bool operator==(const ConventionFlag&) const = default;
};

std::vector<ConventionFlag> all_convention_flags();

enum class RootKind { E, F };

/// Root-vector images on the representation space, built recursively from
/// the generator images under a fixed convention flag and memoized.
class RootVectorSet {
 public:
  RootVectorSet(ParamSet P, ConventionFlag flag);

  const ParamSet& params() const { return params_; }
  ConventionFlag flag() const { return flag_; }
  const GenImages& gens() const { return gens_; }
  const std::vector<RootInterval>& roots() const { return roots_; }

  /// Twisted-commutator recursion (extends intervals at the low end).
  const LinearOp& plain(RootKind kind, RootInterval alpha);
  /// Interval-splitting recursion; split point defaults to the leftmost.
  const LinearOp& bar(RootKind kind, RootInterval alpha);
  /// Bar vector built with an explicit split column, for the
  /// well-definedness check.
  LinearOp bar_at_split(RootKind kind, RootInterval alpha, unsigned j);

 private:
  ParamSet params_;
  ConventionFlag flag_;
  GenImages gens_;
  std::vector<RootInterval> roots_;
  std::map<std::pair<int, RootInterval>, LinearOp> plain_cache_, bar_cache_;
};

struct SuiteInstance {
  std::string relation;
  std::vector<int> indices;
  bool pass = true;
  /// Advisory rows are reported observations and do not count against
  /// all_pass().
  bool advisory = false;
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  std::string params_digest;
  std::string flag;
  std::vector<SuiteInstance> instances;

  bool all_pass() const;
  size_t failures() const;
};

enum class Suite {
  Defining,          // generator relations of the algebra, Serre included
  BlockCommutation,  // the A/B building-block commutation table
  RootCommutation,   // root-vector commutation family, any parameters
  Presentation,      // full finite-algebra presentation incl. nilpotency
  BarComparison,     // bar vs plain root vectors (scalar and l-th power)
};

std::string suite_name(Suite s);

SuiteReport relation_suite(Suite which, const ParamSet& P, ConventionFlag flag);

struct CalibrationResult {
  ConventionFlag flag;
  /// Whether bar = eps^{height-1} * plain held exactly for every root
  /// under the selected flag (if not, the flag was selected by the
  /// weaker l-th-power agreement).
  bool bar_scalar_identity = false;
  SuiteReport report;
};

/// Evaluates all four convention flags on every positive root and selects
/// the one under which the bar/plain scalar identity holds; falls back to
/// l-th-power agreement; throws if even that fails everywhere.
CalibrationResult calibrate_conventions(const ParamSet& P);

/// e_alpha^l = f_alpha^l = 0 and t_i^{2l} = 1 on the whole space; the
/// order-l behaviour of t_i is reported as an advisory observation.
SuiteReport nilpotency_check(const ParamSet& P, ConventionFlag flag);

/// The l-th-power scalar tables attached to the parameter set.  Under a
/// validated specialization every c and c_bar equals 1, which is what
/// drives the nilpotency of the bar root vectors.
struct ScalarConstantTables {
  std::map<std::pair<unsigned, unsigned>, Cyclotomic> c, c_bar, d, d_bar;
  bool all_one() const;
};
ScalarConstantTables lth_power_constants(const ParamSet& P);

/// All l^N exponent tuples (r_1, ..., r_N) in lexicographic order.
std::vector<std::vector<unsigned>> pbw_f_monomials(unsigned n, unsigned l,
                                                   std::int64_t cap = 10000);

/// (l-1) * sum of the heights of the positive roots: products of more
/// than this many raising generators vanish on the highest-weight module.
unsigned degree_bound(unsigned n, unsigned l);

}  // namespace qroot

#endif
