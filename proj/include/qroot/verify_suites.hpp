#ifndef QROOT_VERIFY_SUITES_HPP
#define QROOT_VERIFY_SUITES_HPP

#include "qroot/module_analysis.hpp"

namespace qroot {

/// Closed-form power images against repeated products, m = 1..m_max,
/// both lowering and raising generators.
SuiteReport power_suite(const ParamSet& P, unsigned m_max);

/// Re-derivation of the explicit bracket-coefficient action of the
/// raising generators on every basis vector; pins the shift/diagonal
/// convention of the operator engine.
SuiteReport action_suite(const ParamSet& P);

/// Coefficient transport under the b-parameter shift: exhaustive over
/// (xi, mu) on small spaces, sampled on larger ones.
SuiteReport shift_suite(const ParamSet& P, std::uint64_t seed);

/// Uniqueness of the primitive line, plus shifted variants for a handful
/// of pseudorandom shift indices.
SuiteReport primitive_suite(const ParamSet& P, std::uint64_t seed,
                            std::int64_t cap = 10000);

/// All l-th-power scalar constants equal 1 under the specialization.
SuiteReport constants_suite(const ParamSet& P);

/// Sampled products of raising generators longer than the degree bound
/// annihilate the highest-weight module; vanishing on the whole space is
/// reported as an advisory observation.
SuiteReport degree_suite(const ParamSet& P, ConventionFlag flag, unsigned samples,
                         std::uint64_t seed, std::int64_t cap = 10000);

struct GridPoint {
  unsigned n = 0, l = 0;
  std::vector<std::vector<unsigned>> lambdas;
};

/// The baked-in verification grid with its documented weight samples.
std::vector<GridPoint> default_grid();

}  // namespace qroot

#endif
