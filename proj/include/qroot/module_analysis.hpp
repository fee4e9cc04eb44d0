#ifndef QROOT_MODULE_ANALYSIS_HPP
#define QROOT_MODULE_ANALYSIS_HPP

#include <cstdint>
#include <optional>

#include "qroot/root_vectors.hpp"

namespace qroot {

/// Exact subspace of the tensor space held as a row-reduced echelon basis
/// with respect to the lexicographic order on basis indices: pivots are
/// pairwise distinct, every pivot coefficient is 1 and pivot columns are
/// eliminated from all other rows.  The reduced form is unique for a
/// given span, so equality of spans is equality of bases.
class Subspace {
 public:
  explicit Subspace(SpaceShape shape) : shape_(std::move(shape)) {}

  const SpaceShape& shape() const { return shape_; }
  std::int64_t dim() const { return (std::int64_t)rows_.size(); }

  /// Rows keyed by pivot index, in pivot order.
  const std::map<BasisIndex, SparseVector>& rows() const { return rows_; }

  /// Fully reduce v against the basis; membership is emptiness.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// Insert if independent; returns the new pivot when the dimension grew.
  std::optional<BasisIndex> insert(const SparseVector& v);

  bool operator==(const Subspace& o) const {
    return shape_ == o.shape_ && rows_ == o.rows_;
  }

 private:
  SpaceShape shape_;
  std::map<BasisIndex, SparseVector> rows_;
};

/// Exact null space of the stacked operators (all of V for an empty
/// list).  Both the elimination and the returned basis are deterministic.
Subspace kernel_intersection(const SpaceShape& shape,
                             const std::vector<LinearOp>& ops,
                             std::int64_t cap = 10000);

/// Vectors of `space` annihilated by every operator in `ops`.
Subspace kernel_within(const Subspace& space, const std::vector<LinearOp>& ops);

/// Joint kernel of the raising generators: the primitive vectors.
Subspace primitive_subspace(const ParamSet& P, std::int64_t cap = 10000);

/// Smallest subspace containing the seeds and invariant under the
/// generators, grown by applying the generators to the newest layer only;
/// invariance is re-verified on the result.
Subspace submodule_closure(const SpaceShape& shape,
                           const std::vector<SparseVector>& seeds,
                           const std::vector<LinearOp>& generators,
                           std::int64_t cap = 10000);

/// The closure generator list in the fixed order e_1..e_n, f_1..f_n,
/// t_1..t_n, t_1^{-1}..t_n^{-1}.
std::vector<LinearOp> module_generators(const ParamSet& P);

struct WeightReport {
  /// weight exponent vector (w_1..w_n), entries mod l -> multiplicity
  std::map<std::vector<int>, std::int64_t> multiplicities;
  std::int64_t total = 0;
};

/// Simultaneous diagonal eigenspace dimensions of the t-action on S.
/// Requires S invariant under every t_i (checked) and a parameter set
/// whose t-eigenvalues are powers of eps.
WeightReport weight_decompose(const Subspace& S, const ParamSet& P);

struct DimensionReport {
  std::int64_t dim_closure = 0;
  /// Dimension from the span of ordered bar-f monomials applied to u_0;
  /// absent when that strategy was skipped.
  std::optional<std::int64_t> dim_pbw;
  bool strategies_agree = true;
  WeightReport weights;
};

/// Computes dim L by generator closure and, unless skipped, by the
/// ordered-monomial span, and insists the two agree.  When `shift` is
/// given, the b parameters are shifted and the module is seeded at u_xi
/// instead of u_0.
DimensionReport dimension_report(const ParamSet& P, ConventionFlag flag,
                                 bool run_pbw = true, std::int64_t cap = 10000,
                                 const std::optional<BasisIndex>& shift = std::nullopt);

struct IrreducibilityCertificate {
  std::string params_digest;
  std::vector<unsigned> lambda;
  std::string flag;
  std::optional<BasisIndex> shift;
  std::int64_t primitive_dim_V = 0;
  std::int64_t primitive_dim_L = 0;
  bool closure_equals_L = false;
  std::int64_t dim_L = 0;
  WeightReport weights;
  /// "irreducible", "not proved", or "specialization invalid"
  std::string verdict;
  /// Theoretical premises the verdict inference rests on.
  std::vector<std::string> premises;
};

/// The executable form of the irreducibility argument: a unique primitive
/// line spanned by the seed vector, the same line inside L, and L
/// generated by the seed.  The inference to irreducibility additionally
/// uses the theorem that every finite-dimensional module of the finite
/// subalgebra contains a primitive vector; that premise is recorded in
/// the certificate.  With `shift` the parameters are shifted and the seed
/// is u_xi.
IrreducibilityCertificate irreducibility_certificate(
    const ParamSet& P, ConventionFlag flag, std::int64_t cap = 10000,
    const std::optional<BasisIndex>& shift = std::nullopt);

}  // namespace qroot

#endif
