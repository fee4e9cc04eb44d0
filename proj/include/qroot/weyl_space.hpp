#ifndef QROOT_WEYL_SPACE_HPP
#define QROOT_WEYL_SPACE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qroot/cyclotomic.hpp"

namespace qroot {

/// Thrown when a requested dense/sparse matrix or subspace computation
/// would exceed the configured number of rows.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// The tensor space (C^l)^{n(n+1)/2}.  Factors are labelled by pairs
/// (j,k), 1 <= j <= k <= n, in lexicographic order; this pair list is the
/// single source of truth for position <-> pair conversion.
class SpaceShape {
 public:
  SpaceShape() = default;
  SpaceShape(unsigned n, unsigned l);

  unsigned rank() const { return n_; }
  unsigned level() const { return l_; }
  unsigned factors() const { return (unsigned)pairs_.size(); }

  const std::vector<std::pair<unsigned, unsigned>>& pairs() const { return pairs_; }
  /// Position of factor (j,k); valid only for 1 <= j <= k <= n.
  unsigned position(unsigned j, unsigned k) const;
  std::pair<unsigned, unsigned> pair_at(unsigned pos) const { return pairs_.at(pos); }
  bool in_range(long j, long k) const {
    return j >= 1 && k >= (long)j && k <= (long)n_;
  }

  /// Mirror position map (j,k) -> (k+1-j, k) used by the star involution.
  unsigned mirror(unsigned pos) const;

  /// l^N as a checked 64-bit value.
  std::int64_t dimension() const;

  bool operator==(const SpaceShape& o) const { return n_ == o.n_ && l_ == o.l_; }
  bool operator!=(const SpaceShape& o) const { return !(*this == o); }

 private:
  unsigned n_ = 0, l_ = 0;
  std::vector<std::pair<unsigned, unsigned>> pairs_;
};

/// A point of M = (Z/lZ)^N labelling the tensor basis vector u_m.
struct BasisIndex {
  std::vector<int> e;

  auto operator<=>(const BasisIndex&) const = default;

  static BasisIndex zero(const SpaceShape& s) {
    return BasisIndex{std::vector<int>(s.factors(), 0)};
  }
  static BasisIndex unit(const SpaceShape& s, unsigned j, unsigned k);

  BasisIndex add(const SpaceShape& s, const BasisIndex& o) const;
  BasisIndex sub(const SpaceShape& s, const BasisIndex& o) const;
  /// Mixed-radix linearization; lexicographic order on tuples agrees with
  /// numeric order of this value.
  std::int64_t linear(const SpaceShape& s) const;
  static BasisIndex from_linear(const SpaceShape& s, std::int64_t v);
  std::string str() const;
};

/// Exact vector in the tensor space: finite map index -> coefficient with
/// no stored zero coefficients.
using SparseVector = std::map<BasisIndex, Cyclotomic>;

void add_term(SparseVector& v, const BasisIndex& m, const Cyclotomic& c);
SparseVector unit_vector(const SpaceShape& s, const BasisIndex& m);
bool vec_is_zero(const SparseVector& v);
SparseVector vec_add(const SparseVector& a, const SparseVector& b);
SparseVector vec_sub(const SparseVector& a, const SparseVector& b);
SparseVector vec_scale(const SparseVector& a, const Cyclotomic& c);

/// Normal-form monomial of the represented group ring: acts on a basis
/// vector by u_m -> coeff * eps^{phase.m} u_{m+shift}.  Two monomials are
/// equal iff coeff, shift and phase all match.
struct MonomialOp {
  Cyclotomic coeff;
  std::vector<int> shift;  // X-exponents, entries in [0, l)
  std::vector<int> phase;  // Z-exponents, entries in [0, l)

  bool operator==(const MonomialOp&) const = default;
};

/// Finite sum of monomials in merged canonical form: terms are sorted by
/// (shift, phase) and no two terms share that key.  Canonical zero is the
/// empty sum, and canonical equality is operator equality on the space.
class LinearOp {
 public:
  LinearOp() = default;
  explicit LinearOp(SpaceShape shape) : shape_(std::move(shape)) {}
  LinearOp(SpaceShape shape, std::vector<MonomialOp> terms);

  static LinearOp zero(const SpaceShape& s) { return LinearOp(s); }
  static LinearOp identity(const SpaceShape& s);
  static LinearOp monomial(const SpaceShape& s, MonomialOp m);
  /// X_{jk}^p: shifts entry (j,k) by p.
  static LinearOp x_op(const SpaceShape& s, unsigned j, unsigned k, int p = 1);
  /// Z_{jk}^p: diagonal eps^{p m_{jk}}.
  static LinearOp z_op(const SpaceShape& s, unsigned j, unsigned k, int p = 1);
  static LinearOp scalar(const SpaceShape& s, const Cyclotomic& c);

  const SpaceShape& shape() const { return shape_; }
  const std::vector<MonomialOp>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_identity() const;
  bool is_diagonal() const;

  LinearOp operator+(const LinearOp& o) const;
  LinearOp operator-(const LinearOp& o) const;
  LinearOp operator*(const LinearOp& o) const;  // composition: (*this) after o
  LinearOp operator-() const;
  LinearOp scaled(const Cyclotomic& c) const;

  /// Exact linear action; the result is canonical (no zero terms).
  SparseVector apply(const SparseVector& v) const;

  bool operator==(const LinearOp& o) const {
    return shape_ == o.shape_ && terms_ == o.terms_;
  }

 private:
  SpaceShape shape_;
  std::vector<MonomialOp> terms_;
};

/// Product of two normal-form monomials (composition p after q):
/// coefficient picks up eps^{phase_p . shift_q}.
MonomialOp monomial_product(const SpaceShape& s, const MonomialOp& p,
                            const MonomialOp& q);
MonomialOp monomial_inverse(const SpaceShape& s, const MonomialOp& p);

/// m-fold composition; op_power(L, 0) is the identity.
LinearOp op_power(const LinearOp& op, unsigned m);

/// The star anti-involution of the monomial algebra: on generators it
/// mirrors position (j,k) -> (k+1-j,k) and inverts; on coefficients it
/// acts by the conjugation eps -> eps^{-1}, which is what makes it
/// compatible with the relation z x = eps x z.
LinearOp star(const LinearOp& op);

/// Exact sparse matrix on the tensor space, entries keyed by
/// (row, column) linear index.
struct SparseMatrixQ {
  SpaceShape shape;
  std::int64_t rows = 0, cols = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, Cyclotomic> entries;

  bool operator==(const SparseMatrixQ& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
  }
  SparseMatrixQ mul(const SparseMatrixQ& o) const;
  static SparseMatrixQ identity(const SpaceShape& s);
};

/// Column m holds apply(op, u_m).  Throws CapExceeded if l^N > cap.
SparseMatrixQ to_matrix(const LinearOp& op, std::int64_t cap = 10000);

}  // namespace qroot

#endif
