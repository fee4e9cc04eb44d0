#include "qroot/weyl_space.hpp"

#include <algorithm>
#include <sstream>

namespace qroot {

SpaceShape::SpaceShape(unsigned n, unsigned l) : n_(n), l_(l) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (l <= 1 || l % 2 == 0)
    throw std::invalid_argument("level must be an odd integer > 1");
  for (unsigned j = 1; j <= n; ++j)
    for (unsigned k = j; k <= n; ++k) pairs_.emplace_back(j, k);
}

unsigned SpaceShape::position(unsigned j, unsigned k) const {
  if (!in_range(j, k))
    throw std::invalid_argument("factor index (" + std::to_string(j) + "," +
                                std::to_string(k) + ") out of range");
  // Row j starts after rows 1..j-1 of lengths n, n-1, ...
  unsigned before = (j - 1) * n_ - (j - 1) * (j - 2) / 2;
  return before + (k - j);
}

unsigned SpaceShape::mirror(unsigned pos) const {
  auto [j, k] = pair_at(pos);
  return position(k + 1 - j, k);
}

std::int64_t SpaceShape::dimension() const {
  std::int64_t d = 1;
  for (unsigned i = 0; i < factors(); ++i) {
    if (d > (std::int64_t)1 << 56) throw CapExceeded("space dimension overflow");
    d *= l_;
  }
  return d;
}

BasisIndex BasisIndex::unit(const SpaceShape& s, unsigned j, unsigned k) {
  BasisIndex m = zero(s);
  m.e[s.position(j, k)] = 1;
  return m;
}

BasisIndex BasisIndex::add(const SpaceShape& s, const BasisIndex& o) const {
  BasisIndex out = *this;
  for (size_t p = 0; p < e.size(); ++p)
    out.e[p] = (out.e[p] + o.e[p]) % (int)s.level();
  return out;
}

BasisIndex BasisIndex::sub(const SpaceShape& s, const BasisIndex& o) const {
  BasisIndex out = *this;
  int l = (int)s.level();
  for (size_t p = 0; p < e.size(); ++p) out.e[p] = ((out.e[p] - o.e[p]) % l + l) % l;
  return out;
}

std::int64_t BasisIndex::linear(const SpaceShape& s) const {
  std::int64_t v = 0;
  for (int x : e) v = v * s.level() + x;
  return v;
}

BasisIndex BasisIndex::from_linear(const SpaceShape& s, std::int64_t v) {
  BasisIndex m = zero(s);
  for (size_t p = m.e.size(); p-- > 0;) {
    m.e[p] = (int)(v % s.level());
    v /= s.level();
  }
  return m;
}

std::string BasisIndex::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t p = 0; p < e.size(); ++p) os << (p ? "," : "") << e[p];
  os << ")";
  return os.str();
}

void add_term(SparseVector& v, const BasisIndex& m, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = v.find(m);
  if (it == v.end()) {
    v.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

SparseVector unit_vector(const SpaceShape& s, const BasisIndex& m) {
  SparseVector v;
  v.emplace(m, Cyclotomic::one(s.level()));
  return v;
}

bool vec_is_zero(const SparseVector& v) { return v.empty(); }

SparseVector vec_add(const SparseVector& a, const SparseVector& b) {
  SparseVector out = a;
  for (const auto& [m, c] : b) add_term(out, m, c);
  return out;
}

SparseVector vec_sub(const SparseVector& a, const SparseVector& b) {
  SparseVector out = a;
  for (const auto& [m, c] : b) add_term(out, m, -c);
  return out;
}

SparseVector vec_scale(const SparseVector& a, const Cyclotomic& c) {
  SparseVector out;
  if (c.is_zero()) return out;
  for (const auto& [m, x] : a) {
    Cyclotomic y = x * c;
    if (!y.is_zero()) out.emplace(m, y);
  }
  return out;
}

namespace {

int mod_l(long v, unsigned l) {
  long r = v % (long)l;
  return (int)(r < 0 ? r + l : r);
}

void check_op_shapes(const SpaceShape& s, const MonomialOp& p) {
  if (p.shift.size() != s.factors() || p.phase.size() != s.factors())
    throw std::invalid_argument("monomial does not match space shape");
  if (p.coeff.level() != s.level())
    throw std::invalid_argument("monomial coefficient level mismatch");
}

long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long v = 0;
  for (size_t p = 0; p < a.size(); ++p) v += (long)a[p] * b[p];
  return v;
}

std::pair<std::vector<int>, std::vector<int>> term_key(const MonomialOp& m) {
  return {m.shift, m.phase};
}

}  // namespace

MonomialOp monomial_product(const SpaceShape& s, const MonomialOp& p,
                            const MonomialOp& q) {
  check_op_shapes(s, p);
  check_op_shapes(s, q);
  MonomialOp out;
  out.coeff = p.coeff * q.coeff * Cyclotomic::eps_pow(s.level(), dot(p.phase, q.shift));
  out.shift.resize(s.factors());
  out.phase.resize(s.factors());
  for (unsigned i = 0; i < s.factors(); ++i) {
    out.shift[i] = mod_l((long)p.shift[i] + q.shift[i], s.level());
    out.phase[i] = mod_l((long)p.phase[i] + q.phase[i], s.level());
  }
  return out;
}

MonomialOp monomial_inverse(const SpaceShape& s, const MonomialOp& p) {
  check_op_shapes(s, p);
  MonomialOp out;
  out.coeff = p.coeff.inverse("monomial coefficient") *
              Cyclotomic::eps_pow(s.level(), dot(p.phase, p.shift));
  out.shift.resize(s.factors());
  out.phase.resize(s.factors());
  for (unsigned i = 0; i < s.factors(); ++i) {
    out.shift[i] = mod_l(-(long)p.shift[i], s.level());
    out.phase[i] = mod_l(-(long)p.phase[i], s.level());
  }
  return out;
}

LinearOp::LinearOp(SpaceShape shape, std::vector<MonomialOp> terms)
    : shape_(std::move(shape)) {
  // Merge into canonical form: sort by (shift, phase), sum coefficients,
  // drop zeros.
  std::sort(terms.begin(), terms.end(), [](const MonomialOp& a, const MonomialOp& b) {
    return term_key(a) < term_key(b);
  });
  for (auto& t : terms) {
    check_op_shapes(shape_, t);
    if (!terms_.empty() && term_key(terms_.back()) == term_key(t)) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

LinearOp LinearOp::identity(const SpaceShape& s) {
  return scalar(s, Cyclotomic::one(s.level()));
}

LinearOp LinearOp::scalar(const SpaceShape& s, const Cyclotomic& c) {
  MonomialOp m{c, std::vector<int>(s.factors(), 0), std::vector<int>(s.factors(), 0)};
  return LinearOp(s, {std::move(m)});
}

LinearOp LinearOp::monomial(const SpaceShape& s, MonomialOp m) {
  return LinearOp(s, {std::move(m)});
}

LinearOp LinearOp::x_op(const SpaceShape& s, unsigned j, unsigned k, int p) {
  MonomialOp m{Cyclotomic::one(s.level()), std::vector<int>(s.factors(), 0),
               std::vector<int>(s.factors(), 0)};
  m.shift[s.position(j, k)] = mod_l(p, s.level());
  return LinearOp(s, {std::move(m)});
}

LinearOp LinearOp::z_op(const SpaceShape& s, unsigned j, unsigned k, int p) {
  MonomialOp m{Cyclotomic::one(s.level()), std::vector<int>(s.factors(), 0),
               std::vector<int>(s.factors(), 0)};
  m.phase[s.position(j, k)] = mod_l(p, s.level());
  return LinearOp(s, {std::move(m)});
}

bool LinearOp::is_identity() const {
  return terms_.size() == 1 && terms_[0].coeff.is_one() &&
         std::all_of(terms_[0].shift.begin(), terms_[0].shift.end(),
                     [](int v) { return v == 0; }) &&
         std::all_of(terms_[0].phase.begin(), terms_[0].phase.end(),
                     [](int v) { return v == 0; });
}

bool LinearOp::is_diagonal() const {
  for (const auto& t : terms_)
    for (int v : t.shift)
      if (v != 0) return false;
  return true;
}

LinearOp LinearOp::operator+(const LinearOp& o) const {
  if (shape_ != o.shape_) throw std::invalid_argument("operator shape mismatch");
  std::vector<MonomialOp> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return LinearOp(shape_, std::move(all));
}

LinearOp LinearOp::operator-(const LinearOp& o) const { return *this + (-o); }

LinearOp LinearOp::operator-() const {
  LinearOp out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

LinearOp LinearOp::scaled(const Cyclotomic& c) const {
  std::vector<MonomialOp> ts = terms_;
  for (auto& t : ts) t.coeff *= c;
  return LinearOp(shape_, std::move(ts));
}

LinearOp LinearOp::operator*(const LinearOp& o) const {
  if (shape_ != o.shape_) throw std::invalid_argument("operator shape mismatch");
  std::vector<MonomialOp> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& p : terms_)
    for (const auto& q : o.terms_) prods.push_back(monomial_product(shape_, p, q));
  return LinearOp(shape_, std::move(prods));
}

SparseVector LinearOp::apply(const SparseVector& v) const {
  const SpaceShape& s = shape_;
  SparseVector out;
  for (const auto& t : terms_) {
    for (const auto& [m, c] : v) {
      long ph = 0;
      for (size_t p = 0; p < t.phase.size(); ++p) ph += (long)t.phase[p] * m.e[p];
      Cyclotomic coeff = t.coeff * c * Cyclotomic::eps_pow(s.level(), ph);
      BasisIndex target = m;
      for (size_t p = 0; p < target.e.size(); ++p)
        target.e[p] = mod_l((long)target.e[p] + t.shift[p], s.level());
      add_term(out, target, coeff);
    }
  }
  return out;
}

LinearOp op_power(const LinearOp& op, unsigned m) {
  LinearOp acc = LinearOp::identity(op.shape());
  for (unsigned i = 0; i < m; ++i) acc = acc * op;
  return acc;
}

LinearOp star(const LinearOp& op) {
  const SpaceShape& s = op.shape();
  std::vector<MonomialOp> out;
  out.reserve(op.terms().size());
  for (const auto& t : op.terms()) {
    MonomialOp r;
    r.coeff = t.coeff.conj() * Cyclotomic::eps_pow(s.level(), dot(t.shift, t.phase));
    r.shift.resize(s.factors());
    r.phase.resize(s.factors());
    for (unsigned p = 0; p < s.factors(); ++p) {
      unsigned mp = s.mirror(p);
      r.shift[p] = mod_l(-(long)t.shift[mp], s.level());
      r.phase[p] = mod_l(-(long)t.phase[mp], s.level());
    }
    out.push_back(std::move(r));
  }
  return LinearOp(s, std::move(out));
}

SparseMatrixQ SparseMatrixQ::mul(const SparseMatrixQ& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix dimension mismatch");
  SparseMatrixQ out;
  out.shape = shape;
  out.rows = rows;
  out.cols = o.cols;
  // Group the left factor by column for the sparse row-through pass.
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, const Cyclotomic*>>> by_col;
  for (const auto& [rc, v] : entries) by_col[rc.second].emplace_back(rc.first, &v);
  for (const auto& [rc, v] : o.entries) {
    auto it = by_col.find(rc.first);
    if (it == by_col.end()) continue;
    for (const auto& [row, left] : it->second) {
      auto key = std::make_pair(row, rc.second);
      Cyclotomic prod = (*left) * v;
      auto slot = out.entries.find(key);
      if (slot == out.entries.end()) {
        if (!prod.is_zero()) out.entries.emplace(key, std::move(prod));
      } else {
        slot->second += prod;
        if (slot->second.is_zero()) out.entries.erase(slot);
      }
    }
  }
  return out;
}

SparseMatrixQ SparseMatrixQ::identity(const SpaceShape& s) {
  SparseMatrixQ out;
  out.shape = s;
  out.rows = out.cols = s.dimension();
  for (std::int64_t i = 0; i < out.rows; ++i)
    out.entries.emplace(std::make_pair(i, i), Cyclotomic::one(s.level()));
  return out;
}

SparseMatrixQ to_matrix(const LinearOp& op, std::int64_t cap) {
  const SpaceShape& s = op.shape();
  std::int64_t dim = s.dimension();
  if (dim > cap)
    throw CapExceeded("matrix of size " + std::to_string(dim) +
                      " exceeds the cap " + std::to_string(cap));
  SparseMatrixQ out;
  out.shape = s;
  out.rows = out.cols = dim;
  for (std::int64_t col = 0; col < dim; ++col) {
    BasisIndex m = BasisIndex::from_linear(s, col);
    SparseVector image = op.apply(unit_vector(s, m));
    for (const auto& [idx, c] : image)
      out.entries.emplace(std::make_pair(idx.linear(s), col), c);
  }
  return out;
}

}  // namespace qroot
