#include "qroot/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace qroot {

namespace {

// --- dense polynomial helpers over Q, index = power -------------------

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Long division; returns quotient, leaves the remainder in `a`.
Poly divmod(Poly& a, const Poly& divisor) {
  Poly d = divisor;
  trim(d);
  if (d.empty()) throw std::invalid_argument("polynomial division by zero");
  trim(a);
  if (a.size() < d.size()) return {};
  Poly q(a.size() - d.size() + 1, Rational(0));
  const Rational lead = d.back();
  for (size_t k = q.size(); k-- > 0;) {
    size_t top = k + d.size() - 1;
    if (a[top] == 0) continue;
    Rational c = a[top] / lead;
    q[k] = c;
    for (size_t j = 0; j < d.size(); ++j) a[k + j] -= c * d[j];
  }
  trim(a);
  trim(q);
  return q;
}

void check_level(unsigned l) {
  if (l <= 1 || l % 2 == 0)
    throw std::invalid_argument("level must be an odd integer > 1, got " +
                                std::to_string(l));
}

// --- Laurent polynomials in q, used for the safe q-combinatorics -------

using Laurent = std::map<long, Rational>;

Laurent laurent_one() { return {{0, Rational(1)}}; }

Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Rational& slot = out[ea + eb];
      slot += ca * cb;
      if (slot == 0) out.erase(ea + eb);
    }
  return out;
}

// [a]_q = q^{a-1} + q^{a-3} + ... + q^{-(a-1)} for a >= 0.
Laurent laurent_q_int(unsigned a) {
  Laurent out;
  for (unsigned j = 0; j < a; ++j) out[(long)a - 1 - 2 * (long)j] = 1;
  return out;
}

Laurent laurent_q_factorial(unsigned a) {
  Laurent out = laurent_one();
  for (unsigned k = 2; k <= a; ++k) out = laurent_mul(out, laurent_q_int(k));
  return out;
}

// Exact division; the quotient of the q-factorials below is a Laurent
// polynomial, so a nonzero remainder indicates a bug.
Laurent laurent_div_exact(const Laurent& num, const Laurent& den) {
  if (den.empty()) throw std::invalid_argument("Laurent division by zero");
  if (num.empty()) return {};
  long shift_n = num.begin()->first;
  long shift_d = den.begin()->first;
  Poly pn(num.rbegin()->first - shift_n + 1, Rational(0));
  Poly pd(den.rbegin()->first - shift_d + 1, Rational(0));
  for (const auto& [e, c] : num) pn[e - shift_n] = c;
  for (const auto& [e, c] : den) pd[e - shift_d] = c;
  Poly q = divmod(pn, pd);
  if (!pn.empty())
    throw std::logic_error("Laurent division left a remainder");
  Laurent out;
  for (size_t i = 0; i < q.size(); ++i)
    if (q[i] != 0) out[(long)i + shift_n - shift_d] = q[i];
  return out;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(unsigned l) {
  static std::map<unsigned, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(l);
  if (it != cache.end()) return it->second;

  // Phi_l = (x^l - 1) / prod_{d | l, d < l} Phi_d, filling the cache from
  // the divisors upward.
  std::function<void(unsigned)> compute = [&](unsigned m) {
    if (cache.count(m)) return;
    Poly f(m + 1, Rational(0));
    f[0] = -1;
    f[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      compute(d);
      Poly q = divmod(f, cache.at(d));
      if (!f.empty()) throw std::logic_error("cyclotomic division failed");
      f = std::move(q);
    }
    cache.emplace(m, std::move(f));
  };
  compute(l);
  return cache.at(l);
}

Cyclotomic Cyclotomic::zero(unsigned level) {
  check_level(level);
  size_t deg = cyclotomic_polynomial(level).size() - 1;
  return Cyclotomic(level, std::vector<Rational>(deg, Rational(0)));
}

Cyclotomic Cyclotomic::one(unsigned level) { return from_int(level, 1); }

Cyclotomic Cyclotomic::from_rational(unsigned level, const Rational& r) {
  Cyclotomic c = zero(level);
  c.coeffs_[0] = r;
  c.coeffs_[0].canonicalize();
  return c;
}

Cyclotomic Cyclotomic::from_int(unsigned level, long v) {
  return from_rational(level, Rational(v));
}

Cyclotomic Cyclotomic::eps(unsigned level) { return eps_pow(level, 1); }

Cyclotomic Cyclotomic::eps_pow(unsigned level, long j) {
  check_level(level);
  long r = j % (long)level;
  if (r < 0) r += level;
  std::vector<Rational> poly(r + 1, Rational(0));
  poly[r] = 1;
  return reduce(level, poly);
}

Cyclotomic Cyclotomic::reduce(unsigned level, const std::vector<Rational>& poly) {
  check_level(level);
  const Poly& phi = cyclotomic_polynomial(level);
  size_t deg = phi.size() - 1;
  // Exponent reduction mod l first keeps the division input small.  The
  // inputs are canonicalized here because all downstream GMP arithmetic
  // assumes canonical operands.
  Poly work(level, Rational(0));
  for (size_t i = 0; i < poly.size(); ++i) {
    Rational c = poly[i];
    c.canonicalize();
    work[i % level] += c;
  }
  divmod(work, phi);
  work.resize(deg, Rational(0));
  return Cyclotomic(level, std::move(work));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return is_set();
}

bool Cyclotomic::is_one() const {
  if (!is_set() || coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

namespace {
void require_same_level(const Cyclotomic& a, const Cyclotomic& b) {
  if (!a.is_set() || !b.is_set())
    throw std::invalid_argument("arithmetic on unset Cyclotomic");
  if (a.level() != b.level())
    throw std::invalid_argument("Cyclotomic level mismatch: " +
                                std::to_string(a.level()) + " vs " +
                                std::to_string(b.level()));
}
}  // namespace

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  require_same_level(*this, o);
  Cyclotomic out = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
  return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  require_same_level(*this, o);
  Cyclotomic out = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= o.coeffs_[i];
  return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  require_same_level(*this, o);
  Poly prod = mul(coeffs_, o.coeffs_);
  return reduce(level_, prod);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) { return *this = *this + o; }
Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this = *this - o; }
Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
  Rational f = r;
  f.canonicalize();
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c *= f;
  return out;
}

Cyclotomic Cyclotomic::inverse(const std::string& context) const {
  if (!is_set()) throw std::invalid_argument("inverse of unset Cyclotomic");
  if (is_zero())
    throw DivisionByZero("division by zero in Q(zeta_" + std::to_string(level_) +
                         ")" + (context.empty() ? "" : ": " + context));
  // Extended Euclid in Q[x]: u*a + v*Phi_l = gcd; the gcd is a nonzero
  // constant because Phi_l is irreducible over Q.
  Poly r0 = cyclotomic_polynomial(level_);
  Poly r1 = coeffs_;
  trim(r1);
  Poly u0 = {}, u1 = {Rational(1)};
  while (true) {
    trim(r1);
    if (r1.empty()) throw std::logic_error("cyclotomic inverse: gcd chain died");
    if (r1.size() == 1) break;
    Poly rem = r0;
    Poly q = divmod(rem, r1);
    Poly u2_t = mul(q, u1);
    Poly u2 = u0;
    u2.resize(std::max(u2.size(), u2_t.size()), Rational(0));
    for (size_t i = 0; i < u2_t.size(); ++i) u2[i] -= u2_t[i];
    trim(u2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  Rational g = r1[0];
  for (auto& c : u1) c /= g;
  return reduce(level_, u1);
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (!is_set()) throw std::invalid_argument("pow of unset Cyclotomic");
  if (e < 0) return inverse("pow with negative exponent").pow(-e);
  Cyclotomic acc = one(level_);
  Cyclotomic base = *this;
  unsigned long n = (unsigned long)e;
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Cyclotomic Cyclotomic::conj() const {
  if (!is_set()) throw std::invalid_argument("conj of unset Cyclotomic");
  Cyclotomic out = zero(level_);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    out += eps_pow(level_, -(long)i) * coeffs_[i];
  }
  return out;
}

std::optional<unsigned> Cyclotomic::eps_log() const {
  if (!is_set()) return std::nullopt;
  for (unsigned j = 0; j < level_; ++j)
    if (*this == eps_pow(level_, j)) return j;
  return std::nullopt;
}

std::string Cyclotomic::str() const {
  if (!is_set()) return "(unset)";
  std::ostringstream os;
  os << level_ << ";";
  for (size_t i = 0; i < coeffs_.size(); ++i)
    os << (i ? ", " : " ") << rational_str(coeffs_[i]);
  return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
  size_t semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("Cyclotomic::parse: missing ';' in \"" + text + "\"");
  unsigned level = (unsigned)std::stoul(text.substr(0, semi));
  check_level(level);
  std::vector<Rational> coeffs;
  std::string rest = text.substr(semi + 1);
  std::istringstream is(rest);
  std::string tok;
  while (std::getline(is, tok, ',')) coeffs.push_back(parse_rational(tok));
  size_t deg = cyclotomic_polynomial(level).size() - 1;
  if (coeffs.size() != deg)
    throw std::invalid_argument("Cyclotomic::parse: expected " + std::to_string(deg) +
                                " coefficients, got " + std::to_string(coeffs.size()));
  return reduce(level, coeffs);
}

Cyclotomic q_integer(unsigned level, long a) {
  Cyclotomic num = Cyclotomic::eps_pow(level, a) - Cyclotomic::eps_pow(level, -a);
  Cyclotomic den = Cyclotomic::eps(level) - Cyclotomic::eps_pow(level, -1);
  return num * den.inverse("q_integer denominator");
}

Cyclotomic gaussian_multinomial(unsigned level, unsigned m,
                                const std::vector<unsigned>& parts) {
  check_level(level);
  unsigned total = 0;
  for (unsigned p : parts) {
    if (p == 0) throw std::invalid_argument("gaussian_multinomial: zero part");
    total += p;
  }
  if (total != m)
    throw std::invalid_argument("gaussian_multinomial: parts sum to " +
                                std::to_string(total) + ", expected " +
                                std::to_string(m));
  Laurent num = laurent_q_factorial(m);
  Laurent den = laurent_one();
  for (unsigned p : parts) den = laurent_mul(den, laurent_q_factorial(p));
  Laurent quot = laurent_div_exact(num, den);
  Cyclotomic out = Cyclotomic::zero(level);
  for (const auto& [e, c] : quot) out += Cyclotomic::eps_pow(level, e) * c;
  return out;
}

Cyclotomic brace(const Cyclotomic& z) {
  if (z.is_zero()) throw DivisionByZero("brace of zero argument");
  Cyclotomic den = Cyclotomic::eps(z.level()) - Cyclotomic::eps_pow(z.level(), -1);
  return (z - z.inverse("brace argument")) * den.inverse("brace denominator");
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!isspace((unsigned char)c)) t += c;
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  Rational r(t);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace qroot
