#ifndef QROOT_CYCLOTOMIC_HPP
#define QROOT_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qroot {

using Rational = mpq_class;

/// Thrown when a field inversion hits zero.  The message names the
/// operation chain that produced the zero operand.
struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Coefficients of the l-th cyclotomic polynomial, index = power of x,
/// monic, degree = Euler totient of l.  Computed by dividing x^l - 1 by
/// the cyclotomic polynomials of the proper divisors of l.
const std::vector<Rational>& cyclotomic_polynomial(unsigned l);

/// An element of Q(zeta_l) for odd l > 1, stored as the canonical residue
/// of a rational polynomial in eps modulo the l-th cyclotomic polynomial.
/// Two equal field elements always have identical coefficient vectors;
/// zero is the all-zero vector.
class Cyclotomic {
 public:
  /// Unset element (level 0).  Arithmetic on unset elements throws.
  Cyclotomic() = default;

  static Cyclotomic zero(unsigned level);
  static Cyclotomic one(unsigned level);
  static Cyclotomic from_rational(unsigned level, const Rational& r);
  static Cyclotomic from_int(unsigned level, long v);

  /// The distinguished primitive root eps (the residue of x).
  static Cyclotomic eps(unsigned level);
  /// eps^j for any integer j (reduced mod l).
  static Cyclotomic eps_pow(unsigned level, long j);

  /// Canonical residue of an arbitrary-degree polynomial in eps.
  /// Rejects even l and l <= 1.
  static Cyclotomic reduce(unsigned level, const std::vector<Rational>& poly);

  unsigned level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_set() const { return level_ != 0; }

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic operator*(const Rational& r) const;

  /// Multiplicative inverse via the extended Euclidean algorithm in Q[x].
  /// `context` is included in the DivisionByZero message on failure.
  Cyclotomic inverse(const std::string& context = "") const;

  /// Integer power, negative exponents through inverse().
  Cyclotomic pow(long e) const;

  /// The field automorphism eps -> eps^{-1} (complex conjugation
  /// restricted to Q(zeta_l)).
  Cyclotomic conj() const;

  /// j in [0, l) with *this == eps^j, if the element is a power of eps.
  std::optional<unsigned> eps_log() const;

  /// Canonical text form "l; c0, c1, ..., c{d-1}", rationals in lowest terms.
  std::string str() const;
  static Cyclotomic parse(const std::string& text);

  bool operator==(const Cyclotomic& o) const = default;

 private:
  Cyclotomic(unsigned level, std::vector<Rational> coeffs)
      : level_(level), coeffs_(std::move(coeffs)) {}

  unsigned level_ = 0;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic operator*(const Rational& r, const Cyclotomic& c) { return c * r; }

/// [a] = (eps^a - eps^{-a}) / (eps - eps^{-1}); antisymmetric and l-periodic.
Cyclotomic q_integer(unsigned level, long a);

/// [m]!.[p1]!^{-1}...[pk]!^{-1} with sum(parts) = m, computed as an
/// integer-coefficient Laurent polynomial in an indeterminate q and only
/// then evaluated at q = eps, so no q-factorial is ever inverted at a
/// root of unity.
Cyclotomic gaussian_multinomial(unsigned level, unsigned m,
                                const std::vector<unsigned>& parts);

/// {z} = (z - z^{-1}) / (eps - eps^{-1}) for invertible z.
Cyclotomic brace(const Cyclotomic& z);

Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& r);

}  // namespace qroot

#endif
