#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arrangio/errors.hpp"
#include "arrangio/rational.hpp"

namespace arrangio {

enum class FieldKind { rationals, prime, cyclotomic };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Dense univariate polynomial over Q, low-degree-first, no trailing zeros.
using QPoly = std::vector<Rational>;

// Cyclotomic polynomial Phi_n, monic of degree phi(n); memoized per process.
// (x^n - 1) = prod over d | n of Phi_d.
QPoly cyclotomic_poly(unsigned n);
unsigned euler_phi(unsigned n);
bool is_prime_u64(std::uint64_t p);

// An immutable element of Q, F_p, or Q(zeta_n). Payload by field kind:
// rationals -> Rational; prime -> residue in [0, p); cyclotomic ->
// coefficient vector of length phi(n) in the power basis 1, zeta, ...,
// zeta^{phi(n)-1}, reduced modulo Phi_n (never modulo x^n - 1, which has
// zero divisors and would break downstream zero tests).
class FieldElement {
 public:
  using Payload = std::variant<Rational, std::uint64_t, std::vector<Rational>>;

  const FieldPtr& field() const { return field_; }
  const Payload& payload() const { return v_; }

  bool is_zero() const;
  bool is_one() const;
  // True iff the element is fixed by complex conjugation. Rationals are
  // always real; prime-field residues never are (no real embedding exists);
  // cyclotomic elements are real iff conj() is the identity on them.
  bool is_real() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;  // throws DivisionByZero
  FieldElement operator-() const;
  FieldElement inverse() const;  // throws DivisionByZero on zero
  FieldElement conj() const;     // zeta -> zeta^{n-1}; identity on Q and F_p

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  // Total order within one field (payload-lexicographic); used only to make
  // canonical forms sortable and reports deterministic, not arithmetically.
  int cmp(const FieldElement& o) const;
  bool operator<(const FieldElement& o) const { return cmp(o) < 0; }

  std::string to_string() const;

 private:
  friend class Field;
  FieldElement(FieldPtr f, Payload v) : field_(std::move(f)), v_(std::move(v)) {}

  FieldPtr field_;
  Payload v_;
};

// A field context: the FieldSpec variant plus the derived constants needed
// for arithmetic. Instances are immutable and shared; obtain them only via
// the three factories (which memoize per process).
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr rationals();
  // Validates primality; moduli are bounded by 2^31 so residue arithmetic
  // never overflows 64-bit intermediates.
  static FieldPtr prime(std::uint64_t p);   // throws NotPrime
  static FieldPtr cyclotomic(unsigned n);   // n >= 1; Q(zeta_1) == Q arithmetically

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic_p() const { return p_; }  // prime kind only
  unsigned cyclo_n() const { return n_; }                // cyclotomic kind only
  unsigned degree() const { return phi_; }               // phi(n), cyclotomic kind
  const QPoly& modulus() const { return phi_poly_; }     // Phi_n, cyclotomic kind

  bool same(const Field& o) const;
  std::string name() const;  // "Q", "F_p", "Q(zeta_n)"

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long v) const;
  FieldElement from_rational(const Rational& q) const;  // NonInvertibleDenominator
  FieldElement from_residue(std::uint64_t r) const;     // prime kind
  FieldElement from_coeffs(std::vector<Rational> c) const;  // cyclotomic kind
  // zeta^k for any integer k (taken modulo n); cyclotomic kind only.
  FieldElement zeta_pow(long k) const;
  // sum of coeff * zeta^exponent, reduced modulo Phi_n.
  FieldElement zeta_combination(
      const std::vector<std::pair<long, Rational>>& terms) const;
  // Parse one element from its text encoding ("num/den" for Q and F_p).
  FieldElement parse(const std::string& s) const;

 private:
  Field() = default;
  void check_same(const FieldElement& a, const FieldElement& b) const;

  FieldKind kind_ = FieldKind::rationals;
  std::uint64_t p_ = 0;
  unsigned n_ = 0;
  unsigned phi_ = 0;
  QPoly phi_poly_;
  // x^e reduced modulo Phi_n for e in [0, n); drives zeta_pow and conj.
  std::vector<std::vector<Rational>> pow_table_;

  friend class FieldElement;
};

}  // namespace arrangio
