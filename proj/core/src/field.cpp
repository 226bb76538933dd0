#include "arrangio/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace arrangio {

namespace {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Division with remainder over Q[x]; divisor must be nonzero.
std::pair<QPoly, QPoly> poly_divmod(QPoly num, const QPoly& den) {
  if (den.empty()) throw DivisionByZero("polynomial division by zero");
  QPoly quo;
  if (num.size() < den.size()) return {quo, num};
  quo.assign(num.size() - den.size() + 1, Rational(0));
  const Rational& lead = den.back();
  for (long top = static_cast<long>(num.size()) - 1;
       top >= static_cast<long>(den.size()) - 1; --top) {
    Rational c = num[top] / lead;
    if (c == 0) continue;
    size_t shift = top - (den.size() - 1);
    quo[shift] = c;
    for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
  }
  trim(num);
  return {quo, num};
}

QPoly poly_mod(QPoly num, const QPoly& den) { return poly_divmod(std::move(num), den).second; }

// Extended Euclid over Q[x]: returns (g, u, v) with u*a + v*b = g, g monic.
struct ExtGcd {
  QPoly g, u, v;
};
ExtGcd poly_ext_gcd(QPoly a, QPoly b) {
  QPoly u0{Rational(1)}, v0, u1, v1{Rational(1)};
  while (!b.empty()) {
    auto [q, r] = poly_divmod(a, b);
    QPoly u2 = u0, v2 = v0;
    // u2 -= q*u1 ; v2 -= q*v1
    QPoly qu = poly_mul(q, u1), qv = poly_mul(q, v1);
    u2.resize(std::max(u2.size(), qu.size()), Rational(0));
    for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    trim(u2);
    v2.resize(std::max(v2.size(), qv.size()), Rational(0));
    for (size_t i = 0; i < qv.size(); ++i) v2[i] -= qv[i];
    trim(v2);
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (!a.empty() && a.back() != 1) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : u0) c /= lead;
    for (auto& c : v0) c /= lead;
  }
  return {std::move(a), std::move(u0), std::move(v0)};
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (p == q) return true;
    if (p % q == 0) return false;
  }
  // Deterministic Miller-Rabin for 64-bit with the first 12 prime bases.
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, p);
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

QPoly cyclotomic_poly(unsigned n) {
  static std::map<unsigned, QPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto compute = [](auto&& self, unsigned k) -> const QPoly& {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    QPoly result;
    if (k == 1) {
      result = {Rational(-1), Rational(1)};  // x - 1
    } else {
      QPoly xn1(k + 1, Rational(0));  // x^k - 1
      xn1[0] = -1;
      xn1[k] = 1;
      QPoly denom{Rational(1)};
      for (unsigned d = 1; d < k; ++d) {
        if (k % d == 0) denom = poly_mul(denom, self(self, d));
      }
      auto [quo, rem] = poly_divmod(std::move(xn1), denom);
      // The recursion guarantees exact division.
      if (!rem.empty()) throw CheckFailed("cyclotomic division not exact");
      result = std::move(quo);
    }
    return cache.emplace(k, std::move(result)).first->second;
  };
  return compute(compute, n);
}

// ---------------------------------------------------------------------------
// Field factories

FieldPtr Field::rationals() {
  static FieldPtr instance = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::rationals;
    return FieldPtr(f);
  }();
  return instance;
}

FieldPtr Field::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw NotPrime("modulus " + std::to_string(p) + " is not prime");
  }
  if (p >= (1ull << 31)) {
    throw ParameterOutOfRange("prime moduli are limited to < 2^31");
  }
  static std::map<std::uint64_t, FieldPtr> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::prime;
  f->p_ = p;
  return cache.emplace(p, FieldPtr(f)).first->second;
}

FieldPtr Field::cyclotomic(unsigned n) {
  if (n < 1) throw ParameterOutOfRange("cyclotomic order must be >= 1");
  static std::map<unsigned, FieldPtr> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::cyclotomic;
  f->n_ = n;
  f->phi_ = euler_phi(n);
  f->phi_poly_ = cyclotomic_poly(n);
  // Iteratively reduce x^e modulo Phi_n for e in [0, n).
  f->pow_table_.reserve(n);
  std::vector<Rational> cur(f->phi_, Rational(0));
  cur[0] = 1;
  for (unsigned e = 0; e < n; ++e) {
    f->pow_table_.push_back(cur);
    // cur <- x * cur mod Phi_n
    Rational lead = cur[f->phi_ - 1];
    for (unsigned i = f->phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (lead != 0) {
      for (unsigned i = 0; i < f->phi_; ++i) cur[i] -= lead * f->phi_poly_[i];
    }
  }
  return cache.emplace(n, FieldPtr(f)).first->second;
}

bool Field::same(const Field& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == FieldKind::prime) return p_ == o.p_;
  if (kind_ == FieldKind::cyclotomic) return n_ == o.n_;
  return true;
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::rationals:
      return "Q";
    case FieldKind::prime:
      return "F_" + std::to_string(p_);
    case FieldKind::cyclotomic:
      return "Q(zeta_" + std::to_string(n_) + ")";
  }
  return "?";
}

void Field::check_same(const FieldElement& a, const FieldElement& b) const {
  if (!a.field()->same(*b.field())) {
    throw SpecMismatch("elements of " + a.field()->name() + " and " +
                       b.field()->name() + " cannot be combined");
  }
}

// ---------------------------------------------------------------------------
// Element constructors

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long v) const { return from_rational(Rational(v)); }

FieldElement Field::from_rational(const Rational& qin) const {
  auto self = shared_from_this();
  const Rational q = canonicalized(qin);
  switch (kind_) {
    case FieldKind::rationals:
      return FieldElement(self, q);
    case FieldKind::prime: {
      mpz_class num = q.get_num(), den = q.get_den();
      mpz_class pz(static_cast<unsigned long>(p_));
      mpz_class dmod = den % pz;
      if (dmod == 0) {
        throw NonInvertibleDenominator("denominator of " + q.get_str() +
                                       " vanishes modulo " + std::to_string(p_));
      }
      mpz_class nmod = num % pz;
      if (nmod < 0) nmod += pz;
      std::uint64_t r = mpz_get_ui(nmod.get_mpz_t());
      std::uint64_t d = mpz_get_ui(mpz_class(dmod < 0 ? dmod + pz : dmod).get_mpz_t());
      std::uint64_t dinv = powmod_u64(d, p_ - 2, p_);
      return FieldElement(self, mulmod_u64(r, dinv, p_));
    }
    case FieldKind::cyclotomic: {
      std::vector<Rational> c(phi_, Rational(0));
      c[0] = q;
      return FieldElement(self, std::move(c));
    }
  }
  throw CheckFailed("unreachable");
}

FieldElement Field::from_residue(std::uint64_t r) const {
  if (kind_ != FieldKind::prime) throw SpecMismatch("from_residue needs F_p");
  return FieldElement(shared_from_this(), r % p_);
}

FieldElement Field::from_coeffs(std::vector<Rational> c) const {
  if (kind_ != FieldKind::cyclotomic) throw SpecMismatch("from_coeffs needs Q(zeta_n)");
  if (c.size() != phi_) {
    throw BadInputFile("cyclotomic payload length " + std::to_string(c.size()) +
                       " != phi(n) = " + std::to_string(phi_));
  }
  for (auto& q : c) q = canonicalized(std::move(q));
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::zeta_pow(long k) const {
  if (kind_ != FieldKind::cyclotomic) throw SpecMismatch("zeta_pow needs Q(zeta_n)");
  long e = k % static_cast<long>(n_);
  if (e < 0) e += n_;
  return FieldElement(shared_from_this(), pow_table_[static_cast<size_t>(e)]);
}

FieldElement Field::zeta_combination(
    const std::vector<std::pair<long, Rational>>& terms) const {
  if (kind_ != FieldKind::cyclotomic) {
    throw SpecMismatch("zeta_combination needs Q(zeta_n)");
  }
  std::vector<Rational> acc(phi_, Rational(0));
  for (const auto& [exp, coeff] : terms) {
    const Rational c = canonicalized(coeff);
    long e = exp % static_cast<long>(n_);
    if (e < 0) e += n_;
    const auto& pw = pow_table_[static_cast<size_t>(e)];
    for (unsigned i = 0; i < phi_; ++i) acc[i] += c * pw[i];
  }
  return FieldElement(shared_from_this(), std::move(acc));
}

FieldElement Field::parse(const std::string& s) const {
  Rational q = parse_rational(s);
  return from_rational(q);
}

// ---------------------------------------------------------------------------
// Element operations

bool FieldElement::is_zero() const {
  switch (field_->kind()) {
    case FieldKind::rationals:
      return std::get<Rational>(v_) == 0;
    case FieldKind::prime:
      return std::get<std::uint64_t>(v_) == 0;
    case FieldKind::cyclotomic: {
      for (const auto& c : std::get<std::vector<Rational>>(v_))
        if (c != 0) return false;
      return true;
    }
  }
  return false;
}

bool FieldElement::is_one() const { return *this == field_->one(); }

bool FieldElement::is_real() const {
  switch (field_->kind()) {
    case FieldKind::rationals:
      return true;
    case FieldKind::prime:
      return false;  // no real embedding of a positive characteristic field
    case FieldKind::cyclotomic:
      return conj() == *this;
  }
  return false;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  field_->check_same(*this, o);
  switch (field_->kind()) {
    case FieldKind::rationals:
      return FieldElement(field_, std::get<Rational>(v_) + std::get<Rational>(o.v_));
    case FieldKind::prime: {
      std::uint64_t p = field_->characteristic_p();
      std::uint64_t s = std::get<std::uint64_t>(v_) + std::get<std::uint64_t>(o.v_);
      if (s >= p) s -= p;  // safe: p < 2^31, no wraparound possible
      return FieldElement(field_, s);
    }
    case FieldKind::cyclotomic: {
      auto c = std::get<std::vector<Rational>>(v_);
      const auto& d = std::get<std::vector<Rational>>(o.v_);
      for (size_t i = 0; i < c.size(); ++i) c[i] += d[i];
      return FieldElement(field_, std::move(c));
    }
  }
  throw CheckFailed("unreachable");
}

FieldElement FieldElement::operator-() const {
  switch (field_->kind()) {
    case FieldKind::rationals:
      return FieldElement(field_, Rational(-std::get<Rational>(v_)));
    case FieldKind::prime: {
      std::uint64_t p = field_->characteristic_p();
      std::uint64_t a = std::get<std::uint64_t>(v_);
      return FieldElement(field_, a == 0 ? 0 : p - a);
    }
    case FieldKind::cyclotomic: {
      auto c = std::get<std::vector<Rational>>(v_);
      for (auto& x : c) x = -x;
      return FieldElement(field_, std::move(c));
    }
  }
  throw CheckFailed("unreachable");
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  field_->check_same(*this, o);
  switch (field_->kind()) {
    case FieldKind::rationals:
      return FieldElement(field_, std::get<Rational>(v_) * std::get<Rational>(o.v_));
    case FieldKind::prime:
      return FieldElement(field_,
                          mulmod_u64(std::get<std::uint64_t>(v_),
                                     std::get<std::uint64_t>(o.v_),
                                     field_->characteristic_p()));
    case FieldKind::cyclotomic: {
      const auto& a = std::get<std::vector<Rational>>(v_);
      const auto& b = std::get<std::vector<Rational>>(o.v_);
      unsigned phi = field_->degree();
      QPoly prod(2 * phi - 1, Rational(0));
      for (unsigned i = 0; i < phi; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < phi; ++j) prod[i + j] += a[i] * b[j];
      }
      QPoly rem = poly_mod(std::move(prod), field_->modulus());
      rem.resize(phi, Rational(0));
      return FieldElement(field_, std::move(rem));
    }
  }
  throw CheckFailed("unreachable");
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + field_->name());
  switch (field_->kind()) {
    case FieldKind::rationals:
      return FieldElement(field_, Rational(1 / std::get<Rational>(v_)));
    case FieldKind::prime:
      return FieldElement(field_, powmod_u64(std::get<std::uint64_t>(v_),
                                             field_->characteristic_p() - 2,
                                             field_->characteristic_p()));
    case FieldKind::cyclotomic: {
      QPoly a = std::get<std::vector<Rational>>(v_);
      trim(a);
      // Phi_n is irreducible over Q, so gcd(a, Phi_n) = 1 for nonzero a and
      // the Bezout coefficient of a is the inverse modulo Phi_n.
      ExtGcd e = poly_ext_gcd(a, field_->modulus());
      if (e.g.size() != 1) throw DivisionByZero("non-unit in " + field_->name());
      QPoly u = poly_mod(std::move(e.u), field_->modulus());
      u.resize(field_->degree(), Rational(0));
      for (auto& c : u) c /= e.g[0];
      return FieldElement(field_, std::move(u));
    }
  }
  throw CheckFailed("unreachable");
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  field_->check_same(*this, o);
  return *this * o.inverse();
}

FieldElement FieldElement::conj() const {
  if (field_->kind() != FieldKind::cyclotomic) return *this;
  const auto& c = std::get<std::vector<Rational>>(v_);
  std::vector<std::pair<long, Rational>> terms;
  long n = field_->cyclo_n();
  for (unsigned i = 0; i < c.size(); ++i) {
    if (c[i] != 0) terms.emplace_back(((n - 1) * static_cast<long>(i)) % n, c[i]);
  }
  return field_->zeta_combination(terms);
}

bool FieldElement::operator==(const FieldElement& o) const {
  field_->check_same(*this, o);
  return v_ == o.v_;
}

int FieldElement::cmp(const FieldElement& o) const {
  field_->check_same(*this, o);
  switch (field_->kind()) {
    case FieldKind::rationals: {
      return ::cmp(std::get<Rational>(v_), std::get<Rational>(o.v_));
    }
    case FieldKind::prime: {
      auto a = std::get<std::uint64_t>(v_), b = std::get<std::uint64_t>(o.v_);
      return a < b ? -1 : (a > b ? 1 : 0);
    }
    case FieldKind::cyclotomic: {
      const auto& a = std::get<std::vector<Rational>>(v_);
      const auto& b = std::get<std::vector<Rational>>(o.v_);
      for (size_t i = 0; i < a.size(); ++i) {
        int c = ::cmp(a[i], b[i]);
        if (c != 0) return c;
      }
      return 0;
    }
  }
  return 0;
}

std::string FieldElement::to_string() const {
  switch (field_->kind()) {
    case FieldKind::rationals:
      return std::get<Rational>(v_).get_str();
    case FieldKind::prime:
      return std::to_string(std::get<std::uint64_t>(v_));
    case FieldKind::cyclotomic: {
      const auto& c = std::get<std::vector<Rational>>(v_);
      std::ostringstream out;
      out << '[';
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) out << ',';
        out << c[i].get_str();
      }
      out << ']';
      return out.str();
    }
  }
  return "?";
}

}  // namespace arrangio
