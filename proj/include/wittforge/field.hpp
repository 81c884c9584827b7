#pragma once

// Exact coefficient fields: the rationals, prime fields F_p with p odd, and
// simple extensions F[t]/(m) stacked into towers. Fields are interned, so two
// fields are equal exactly when their FieldRef pointers are equal.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wittforge/error.hpp"

namespace wittforge {

class Field;
using FieldRef = const Field*;

class Scalar {
 public:
  Scalar() = default;

  FieldRef field() const { return field_; }
  bool valid() const { return field_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::int64_t residue() const { return std::get<std::int64_t>(value_); }
  const std::vector<Scalar>& coeffs() const { return std::get<std::vector<Scalar>>(value_); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  Scalar pow(std::uint64_t exponent) const;
  Scalar pow(long exponent) const;

  std::string to_string() const;

 private:
  friend class Field;
  using Value = std::variant<std::monostate, mpq_class, std::int64_t, std::vector<Scalar>>;

  Scalar(FieldRef field, Value value) : field_(field), value_(std::move(value)) {}

  FieldRef field_ = nullptr;
  Value value_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

struct ExtensionOptions {
  /// Skips the irreducibility proof when exhaustive or certificate-based
  /// checking is out of reach (number-field bases of degree > 3).
  bool assume_irreducible = false;
  /// Cap on the absolute degree of the tower over its prime field.
  int max_absolute_degree = 16;
};

class Field {
 public:
  enum class Kind { Rationals, Prime, Extension };

  static FieldRef rationals();
  static FieldRef prime(std::int64_t p);
  static FieldRef extension(FieldRef base, const std::vector<Scalar>& modulus,
                            ExtensionOptions options = {});

  Kind kind() const { return kind_; }
  std::int64_t characteristic() const { return characteristic_; }
  /// nullptr for prime fields.
  FieldRef base() const { return base_; }
  const std::vector<Scalar>& modulus() const { return modulus_; }
  /// Degree over the immediate base; 1 for prime fields.
  int degree() const { return static_cast<int>(modulus_.empty() ? 1 : modulus_.size() - 1); }
  int absolute_degree() const { return base_ ? degree() * base_->absolute_degree() : 1; }
  /// Number of extension steps above the prime field.
  int level() const { return base_ ? base_->level() + 1 : 0; }
  bool is_finite() const { return characteristic_ != 0; }
  std::uint64_t order() const;
  FieldRef prime_field() const { return base_ ? base_->prime_field() : this; }

  /// True when `sub` occurs in this field's tower (including itself).
  bool extends(FieldRef sub) const { return sub == this || (base_ && base_->extends(sub)); }
  int degree_over(FieldRef sub) const;

  const std::string& name() const { return name_; }

  Scalar zero() const;
  /// Name of the adjoined generator, e.g. "t1".
  const std::string& variable() const { return var_; }
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_rational(const mpq_class& value) const;
  /// The adjoined root t of the defining modulus.
  Scalar generator() const;
  Scalar from_coeffs(std::vector<Scalar> coeffs) const;

  /// Lifts an element of a subfield of the tower into this field.
  Scalar embed(const Scalar& x) const;

  /// Coordinates over `sub` in the tower power basis: the flattened index
  /// j * [K:sub] + k stands for beta_k * t^j where beta is the basis of the
  /// intermediate field K = base over sub.
  std::vector<Scalar> coordinates(const Scalar& x, FieldRef sub) const;
  Scalar from_coordinates(const std::vector<Scalar>& coords, FieldRef sub) const;

  /// Finite fields only: a bijection {0..order-1} <-> elements.
  Scalar element(std::uint64_t index) const;
  std::uint64_t index(const Scalar& x) const;

  void check(const Scalar& x) const {
    if (x.field() != this) fail(ErrorCode::FieldMismatch, "element of " + (x.field() ? x.field()->name() : std::string("<none>")) + " used in " + name_);
  }

 private:
  Field() = default;
  static std::mutex& registry_mutex();
  static std::map<std::string, std::unique_ptr<Field>>& registry();
  static FieldRef intern(std::unique_ptr<Field> field);

  Kind kind_ = Kind::Rationals;
  std::int64_t characteristic_ = 0;
  FieldRef base_ = nullptr;
  std::vector<Scalar> modulus_;
  std::string name_;
  std::string var_;
};

// ---------------------------------------------------------------------------
// Univariate polynomials over one field as coefficient vectors, low degree
// first, no trailing zeros. Shared by extension arithmetic and upoly.hpp.
namespace poly {

using Coeffs = std::vector<Scalar>;

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline int degree(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

inline Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs r = a.size() >= b.size() ? a : b;
  const Coeffs& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
  trim(r);
  return r;
}

inline Coeffs neg(const Coeffs& a) {
  Coeffs r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(-c);
  return r;
}

inline Coeffs sub(const Coeffs& a, const Coeffs& b) { return add(a, neg(b)); }

inline Coeffs scale(const Coeffs& a, const Scalar& c) {
  if (c.is_zero()) return {};
  Coeffs r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x * c);
  trim(r);
  return r;
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, a[0].field()->zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  trim(r);
  return r;
}

/// Quotient and remainder; the divisor must be nonzero.
inline std::pair<Coeffs, Coeffs> divmod(const Coeffs& a, const Coeffs& b) {
  if (b.empty()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  Coeffs r = a;
  trim(r);
  if (r.size() < b.size()) return {Coeffs{}, r};
  const Scalar lead_inv = b.back().inverse();
  Coeffs q(r.size() - b.size() + 1, b[0].field()->zero());
  for (int k = degree(r); k >= degree(b); --k) {
    const Scalar c = r[static_cast<std::size_t>(k)] * lead_inv;
    if (c.is_zero()) continue;
    const std::size_t shift = static_cast<std::size_t>(k - degree(b));
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = r[shift + j] - c * b[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

inline Coeffs mod(const Coeffs& a, const Coeffs& b) { return divmod(a, b).second; }

inline Coeffs monic(const Coeffs& a) {
  if (a.empty()) return a;
  return scale(a, a.back().inverse());
}

inline Coeffs gcd(Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Returns (g, u) with u*a = g mod b, g = gcd(a, b) monic.
inline std::pair<Coeffs, Coeffs> gcd_with_cofactor(const Coeffs& a, const Coeffs& b) {
  Coeffs r0 = a, r1 = b, u0, u1;
  trim(r0);
  trim(r1);
  if (!r0.empty()) u0 = Coeffs{r0[0].field()->one()};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Coeffs u2 = sub(u0, mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.empty()) return {r0, u0};
  const Scalar inv = r0.back().inverse();
  return {scale(r0, inv), scale(u0, inv)};
}

inline Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m) { return mod(mul(a, b), m); }

inline Coeffs powmod(Coeffs base, std::uint64_t e, const Coeffs& m) {
  Coeffs result{m[0].field()->one()};
  result = mod(result, m);
  base = mod(base, m);
  while (e > 0) {
    if (e & 1U) result = mulmod(result, base, m);
    e >>= 1U;
    if (e) base = mulmod(base, base, m);
  }
  return result;
}

inline Scalar eval(const Coeffs& a, const Scalar& x) {
  Scalar r = x.field()->zero();
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + x.field()->embed(*it);
  return r;
}

inline std::string to_string(const Coeffs& a, const std::string& var = "x") {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(a); k >= 0; --k) {
    const Scalar& c = a[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c.is_one() && k > 0;
    if (!unit) os << (k > 0 && c.field()->kind() == Field::Kind::Extension ? "(" + c.to_string() + ")" : c.to_string());
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace poly

// ---------------------------------------------------------------------------
// Scalar

inline bool Scalar::is_zero() const {
  switch (value_.index()) {
    case 1: return sgn(std::get<mpq_class>(value_)) == 0;
    case 2: return std::get<std::int64_t>(value_) == 0;
    case 3: return std::get<std::vector<Scalar>>(value_).empty();
    default: fail(ErrorCode::InvalidArgument, "uninitialised scalar");
  }
}

inline bool Scalar::is_one() const { return valid() && *this == field_->one(); }

inline Scalar Scalar::operator-() const {
  switch (value_.index()) {
    case 1: return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
    case 2: {
      const auto r = std::get<std::int64_t>(value_);
      return Scalar(field_, r == 0 ? std::int64_t{0} : field_->characteristic() - r);
    }
    case 3: return Scalar(field_, poly::neg(coeffs()));
    default: fail(ErrorCode::InvalidArgument, "uninitialised scalar");
  }
}

inline Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_ || !a.field_) fail(ErrorCode::FieldMismatch, "addition across fields");
  switch (a.value_.index()) {
    case 1: return Scalar(a.field_, mpq_class(a.rational() + b.rational()));
    case 2: {
      std::int64_t r = a.residue() + b.residue();
      if (r >= a.field_->characteristic()) r -= a.field_->characteristic();
      return Scalar(a.field_, r);
    }
    default: return Scalar(a.field_, poly::add(a.coeffs(), b.coeffs()));
  }
}

inline Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

inline Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_ || !a.field_) fail(ErrorCode::FieldMismatch, "multiplication across fields");
  switch (a.value_.index()) {
    case 1: return Scalar(a.field_, mpq_class(a.rational() * b.rational()));
    case 2: {
      const auto prod = static_cast<__int128>(a.residue()) * b.residue();
      return Scalar(a.field_, static_cast<std::int64_t>(prod % a.field_->characteristic()));
    }
    default: {
      if (a.is_zero() || b.is_zero()) return a.field_->zero();
      return Scalar(a.field_, poly::mod(poly::mul(a.coeffs(), b.coeffs()), a.field_->modulus()));
    }
  }
}

inline bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) fail(ErrorCode::FieldMismatch, "comparison across fields");
  switch (a.value_.index()) {
    case 1: return a.rational() == b.rational();
    case 2: return a.residue() == b.residue();
    default: {
      const auto& x = a.coeffs();
      const auto& y = b.coeffs();
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return false;
      return true;
    }
  }
}

inline Scalar Scalar::inverse() const {
  if (!valid()) fail(ErrorCode::InvalidArgument, "uninitialised scalar");
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in " + field_->name());
  switch (value_.index()) {
    case 1: return Scalar(field_, mpq_class(1 / rational()));
    case 2: {
      // extended Euclid on (residue, p)
      std::int64_t t = 0, new_t = 1, r = field_->characteristic(), new_r = residue();
      while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
      }
      if (t < 0) t += field_->characteristic();
      return Scalar(field_, t);
    }
    default: {
      auto [g, u] = poly::gcd_with_cofactor(coeffs(), field_->modulus());
      if (g.size() != 1) fail(ErrorCode::DivisionByZero, "non-invertible element; modulus reducible");
      return Scalar(field_, poly::mod(u, field_->modulus()));
    }
  }
}

inline Scalar Scalar::pow(std::uint64_t exponent) const {
  Scalar result = field_->one();
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

inline Scalar Scalar::pow(long exponent) const {
  if (exponent >= 0) return pow(static_cast<std::uint64_t>(exponent));
  return inverse().pow(static_cast<std::uint64_t>(-exponent));
}

inline std::string Scalar::to_string() const {
  switch (value_.index()) {
    case 1: return rational().get_str();
    case 2: return std::to_string(residue());
    case 3: return poly::to_string(coeffs(), field_->variable());
    default: return "<invalid>";
  }
}

// ---------------------------------------------------------------------------
// Field

inline std::mutex& Field::registry_mutex() {
  static std::mutex m;
  return m;
}

inline std::map<std::string, std::unique_ptr<Field>>& Field::registry() {
  static std::map<std::string, std::unique_ptr<Field>> r;
  return r;
}

inline FieldRef Field::intern(std::unique_ptr<Field> field) {
  std::lock_guard lock(registry_mutex());
  auto& reg = registry();
  auto it = reg.find(field->name_);
  if (it != reg.end()) return it->second.get();
  FieldRef ref = field.get();
  reg.emplace(field->name_, std::move(field));
  return ref;
}

inline FieldRef Field::rationals() {
  static FieldRef q = [] {
    std::unique_ptr<Field> f(new Field());
    f->kind_ = Kind::Rationals;
    f->name_ = "Q";
    return intern(std::move(f));
  }();
  return q;
}

namespace detail {
inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace detail

inline FieldRef Field::prime(std::int64_t p) {
  if (p == 2) fail(ErrorCode::InvalidField, "characteristic 2 is not supported");
  if (p > (std::int64_t{1} << 31) || !detail::is_prime(p)) fail(ErrorCode::InvalidField, std::to_string(p) + " is not an odd prime below 2^31");
  std::unique_ptr<Field> f(new Field());
  f->kind_ = Kind::Prime;
  f->characteristic_ = p;
  f->name_ = "F" + std::to_string(p);
  return intern(std::move(f));
}

inline std::uint64_t Field::order() const {
  if (!is_finite()) fail(ErrorCode::UnsupportedField, name_ + " is infinite");
  std::uint64_t q = 1;
  for (int i = 0; i < absolute_degree(); ++i) {
    if (q > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(characteristic_)) fail(ErrorCode::BoundsExceeded, "field order overflows 64 bits");
    q *= static_cast<std::uint64_t>(characteristic_);
  }
  return q;
}

inline int Field::degree_over(FieldRef sub) const {
  if (!extends(sub)) fail(ErrorCode::FieldMismatch, sub->name() + " is not a subfield of " + name_);
  return sub == this ? 1 : degree() * base_->degree_over(sub);
}

inline Scalar Field::zero() const {
  switch (kind_) {
    case Kind::Rationals: return Scalar(this, mpq_class(0));
    case Kind::Prime: return Scalar(this, std::int64_t{0});
    default: return Scalar(this, std::vector<Scalar>{});
  }
}

inline Scalar Field::one() const { return from_int(1); }

inline Scalar Field::from_int(long value) const {
  switch (kind_) {
    case Kind::Rationals: return Scalar(this, mpq_class(value));
    case Kind::Prime: {
      std::int64_t r = value % characteristic_;
      if (r < 0) r += characteristic_;
      return Scalar(this, r);
    }
    default: return embed(base_->from_int(value));
  }
}

inline Scalar Field::from_rational(const mpq_class& value) const {
  switch (kind_) {
    case Kind::Rationals: {
      mpq_class v = value;
      v.canonicalize();
      return Scalar(this, v);
    }
    case Kind::Prime: {
      mpz_class p = characteristic_;
      mpz_class num = value.get_num() % p, den = value.get_den() % p;
      if (den == 0) fail(ErrorCode::DivisionByZero, "denominator divisible by the characteristic");
      Scalar n = from_int(num.get_si()), d = from_int(den.get_si());
      return n * d.inverse();
    }
    default: return embed(base_->from_rational(value));
  }
}

inline Scalar Field::generator() const {
  if (kind_ != Kind::Extension) fail(ErrorCode::InvalidArgument, name_ + " has no adjoined generator");
  return from_coeffs({base_->zero(), base_->one()});
}

inline Scalar Field::from_coeffs(std::vector<Scalar> coeffs) const {
  if (kind_ != Kind::Extension) {
    if (coeffs.size() > 1) fail(ErrorCode::InvalidArgument, "coefficient vector too long for " + name_);
    return coeffs.empty() ? zero() : coeffs[0];
  }
  for (const auto& c : coeffs) base_->check(c);
  poly::trim(coeffs);
  if (coeffs.size() > static_cast<std::size_t>(degree())) coeffs = poly::mod(coeffs, modulus_);
  return Scalar(this, std::move(coeffs));
}

inline Scalar Field::embed(const Scalar& x) const {
  if (x.field() == this) return x;
  if (!base_ || !extends(x.field())) fail(ErrorCode::FieldMismatch, "cannot embed " + (x.field() ? x.field()->name() : std::string("<none>")) + " into " + name_);
  Scalar lifted = base_->embed(x);
  if (lifted.is_zero()) return zero();
  return Scalar(this, std::vector<Scalar>{lifted});
}

inline std::vector<Scalar> Field::coordinates(const Scalar& x, FieldRef sub) const {
  check(x);
  if (sub == this) return {x};
  if (!base_ || !extends(sub)) fail(ErrorCode::FieldMismatch, sub->name() + " is not a subfield of " + name_);
  const int inner = base_->degree_over(sub);
  std::vector<Scalar> out(static_cast<std::size_t>(degree() * inner), sub->zero());
  const auto& cs = x.coeffs();
  for (std::size_t j = 0; j < cs.size(); ++j) {
    auto c = base_->coordinates(cs[j], sub);
    std::copy(c.begin(), c.end(), out.begin() + static_cast<long>(j) * inner);
  }
  return out;
}

inline Scalar Field::from_coordinates(const std::vector<Scalar>& coords, FieldRef sub) const {
  if (static_cast<int>(coords.size()) != degree_over(sub)) fail(ErrorCode::InvalidArgument, "coordinate vector has wrong length");
  if (sub == this) return coords[0];
  const int inner = base_->degree_over(sub);
  std::vector<Scalar> cs;
  for (int j = 0; j < degree(); ++j)
    cs.push_back(base_->from_coordinates(std::vector<Scalar>(coords.begin() + j * inner, coords.begin() + (j + 1) * inner), sub));
  return from_coeffs(std::move(cs));
}

inline Scalar Field::element(std::uint64_t index) const {
  if (!is_finite()) fail(ErrorCode::UnsupportedField, name_ + " is infinite");
  if (kind_ == Kind::Prime) return from_int(static_cast<long>(index % static_cast<std::uint64_t>(characteristic_)));
  const std::uint64_t q = base_->order();
  std::vector<Scalar> cs;
  for (int j = 0; j < degree(); ++j) {
    cs.push_back(base_->element(index % q));
    index /= q;
  }
  return from_coeffs(std::move(cs));
}

inline std::uint64_t Field::index(const Scalar& x) const {
  check(x);
  if (kind_ == Kind::Prime) return static_cast<std::uint64_t>(x.residue());
  if (kind_ == Kind::Rationals) fail(ErrorCode::UnsupportedField, "Q is infinite");
  const std::uint64_t q = base_->order();
  std::uint64_t idx = 0;
  const auto& cs = x.coeffs();
  for (int j = static_cast<int>(cs.size()) - 1; j >= 0; --j) idx = idx * q + base_->index(cs[static_cast<std::size_t>(j)]);
  return idx;
}

// ---------------------------------------------------------------------------
// Square roots and irreducibility.

inline bool is_rational_square(const mpq_class& q) {
  return sgn(q) >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

inline mpq_class rational_sqrt(const mpq_class& q) {
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return mpq_class(n, d);
}

namespace detail {

// Tonelli-Shanks in F_q, q odd.
inline std::optional<Scalar> finite_sqrt(const Scalar& a) {
  FieldRef f = a.field();
  if (a.is_zero()) return a;
  const std::uint64_t q = f->order();
  if (!a.pow((q - 1) / 2).is_one()) return std::nullopt;
  std::uint64_t t = q - 1;
  int s = 0;
  while ((t & 1U) == 0) {
    t >>= 1U;
    ++s;
  }
  Scalar z;
  for (std::uint64_t i = 1; i < q; ++i) {
    z = f->element(i);
    if (!z.pow((q - 1) / 2).is_one()) break;
  }
  int m = s;
  Scalar c = z.pow(t), tt = a.pow(t), r = a.pow((t + 1) / 2);
  while (!tt.is_one()) {
    int i = 0;
    Scalar probe = tt;
    while (!probe.is_one()) {
      probe = probe * probe;
      ++i;
    }
    Scalar b = c;
    for (int k = 0; k < m - i - 1; ++k) b = b * b;
    m = i;
    c = b * b;
    tt = tt * c;
    r = r * b;
  }
  return r;
}

// Square root in a quadratic extension of Q.
inline std::optional<Scalar> quadratic_number_field_sqrt(const Scalar& u) {
  FieldRef k = u.field();
  if (u.is_zero()) return u;
  // modulus t^2 + b t + c; theta = t + b/2 satisfies theta^2 = D0.
  const mpq_class b = k->modulus()[1].rational(), c = k->modulus()[0].rational();
  const mpq_class d0 = b * b / 4 - c;
  auto coords = k->coordinates(u, k->base());
  const mpq_class u0 = coords[0].rational(), u1 = coords[1].rational();
  const mpq_class v0 = u0 - u1 * b / 2, v1 = u1;
  const mpq_class norm = v0 * v0 - d0 * v1 * v1;
  if (!is_rational_square(norm)) return std::nullopt;
  const mpq_class n = rational_sqrt(norm);
  auto candidate = [&](const mpq_class& x, const mpq_class& y) {
    // x + y*theta = (x + y*b/2) + y*t
    return k->from_coordinates({k->base()->from_rational(x + y * b / 2), k->base()->from_rational(y)}, k->base());
  };
  for (int sign : {1, -1}) {
    const mpq_class a2 = (v0 + sign * n) / 2;
    if (sgn(a2) != 0 && is_rational_square(a2)) {
      const mpq_class x = rational_sqrt(a2);
      const Scalar root = candidate(x, v1 / (2 * x));
      if (root * root == u) return root;
    }
  }
  if (sgn(v1) == 0) {
    const mpq_class y2 = v0 / d0;
    if (is_rational_square(y2)) {
      const Scalar root = candidate(0, rational_sqrt(y2));
      if (root * root == u) return root;
    }
  }
  return std::nullopt;
}

inline bool is_quadratic_number_field(FieldRef f) {
  return f->kind() == Field::Kind::Extension && f->base() == Field::rationals() && f->degree() == 2;
}

}  // namespace detail

/// Square root if one exists in the element's field. Supported: Q, finite
/// fields, and quadratic extensions of Q.
inline std::optional<Scalar> square_root(const Scalar& a) {
  FieldRef f = a.field();
  if (f->kind() == Field::Kind::Rationals) {
    if (!is_rational_square(a.rational())) return std::nullopt;
    return f->from_rational(rational_sqrt(a.rational()));
  }
  if (f->is_finite()) return detail::finite_sqrt(a);
  if (detail::is_quadratic_number_field(f)) return detail::quadratic_number_field_sqrt(a);
  fail(ErrorCode::UnsupportedField, "square roots are not available in " + f->name());
}

inline bool is_square(const Scalar& a) { return square_root(a).has_value(); }

/// Norm down to the prime field, as the determinant of multiplication.
mpq_class rational_norm(const Scalar& x);

namespace detail {

inline std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  if (n == 0) return {};
  if (n > mpz_class("1000000000000")) fail(ErrorCode::IrreducibilityUnverified, "coefficient too large for the rational root test");
  std::vector<mpz_class> ds;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d * d != n) ds.push_back(n / d);
    }
  }
  return ds;
}

/// Rational roots of a polynomial over Q.
inline std::vector<mpq_class> rational_roots(const poly::Coeffs& m) {
  // clear denominators
  mpz_class l = 1;
  for (const auto& c : m) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : m) z.push_back(mpz_class(c.rational() * l));
  std::vector<mpq_class> roots;
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  if (low + 1 >= z.size()) return roots;
  for (const auto& p : divisors(z[low])) {
    for (const auto& q : divisors(z.back())) {
      for (int sign : {1, -1}) {
        mpq_class cand(sign * p, q);
        cand.canonicalize();
        mpq_class acc = 0;
        for (auto it = z.rbegin(); it != z.rend(); ++it) acc = acc * cand + *it;
        if (acc == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
      }
    }
  }
  return roots;
}

inline constexpr std::uint64_t kExhaustiveDivisorLimit = 200000;

/// gcd(t^(q^i) - t, m) == 1 for all i <= deg/2.
inline bool ben_or_irreducible(const poly::Coeffs& m) {
  FieldRef f = m[0].field();
  const std::uint64_t q = f->order();
  const poly::Coeffs x{f->zero(), f->one()};
  poly::Coeffs power = poly::mod(x, m);
  for (int i = 1; i <= poly::degree(m) / 2; ++i) {
    power = poly::powmod(power, q, m);
    if (poly::degree(poly::gcd(poly::sub(power, x), m)) > 0) return false;
  }
  return true;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool exhaustive_irreducible(const poly::Coeffs& m) {
  FieldRef f = m[0].field();
  const std::uint64_t q = f->order();
  for (int k = 1; k <= poly::degree(m) / 2; ++k) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      poly::Coeffs cand;
      std::uint64_t rest = idx;
      for (int i = 0; i < k; ++i) {
        cand.push_back(f->element(rest % q));
        rest /= q;
      }
      cand.push_back(f->one());
      if (poly::mod(m, cand).empty()) return false;
    }
  }
  return true;
}

inline std::uint64_t divisor_search_size(FieldRef f, int degree) {
  const std::uint64_t q = f->order();
  std::uint64_t total = 0, count = 1;
  for (int k = 1; k <= degree / 2; ++k) {
    if (count > kExhaustiveDivisorLimit) return kExhaustiveDivisorLimit + 1;
    count *= q;
    total += count;
  }
  return total;
}

}  // namespace detail

/// Irreducibility of a monic polynomial over its coefficient field.
/// Finite fields: exhaustive divisor search when small, otherwise the Ben-Or
/// gcd test. Q: rational roots, complete for degree <= 3. Quadratic
/// polynomials over quadratic number fields: discriminant square test.
/// Returns nullopt when no decision is available.
inline std::optional<bool> decide_irreducible(const poly::Coeffs& m) {
  FieldRef f = m[0].field();
  const int n = poly::degree(m);
  if (n <= 0) return false;
  if (n == 1) return true;
  if (f->is_finite()) {
    if (detail::divisor_search_size(f, n) <= detail::kExhaustiveDivisorLimit) return detail::exhaustive_irreducible(m);
    return detail::ben_or_irreducible(m);
  }
  if (f->kind() == Field::Kind::Rationals) {
    if (!detail::rational_roots(m).empty()) return false;
    if (n <= 3) return true;
    return std::nullopt;
  }
  if (n == 2) {
    const Scalar disc = m[1] * m[1] - f->from_int(4) * m[0] * m[2];
    if (!is_rational_square(rational_norm(disc))) return true;
    if (detail::is_quadratic_number_field(f)) return !is_square(disc);
  }
  return std::nullopt;
}

inline FieldRef Field::extension(FieldRef base, const std::vector<Scalar>& modulus, ExtensionOptions options) {
  if (!base) fail(ErrorCode::InvalidField, "extension of a null field");
  std::vector<Scalar> m = modulus;
  for (const auto& c : m) base->check(c);
  poly::trim(m);
  if (poly::degree(m) < 2) fail(ErrorCode::InvalidField, "modulus must have degree >= 2");
  if (!m.back().is_one()) fail(ErrorCode::InvalidField, "modulus must be monic");
  if (base->absolute_degree() * poly::degree(m) > options.max_absolute_degree)
    fail(ErrorCode::InvalidField, "tower degree exceeds the configured bound " + std::to_string(options.max_absolute_degree));
  if (!options.assume_irreducible) {
    auto verdict = decide_irreducible(m);
    if (!verdict) fail(ErrorCode::IrreducibilityUnverified, "cannot certify irreducibility of " + poly::to_string(m, "t") + "; pass assume_irreducible");
    if (!*verdict) fail(ErrorCode::InvalidField, poly::to_string(m, "t") + " is reducible over " + base->name());
  }
  std::unique_ptr<Field> f(new Field());
  f->kind_ = Kind::Extension;
  f->characteristic_ = base->characteristic();
  f->base_ = base;
  f->modulus_ = std::move(m);
  f->var_ = "t" + std::to_string(base->level() + 1);
  f->name_ = base->name() + "[" + f->var_ + "]/(" + poly::to_string(f->modulus_, f->var_) + ")";
  return intern(std::move(f));
}

inline mpq_class rational_norm(const Scalar& x) {
  FieldRef f = x.field();
  FieldRef q = f->prime_field();
  const int n = f->degree_over(q);
  // determinant of multiplication-by-x over the prime field
  std::vector<std::vector<Scalar>> mat(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<Scalar> e(static_cast<std::size_t>(n), q->zero());
    e[static_cast<std::size_t>(j)] = q->one();
    auto col = f->coordinates(x * f->from_coordinates(e, q), q);
    for (int i = 0; i < n; ++i) mat[static_cast<std::size_t>(i)].push_back(col[static_cast<std::size_t>(i)]);
  }
  Scalar det = q->one();
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_zero()) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(mat[static_cast<std::size_t>(piv)], mat[static_cast<std::size_t>(c)]);
      det = -det;
    }
    const Scalar p = mat[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    det = det * p;
    for (int r = c + 1; r < n; ++r) {
      const Scalar factor = mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] / p;
      if (factor.is_zero()) continue;
      for (int k = c; k < n; ++k)
        mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -= factor * mat[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
    }
  }
  if (q->kind() == Field::Kind::Rationals) return det.rational();
  return det.residue();
}

// Convenience constructors used throughout tests and the CLI.
inline FieldRef Q() { return Field::rationals(); }
inline FieldRef Fp(std::int64_t p) { return Field::prime(p); }

/// base[t]/(t^n + c_{n-1} t^{n-1} + ... + c_0) with integer coefficients
/// listed from c_0 upward; the leading 1 is implicit.
inline FieldRef extend(FieldRef base, const std::vector<long>& lower_coeffs, ExtensionOptions options = {}) {
  std::vector<Scalar> m;
  for (long c : lower_coeffs) m.push_back(base->from_int(c));
  m.push_back(base->one());
  return Field::extension(base, m, options);
}

}  // namespace wittforge
