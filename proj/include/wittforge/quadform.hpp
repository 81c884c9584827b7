#pragma once

// Symmetric bilinear forms over a field and their classes in the Witt ring
// W(F). Equality of Witt classes is decided by invariants: over finite fields
// by dimension parity and discriminant, over Q by Hasse-Minkowski.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wittforge/field.hpp"
#include "wittforge/matrix.hpp"

namespace wittforge {

class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(FMatrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) fail(ErrorCode::InvalidArgument, "Gram matrix must be square");
    if (gram_ != gram_.transpose()) fail(ErrorCode::InvalidArgument, "Gram matrix must be symmetric");
  }

  static QuadraticForm zero_dimensional(FieldRef f) { return QuadraticForm(zeros(f, 0, 0)); }

  static QuadraticForm diagonal(FieldRef f, const std::vector<Scalar>& entries) {
    FMatrix g = zeros(f, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = f->embed(entries[i]);
    return QuadraticForm(g);
  }
  static QuadraticForm diagonal(FieldRef f, const std::vector<long>& entries) {
    std::vector<Scalar> e;
    for (long x : entries) e.push_back(f->from_int(x));
    return diagonal(f, e);
  }

  /// n copies of the hyperbolic plane [[0,1],[1,0]].
  static QuadraticForm hyperbolic(FieldRef f, std::size_t n) {
    FMatrix g = zeros(f, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) g(2 * i, 2 * i + 1) = g(2 * i + 1, 2 * i) = f->one();
    return QuadraticForm(g);
  }

  FieldRef field() const { return gram_.zero().field(); }
  std::size_t dim() const { return gram_.rows(); }
  const FMatrix& gram() const { return gram_; }

  Scalar determinant() const { return wittforge::determinant(gram_); }
  bool nondegenerate() const { return !determinant().is_zero(); }

  /// (-1)^(n(n-1)/2) * det.
  Scalar signed_discriminant() const {
    const std::size_t n = dim();
    const Scalar d = determinant();
    return ((n * (n - 1) / 2) % 2 == 0) ? d : -d;
  }

  Scalar bilinear(const FMatrix& u, const FMatrix& v) const { return (u.transpose() * gram_ * v)(0, 0); }

  QuadraticForm orthogonal_sum(const QuadraticForm& other) const {
    require_same_field(other);
    return QuadraticForm(direct_sum(gram_, other.gram_));
  }
  QuadraticForm tensor(const QuadraticForm& other) const {
    require_same_field(other);
    return QuadraticForm(kronecker(gram_, other.gram_));
  }
  QuadraticForm scaled(const Scalar& s) const { return QuadraticForm(gram_.scaled(field()->embed(s))); }
  QuadraticForm negated() const { return QuadraticForm(-gram_); }
  /// P^T G P.
  QuadraticForm congruent(const FMatrix& p) const { return QuadraticForm(p.transpose() * gram_ * p); }

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) { return a.gram_ == b.gram_; }

  std::string to_string() const { return gram_.to_string(); }

 private:
  void require_same_field(const QuadraticForm& other) const {
    if (field() != other.field()) fail(ErrorCode::FieldMismatch, "forms over " + field()->name() + " and " + other.field()->name());
  }
  FMatrix gram_;
};

/// P^T * gram * P = diag(entries); P is the congruence certificate.
struct Diagonalization {
  std::vector<Scalar> entries;
  FMatrix basis;
};

/// Symmetric Gaussian elimination. When every remaining diagonal entry is
/// zero, e_k <- e_k + e_j creates the pivot 2*G[k][j] (char != 2).
inline Diagonalization diagonalize(const QuadraticForm& q) {
  FieldRef f = q.field();
  const std::size_t n = q.dim();
  FMatrix g = q.gram();
  FMatrix p = identity(f, n);
  auto add_multiple = [&](std::size_t target, std::size_t source, const Scalar& c) {
    // e_target <- e_target + c * e_source, applied as a congruence
    for (std::size_t r = 0; r < n; ++r) p(r, target) = p(r, target) + c * p(r, source);
    for (std::size_t r = 0; r < n; ++r) g(r, target) = g(r, target) + c * g(r, source);
    for (std::size_t col = 0; col < n; ++col) g(target, col) = g(target, col) + c * g(source, col);
  };
  auto swap_basis = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < n; ++r) std::swap(p(r, a), p(r, b));
    for (std::size_t r = 0; r < n; ++r) std::swap(g(r, a), g(r, b));
    for (std::size_t col = 0; col < n; ++col) std::swap(g(a, col), g(b, col));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (g(k, k).is_zero()) {
      std::size_t j = k + 1;
      while (j < n && g(j, j).is_zero()) ++j;
      if (j < n) {
        swap_basis(k, j);
      } else {
        j = k + 1;
        while (j < n && g(k, j).is_zero()) ++j;
        if (j == n) fail(ErrorCode::DegenerateForm, "form is degenerate: " + q.to_string());
        add_multiple(k, j, f->one());
      }
    }
    const Scalar inv = g(k, k).inverse();
    for (std::size_t j = k + 1; j < n; ++j) {
      if (g(k, j).is_zero()) continue;
      add_multiple(j, k, -(g(k, j) * inv));
    }
  }
  std::vector<Scalar> entries;
  for (std::size_t i = 0; i < n; ++i) {
    if (g(i, i).is_zero()) fail(ErrorCode::DegenerateForm, "form is degenerate: " + q.to_string());
    entries.push_back(g(i, i));
  }
  return {entries, p};
}

// ---------------------------------------------------------------------------
// Places and Hilbert symbols over Q.

struct Place {
  long prime = 0;  // 0 stands for the real place
  static Place real() { return {0}; }
  static Place finite(long p) { return {p}; }
  bool is_real() const { return prime == 0; }
  std::string to_string() const { return is_real() ? "inf" : std::to_string(prime); }
  friend bool operator<(const Place& a, const Place& b) { return a.prime < b.prime; }
  friend bool operator==(const Place& a, const Place& b) { return a.prime == b.prime; }
};

namespace detail {

inline constexpr long kTrialDivisionLimit = 10000000;

inline std::vector<long> prime_factors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<long> out;
  for (long d = 2; n > 1; ++d) {
    if (d > kTrialDivisionLimit) fail(ErrorCode::BoundsExceeded, "integer too large to factor by trial division");
    if (mpz_class(d) * d > n) {
      if (!n.fits_slong_p()) fail(ErrorCode::BoundsExceeded, "prime factor too large");
      out.push_back(n.get_si());
      break;
    }
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  return out;
}

inline int valuation(mpz_class n, long p) {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// Integer in the same square class: num * den.
inline mpz_class square_class_integer(const mpq_class& a) { return a.get_num() * a.get_den(); }

inline mpz_class squarefree_part(const mpq_class& a) {
  mpz_class n = square_class_integer(a);
  const int sign = sgn(n);
  mpz_class out = 1;
  for (long p : prime_factors(n))
    if (valuation(n, p) % 2 == 1) out *= p;
  return sign * out;
}

}  // namespace detail

/// (a, b)_v in {+1, -1}: +1 iff z^2 = a x^2 + b y^2 has a nontrivial
/// solution over the completion of Q at v.
inline int hilbert_symbol(const mpq_class& a, const mpq_class& b, const Place& v) {
  if (sgn(a) == 0 || sgn(b) == 0) fail(ErrorCode::InvalidArgument, "Hilbert symbol of zero");
  if (v.is_real()) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  const long p = v.prime;
  const mpz_class x = detail::square_class_integer(a), y = detail::square_class_integer(b);
  const int alpha = detail::valuation(x, p), beta = detail::valuation(y, p);
  mpz_class u = x, w = y;
  for (int i = 0; i < alpha; ++i) u /= p;
  for (int i = 0; i < beta; ++i) w /= p;
  if (p != 2) {
    const mpz_class pz = p;
    int sign = ((static_cast<long>(alpha) * beta % 2) && ((p - 1) / 2) % 2) ? -1 : 1;
    if (beta % 2) sign *= mpz_legendre(u.get_mpz_t(), pz.get_mpz_t());
    if (alpha % 2) sign *= mpz_legendre(w.get_mpz_t(), pz.get_mpz_t());
    return sign;
  }
  auto mod8 = [](const mpz_class& n) {
    mpz_class r = n % 8;
    if (r < 0) r += 8;
    return r.get_si();
  };
  const long u8 = mod8(u), w8 = mod8(w);
  const long eps_u = ((u8 - 1) / 2) % 2, eps_w = ((w8 - 1) / 2) % 2;
  const long om_u = ((u8 * u8 - 1) / 8) % 2, om_w = ((w8 * w8 - 1) / 8) % 2;
  const long e = eps_u * eps_w + alpha * om_w + beta * om_u;
  return e % 2 ? -1 : 1;
}

/// Places where (a, b)_v can be nontrivial: real, 2, and primes dividing a or b.
inline std::vector<Place> relevant_places(const std::vector<mpq_class>& values) {
  std::set<long> primes{2};
  for (const auto& a : values)
    for (long p : detail::prime_factors(detail::square_class_integer(a))) primes.insert(p);
  std::vector<Place> out{Place::real()};
  for (long p : primes) out.push_back(Place::finite(p));
  return out;
}

// ---------------------------------------------------------------------------
// Witt classes.

struct WittInvariants {
  int dim_parity = 0;
  /// Square-class representative of the signed discriminant.
  Scalar discriminant;
  /// Q only.
  std::optional<long> signature;
  /// Q only: Hasse invariant prod_{i<j} (a_i, a_j)_v per relevant place.
  std::map<long, int> hasse;
};

struct WittClass {
  QuadraticForm anisotropic;
  std::size_t hyperbolic_count = 0;
  /// P with P^T G P = anisotropic (+) hyperbolic_count * H for the form that
  /// was decomposed.
  FMatrix certificate;
  WittInvariants invariants;
  /// How anisotropy of the residue was certified.
  std::string anisotropy_certificate;

  FieldRef field() const { return anisotropic.field(); }
  bool is_zero() const { return anisotropic.dim() == 0; }
};

namespace detail {

inline bool witt_supported(FieldRef f) { return f->is_finite() || f->kind() == Field::Kind::Rationals; }

inline Scalar finite_nonsquare(FieldRef f) {
  for (std::uint64_t i = 1; i < f->order(); ++i) {
    Scalar z = f->element(i);
    if (!is_square(z)) return z;
  }
  fail(ErrorCode::InvalidField, "no non-square in " + f->name());
}

inline Scalar square_class_rep(const Scalar& a) {
  FieldRef f = a.field();
  if (f->kind() == Field::Kind::Rationals) return f->from_rational(mpq_class(squarefree_part(a.rational())));
  if (f->is_finite()) return is_square(a) ? f->one() : finite_nonsquare(f);
  return a;
}

inline std::vector<mpq_class> rationals_of(const std::vector<Scalar>& xs) {
  std::vector<mpq_class> out;
  for (const auto& x : xs) out.push_back(x.rational());
  return out;
}

inline int hasse_invariant(const std::vector<mpq_class>& diag, const Place& v) {
  int s = 1;
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) s *= hilbert_symbol(diag[i], diag[j], v);
  return s;
}

inline long signature_of(const std::vector<mpq_class>& diag) {
  long s = 0;
  for (const auto& a : diag) s += sgn(a) > 0 ? 1 : -1;
  return s;
}

/// Isotropy of a nondegenerate diagonal form over Q by local conditions.
inline bool rational_isotropic(const std::vector<mpq_class>& diag) {
  const std::size_t n = diag.size();
  if (n < 2) return false;
  const long sig = signature_of(diag);
  if (sig == static_cast<long>(n) || sig == -static_cast<long>(n)) return false;
  if (n >= 5) return true;
  mpq_class det = 1;
  for (const auto& a : diag) det *= a;
  const mpq_class disc = (n * (n - 1) / 2) % 2 ? mpq_class(-det) : det;
  if (n == 2) return is_rational_square(-diag[0] * diag[1]);
  for (const auto& v : relevant_places(diag)) {
    if (v.is_real()) continue;
    const int c = hasse_invariant(diag, v);
    if (n == 3) {
      // <a,b,c> isotropic at p iff c_p(q) = (-1,-d)_p
      if (c != hilbert_symbol(-1, -det, v)) return false;
    } else {
      // n == 4: anisotropic at p iff d is a local square and c_p(q) = -(-1,-1)_p
      const bool disc_square = hilbert_symbol(disc, mpq_class(v.prime), v) == 1 &&
                               [&] {
                                 // d square in Q_p: trivial symbol against every unit class
                                 for (long t : {-1L, 3L, 5L, 7L, -3L, -5L, -7L, 2L})
                                   if (hilbert_symbol(disc, mpq_class(t), v) != 1) return false;
                                 if (v.prime != 2) {
                                   mpz_class u = detail::square_class_integer(disc);
                                   if (valuation(u, v.prime) % 2) return false;
                                   for (int i = 0; i < valuation(detail::square_class_integer(disc), v.prime); ++i) u /= v.prime;
                                   return mpz_legendre(u.get_mpz_t(), mpz_class(v.prime).get_mpz_t()) == 1;
                                 }
                                 return true;
                               }();
      if (disc_square && c == -hilbert_symbol(-1, -1, v)) return false;
    }
  }
  return true;
}

inline constexpr long kRationalSearchBound = 60;

// Searches small integer vectors for an isotropic vector of a diagonal form
// over Q; the last used coordinate is solved as a square root.
inline std::optional<std::vector<mpq_class>> rational_isotropic_vector(const std::vector<mpq_class>& diag) {
  const std::size_t n = diag.size();
  if (n == 2) {
    const mpq_class t = -diag[1] / diag[0];
    if (!is_rational_square(t)) return std::nullopt;
    return std::vector<mpq_class>{rational_sqrt(t), 1};
  }
  // try subforms of growing size
  for (std::size_t k = 3; k <= std::min<std::size_t>(n, 4); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::vector<mpq_class> sub;
      for (auto i : idx) sub.push_back(diag[i]);
      if (rational_isotropic(sub)) {
        // free coordinates x_0..x_{k-2}, solve for x_{k-1}
        std::vector<long> x(k - 1, -kRationalSearchBound);
        for (;;) {
          bool nonzero = false;
          mpq_class acc = 0;
          for (std::size_t i = 0; i + 1 < k; ++i) {
            acc += sub[i] * x[i] * x[i];
            nonzero = nonzero || x[i] != 0;
          }
          const mpq_class t = -acc / sub[k - 1];
          if (nonzero && is_rational_square(t)) {
            std::vector<mpq_class> v(n, 0);
            for (std::size_t i = 0; i + 1 < k; ++i) v[idx[i]] = x[i];
            v[idx[k - 1]] = rational_sqrt(t);
            return v;
          }
          std::size_t pos = 0;
          while (pos < x.size() && x[pos] == kRationalSearchBound) x[pos++] = -kRationalSearchBound;
          if (pos == x.size()) break;
          ++x[pos];
        }
      }
      // next combination
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

// Isotropic vector of a diagonal form over a finite field; dimension >= 3
// always has one. For dimension 2 the form <a,b> is isotropic iff -ab is a
// square.
inline std::optional<std::vector<Scalar>> finite_isotropic_vector(const std::vector<Scalar>& diag) {
  FieldRef f = diag[0].field();
  const std::size_t n = diag.size();
  std::vector<Scalar> v(n, f->zero());
  if (n == 2) {
    auto r = square_root(-(diag[1] / diag[0]));
    if (!r) return std::nullopt;
    v[0] = *r;
    v[1] = f->one();
    return v;
  }
  const std::uint64_t q = f->order();
  for (std::uint64_t i = 0; i < q; ++i) {
    const Scalar x = f->element(i);
    const Scalar t = -(diag[0] * x * x + diag[2]) / diag[1];
    if (auto y = square_root(t)) {
      v[0] = x;
      v[1] = *y;
      v[2] = f->one();
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline constexpr std::uint64_t kExhaustiveIsotropyLimit = 10000000;

/// Enumerates projective vectors of a form over a finite field. Returns an
/// isotropic vector, nullopt when none exists, and raises Inconclusive when
/// q^dim exceeds the enumeration limit.
inline std::optional<FMatrix> exhaustive_isotropic_vector(const QuadraticForm& q) {
  FieldRef f = q.field();
  if (!f->is_finite()) fail(ErrorCode::UnsupportedField, "exhaustive search needs a finite field");
  const std::size_t n = q.dim();
  const std::uint64_t order = f->order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > kExhaustiveIsotropyLimit / order) fail(ErrorCode::Inconclusive, "exhaustive isotropy search exceeds 10^7 vectors");
    total *= order;
  }
  // projective normalisation: the last nonzero coordinate is 1
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < lead; ++i) count *= order;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      FMatrix v = zeros(f, n, 1);
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < lead; ++i) {
        v(i, 0) = f->element(rest % order);
        rest /= order;
      }
      v(lead, 0) = f->one();
      if (q.bilinear(v, v).is_zero()) return v;
    }
  }
  return std::nullopt;
}

inline WittInvariants witt_invariants(const QuadraticForm& q) {
  FieldRef f = q.field();
  WittInvariants inv;
  inv.dim_parity = static_cast<int>(q.dim() % 2);
  inv.discriminant = detail::square_class_rep(q.dim() == 0 ? f->one() : q.signed_discriminant());
  if (f->kind() == Field::Kind::Rationals && q.dim() > 0) {
    const auto diag = detail::rationals_of(diagonalize(q).entries);
    inv.signature = detail::signature_of(diag);
    for (const auto& v : relevant_places(diag)) inv.hasse[v.prime] = detail::hasse_invariant(diag, v);
  } else if (f->kind() == Field::Kind::Rationals) {
    inv.signature = 0;
  }
  return inv;
}

/// q ~ anisotropic (+) k*H with an explicit congruence certificate.
inline WittClass witt_decompose(const QuadraticForm& q) {
  FieldRef f = q.field();
  if (!detail::witt_supported(f)) fail(ErrorCode::UnsupportedField, "Witt decomposition over " + f->name());
  if (!q.nondegenerate()) fail(ErrorCode::DegenerateForm, "form is degenerate: " + q.to_string());
  WittClass out;
  out.invariants = witt_invariants(q);

  // Current residual: diagonal entries with basis columns (in the original coordinates).
  Diagonalization dz = diagonalize(q);
  std::vector<Scalar> diag = dz.entries;
  FMatrix basis = dz.basis;
  std::vector<FMatrix> hyperbolic_pairs;

  for (;;) {
    const std::size_t m = diag.size();
    if (m < 2) break;
    std::optional<std::vector<Scalar>> iso;
    if (f->is_finite()) {
      iso = detail::finite_isotropic_vector(diag);
    } else {
      const auto rd = detail::rationals_of(diag);
      if (!detail::rational_isotropic(rd)) break;
      auto v = detail::rational_isotropic_vector(rd);
      if (!v) fail(ErrorCode::Inconclusive, "isotropic over Q but no small isotropic vector found");
      iso = std::vector<Scalar>{};
      for (const auto& x : *v) iso->push_back(f->from_rational(x));
    }
    if (!iso) break;
    // local form D = diag; v isotropic; w = e_i with v_i != 0
    const QuadraticForm local = QuadraticForm::diagonal(f, diag);
    FMatrix v = zeros(f, m, 1);
    std::size_t piv = m;
    for (std::size_t i = 0; i < m; ++i) {
      v(i, 0) = (*iso)[i];
      if (piv == m && !(*iso)[i].is_zero()) piv = i;
    }
    FMatrix w = zeros(f, m, 1);
    w(piv, 0) = f->one();
    w = w.scaled(local.bilinear(v, w).inverse());
    const Scalar qw = local.bilinear(w, w);
    w = w - v.scaled(qw * f->from_int(2).inverse());
    // complement: kernel of [v^T D; w^T D]
    FMatrix constraints = zeros(f, 2, m);
    constraints.set_block(0, 0, (local.gram() * v).transpose());
    constraints.set_block(1, 0, (local.gram() * w).transpose());
    FMatrix comp = kernel(constraints);
    FMatrix pair = zeros(f, m, 2);
    pair.set_block(0, 0, v);
    pair.set_block(0, 1, w);
    hyperbolic_pairs.push_back(basis * pair);
    if (comp.cols() == 0) {
      diag.clear();
      basis = zeros(f, q.dim(), 0);
      break;
    }
    Diagonalization sub = diagonalize(local.congruent(comp));
    diag = sub.entries;
    basis = basis * comp * sub.basis;
  }

  out.anisotropic = QuadraticForm::diagonal(f, diag);
  out.hyperbolic_count = hyperbolic_pairs.size();
  FMatrix cert = zeros(f, q.dim(), q.dim());
  cert.set_block(0, 0, basis);
  for (std::size_t i = 0; i < hyperbolic_pairs.size(); ++i) cert.set_block(0, diag.size() + 2 * i, hyperbolic_pairs[i]);
  out.certificate = cert;
  if (diag.size() <= 1) {
    out.anisotropy_certificate = "dimension <= 1";
  } else if (f->is_finite()) {
    out.anisotropy_certificate = "-ab is a non-square";
  } else {
    out.anisotropy_certificate = "Hasse-Minkowski local invariants";
  }
  return out;
}

/// The form anisotropic (+) k*H represented by a class.
inline QuadraticForm full_form(const WittClass& c) {
  return c.anisotropic.orthogonal_sum(QuadraticForm::hyperbolic(c.field(), c.hyperbolic_count));
}

/// True iff q is zero in W(F).
inline bool witt_trivial(const QuadraticForm& q) {
  FieldRef f = q.field();
  if (!detail::witt_supported(f)) fail(ErrorCode::UnsupportedField, "Witt equality over " + f->name());
  if (q.dim() % 2) return false;
  if (q.dim() == 0) return true;
  if (!q.nondegenerate()) fail(ErrorCode::DegenerateForm, "form is degenerate");
  if (!is_square(q.signed_discriminant())) return false;
  if (f->is_finite()) return true;
  const auto diag = detail::rationals_of(diagonalize(q).entries);
  if (detail::signature_of(diag) != 0) return false;
  // compare Hasse invariants with those of (n/2) H = <1,-1,...>
  std::vector<mpq_class> split;
  for (std::size_t i = 0; i < q.dim() / 2; ++i) {
    split.push_back(1);
    split.push_back(-1);
  }
  for (const auto& v : relevant_places(diag))
    if (detail::hasse_invariant(diag, v) != detail::hasse_invariant(split, v)) return false;
  return true;
}

inline bool witt_equal(const QuadraticForm& a, const QuadraticForm& b) {
  if (a.field() != b.field()) fail(ErrorCode::FieldMismatch, "Witt comparison across fields");
  return witt_trivial(a.orthogonal_sum(b.negated()));
}

inline bool witt_equal(const WittClass& a, const WittClass& b) { return witt_equal(a.anisotropic, b.anisotropic); }

inline WittClass witt_add(const WittClass& a, const WittClass& b) {
  if (a.field() != b.field()) fail(ErrorCode::FieldMismatch, "Witt sum across fields");
  return witt_decompose(full_form(a).orthogonal_sum(full_form(b)));
}

inline WittClass witt_neg(const WittClass& a) { return witt_decompose(full_form(a).negated()); }

inline WittClass witt_mul(const WittClass& a, const WittClass& b) {
  if (a.field() != b.field()) fail(ErrorCode::FieldMismatch, "Witt product across fields");
  return witt_decompose(full_form(a).tensor(full_form(b)));
}

inline WittClass witt_zero(FieldRef f) { return witt_decompose(QuadraticForm::zero_dimensional(f)); }
inline WittClass witt_one(FieldRef f) { return witt_decompose(QuadraticForm::diagonal(f, std::vector<long>{1})); }

}  // namespace wittforge
