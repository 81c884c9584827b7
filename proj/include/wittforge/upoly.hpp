#pragma once

// Univariate factorization over the coefficient fields of field.hpp, used to
// split E (x)_F L into a product of fields.

#include <random>
#include <vector>

#include "wittforge/field.hpp"

namespace wittforge {

namespace poly {

inline Coeffs derivative(const Coeffs& a) {
  Coeffs d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * a[i].field()->from_int(static_cast<long>(i)));
  trim(d);
  return d;
}

inline Coeffs lift(const Coeffs& a, FieldRef target) {
  Coeffs r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(target->embed(c));
  trim(r);
  return r;
}

inline Coeffs powmod(Coeffs base, const mpz_class& e, const Coeffs& m) {
  Coeffs result = mod(Coeffs{m[0].field()->one()}, m);
  base = mod(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, base, m);
  }
  return result;
}

inline Coeffs product(const std::vector<Coeffs>& factors, FieldRef f) {
  Coeffs r{f->one()};
  for (const auto& g : factors) r = mul(r, g);
  return r;
}

}  // namespace poly

namespace detail {

inline constexpr std::uint64_t kMaxFactorFieldOrder = 1000000;

// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<std::pair<poly::Coeffs, int>> distinct_degree(poly::Coeffs f) {
  FieldRef k = f[0].field();
  const std::uint64_t q = k->order();
  const poly::Coeffs x{k->zero(), k->one()};
  std::vector<std::pair<poly::Coeffs, int>> out;
  poly::Coeffs h = poly::mod(x, f);
  for (int d = 1; 2 * d <= poly::degree(f); ++d) {
    h = poly::powmod(h, q, f);
    poly::Coeffs g = poly::gcd(poly::sub(h, x), f);
    if (poly::degree(g) > 0) {
      out.emplace_back(g, d);
      f = poly::divmod(f, g).first;
      h = poly::mod(h, f);
    }
  }
  if (poly::degree(f) > 0) out.emplace_back(poly::monic(f), poly::degree(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting, odd characteristic.
inline void equal_degree(const poly::Coeffs& f, int d, std::mt19937_64& rng, std::vector<poly::Coeffs>& out) {
  if (poly::degree(f) == d) {
    out.push_back(poly::monic(f));
    return;
  }
  FieldRef k = f[0].field();
  const std::uint64_t q = k->order();
  mpz_class qd = 1;
  for (int i = 0; i < d; ++i) qd *= static_cast<unsigned long>(q);
  const mpz_class exponent = (qd - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);
  for (;;) {
    poly::Coeffs a;
    for (int i = 0; i < poly::degree(f); ++i) a.push_back(k->element(pick(rng)));
    poly::trim(a);
    if (poly::degree(a) <= 0) continue;
    poly::Coeffs g = poly::gcd(a, f);
    if (poly::degree(g) > 0 && poly::degree(g) < poly::degree(f)) {
      equal_degree(g, d, rng, out);
      equal_degree(poly::divmod(f, g).first, d, rng, out);
      return;
    }
    poly::Coeffs b = poly::sub(poly::powmod(a, exponent, f), poly::Coeffs{k->one()});
    g = poly::gcd(b, f);
    if (poly::degree(g) > 0 && poly::degree(g) < poly::degree(f)) {
      equal_degree(g, d, rng, out);
      equal_degree(poly::divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

inline std::vector<poly::Coeffs> factor_finite(const poly::Coeffs& f) {
  if (f[0].field()->order() > kMaxFactorFieldOrder) fail(ErrorCode::FactorizationUnsupported, "field too large for factorization: " + f[0].field()->name());
  std::mt19937_64 rng(0x5eed);
  std::vector<poly::Coeffs> out;
  for (auto& [g, d] : distinct_degree(f)) equal_degree(g, d, rng, out);
  return out;
}

inline std::vector<poly::Coeffs> factor_rational(poly::Coeffs f) {
  FieldRef q = f[0].field();
  std::vector<poly::Coeffs> out;
  for (const auto& r : rational_roots(f)) {
    poly::Coeffs lin{q->from_rational(-r), q->one()};
    out.push_back(lin);
    f = poly::divmod(f, lin).first;
  }
  if (poly::degree(f) > 3) fail(ErrorCode::FactorizationUnsupported, "root-free factor of degree > 3 over Q: " + poly::to_string(f));
  if (poly::degree(f) > 0) out.push_back(f);
  return out;
}

inline std::vector<poly::Coeffs> factor_quadratic_or_less(const poly::Coeffs& f) {
  FieldRef k = f[0].field();
  if (poly::degree(f) == 1) return {f};
  if (poly::degree(f) != 2) fail(ErrorCode::FactorizationUnsupported, "only degree <= 2 factorization over " + k->name());
  const Scalar disc = f[1] * f[1] - k->from_int(4) * f[0];
  std::optional<Scalar> root;
  if (!is_rational_square(rational_norm(disc))) {
    root = std::nullopt;
  } else if (detail::is_quadratic_number_field(k)) {
    root = square_root(disc);
  } else {
    fail(ErrorCode::FactorizationUnsupported, "no square-root test available over " + k->name());
  }
  if (!root) return {f};
  const Scalar half = k->from_int(2).inverse();
  const Scalar r1 = (-f[1] + *root) * half, r2 = (-f[1] - *root) * half;
  return {poly::Coeffs{-r1, k->one()}, poly::Coeffs{-r2, k->one()}};
}

}  // namespace detail

/// Monic irreducible factors over L of a monic squarefree polynomial whose
/// coefficients lie in a subfield of L. The factors multiply back to the
/// input exactly. Raises FactorizationUnsupported outside the feasible regime.
inline std::vector<poly::Coeffs> factor_over(const poly::Coeffs& m, FieldRef target) {
  if (m.empty()) fail(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
  poly::Coeffs f = poly::lift(m, target);
  if (!f.back().is_one()) fail(ErrorCode::InvalidArgument, "polynomial must be monic");
  if (poly::degree(f) == 0) return {};
  if (poly::degree(poly::gcd(f, poly::derivative(f))) > 0) fail(ErrorCode::InvalidArgument, "polynomial is not squarefree over " + target->name());
  std::vector<poly::Coeffs> out;
  if (target->is_finite()) {
    out = detail::factor_finite(f);
  } else if (target->kind() == Field::Kind::Rationals) {
    out = detail::factor_rational(f);
  } else {
    out = detail::factor_quadratic_or_less(f);
  }
  std::sort(out.begin(), out.end(), [](const poly::Coeffs& a, const poly::Coeffs& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return poly::to_string(a) < poly::to_string(b);
  });
  return out;
}

}  // namespace wittforge
