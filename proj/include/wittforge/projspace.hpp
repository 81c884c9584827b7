#pragma once

// Cohomology of O(m) on P^r from the Cech complex of the standard cover
// {x_i != 0}. A Laurent monomial x^a of degree m lies in O(U_J) exactly when
// its negative support N = {i : a_i < 0} is contained in J, so its Cech
// subcomplex is the cochain complex of the simplices J containing N. That
// complex depends only on N and is evaluated over the query field.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wittforge/field.hpp"
#include "wittforge/matrix.hpp"

namespace wittforge {

inline constexpr int kMaxProjectiveDimension = 6;
inline constexpr int kMaxProjectiveTwist = 24;
inline constexpr std::size_t kMaxWitnesses = 16;

struct CohomologyReport {
  int r = 0;
  int m = 0;
  FieldRef field = nullptr;
  /// h^0 .. h^r by the monomial decomposition.
  std::vector<std::uint64_t> dims;
  /// h^0 .. h^r from C(m+r, r) and C(-m-1, r).
  std::vector<std::uint64_t> closed_form;
  bool agrees = false;
  /// Degree i -> up to kMaxWitnesses contributing monomials.
  std::map<int, std::vector<std::vector<int>>> witnesses;
  /// Negative-support pattern (bitmask) -> cohomology of its Cech subcomplex.
  std::map<unsigned, std::vector<std::size_t>> pattern_cohomology;

  bool all_zero() const {
    for (auto d : dims)
      if (d != 0) return false;
    return true;
  }
};

inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::uint64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return out;
}

inline int canonical_twist(int r) {
  if (r < 1) fail(ErrorCode::InvalidArgument, "P^r needs r >= 1");
  return -r - 1;
}

namespace detail {

/// Cohomology of the cochain complex C^p = span{J : N in J, |J| = p + 1}
/// with the alternating coboundary, over `f`.
inline std::vector<std::size_t> cech_pattern_cohomology(int r, unsigned pattern, FieldRef f) {
  const int n = r + 1;
  std::vector<std::vector<unsigned>> by_degree(static_cast<std::size_t>(n));
  for (unsigned j = 1; j < (1U << n); ++j)
    if ((j & pattern) == pattern) by_degree[static_cast<std::size_t>(__builtin_popcount(j) - 1)].push_back(j);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n), 0);  // rank of delta^p: C^p -> C^{p+1}
  for (int p = 0; p + 1 < n; ++p) {
    const auto& src = by_degree[p];
    const auto& dst = by_degree[p + 1];
    if (src.empty() || dst.empty()) continue;
    std::map<unsigned, std::size_t> index;
    for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
    FMatrix m = zeros(f, dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (int v = 0; v < n; ++v) {
        if (src[c] & (1U << v)) continue;
        const unsigned target = src[c] | (1U << v);
        // sign (-1)^(position of v in the sorted target)
        const int position = __builtin_popcount(target & ((1U << v) - 1));
        m(index.at(target), c) = f->from_int(position % 2 ? -1 : 1);
      }
    ranks[p] = rank(m);
  }
  std::vector<std::size_t> h(static_cast<std::size_t>(n), 0);
  for (int p = 0; p < n; ++p) {
    const std::size_t in = p > 0 ? ranks[p - 1] : 0;
    h[p] = by_degree[p].size() - ranks[p] - in;
  }
  return h;
}

/// Calls `visit` on every exponent vector of length n with sum m whose
/// negative support is exactly `pattern`; the pattern must be empty or full.
template <class Visit>
void enumerate_pattern(int n, int m, unsigned pattern, Visit&& visit) {
  std::vector<int> a(static_cast<std::size_t>(n));
  const bool negative = pattern != 0;
  // write a_i = c_i (pattern empty) or a_i = -1 - c_i (pattern full), c_i >= 0
  const int total = negative ? -m - n : m;
  if (total < 0) return;
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      a[pos] = negative ? -1 - left : left;
      visit(a);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      a[pos] = negative ? -1 - c : c;
      rec(pos + 1, left - c);
    }
  };
  rec(0, total);
}

}  // namespace detail

inline CohomologyReport cohomology(int r, int m, FieldRef field) {
  if (r < 1 || r > kMaxProjectiveDimension) fail(ErrorCode::BoundsExceeded, "P^r supported for 1 <= r <= 6");
  if (m < -kMaxProjectiveTwist || m > kMaxProjectiveTwist) fail(ErrorCode::BoundsExceeded, "twist m must satisfy |m| <= 24");
  CohomologyReport rep;
  rep.r = r;
  rep.m = m;
  rep.field = field;
  rep.dims.assign(static_cast<std::size_t>(r + 1), 0);
  const int n = r + 1;
  const unsigned full = (1U << n) - 1;
  for (unsigned pattern = 0; pattern <= full; ++pattern) {
    const auto h = detail::cech_pattern_cohomology(r, pattern, field);
    rep.pattern_cohomology[pattern] = h;
    bool nonzero = false;
    for (auto x : h) nonzero = nonzero || x != 0;
    if (!nonzero) continue;
    if (pattern != 0 && pattern != full)
      fail(ErrorCode::InvalidArgument, "mixed support pattern with nonzero Cech cohomology");
    detail::enumerate_pattern(n, m, pattern, [&](const std::vector<int>& a) {
      for (int i = 0; i <= r; ++i) {
        if (h[i] == 0) continue;
        rep.dims[i] += h[i];
        auto& w = rep.witnesses[i];
        if (w.size() < kMaxWitnesses) w.push_back(a);
      }
    });
  }
  rep.closed_form.assign(static_cast<std::size_t>(r + 1), 0);
  if (m >= 0) rep.closed_form[0] = binomial(m + r, r);
  if (m <= -r - 1) rep.closed_form[r] = binomial(-m - 1, r);
  rep.agrees = rep.dims == rep.closed_form;
  return rep;
}

inline std::string monomial_string(const std::vector<int>& a) {
  static const char* names[] = {"x", "y", "z", "w", "u", "v", "t"};
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += a.size() <= 7 ? names[i] : "x" + std::to_string(i);
    if (a[i] != 1) s += "^" + std::to_string(a[i]);
  }
  return s.empty() ? "1" : s;
}

struct PhiRCertificate {
  int r = 0;
  /// The twist -(r+1)/2 carrying phi_r.
  int twist = 0;
  /// canonical_twist(r) = 2 * twist.
  int canonical = 0;
  CohomologyReport cohomology;
  /// Rf_* O(twist) = 0, hence f_*(phi_r) = 0.
  bool pushforward_zero = false;
};

inline PhiRCertificate pushforward_phi_r(int r, FieldRef field) {
  if (r < 1) fail(ErrorCode::InvalidArgument, "P^r needs r >= 1");
  if (r % 2 == 0) fail(ErrorCode::ParityError, "r + 1 is odd: no line bundle squares to O(-r-1), so phi_r has no push-forward");
  PhiRCertificate c;
  c.r = r;
  c.twist = -(r + 1) / 2;
  c.canonical = canonical_twist(r);
  c.cohomology = cohomology(r, c.twist, field);
  c.pushforward_zero = c.cohomology.all_zero() && c.cohomology.agrees && 2 * c.twist == c.canonical;
  return c;
}

}  // namespace wittforge
