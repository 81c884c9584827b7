#pragma once

// Koszul complexes of a section s = (s_1, ..., s_d) of the free module
// F = R^d, with the duality form theta_F, the exterior product delta_F, the
// top-degree projection sigma_F and the trace diagram of a regular embedding.
//
// Degree i of Kos_F is Lambda^i F^vee with basis e_I, I running over the
// i-subsets of {1..d} in lexicographic order, and
//   d(e_I) = sum_r (-1)^r s_{I_r} e_{I \ I_r}    (r counted from 0).

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "wittforge/homalg.hpp"
#include "wittforge/polynomial.hpp"

namespace wittforge {

using Subset = std::vector<int>;

/// i-subsets of {0..d-1} in lexicographic order.
inline std::vector<Subset> subsets(int d, int i) {
  std::vector<Subset> out;
  if (i < 0 || i > d) return out;
  Subset s(static_cast<std::size_t>(i));
  for (int k = 0; k < i; ++k) s[k] = k;
  for (;;) {
    out.push_back(s);
    int k = i - 1;
    while (k >= 0 && s[k] == d - i + k) --k;
    if (k < 0) break;
    ++s[k];
    for (int j = k + 1; j < i; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

inline std::size_t subset_index(int d, const Subset& s) {
  const auto all = subsets(d, static_cast<int>(s.size()));
  return static_cast<std::size_t>(std::find(all.begin(), all.end(), s) - all.begin());
}

/// Sign of the shuffle putting I followed by J into increasing order
/// (0 when they overlap).
inline int shuffle_sign(const Subset& i, const Subset& j) {
  int inversions = 0;
  for (int a : i)
    for (int b : j) {
      if (a == b) return 0;
      if (a > b) ++inversions;
    }
  return parity_sign(inversions);
}

struct KoszulDatum {
  Ring ring;
  std::vector<Poly> section;
  /// Name of the determinant twist Delta_F.
  std::string twist = "Delta_F";

  KoszulDatum() = default;
  KoszulDatum(Ring r, std::vector<Poly> s, std::string tw = "Delta_F")
      : ring(std::move(r)), section(std::move(s)), twist(std::move(tw)) {
    if (section.empty()) fail(ErrorCode::InvalidArgument, "Koszul datum needs rank d >= 1");
    for (const auto& p : section) {
      if (p.field() != ring.field || p.nvars() != ring.nvars()) fail(ErrorCode::RingMismatch, "section entry outside " + ring.name());
      if (p.is_zero()) fail(ErrorCode::InvalidArgument, "section entries must be nonzero");
    }
  }

  /// The section (x_1, ..., x_d) of coordinate functions.
  static KoszulDatum coordinates(FieldRef f, int d) {
    static const char* names[] = {"x", "y", "z", "w", "u", "v", "p", "q"};
    if (d < 1 || d > 8) fail(ErrorCode::BoundsExceeded, "coordinate sections support 1 <= d <= 8");
    Ring r{f, {}};
    for (int i = 0; i < d; ++i) r.vars.push_back(names[i]);
    std::vector<Poly> s;
    for (int i = 0; i < d; ++i) s.push_back(Poly::variable(r, static_cast<std::size_t>(i)));
    return KoszulDatum(r, s);
  }

  int rank() const { return static_cast<int>(section.size()); }

  /// The datum for entries [from, from + count).
  KoszulDatum slice(int from, int count) const {
    std::vector<Poly> s(section.begin() + from, section.begin() + from + count);
    return KoszulDatum(ring, s, twist);
  }

  DualityDatum duality() const { return {twist + "^vee", rank()}; }
};

inline ChainComplex koszul_complex(const KoszulDatum& k) {
  const int d = k.rank();
  std::map<int, std::size_t> ranks;
  std::map<int, PMatrix> diffs;
  for (int i = 0; i <= d; ++i) ranks[i] = subsets(d, i).size();
  for (int i = 1; i <= d; ++i) {
    const auto src = subsets(d, i);
    PMatrix m = pzeros(k.ring, ranks[i - 1], ranks[i]);
    for (std::size_t c = 0; c < src.size(); ++c)
      for (int r = 0; r < i; ++r) {
        Subset rest = src[c];
        rest.erase(rest.begin() + r);
        m(subset_index(d, rest), c) = m(subset_index(d, rest), c) + k.section[src[c][r]].scaled(k.ring.field->from_int(parity_sign(r)));
      }
    diffs[i] = m;
  }
  return ChainComplex(k.ring, ranks, diffs);
}

/// A complex with a form phi: C -> D(C) and its measured symmetry sign.
struct SymmetricSpace {
  ChainComplex carrier;
  DualityDatum duality;
  ChainMap form;
  int symmetry_sign = 0;
  std::string label;

  SymmetricSpace() = default;
  SymmetricSpace(ChainComplex c, DualityDatum dd, ChainMap phi, std::string lbl = "")
      : carrier(std::move(c)), duality(std::move(dd)), form(std::move(phi)), label(std::move(lbl)) {
    if (form.source() != carrier || form.target() != dualize(carrier, duality))
      fail(ErrorCode::InvalidArgument, "form must map the carrier to its dual");
    if (!form.is_chain_map()) fail(ErrorCode::NotAChainMap, "form is not a chain map");
    auto s = wittforge::symmetry_sign(form, duality);
    if (!s) fail(ErrorCode::InvalidArgument, "form is neither symmetric nor antisymmetric");
    symmetry_sign = *s;
  }
};

/// theta(e_I)(e_{I^c}) = (-1)^(sum of the elements of I, counted from 1).
inline ChainMap theta_map(const KoszulDatum& k) {
  const int d = k.rank();
  const ChainComplex kos = koszul_complex(k);
  const ChainComplex dual = dualize(kos, k.duality());
  std::map<int, PMatrix> comps;
  for (int i = 0; i <= d; ++i) {
    const auto src = subsets(d, i);
    PMatrix m = pzeros(k.ring, dual.rank(i), kos.rank(i));
    for (std::size_t c = 0; c < src.size(); ++c) {
      Subset comp;
      int sum = 0;
      for (int x = 0; x < d; ++x) {
        if (std::find(src[c].begin(), src[c].end(), x) == src[c].end()) comp.push_back(x);
        else sum += x + 1;
      }
      m(subset_index(d, comp), c) = sign_poly(k.ring, parity_sign(sum));
    }
    comps[i] = m;
  }
  return ChainMap(kos, dual, comps);
}

inline SymmetricSpace koszul_form(const KoszulDatum& k) {
  return SymmetricSpace(koszul_complex(k), k.duality(), theta_map(k), "theta_F");
}

/// Kos (x) Kos -> Kos, e_I (x) e_J -> shuffle(I,J) e_{I u J}.
inline ChainMap delta_map(const KoszulDatum& k) {
  const int d = k.rank();
  const ChainComplex kos = koszul_complex(k);
  const ChainComplex kk = tensor(kos, kos);
  std::map<int, PMatrix> comps;
  for (int n : kk.degrees()) {
    if (n > d) continue;
    PMatrix m = pzeros(k.ring, kos.rank(n), kk.rank(n));
    for (const auto& [i, off] : tensor_offsets(kos, kos, n)) {
      const auto left = subsets(d, i), right = subsets(d, n - i);
      for (std::size_t a = 0; a < left.size(); ++a)
        for (std::size_t b = 0; b < right.size(); ++b) {
          const int s = shuffle_sign(left[a], right[b]);
          if (s == 0) continue;
          Subset u = left[a];
          u.insert(u.end(), right[b].begin(), right[b].end());
          std::sort(u.begin(), u.end());
          m(subset_index(d, u), off + a * right.size() + b) = sign_poly(k.ring, s);
        }
    }
    comps[n] = m;
  }
  return ChainMap(kk, kos, comps);
}

/// Kos -> Delta^vee[d], the identity on the top term.
inline ChainMap sigma_map(const KoszulDatum& k) {
  const ChainComplex kos = koszul_complex(k);
  return ChainMap(kos, dualizing_object(k.ring, k.duality()), {{k.rank(), pidentity(k.ring, 1)}});
}

/// R -> Kos, the unit e_empty in degree 0.
inline ChainMap koszul_unit(const KoszulDatum& k) {
  return ChainMap(ChainComplex::line(k.ring, 0), koszul_complex(k), {{0, pidentity(k.ring, 1)}});
}

/// Kos -> Hom(Kos, Kos (x) Kos) -> Hom(Kos, Kos) -> Hom(Kos, Delta^vee[d]).
inline ChainMap x_map(const KoszulDatum& k) {
  const ChainComplex kos = koszul_complex(k);
  const ChainMap unit = adjunction_unit(kos, kos);
  const ChainMap via_delta = postcompose(kos, delta_map(k));
  const ChainMap via_sigma = postcompose(kos, sigma_map(k));
  return compose(via_sigma, compose(via_delta, unit));
}

// ---------------------------------------------------------------------------
// Products of forms and the splitting F = F1 (+) F2.

/// The form phi1 (x) phi2 on A1 (x) A2 with shift d1 + d2:
/// (phi1 (x) phi2)(a1 (x) a2)(b1 (x) b2) = (-1)^(|a2| d1) phi1(a1)(b1) phi2(a2)(b2).
inline ChainMap tensor_forms(const ChainMap& phi1, int d1, const ChainMap& phi2, int d2, const std::string& twist) {
  const ChainComplex& a1 = phi1.source();
  const ChainComplex& a2 = phi2.source();
  const ChainComplex a = tensor(a1, a2);
  const DualityDatum dd{twist, d1 + d2};
  const ChainComplex dual = dualize(a, dd);
  const Ring& r = a.ring();
  const int d = d1 + d2;
  std::map<int, PMatrix> comps;
  for (int n : a.degrees()) {
    PMatrix m = pzeros(r, dual.rank(n), a.rank(n));
    const auto src = tensor_offsets(a1, a2, n), dst = tensor_offsets(a1, a2, d - n);
    for (const auto& [i, soff] : src) {
      const int j = n - i;
      const int bi = d1 - i, bj = d2 - j;
      if (!dst.count(bi) || a2.rank(bj) == 0) continue;
      const PMatrix p1 = phi1.component(i), p2 = phi2.component(j);
      const Poly s = sign_poly(r, parity_sign(static_cast<long>(j) * d1));
      const std::size_t ra2 = a2.rank(j), rb2 = a2.rank(bj);
      for (std::size_t x1 = 0; x1 < a1.rank(i); ++x1)
        for (std::size_t x2 = 0; x2 < ra2; ++x2)
          for (std::size_t y1 = 0; y1 < a1.rank(bi); ++y1)
            for (std::size_t y2 = 0; y2 < rb2; ++y2) {
              const Poly v = p1(y1, x1) * p2(y2, x2);
              if (v.is_zero()) continue;
              m(dst.at(bi) + y1 * rb2 + y2, soff + x1 * ra2 + x2) = v * s;
            }
    }
    comps[n] = m;
  }
  return ChainMap(a, dual, comps);
}

/// Kos_{F1} (x) Kos_{F2} -> Kos_F, e_I (x) e_J -> e_{I u (J + d1)}.
inline ChainMap split_isomorphism(const KoszulDatum& k, int d1) {
  const int d = k.rank();
  if (d1 < 1 || d1 >= d) fail(ErrorCode::InvalidArgument, "split point must satisfy 1 <= d1 < d");
  const KoszulDatum k1 = k.slice(0, d1), k2 = k.slice(d1, d - d1);
  const ChainComplex kos1 = koszul_complex(k1), kos2 = koszul_complex(k2);
  const ChainComplex src = tensor(kos1, kos2), tgt = koszul_complex(k);
  std::map<int, PMatrix> comps;
  for (int n : src.degrees()) {
    PMatrix m = pzeros(k.ring, tgt.rank(n), src.rank(n));
    for (const auto& [i, off] : tensor_offsets(kos1, kos2, n)) {
      const auto left = subsets(d1, i), right = subsets(d - d1, n - i);
      for (std::size_t a = 0; a < left.size(); ++a)
        for (std::size_t b = 0; b < right.size(); ++b) {
          Subset u = left[a];
          for (int x : right[b]) u.push_back(x + d1);
          m(subset_index(d, u), off + a * right.size() + b) = Poly::one(k.ring);
        }
    }
    comps[n] = m;
  }
  return ChainMap(src, tgt, comps);
}

/// Pull back of a form phi on B along g: A -> B, i.e. D(g) o phi o g.
inline ChainMap pullback_form(const ChainMap& phi, const ChainMap& g, const DualityDatum& dd) {
  return compose(dualize(g, dd), compose(phi, g));
}

struct MultiplicativityReport {
  int d1 = 0;
  int d2 = 0;
  bool iso_is_chain_isomorphism = false;
  /// theta_F pulled back along the split isomorphism equals theta_{F1} (x) theta_{F2}.
  bool theta_multiplicative = false;
  /// The same square with x_F, x_{F1}, x_{F2}.
  bool xmap_multiplicative = false;
};

inline MultiplicativityReport multiplicativity_check(const KoszulDatum& k, int d1, bool include_xmap = true) {
  const int d = k.rank();
  const KoszulDatum k1 = k.slice(0, d1), k2 = k.slice(d1, d - d1);
  const ChainMap iso = split_isomorphism(k, d1);
  MultiplicativityReport r;
  r.d1 = d1;
  r.d2 = d - d1;
  r.iso_is_chain_isomorphism = iso.is_chain_map() && iso.is_degreewise_isomorphism();
  const ChainMap lhs = pullback_form(theta_map(k), iso, k.duality());
  r.theta_multiplicative = lhs == tensor_forms(theta_map(k1), d1, theta_map(k2), d - d1, k.duality().twist);
  if (include_xmap) {
    const ChainMap xl = pullback_form(x_map(k), iso, k.duality());
    r.xmap_multiplicative = xl == tensor_forms(x_map(k1), d1, x_map(k2), d - d1, k.duality().twist);
  }
  return r;
}

/// A sub-complex L -> C certifying that a symmetric space is metabolic:
/// D(i) o phi o i = 0 and 0 -> L -> C -> D(L) -> 0 is exact in every degree.
struct LagrangianCertificate {
  ChainMap inclusion;
  bool isotropic = false;
  bool exact = false;
};

inline LagrangianCertificate check_lagrangian(const SymmetricSpace& s, const ChainMap& inclusion) {
  LagrangianCertificate c;
  c.inclusion = inclusion;
  const ChainMap restricted = pullback_form(s.form, inclusion, s.duality);
  c.isotropic = restricted == zero_map(restricted.source(), restricted.target());
  const ChainMap to_dual = compose(dualize(inclusion, s.duality), s.form);
  c.exact = true;
  const Ring& r = s.carrier.ring();
  for (int n : s.carrier.degrees()) {
    const FMatrix i_n = to_fmatrix(r, inclusion.component(n));
    const FMatrix p_n = to_fmatrix(r, to_dual.component(n));
    const std::size_t dim = s.carrier.rank(n);
    // injective i, surjective p, im i = ker p
    const std::size_t ri = rank(i_n), rp = rank(p_n);
    if (ri != i_n.cols() || rp != p_n.rows() || ri + rp != dim || !(p_n * i_n).is_zero()) c.exact = false;
  }
  return c;
}

struct SplitFactorization {
  int d1 = 0;
  MultiplicativityReport multiplicativity;
  /// Kos_{L_1} equals cone(s_1: R -> R) as complexes.
  bool cone_identified = false;
  /// Lagrangian Kos_{F'} (x) R inside Kos_{F'} (x) Kos_{L_1} (just R for d = 1).
  LagrangianCertificate lagrangian;
};

/// F = F' (+) L_1 with s = (s', s_1): the last entry is split off.
inline SplitFactorization split_factorization(const KoszulDatum& k) {
  const int d = k.rank();
  SplitFactorization out;
  out.d1 = d - 1;
  const KoszulDatum last = k.slice(d - 1, 1);
  PMatrix s1 = pzeros(k.ring, 1, 1);
  s1(0, 0) = last.section[0];
  const ChainComplex line = ChainComplex::line(k.ring, 0);
  out.cone_identified = cone(ChainMap(line, line, {{0, s1}})).complex == koszul_complex(last);

  // the Lagrangian R (degree 0) of the length-one factor
  const ChainComplex kos_last = koszul_complex(last);
  const ChainMap lag_last(line, kos_last, {{0, pidentity(k.ring, 1)}});
  if (d == 1) {
    out.multiplicativity.iso_is_chain_isomorphism = true;
    out.multiplicativity.theta_multiplicative = true;
    out.multiplicativity.xmap_multiplicative = x_map(k) == theta_map(k);
    out.lagrangian = check_lagrangian(koszul_form(k), lag_last);
    return out;
  }
  out.multiplicativity = multiplicativity_check(k, d - 1, d <= 3);
  const KoszulDatum head = k.slice(0, d - 1);
  const ChainMap iso = split_isomorphism(k, d - 1);
  const ChainMap lag_in_product = tensor(identity_map(koszul_complex(head)), lag_last);
  // Kos_{F'} (x) R -> Kos_{F'} (x) Kos_{L_1} -> Kos_F
  const ChainMap into_kos = compose(iso, lag_in_product);
  out.lagrangian = check_lagrangian(koszul_form(k), into_kos);
  return out;
}

// ---------------------------------------------------------------------------
// Regularity and the trace diagram.

struct ExactnessCertificate {
  int bound = 0;
  /// (homological degree >= 1, internal degree) -> dim H of Kos.
  std::map<std::pair<int, int>, std::size_t> homology;
  bool exact = true;
  /// First nonzero group when not exact.
  std::string witness;
};

/// Graded exactness of the augmented Koszul complex up to internal degree
/// `bound`. H_0(Kos) = R/(s) is the augmentation target, so exactness of the
/// augmented complex is the vanishing of H_i(Kos) for i >= 1.
inline ExactnessCertificate koszul_exactness(const KoszulDatum& k, int bound) {
  ExactnessCertificate c;
  c.bound = bound;
  for (const auto& [key, dim] : graded_homology_dims(koszul_complex(k), bound)) {
    if (key.first < 1) continue;
    c.homology[key] = dim;
    if (dim != 0 && c.exact) {
      c.exact = false;
      c.witness = "H_" + std::to_string(key.first) + " in internal degree " + std::to_string(key.second) + " has dimension " + std::to_string(dim);
    }
  }
  return c;
}

inline void require_regular(const KoszulDatum& k, int bound) {
  const auto c = koszul_exactness(k, bound);
  if (!c.exact) fail(ErrorCode::NotRegularSequence, "section is not regular: " + c.witness);
}

/// Chain-level data of the trace f_* f^! O_X -> O_X.
struct TraceDiagram {
  /// (Kos (x) Delta)[-d]: Lambda^{d-i} F in degree i - d, a free resolution of
  /// f_* f^! O_X = f_* f^* Delta [-d].
  ChainComplex top;
  /// The middle row without its augmentation term: F -> ... -> Delta in
  /// degrees 0 .. -(d-1); its augmentation is Delta -> Delta / (s) Delta in degree -d.
  ChainComplex middle;
  /// O_X -> middle, the component s into F.
  ChainMap down;
  /// top -> O_X, the identity in degree 0.
  ChainMap trace;
  /// h: top_{-j} -> middle_{1-j}, (-1)^(j+1) times the identity, with d h + h d = down o trace on
  /// every degree of the free part; in degree -d the difference is the
  /// augmentation, which is the displayed identity onto f_* f^* Delta.
  std::map<int, PMatrix> homotopy;
  bool homotopy_verified = false;
  ExactnessCertificate regularity;
};

inline TraceDiagram trace_diagram(const KoszulDatum& k, int bound) {
  const int d = k.rank();
  TraceDiagram t;
  t.regularity = koszul_exactness(k, bound);
  if (!t.regularity.exact) fail(ErrorCode::NotRegularSequence, "section is not regular: " + t.regularity.witness);
  const Ring& r = k.ring;

  // wedge with s: Lambda^j F -> Lambda^{j+1} F, e_J -> sum_x s_x e_x ^ e_J
  auto wedge = [&](int j) {
    const auto src = subsets(d, j), dst = subsets(d, j + 1);
    PMatrix m = pzeros(r, dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (int x = 0; x < d; ++x) {
        const int s = shuffle_sign({x}, src[c]);
        if (s == 0) continue;
        Subset u = src[c];
        u.push_back(x);
        std::sort(u.begin(), u.end());
        m(subset_index(d, u), c) = m(subset_index(d, u), c) + k.section[x].scaled(r.field->from_int(s));
      }
    return m;
  };
  // top: Lambda^j F in degree -j, j = 0..d
  std::map<int, std::size_t> tr;
  std::map<int, PMatrix> td;
  for (int j = 0; j <= d; ++j) tr[-j] = subsets(d, j).size();
  for (int j = 0; j < d; ++j) td[-j] = wedge(j);
  t.top = ChainComplex(r, tr, td);
  // middle: Lambda^j F in degree 1 - j, j = 1..d
  std::map<int, std::size_t> mr;
  std::map<int, PMatrix> md;
  for (int j = 1; j <= d; ++j) mr[1 - j] = subsets(d, j).size();
  for (int j = 1; j < d; ++j) md[1 - j] = wedge(j);
  t.middle = ChainComplex(r, mr, md);
  const ChainComplex ox = ChainComplex::line(r, 0);
  t.down = ChainMap(ox, t.middle, {{0, wedge(0)}});
  t.trace = ChainMap(t.top, ox, {{0, pidentity(r, 1)}});
  for (int j = 1; j <= d; ++j) t.homotopy[-j] = pidentity(r, subsets(d, j).size()).scaled(sign_poly(r, parity_sign(j + 1)));
  // check d_M h + h d_T = down o trace on degrees 0 .. -(d-1)
  t.homotopy_verified = true;
  const ChainMap composite = compose(t.down, t.trace);
  for (int n = 0; n >= 1 - d; --n) {
    PMatrix lhs = pzeros(r, t.middle.rank(n), t.top.rank(n));
    if (t.homotopy.count(n)) lhs = lhs + t.middle.d(n + 1) * t.homotopy.at(n);
    if (t.homotopy.count(n - 1)) lhs = lhs + t.homotopy.at(n - 1) * t.top.d(n);
    if (lhs != composite.component(n)) t.homotopy_verified = false;
  }
  return t;
}

struct PushforwardCertificate {
  SymmetricSpace space;
  ExactnessCertificate regularity;
};

/// f_*(1_Z) for Z = {s = 0} is represented by (Kos_F, theta_F).
inline PushforwardCertificate pushforward_unit_form(const KoszulDatum& k, int bound) {
  PushforwardCertificate p;
  p.regularity = koszul_exactness(k, bound);
  if (!p.regularity.exact) fail(ErrorCode::NotRegularSequence, "section is not regular: " + p.regularity.witness);
  p.space = koszul_form(k);
  p.space.label = "f_*(1_Z)";
  return p;
}

}  // namespace wittforge
