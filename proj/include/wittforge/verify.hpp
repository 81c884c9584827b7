#pragma once

// Seeded verification suites. Each suite is a list of cases with an input
// description, the claim checked, the statement it certifies (anchor), a
// status and a witness on failure. Cases are sorted by id and carry no
// timing, so JSON output is reproducible for a given seed.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wittforge/catalog.hpp"
#include "wittforge/homalg.hpp"
#include "wittforge/koszul.hpp"
#include "wittforge/projspace.hpp"
#include "wittforge/quadform.hpp"
#include "wittforge/serialize.hpp"
#include "wittforge/transfer.hpp"

namespace wittforge {

enum class CaseStatus { Pass, Fail, Inconclusive };

inline std::string to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Inconclusive: return "inconclusive";
  }
  return "fail";
}

struct CaseResult {
  std::string id;
  Json inputs;
  std::string claim;
  std::string anchor;
  CaseStatus status = CaseStatus::Fail;
  /// Present on failure; on passing rejection cases it holds the rejection evidence.
  std::string witness;
};

struct SuiteResult {
  std::string name;
  std::string title;
  std::vector<CaseResult> cases;
  double seconds = 0;

  std::size_t count(CaseStatus s) const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [&](const CaseResult& c) { return c.status == s; }));
  }
  bool passed() const { return !cases.empty() && count(CaseStatus::Pass) == cases.size(); }
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  /// Internal-degree bound for graded exactness.
  int bound = 6;
  /// Size of each randomized sweep.
  int cases = 60;
};

/// Outcome of one check: ok plus a witness when not ok.
struct Verdict {
  bool ok = false;
  std::string witness;
};

inline Verdict verdict(bool ok, std::string witness_if_not) { return {ok, ok ? std::string() : std::move(witness_if_not)}; }

using Rng = std::mt19937_64;

namespace detail {

inline std::string pad_id(const std::string& suite, std::size_t i) {
  std::string n = std::to_string(i);
  return suite + "/" + std::string(n.size() < 3 ? 3 - n.size() : 0, '0') + n;
}

/// Runs one check, turning library errors into failures (or inconclusive
/// results when the library says so).
inline CaseResult run_case(const std::string& suite, std::size_t index, Json inputs, std::string claim, std::string anchor,
                           const std::function<Verdict()>& check) {
  CaseResult c;
  c.id = pad_id(suite, index);
  c.inputs = std::move(inputs);
  c.claim = std::move(claim);
  c.anchor = std::move(anchor);
  try {
    const Verdict v = check();
    c.status = v.ok ? CaseStatus::Pass : CaseStatus::Fail;
    c.witness = v.witness;
    if (!v.ok && c.witness.empty()) c.witness = "check returned false";
  } catch (const Error& e) {
    c.status = e.code() == ErrorCode::Inconclusive ? CaseStatus::Inconclusive : CaseStatus::Fail;
    c.witness = e.what();
  }
  return c;
}

inline std::uint64_t suite_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (char ch : name) h = (h ^ static_cast<unsigned char>(ch)) * 0x100000001b3ULL;
  return h;
}

inline std::uint64_t pick(Rng& rng, std::uint64_t n) { return rng() % n; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Random data.

inline Scalar random_element(FieldRef f, Rng& rng) {
  if (f->is_finite()) return f->element(detail::pick(rng, f->order()));
  if (f->kind() == Field::Kind::Rationals) {
    const long num = static_cast<long>(detail::pick(rng, 13)) - 6;
    const long den = 1 + static_cast<long>(detail::pick(rng, 3));
    return f->from_rational(mpq_class(num, den));
  }
  std::vector<Scalar> c;
  for (int i = 0; i < f->degree(); ++i) c.push_back(random_element(f->base(), rng));
  return f->from_coeffs(c);
}

inline Scalar random_unit(FieldRef f, Rng& rng) {
  for (;;) {
    Scalar x = random_element(f, rng);
    if (!x.is_zero()) return x;
  }
}

/// A random nondegenerate symmetric form of the given dimension.
inline QuadraticForm random_form(FieldRef f, std::size_t n, Rng& rng) {
  for (;;) {
    FMatrix g = zeros(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = random_element(f, rng);
    QuadraticForm q(g);
    if (q.nondegenerate()) return q;
  }
}

/// A random bounded complex over a field: differentials factor through the
/// kernel of the previous one.
inline ChainComplex random_field_complex(FieldRef f, Rng& rng) {
  const Ring r{f, {}};
  const int lo = static_cast<int>(detail::pick(rng, 5)) - 2;
  const int len = static_cast<int>(detail::pick(rng, 4));
  std::map<int, std::size_t> ranks;
  for (int n = lo; n <= lo + len; ++n) ranks[n] = detail::pick(rng, 4);
  std::map<int, PMatrix> diffs;
  FMatrix prev;
  for (int n = lo + 1; n <= lo + len; ++n) {
    const FMatrix k = n - 1 == lo ? identity(f, ranks[n - 1]) : kernel(prev);
    FMatrix rnd = zeros(f, k.cols(), ranks[n]);
    for (std::size_t i = 0; i < rnd.rows(); ++i)
      for (std::size_t j = 0; j < rnd.cols(); ++j) rnd(i, j) = random_element(f, rng);
    prev = k * rnd;
    if (prev.rows() == 0) prev = zeros(f, ranks[n - 1], ranks[n]);
    diffs[n] = to_pmatrix(r, prev);
  }
  return ChainComplex(r, ranks, diffs);
}

/// A random complex over Q[x,y]: a shifted tensor product of one or two
/// two-term complexes R --f--> R.
inline ChainComplex random_polynomial_complex(Rng& rng) {
  const Ring r{Q(), {"x", "y"}};
  auto two_term = [&]() {
    Poly f = Poly::zero(r);
    const int terms = 1 + static_cast<int>(detail::pick(rng, 2));
    for (int t = 0; t < terms; ++t) {
      Poly::Exponent e{static_cast<int>(detail::pick(rng, 3)), static_cast<int>(detail::pick(rng, 3))};
      f = f + Poly::monomial(r, e, random_unit(Q(), rng));
    }
    PMatrix d = pzeros(r, 1, 1);
    d(0, 0) = f;
    return ChainComplex(r, {{0, 1}, {1, 1}}, {{1, d}});
  };
  ChainComplex c = two_term();
  if (detail::pick(rng, 2)) c = tensor(c, two_term());
  return shift(c, static_cast<int>(detail::pick(rng, 5)) - 2);
}

// ---------------------------------------------------------------------------
// Suites.

namespace anchors {
inline constexpr const char* kTraceForm = "the transfer of the unit form along a finite extension is its trace form";
inline constexpr const char* kAdjunction = "f_* is left adjoint to f^! and the Cartan map identifies f_* of the adjoint with the transferred form";
inline constexpr const char* kComposition = "push-forward along a composite of finite morphisms is the composite of push-forwards";
inline constexpr const char* kBaseChange = "push-forward commutes with flat base change";
inline constexpr const char* kProjection = "projection formula for the push-forward along a finite morphism";
inline constexpr const char* kKoszulLemma = "the Koszul form obtained from the unit and multiplication agrees with theta";
inline constexpr const char* kMultiplicative = "Koszul forms are multiplicative for direct sums of bundles";
inline constexpr const char* kExactness = "the augmented Koszul complex of a regular section resolves the structure sheaf of its zero locus";
inline constexpr const char* kSplit = "for a split bundle the Koszul form factors through a cone and is metabolic";
inline constexpr const char* kProjective = "O(m) on P^r has no cohomology for -r <= m <= -1";
inline constexpr const char* kPhiR = "the push-forward of phi_r from P^r to the point vanishes for odd r";
inline constexpr const char* kWittRing = "W(F) is a commutative ring under orthogonal sum and tensor product";
inline constexpr const char* kHilbert = "Hilbert reciprocity: the product of (a,b)_v over all places is 1";
inline constexpr const char* kBidual = "D(bid_A) o bid_{DA} = Id_{DA} for the duality on bounded free complexes";
}  // namespace anchors

inline SuiteResult suite_trace_form(const VerifyOptions&) {
  SuiteResult s{"trace-form", "transfer of <1> and <alpha> along F9/F3", {}, 0};
  FieldRef f3 = Fp(3), f9 = parse_field("F9");
  const ExtensionDatum ext(f3, f9);
  const Json in{{"extension", "F9/F3"}, {"modulus", poly::to_string(f9->modulus(), "t")}};
  s.cases.push_back(detail::run_case(s.name, 0, Json{{"extension", "F9/F3"}, {"form", "<1>"}},
                                     "transfer(<1>) = [[2,0],[0,1]]", anchors::kTraceForm, [&] {
                                       const QuadraticForm t = scharlau_transfer(ext, QuadraticForm::diagonal(f9, std::vector<long>{1}));
                                       return verdict(t.gram() == from_ints(f3, {{2, 0}, {0, 1}}), "got " + t.to_string());
                                     }));
  s.cases.push_back(detail::run_case(s.name, 1, Json{{"extension", "F9/F3"}, {"form", "<alpha>"}, {"alpha^2", -1}},
                                     "transfer(<alpha>) is hyperbolic", anchors::kTraceForm, [&] {
                                       const QuadraticForm t = scharlau_transfer(ext, QuadraticForm::diagonal(f9, {f9->generator()}));
                                       const WittClass c = witt_decompose(t);
                                       return verdict(t.dim() == 2 && c.hyperbolic_count == 1 && witt_trivial(t),
                                                      "transfer(<alpha>) = " + t.to_string() + " is not a hyperbolic plane");
                                     }));
  s.cases.push_back(detail::run_case(s.name, 2, in, "trace_form(F9/F3) = transfer(<1>)", anchors::kTraceForm, [&] {
    return verdict(trace_form(ext) == scharlau_transfer(ext, QuadraticForm::diagonal(f9, std::vector<long>{1})), "trace form differs");
  }));
  return s;
}

inline SuiteResult suite_adjunction(const VerifyOptions& opt) {
  SuiteResult s{"adjunction", "triangle identities and Cartan isomorphism", {}, 0};
  Rng rng(detail::suite_seed(opt.seed, s.name));
  std::vector<std::pair<FieldRef, FieldRef>> exts;
  for (std::int64_t p : {3, 5, 7})
    for (int n = 1; n <= 9; ++n) exts.emplace_back(Fp(p), finite_extension(Fp(p), n));
  for (std::int64_t p : {3, 5}) {
    FieldRef k = finite_extension(Fp(p), 2);
    exts.emplace_back(k, finite_extension(k, 2));
    exts.emplace_back(Fp(p), finite_extension(k, 2));
  }
  exts.emplace_back(Q(), quadratic_field(2));
  exts.emplace_back(Q(), quadratic_field(5));
  std::size_t idx = 0;
  for (const auto& [f, e] : exts) {
    const ExtensionDatum ext(f, e);
    for (std::size_t m = 1; m <= 2; ++m) {
      const std::size_t mp = 3 - m;
      s.cases.push_back(detail::run_case(s.name, idx++, Json{{"extension", ext.name()}, {"m", m}, {"m'", mp}},
                                         "counit o f_*(unit) = id and f^!(counit) o unit = id", anchors::kAdjunction, [&] {
                                           const auto t = check_triangle_identities(ext, m, mp);
                                           return verdict(t.first && t.second, std::string("triangle identity ") + (t.first ? "2" : "1") + " fails");
                                         }));
    }
    const std::size_t dim = 1 + detail::pick(rng, 2);
    const QuadraticForm q = random_form(e, dim, rng);
    s.cases.push_back(detail::run_case(s.name, idx++, Json{{"extension", ext.name()}, {"form", to_json(q)}},
                                       "Cartan map is invertible and C o f_*(adjoint of q) = transfer(q)", anchors::kAdjunction, [&] {
                                         const FMatrix c = cartan_isomorphism(ext, dim);
                                         if (!inverse(c)) return verdict(false, "Cartan matrix is singular");
                                         const FMatrix lhs = c * pushed_adjoint(ext, q);
                                         return verdict(lhs == scharlau_transfer(ext, q).gram(), "C * f_*(adjoint) = " + lhs.to_string());
                                       }));
  }
  return s;
}

namespace detail {

/// A finite tower F subset K subset E with [K:F] = a, [E:K] = b.
struct Tower {
  FieldRef f, k, e;
};

inline Tower random_finite_tower(Rng& rng, int max_degree) {
  static const std::int64_t primes[] = {3, 5, 7};
  for (;;) {
    const std::int64_t p = primes[pick(rng, 3)];
    const int a = 1 + static_cast<int>(pick(rng, 4));
    const int b = 1 + static_cast<int>(pick(rng, 4));
    if (a * b > max_degree || a * b < 2) continue;
    FieldRef f = Fp(p);
    FieldRef k = finite_extension(f, a);
    return {f, k, finite_extension(k, b)};
  }
}

inline Json tower_json(const Tower& t) { return Json{{"F", t.f->name()}, {"K", t.k->name()}, {"E", t.e->name()}}; }

}  // namespace detail

inline SuiteResult suite_composition(const VerifyOptions& opt) {
  SuiteResult s{"composition", "transfer_{E/F} = transfer_{K/F} o transfer_{E/K}", {}, 0};
  Rng rng(detail::suite_seed(opt.seed, s.name));
  std::size_t idx = 0;
  auto add = [&](const detail::Tower& t, const QuadraticForm& q) {
    Json in = detail::tower_json(t);
    in["form"] = to_json(q);
    s.cases.push_back(detail::run_case(s.name, idx++, in, "transfer_{E/F}(q) = transfer_{K/F}(transfer_{E/K}(q)) in W(F)",
                                       anchors::kComposition, [&] {
                                         const auto r = transfer_compose_check(t.f, t.k, t.e, q);
                                         return verdict(r.equal, r.witness);
                                       }));
  };
  for (int i = 0; i < opt.cases; ++i) {
    const detail::Tower t = detail::random_finite_tower(rng, 8);
    add(t, random_form(t.e, 1 + detail::pick(rng, 2), rng));
  }
  const detail::Tower qt{Q(), quadratic_field(2), fourth_root_of_two()};
  for (int i = 0; i < 4; ++i) add(qt, random_form(qt.e, 1 + detail::pick(rng, 2), rng));
  return s;
}

inline SuiteResult suite_base_change_projection(const VerifyOptions& opt) {
  SuiteResult s{"base-change-projection", "base change and projection formula", {}, 0};
  Rng rng(detail::suite_seed(opt.seed, s.name));
  std::size_t idx = 0;
  auto add_base_change = [&](FieldRef e, FieldRef l, const QuadraticForm& q) {
    s.cases.push_back(detail::run_case(s.name, idx++, Json{{"E", e->name()}, {"L", l->name()}, {"form", to_json(q)}},
                                       "res_L(transfer_{E/F}(q)) = sum_i transfer_{E_i/L}(res_{E_i}(q)) in W(L)", anchors::kBaseChange, [&] {
                                         const auto r = base_change_check(e, l, q);
                                         return verdict(r.equal, r.witness);
                                       }));
  };
  auto add_projection = [&](FieldRef f, FieldRef e, const QuadraticForm& x, const QuadraticForm& y) {
    s.cases.push_back(detail::run_case(s.name, idx++, Json{{"extension", e->name() + " / " + f->name()}, {"x", to_json(x)}, {"y", to_json(y)}},
                                       "transfer(x (x) res(y)) = transfer(x) (x) y in W(F)", anchors::kProjection, [&] {
                                         const auto r = projection_formula_check(ExtensionDatum(f, e), x, y);
                                         return verdict(r.equal, r.witness);
                                       }));
  };
  FieldRef f3 = Fp(3), f9 = finite_extension(f3, 2), f27 = finite_extension(f3, 3);
  add_base_change(f27, f9, QuadraticForm::diagonal(f27, std::vector<long>{1}));
  add_base_change(f9, f9, QuadraticForm::diagonal(f9, std::vector<long>{1}));
  add_base_change(f9, f9, QuadraticForm::diagonal(f9, {f9->generator()}));
  static const std::int64_t primes[] = {3, 5, 7};
  for (int i = 0; i < opt.cases; ++i) {
    FieldRef f = Fp(primes[detail::pick(rng, 3)]);
    FieldRef e = finite_extension(f, 2 + static_cast<int>(detail::pick(rng, 2)));
    const int lshape = static_cast<int>(detail::pick(rng, 5));
    FieldRef l = lshape < 4 ? finite_extension(f, 1 + lshape) : finite_extension(finite_extension(f, 2), 2);
    add_base_change(e, l, random_form(e, 1 + detail::pick(rng, 2), rng));
  }
  add_base_change(quadratic_field(2), Q(), QuadraticForm::diagonal(quadratic_field(2), {quadratic_field(2)->generator()}));
  add_base_change(quadratic_field(5), Q(), random_form(quadratic_field(5), 2, rng));
  for (int i = 0; i < opt.cases; ++i) {
    const detail::Tower t = detail::random_finite_tower(rng, 6);
    FieldRef base = detail::pick(rng, 2) ? t.f : t.k;
    if (base == t.e) base = t.f;
    add_projection(base, t.e, random_form(t.e, 1 + detail::pick(rng, 2), rng), random_form(base, 1 + detail::pick(rng, 2), rng));
  }
  for (FieldRef e : {quadratic_field(2), quadratic_field(5), fourth_root_of_two()})
    add_projection(Q(), e, random_form(e, 1 + detail::pick(rng, 2), rng), random_form(Q(), 1 + detail::pick(rng, 2), rng));
  return s;
}

inline SuiteResult suite_koszul_lemma(const VerifyOptions&) {
  SuiteResult s{"koszul-lemma", "x_map = theta and multiplicativity of theta", {}, 0};
  std::size_t idx = 0;
  for (int d = 1; d <= 4; ++d) {
    const KoszulDatum k = KoszulDatum::coordinates(Q(), d);
    s.cases.push_back(detail::run_case(s.name, idx++, Json{{"d", d}, {"section", "coordinates"}, {"field", "Q"}},
                                       "x_map = theta (exact matrices)", anchors::kKoszulLemma, [&] {
                                         const ChainMap x = x_map(k), t = theta_map(k);
                                         for (int n : x.source().degrees())
                                           if (x.component(n) != t.component(n))
                                             return verdict(false, "degree " + std::to_string(n) + ": x_map " + x.component(n).to_string() +
                                                                       " vs theta " + t.component(n).to_string());
                                         return verdict(x == t, "x_map and theta differ");
                                       }));
  }
  for (int d = 2; d <= 4; ++d)
    for (int d1 = 1; d1 < d; ++d1) {
      const KoszulDatum k = KoszulDatum::coordinates(Q(), d);
      s.cases.push_back(detail::run_case(s.name, idx++, Json{{"d", d}, {"split", {d1, d - d1}}},
                                         "theta_{F1+F2} = theta_{F1} (x) theta_{F2} under Kos_{F1+F2} = Kos_{F1} (x) Kos_{F2}",
                                         anchors::kMultiplicative, [&] {
                                           const auto r = multiplicativity_check(k, d1, false);
                                           if (!r.iso_is_chain_isomorphism) return verdict(false, "split map is not a chain isomorphism");
                                           return verdict(r.theta_multiplicative, "pulled-back theta differs from the tensor form");
                                         }));
    }
  return s;
}

inline SuiteResult suite_koszul_exactness(const VerifyOptions& opt) {
  SuiteResult s{"koszul-exactness", "graded exactness of augmented Koszul complexes", {}, 0};
  std::size_t idx = 0;
  for (int d = 1; d <= 4; ++d) {
    const KoszulDatum k = KoszulDatum::coordinates(Q(), d);
    s.cases.push_back(detail::run_case(s.name, idx++, Json{{"d", d}, {"section", "coordinates"}, {"bound", opt.bound}},
                                       "H_i(Kos) = 0 for i >= 1 through internal degree " + std::to_string(opt.bound), anchors::kExactness, [&] {
                                         const auto c = koszul_exactness(k, opt.bound);
                                         return verdict(c.exact, c.witness);
                                       }));
    s.cases.push_back(detail::run_case(s.name, idx++, Json{{"d", d}, {"section", "coordinates"}, {"bound", opt.bound}},
                                       "trace diagram homotopy d h + h d = down o trace", anchors::kExactness, [&] {
                                         const auto t = trace_diagram(k, opt.bound);
                                         return verdict(t.homotopy_verified, "homotopy identity fails");
                                       }));
  }
  CaseResult rejected = detail::run_case(s.name, idx++, Json{{"ring", "Q[x]"}, {"section", {"x", "x"}}, {"bound", opt.bound}},
                                         "the non-regular section (x, x) is rejected", anchors::kExactness, [&] {
                                           const Ring r{Q(), {"x"}};
                                           const KoszulDatum k(r, {parse_poly(r, "x"), parse_poly(r, "x")});
                                           try {
                                             trace_diagram(k, opt.bound);
                                           } catch (const Error& e) {
                                             if (e.code() == ErrorCode::NotRegularSequence) return Verdict{true, e.what()};
                                             throw;
                                           }
                                           return verdict(false, "(x, x) was accepted as regular");
                                         });
  s.cases.push_back(rejected);
  return s;
}

inline SuiteResult suite_split(const VerifyOptions&) {
  SuiteResult s{"split", "split factorization of Koszul forms", {}, 0};
  for (int d = 1; d <= 3; ++d) {
    const KoszulDatum k = KoszulDatum::coordinates(Q(), d);
    const std::string claim = d == 1 ? "Kos_L = cone(s: R -> R), x_map = theta, and R is a Lagrangian"
                                     : "Kos_F = Kos_{F'} (x) Kos_L with multiplicative theta and x_map, and Kos_{F'} (x) R is a Lagrangian";
    s.cases.push_back(detail::run_case(s.name, static_cast<std::size_t>(d - 1), Json{{"d", d}, {"section", "coordinates"}}, claim,
                                       anchors::kSplit, [&] {
                                         const auto f = split_factorization(k);
                                         if (!f.cone_identified) return verdict(false, "last factor is not the cone of s_1");
                                         if (!f.multiplicativity.iso_is_chain_isomorphism) return verdict(false, "split map is not a chain isomorphism");
                                         if (!f.multiplicativity.theta_multiplicative) return verdict(false, "theta is not multiplicative");
                                         if (!f.multiplicativity.xmap_multiplicative) return verdict(false, "x_map is not multiplicative");
                                         if (!f.lagrangian.isotropic) return verdict(false, "Lagrangian is not isotropic");
                                         return verdict(f.lagrangian.exact, "0 -> L -> Kos -> D(L) -> 0 is not exact");
                                       }));
  }
  return s;
}

inline SuiteResult suite_projective(const VerifyOptions&) {
  SuiteResult s{"projective", "vanishing on P^r and phi_r", {}, 0};
  std::size_t idx = 0;
  for (FieldRef f : {Q(), Fp(3)})
    for (int r = 1; r <= 4; ++r)
      for (int m = -r; m <= -1; ++m)
        s.cases.push_back(detail::run_case(s.name, idx++, Json{{"r", r}, {"m", m}, {"field", f->name()}},
                                           "h^i(P^r, O(m)) = 0 for all i, by Cech decomposition and closed form", anchors::kProjective, [&] {
                                             const auto c = cohomology(r, m, f);
                                             if (!c.agrees) return verdict(false, "decomposition disagrees with the closed formula");
                                             std::string w;
                                             for (const auto& [i, ws] : c.witnesses)
                                               if (!ws.empty()) w = "h^" + std::to_string(i) + " has monomial " + monomial_string(ws[0]);
                                             return verdict(c.all_zero(), w);
                                           }));
  for (int r : {1, 3})
    s.cases.push_back(detail::run_case(s.name, idx++, Json{{"r", r}, {"field", "Q"}}, "f_*(phi_r) = 0", anchors::kPhiR, [&] {
      const auto c = pushforward_phi_r(r, Q());
      return verdict(c.pushforward_zero, "O(" + std::to_string(c.twist) + ") has cohomology");
    }));
  s.cases.push_back(detail::run_case(s.name, idx++, Json{{"r", 2}, {"field", "Q"}}, "phi_r for even r raises ParityError", anchors::kPhiR, [&] {
    try {
      pushforward_phi_r(2, Q());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParityError) return Verdict{true, e.what()};
      throw;
    }
    return verdict(false, "no ParityError for r = 2");
  }));
  return s;
}

inline SuiteResult suite_witt_ring(const VerifyOptions& opt) {
  SuiteResult s{"witt-ring", "Witt ring axioms and Hilbert reciprocity", {}, 0};
  Rng rng(detail::suite_seed(opt.seed, s.name));
  std::size_t idx = 0;
  const int triples = std::max(1, opt.cases / 4);
  for (const char* name : {"F3", "F5", "F7", "F9"}) {
    FieldRef f = parse_field(name);
    for (int t = 0; t < triples; ++t) {
      const QuadraticForm qa = random_form(f, detail::pick(rng, 4), rng);
      const QuadraticForm qb = random_form(f, detail::pick(rng, 4), rng);
      const QuadraticForm qc = random_form(f, 1 + detail::pick(rng, 3), rng);
      s.cases.push_back(detail::run_case(s.name, idx++, Json{{"field", name}, {"a", to_json(qa)}, {"b", to_json(qb)}, {"c", to_json(qc)}},
                                         "commutative ring axioms on (a, b, c)", anchors::kWittRing, [&] {
                                           const WittClass a = witt_decompose(qa), b = witt_decompose(qb), c = witt_decompose(qc);
                                           const WittClass zero = witt_zero(f), one = witt_one(f);
                                           const std::pair<const char*, bool> axioms[] = {
                                               {"a+b = b+a", witt_equal(witt_add(a, b), witt_add(b, a))},
                                               {"(a+b)+c = a+(b+c)", witt_equal(witt_add(witt_add(a, b), c), witt_add(a, witt_add(b, c)))},
                                               {"ab = ba", witt_equal(witt_mul(a, b), witt_mul(b, a))},
                                               {"(ab)c = a(bc)", witt_equal(witt_mul(witt_mul(a, b), c), witt_mul(a, witt_mul(b, c)))},
                                               {"a(b+c) = ab+ac", witt_equal(witt_mul(a, witt_add(b, c)), witt_add(witt_mul(a, b), witt_mul(a, c)))},
                                               {"a+0 = a", witt_equal(witt_add(a, zero), a)},
                                               {"a*1 = a", witt_equal(witt_mul(a, one), a)},
                                               {"a+(-a) = 0", witt_equal(witt_add(a, witt_neg(a)), zero)},
                                           };
                                           for (const auto& [label, ok] : axioms)
                                             if (!ok) return verdict(false, std::string(label) + " fails");
                                           return Verdict{true, ""};
                                         }));
    }
  }
  for (const char* name : {"F3", "F5"}) {
    FieldRef f = parse_field(name);
    s.cases.push_back(detail::run_case(s.name, idx++, Json{{"field", name}, {"form", "<1,1,1,1>"}}, "<1,1,1,1> is 2H", anchors::kWittRing, [&] {
      const WittClass c = witt_decompose(QuadraticForm::diagonal(f, std::vector<long>{1, 1, 1, 1}));
      return verdict(c.hyperbolic_count == 2 && c.anisotropic.dim() == 0,
                     "anisotropic part " + c.anisotropic.to_string() + " with " + std::to_string(c.hyperbolic_count) + " hyperbolic planes");
    }));
  }
  for (int i = 0; i < 200; ++i) {
    long a = 0, b = 0;
    while (a == 0) a = static_cast<long>(detail::pick(rng, 201)) - 100;
    while (b == 0) b = static_cast<long>(detail::pick(rng, 201)) - 100;
    s.cases.push_back(detail::run_case(s.name, idx++, Json{{"a", a}, {"b", b}}, "prod_v (a,b)_v = 1", anchors::kHilbert, [&, a, b] {
      int prod = 1;
      std::string symbols;
      for (const auto& v : relevant_places({mpq_class(a), mpq_class(b)})) {
        const int h = hilbert_symbol(a, b, v);
        prod *= h;
        symbols += (symbols.empty() ? "" : ", ") + (v.is_real() ? std::string("inf") : std::to_string(v.prime)) + ":" + std::to_string(h);
      }
      return verdict(prod == 1, "symbols " + symbols);
    }));
  }
  return s;
}

inline SuiteResult suite_bidual(const VerifyOptions& opt) {
  SuiteResult s{"bidual", "bidual coherence D(bid_A) o bid_{DA} = Id", {}, 0};
  Rng rng(detail::suite_seed(opt.seed, s.name));
  for (std::size_t i = 0; i < 100; ++i) {
    const int kind = static_cast<int>(detail::pick(rng, 3));
    const ChainComplex a = kind == 0 ? random_field_complex(Fp(5), rng) : kind == 1 ? random_field_complex(Q(), rng) : random_polynomial_complex(rng);
    const DualityDatum dd{"K", static_cast<int>(detail::pick(rng, 5)) - 2};
    s.cases.push_back(detail::run_case(s.name, i, Json{{"complex", to_json(a)}, {"shift", dd.shift}}, "D(bid_A) o bid_{DA} = Id_{DA}",
                                       anchors::kBidual, [&] {
                                         const ChainComplex da = dualize(a, dd);
                                         const ChainMap lhs = compose(dualize(bidual_map(a, dd), dd), bidual_map(da, dd));
                                         const ChainMap id = identity_map(da);
                                         for (int n : da.degrees())
                                           if (lhs.component(n) != id.component(n))
                                             return verdict(false, "degree " + std::to_string(n) + ": " + lhs.component(n).to_string());
                                         return verdict(lhs == id, "composite differs from the identity");
                                       }));
  }
  return s;
}

struct SuiteEntry {
  const char* name;
  /// Runtime limit in seconds.
  double limit;
  SuiteResult (*run)(const VerifyOptions&);
};

inline const std::vector<SuiteEntry>& all_suites() {
  static const std::vector<SuiteEntry> suites = {
      {"trace-form", 1, suite_trace_form},
      {"adjunction", 5, suite_adjunction},
      {"composition", 10, suite_composition},
      {"base-change-projection", 20, suite_base_change_projection},
      {"koszul-lemma", 10, suite_koszul_lemma},
      {"koszul-exactness", 10, suite_koszul_exactness},
      {"split", 5, suite_split},
      {"projective", 5, suite_projective},
      {"witt-ring", 10, suite_witt_ring},
      {"bidual", 5, suite_bidual},
  };
  return suites;
}

inline SuiteResult run_suite(const SuiteEntry& e, const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r = e.run(opt);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::sort(r.cases.begin(), r.cases.end(), [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
  return r;
}

inline Json to_json(const CaseResult& c) {
  return Json{{"id", c.id},
              {"inputs", c.inputs},
              {"claim", c.claim},
              {"anchor", c.anchor},
              {"status", to_string(c.status)},
              {"witness", c.witness.empty() ? Json(nullptr) : Json(c.witness)}};
}

/// Suite report without timing.
inline Json to_json(const SuiteResult& s) {
  Json cases = Json::array();
  for (const auto& c : s.cases) cases.push_back(to_json(c));
  return Json{{"suite", s.name},
              {"title", s.title},
              {"summary", {{"pass", s.count(CaseStatus::Pass)}, {"fail", s.count(CaseStatus::Fail)}, {"inconclusive", s.count(CaseStatus::Inconclusive)}}},
              {"cases", cases}};
}

}  // namespace wittforge
