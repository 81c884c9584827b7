#pragma once

// Push-forward along a finite field extension f: Spec E -> Spec F. The
// functors f_* (restriction of scalars) and f^! = Hom_F(E, -) are realised
// as explicit matrices over F; forms are transferred through the trace.

#include <string>
#include <vector>

#include "wittforge/field.hpp"
#include "wittforge/matrix.hpp"
#include "wittforge/quadform.hpp"
#include "wittforge/upoly.hpp"

namespace wittforge {

/// E as an n-dimensional F-space with a chosen F-basis.
class ExtensionDatum {
 public:
  /// Tower power basis of E over F.
  ExtensionDatum(FieldRef base, FieldRef top) : base_(base), top_(top) {
    if (!top->extends(base)) fail(ErrorCode::FieldMismatch, top->name() + " does not extend " + base->name());
    n_ = static_cast<std::size_t>(top->degree_over(base));
    for (std::size_t k = 0; k < n_; ++k) {
      std::vector<Scalar> c(n_, base->zero());
      c[k] = base->one();
      basis_.push_back(top->from_coordinates(c, base));
    }
    to_power_ = identity(base, n_);
    from_power_ = to_power_;
  }

  /// A custom basis; raises InvalidArgument unless it is F-linearly independent.
  ExtensionDatum(FieldRef base, FieldRef top, std::vector<Scalar> basis) : ExtensionDatum(base, top) {
    if (basis.size() != n_) fail(ErrorCode::InvalidArgument, "basis length differs from [E:F]");
    FMatrix b = zeros(base, n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
      top->check(basis[j]);
      const auto c = top->coordinates(basis[j], base);
      for (std::size_t i = 0; i < n_; ++i) b(i, j) = c[i];
    }
    auto inv = inverse(b);
    if (!inv) fail(ErrorCode::InvalidArgument, "basis is not F-linearly independent");
    basis_ = std::move(basis);
    to_power_ = b;
    from_power_ = *inv;
  }

  FieldRef base() const { return base_; }
  FieldRef top() const { return top_; }
  std::size_t degree() const { return n_; }
  const std::vector<Scalar>& basis() const { return basis_; }
  bool power_basis() const { return to_power_ == identity(base_, n_); }

  /// Coordinates of x in the declared basis.
  std::vector<Scalar> coordinates(const Scalar& x) const {
    top_->check(x);
    const auto c = top_->coordinates(x, base_);
    std::vector<Scalar> out(n_, base_->zero());
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] = out[i] + from_power_(i, j) * c[j];
    return out;
  }

  Scalar element(const std::vector<Scalar>& coords) const {
    Scalar x = top_->zero();
    for (std::size_t i = 0; i < n_; ++i) x = x + top_->embed(coords[i]) * basis_[i];
    return x;
  }

  /// Matrix of y -> e*y; column j holds the coordinates of e*b_j.
  FMatrix multiplication_matrix(const Scalar& e) const {
    FMatrix m = zeros(base_, n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
      const auto c = coordinates(e * basis_[j]);
      for (std::size_t i = 0; i < n_; ++i) m(i, j) = c[i];
    }
    return m;
  }

  std::string name() const { return top_->name() + " / " + base_->name(); }

 private:
  FieldRef base_;
  FieldRef top_;
  std::size_t n_ = 0;
  std::vector<Scalar> basis_;
  FMatrix to_power_, from_power_;
};

inline Scalar trace(const ExtensionDatum& ext, const Scalar& e) {
  const FMatrix m = ext.multiplication_matrix(e);
  Scalar t = ext.base()->zero();
  for (std::size_t i = 0; i < m.rows(); ++i) t = t + m(i, i);
  return t;
}

/// Gram[i][j] = Tr(b_i b_j).
inline QuadraticForm trace_form(const ExtensionDatum& ext) {
  const std::size_t n = ext.degree();
  FMatrix g = zeros(ext.base(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = trace(ext, ext.basis()[i] * ext.basis()[j]);
  QuadraticForm q(g);
  if (!q.nondegenerate()) fail(ErrorCode::DegenerateTraceForm, "trace form of " + ext.name() + " is degenerate");
  return q;
}

/// The F-form Tr o b on the restriction of scalars. Basis vector b_k e_i of
/// the F-space has index i*n + k.
inline QuadraticForm scharlau_transfer(const ExtensionDatum& ext, const QuadraticForm& q) {
  if (q.field() != ext.top()) fail(ErrorCode::FieldMismatch, "form over " + q.field()->name() + ", extension top " + ext.top()->name());
  if (!q.nondegenerate()) fail(ErrorCode::DegenerateForm, "cannot transfer a degenerate form");
  const std::size_t n = ext.degree(), m = q.dim();
  const auto& b = ext.basis();
  FMatrix g = zeros(ext.base(), n * m, n * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (q.gram()(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) g(i * n + k, j * n + l) = trace(ext, b[k] * b[l] * q.gram()(i, j));
    }
  return QuadraticForm(g);
}

/// Extension of scalars of a form along F -> L (L must extend the field of q).
inline QuadraticForm restrict_to(const QuadraticForm& q, FieldRef target) {
  return QuadraticForm(q.gram().map([&](const Scalar& x) { return target->embed(x); }, target->zero()));
}

// ---------------------------------------------------------------------------
// Adjunction f_* -| f^!.
//
// An E-space W is described over F by action matrices A_l (multiplication by
// b_l). Hom_F(E, W) has basis phi_{l,w} with phi_{l,w}(b_{l'}) = delta_{l l'} w,
// index l*dim(W) + w.

struct AdjunctionData {
  /// V|_F -> Hom_F(E, V|_F), a -> (e -> e.a).
  FMatrix unit;
  /// Hom_F(E, V')|_F -> V', phi -> phi(1).
  FMatrix counit;
};

/// Action matrices of b_l on E^m, index i*n + k for b_k e_i.
inline std::vector<FMatrix> free_action(const ExtensionDatum& ext, std::size_t m) {
  std::vector<FMatrix> out;
  for (const auto& bl : ext.basis()) out.push_back(kronecker(identity(ext.base(), m), ext.multiplication_matrix(bl)));
  return out;
}

/// Action of b_l on Hom_F(E, V'): (e.phi)(x) = phi(x e).
inline std::vector<FMatrix> shriek_action(const ExtensionDatum& ext, std::size_t mprime) {
  const std::size_t n = ext.degree();
  const auto& b = ext.basis();
  std::vector<FMatrix> out;
  for (std::size_t l = 0; l < n; ++l) {
    FMatrix a = zeros(ext.base(), n * mprime, n * mprime);
    for (std::size_t lp = 0; lp < n; ++lp) {
      const auto c = ext.coordinates(b[lp] * b[l]);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t w = 0; w < mprime; ++w) a(lp * mprime + w, k * mprime + w) = c[k];
    }
    out.push_back(a);
  }
  return out;
}

/// Unit W -> Hom_F(E, W) for an E-space given by its action matrices.
inline FMatrix unit_from_action(const std::vector<FMatrix>& actions, FieldRef f) {
  const std::size_t n = actions.size();
  const std::size_t dim = n ? actions[0].rows() : 0;
  FMatrix u = zeros(f, n * dim, dim);
  for (std::size_t l = 0; l < n; ++l) u.set_block(l * dim, 0, actions[l]);
  return u;
}

/// Counit Hom_F(E, V')|_F -> V' (evaluation at 1).
inline FMatrix counit_matrix(const ExtensionDatum& ext, std::size_t mprime) {
  const std::size_t n = ext.degree();
  const auto one = ext.coordinates(ext.top()->one());
  FMatrix c = zeros(ext.base(), mprime, n * mprime);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t w = 0; w < mprime; ++w) c(w, l * mprime + w) = one[l];
  return c;
}

/// V of dimension m over E, V' of dimension mprime over F.
inline AdjunctionData adjunction_data(const ExtensionDatum& ext, std::size_t m, std::size_t mprime) {
  return {unit_from_action(free_action(ext, m), ext.base()), counit_matrix(ext, mprime)};
}

struct TriangleReport {
  /// counit_{f_* V} o f_*(unit_V) = id.
  bool first = false;
  /// f^!(counit_{V'}) o unit_{f^! V'} = id.
  bool second = false;
};

inline TriangleReport check_triangle_identities(const ExtensionDatum& ext, std::size_t m, std::size_t mprime) {
  FieldRef f = ext.base();
  const std::size_t n = ext.degree();
  TriangleReport r;
  const FMatrix unit_v = unit_from_action(free_action(ext, m), f);
  r.first = counit_matrix(ext, n * m) * unit_v == identity(f, n * m);
  const FMatrix unit_shriek = unit_from_action(shriek_action(ext, mprime), f);
  const FMatrix shriek_counit = kronecker(identity(f, n), counit_matrix(ext, mprime));
  r.second = shriek_counit * unit_shriek == identity(f, n * mprime);
  return r;
}

/// Hom_E(V, Hom_F(E,F))|_F -> Hom_F(V|_F, F), phi -> (a -> phi(a)(1)). The
/// source is trivialised through E = Hom_F(E,F), e -> Tr(e.-), with basis
/// phi_{i,k}: e_i -> b_k; the target uses the dual basis of b_l e_j.
inline FMatrix cartan_isomorphism(const ExtensionDatum& ext, std::size_t m) {
  return kronecker(identity(ext.base(), m), trace_form(ext).gram());
}

/// f_* of the adjoint V -> Hom_E(V, E) of q, in the bases of cartan_isomorphism.
inline FMatrix pushed_adjoint(const ExtensionDatum& ext, const QuadraticForm& q) {
  const std::size_t n = ext.degree(), m = q.dim();
  const auto& b = ext.basis();
  FMatrix out = zeros(ext.base(), n * m, n * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const auto c = ext.coordinates(b[l] * q.gram()(j, i));
        for (std::size_t k = 0; k < n; ++k) out(i * n + k, j * n + l) = c[k];
      }
  return out;
}

// ---------------------------------------------------------------------------
// Theorem checks.

struct CheckReport {
  std::string claim;
  FMatrix lhs;
  FMatrix rhs;
  bool equal = false;
  std::string witness;
  std::string basis_note;
};

inline std::string trace_basis_note(const ExtensionDatum& ext) {
  return std::string(ext.power_basis() ? "power basis" : "custom basis") + " of " + ext.name() +
         ", Hom_F(E,F) trivialised by the trace";
}

inline CheckReport compare_witt(std::string claim, const QuadraticForm& lhs, const QuadraticForm& rhs, std::string note) {
  CheckReport r;
  r.claim = std::move(claim);
  r.lhs = lhs.gram();
  r.rhs = rhs.gram();
  r.equal = witt_equal(lhs, rhs);
  r.basis_note = std::move(note);
  if (!r.equal) r.witness = "lhs - rhs is not Witt-trivial; lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
  return r;
}

/// F in K in E: Tr_{E/F} versus Tr_{K/F} o Tr_{E/K}.
inline CheckReport transfer_compose_check(FieldRef f, FieldRef k, FieldRef e, const QuadraticForm& q) {
  const ExtensionDatum ef(f, e), ek(k, e), kf(f, k);
  const QuadraticForm direct = scharlau_transfer(ef, q);
  const QuadraticForm nested = scharlau_transfer(kf, scharlau_transfer(ek, q));
  return compare_witt("transfer_{E/F}(q) = transfer_{K/F}(transfer_{E/K}(q))", direct, nested, trace_basis_note(ef));
}

/// A factor E_i of E (x)_F L with the restriction E -> E_i.
struct SplitFactor {
  poly::Coeffs factor;
  FieldRef field;
  /// Image of the generator of E in E_i.
  Scalar root;
};

/// E = F[t]/(m) must be a single step over F and L must extend F.
inline std::vector<SplitFactor> split_tensor_product(FieldRef e, FieldRef l) {
  FieldRef f = e->base();
  if (!f || e->kind() != Field::Kind::Extension) fail(ErrorCode::InvalidArgument, "E must be a simple extension");
  if (!l->extends(f)) fail(ErrorCode::FieldMismatch, l->name() + " does not extend " + f->name());
  std::vector<SplitFactor> out;
  for (const auto& g : factor_over(e->modulus(), l)) {
    if (poly::degree(g) == 1) {
      out.push_back({g, l, -g[0]});
    } else {
      ExtensionOptions opts;
      // factor_over returns certified irreducible factors
      opts.assume_irreducible = true;
      FieldRef ei = Field::extension(l, g, opts);
      out.push_back({g, ei, ei->generator()});
    }
  }
  return out;
}

/// Restriction E -> E_i sending t to the factor's root.
inline Scalar restrict_element(const Scalar& x, const SplitFactor& s) {
  Scalar out = s.field->zero();
  Scalar power = s.field->one();
  const auto& c = x.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    out = out + s.field->embed(c[j]) * power;
    power = power * s.root;
  }
  return out;
}

inline QuadraticForm restrict_form(const QuadraticForm& q, const SplitFactor& s) {
  return QuadraticForm(q.gram().map([&](const Scalar& x) { return restrict_element(x, s); }, s.field->zero()));
}

/// res_L(transfer_{E/F}(q)) versus the sum over E (x)_F L = prod E_i of
/// transfer_{E_i/L}(res_{E_i}(q)).
inline CheckReport base_change_check(FieldRef e, FieldRef l, const QuadraticForm& q) {
  FieldRef f = e->base();
  const ExtensionDatum ef(f, e);
  const QuadraticForm lhs = restrict_to(scharlau_transfer(ef, q), l);
  QuadraticForm rhs = QuadraticForm::zero_dimensional(l);
  std::string factors;
  for (const auto& s : split_tensor_product(e, l)) {
    factors += (factors.empty() ? "" : " * ") + std::string("(") + poly::to_string(s.factor) + ")";
    const QuadraticForm qi = restrict_form(q, s);
    rhs = rhs.orthogonal_sum(s.field == l ? qi : scharlau_transfer(ExtensionDatum(l, s.field), qi));
  }
  auto r = compare_witt("res_L(transfer_{E/F}(q)) = sum_i transfer_{E_i/L}(res_{E_i}(q))", lhs, rhs,
                        trace_basis_note(ef) + "; E (x)_F L splits via " + factors);
  return r;
}

/// transfer(x (x) res(y)) versus transfer(x) (x) y.
inline CheckReport projection_formula_check(const ExtensionDatum& ext, const QuadraticForm& x, const QuadraticForm& y) {
  if (y.field() != ext.base()) fail(ErrorCode::FieldMismatch, "y must live over the base field");
  const QuadraticForm lhs = scharlau_transfer(ext, x.tensor(restrict_to(y, ext.top())));
  const QuadraticForm rhs = scharlau_transfer(ext, x).tensor(y);
  return compare_witt("transfer(x (x) res(y)) = transfer(x) (x) y", lhs, rhs, trace_basis_note(ext));
}

}  // namespace wittforge
