#pragma once

// JSON encodings of fields, elements, polynomials, forms, complexes and
// check reports.
//
//   field:      {"kind":"Q"} | {"kind":"Fp","p":5} | {"kind":"ext","base":field,"modulus":[c0,...,1]}
//               or a catalog name such as "F9/F3" (the top of the tower is used)
//   element:    Q as "num/den" or an integer; F_p as an integer residue;
//               an extension element as its coefficient array over the base
//   polynomial: {"vars":[...],"terms":[{"exp":[...],"coef":element}]} or a string
//   form:       {"field":field,"gram":[[element,...],...]}
//   complex:    {"ring":{"field":field,"vars":[...]},"terms":{"0":1,...},"diffs":{"1":[[poly,...]]}}

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "wittforge/catalog.hpp"
#include "wittforge/homalg.hpp"
#include "wittforge/quadform.hpp"
#include "wittforge/transfer.hpp"

namespace wittforge {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Fields and elements.

inline Json to_json(const Scalar& x);

inline Json field_to_json(FieldRef f) {
  switch (f->kind()) {
    case Field::Kind::Rationals: return Json{{"kind", "Q"}};
    case Field::Kind::Prime: return Json{{"kind", "Fp"}, {"p", f->characteristic()}};
    case Field::Kind::Extension: {
      Json mod = Json::array();
      for (const auto& c : f->modulus()) mod.push_back(to_json(c));
      return Json{{"kind", "ext"}, {"base", field_to_json(f->base())}, {"modulus", mod}};
    }
  }
  return Json();
}

inline Scalar scalar_from_json(FieldRef f, const Json& j);

inline FieldRef field_from_json(const Json& j) {
  if (j.is_string()) return parse_field(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind")) fail(ErrorCode::ParseError, "field spec needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "Q") return Q();
  if (kind == "Fp") return Fp(j.at("p").get<std::int64_t>());
  if (kind == "ext") {
    FieldRef base = field_from_json(j.at("base"));
    std::vector<Scalar> mod;
    for (const auto& c : j.at("modulus")) mod.push_back(scalar_from_json(base, c));
    ExtensionOptions opts;
    if (j.contains("assume_irreducible")) opts.assume_irreducible = j.at("assume_irreducible").get<bool>();
    return Field::extension(base, mod, opts);
  }
  fail(ErrorCode::ParseError, "unknown field kind '" + kind + "'");
}

inline Json to_json(const Scalar& x) {
  switch (x.field()->kind()) {
    case Field::Kind::Rationals: {
      const mpq_class& q = x.rational();
      if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
      return Json(q.get_str());
    }
    case Field::Kind::Prime: return Json(x.residue());
    case Field::Kind::Extension: {
      Json arr = Json::array();
      for (const auto& c : x.coeffs()) arr.push_back(to_json(c));
      return arr;
    }
  }
  return Json();
}

inline Scalar scalar_from_json(FieldRef f, const Json& j) {
  if (j.is_number_integer()) return f->from_int(j.get<long>());
  if (j.is_string()) {
    try {
      mpq_class q(j.get<std::string>());
      q.canonicalize();
      return f->from_rational(q);
    } catch (const std::invalid_argument&) {
      fail(ErrorCode::ParseError, "not a rational number: " + j.get<std::string>());
    }
  }
  if (j.is_array()) {
    if (f->kind() != Field::Kind::Extension) fail(ErrorCode::ParseError, "coefficient array given for " + f->name());
    if (j.size() > static_cast<std::size_t>(f->degree())) fail(ErrorCode::ParseError, "too many coefficients for " + f->name());
    std::vector<Scalar> c;
    for (const auto& e : j) c.push_back(scalar_from_json(f->base(), e));
    while (c.size() < static_cast<std::size_t>(f->degree())) c.push_back(f->base()->zero());
    return f->from_coeffs(c);
  }
  fail(ErrorCode::ParseError, "cannot read an element of " + f->name() + " from " + j.dump());
}

// ---------------------------------------------------------------------------
// Matrices, forms, polynomials.

inline Json to_json(const FMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline FMatrix fmatrix_from_json(FieldRef f, const Json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "matrix must be an array of rows");
  const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
  FMatrix m = zeros(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) fail(ErrorCode::ParseError, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(f, j[i][c]);
  }
  return m;
}

inline Json to_json(const QuadraticForm& q) { return Json{{"field", field_to_json(q.field())}, {"gram", to_json(q.gram())}}; }

/// {"field":..,"gram":..} or {"field":..,"diag":[..]}.
inline QuadraticForm form_from_json(const Json& j, FieldRef fallback = nullptr) {
  FieldRef f = j.contains("field") ? field_from_json(j.at("field")) : fallback;
  if (!f) fail(ErrorCode::ParseError, "form needs a field");
  if (j.contains("diag")) {
    std::vector<Scalar> d;
    for (const auto& e : j.at("diag")) d.push_back(scalar_from_json(f, e));
    return QuadraticForm::diagonal(f, d);
  }
  return QuadraticForm(fmatrix_from_json(f, j.at("gram")));
}

inline Json to_json(const WittClass& c) {
  Json inv{{"dim_parity", c.invariants.dim_parity}, {"discriminant", to_json(c.invariants.discriminant)}};
  if (c.invariants.signature) inv["signature"] = *c.invariants.signature;
  if (!c.invariants.hasse.empty()) {
    Json h = Json::object();
    for (const auto& [p, s] : c.invariants.hasse) h[p == 0 ? std::string("inf") : std::to_string(p)] = s;
    inv["hasse"] = h;
  }
  Json out{{"anisotropic", to_json(c.anisotropic)}, {"hyperbolic", c.hyperbolic_count}, {"invariants", inv}};
  if (!c.anisotropy_certificate.empty()) out["anisotropy_certificate"] = c.anisotropy_certificate;
  return out;
}

inline Json ring_to_json(const Ring& r) { return Json{{"field", field_to_json(r.field)}, {"vars", r.vars}}; }

inline Ring ring_from_json(const Json& j) {
  Ring r;
  r.field = field_from_json(j.at("field"));
  if (j.contains("vars")) r.vars = j.at("vars").get<std::vector<std::string>>();
  return r;
}

inline Json to_json(const Poly& p, const Ring& r) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", e}, {"coef", to_json(c)}});
  return Json{{"vars", r.vars}, {"terms", terms}};
}

inline Poly poly_from_json(const Ring& r, const Json& j) {
  if (j.is_string()) return parse_poly(r, j.get<std::string>());
  if (j.is_number_integer()) return Poly::constant(r, j.get<long>());
  if (!j.is_object()) fail(ErrorCode::ParseError, "cannot read a polynomial from " + j.dump());
  if (j.contains("vars") && j.at("vars").get<std::vector<std::string>>() != r.vars)
    fail(ErrorCode::RingMismatch, "polynomial variables differ from the ring's");
  Poly p = Poly::zero(r);
  for (const auto& t : j.at("terms")) {
    const auto e = t.at("exp").get<std::vector<int>>();
    if (e.size() != r.nvars()) fail(ErrorCode::ParseError, "exponent length differs from the number of variables");
    p.add_term(e, scalar_from_json(r.field, t.at("coef")));
  }
  return p;
}

/// Polynomial entries as strings, the compact form used in reports.
inline Json to_json(const PMatrix& m, const Ring& r) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string(r.vars));
    rows.push_back(row);
  }
  return rows;
}

inline PMatrix pmatrix_from_json(const Ring& r, const Json& j, std::size_t rows, std::size_t cols) {
  PMatrix m = pzeros(r, rows, cols);
  if (!j.is_array() || j.size() != rows) fail(ErrorCode::ParseError, "matrix must have " + std::to_string(rows) + " rows");
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) fail(ErrorCode::ParseError, "matrix rows must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = poly_from_json(r, j[i][c]);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Complexes and maps.

inline Json to_json(const ChainComplex& a) {
  Json terms = Json::object(), diffs = Json::object();
  for (int n : a.degrees()) {
    terms[std::to_string(n)] = a.rank(n);
    if (a.rank(n - 1) > 0 && !a.d(n).is_zero()) diffs[std::to_string(n)] = to_json(a.d(n), a.ring());
  }
  return Json{{"ring", ring_to_json(a.ring())}, {"terms", terms}, {"diffs", diffs}};
}

inline ChainComplex complex_from_json(const Json& j) {
  const Ring r = ring_from_json(j.at("ring"));
  std::map<int, std::size_t> ranks;
  for (const auto& [k, v] : j.at("terms").items()) ranks[std::stoi(k)] = v.get<std::size_t>();
  auto rank = [&](int n) { return ranks.count(n) ? ranks[n] : std::size_t{0}; };
  std::map<int, PMatrix> diffs;
  if (j.contains("diffs"))
    for (const auto& [k, v] : j.at("diffs").items()) {
      const int n = std::stoi(k);
      diffs[n] = pmatrix_from_json(r, v, rank(n - 1), rank(n));
    }
  return ChainComplex(r, ranks, diffs);
}

inline Json to_json(const ChainMap& f) {
  Json comps = Json::object();
  for (const auto& [n, m] : f.components()) comps[std::to_string(n)] = to_json(m, f.source().ring());
  return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"components", comps}};
}

inline ChainMap map_from_json(const Json& j) {
  const ChainComplex s = complex_from_json(j.at("source")), t = complex_from_json(j.at("target"));
  std::map<int, PMatrix> comps;
  for (const auto& [k, v] : j.at("components").items()) {
    const int n = std::stoi(k);
    comps[n] = pmatrix_from_json(s.ring(), v, t.rank(n), s.rank(n));
  }
  return ChainMap(s, t, comps);
}

inline Json to_json(const std::map<int, std::size_t>& dims) {
  Json out = Json::object();
  for (const auto& [n, d] : dims) out[std::to_string(n)] = d;
  return out;
}

// ---------------------------------------------------------------------------
// Reports.

inline Json to_json(const CheckReport& r, bool emit_matrices) {
  Json out{{"claim", r.claim}, {"equal", r.equal}, {"witness", r.witness.empty() ? Json(nullptr) : Json(r.witness)},
           {"basis", r.basis_note}};
  if (emit_matrices) {
    out["lhs"] = to_json(r.lhs);
    out["rhs"] = to_json(r.rhs);
  }
  return out;
}

}  // namespace wittforge
