// wittforge: command-line front end for forms, transfers, complexes, Koszul
// duality and projective-space checks.
//
// Exit codes: 0 when every check passes, 1 on a mathematical failure (with a
// witness), 2 on usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wittforge/catalog.hpp"
#include "wittforge/homalg.hpp"
#include "wittforge/koszul.hpp"
#include "wittforge/projspace.hpp"
#include "wittforge/quadform.hpp"
#include "wittforge/serialize.hpp"
#include "wittforge/transfer.hpp"
#include "wittforge/verify.hpp"

namespace {

using namespace wittforge;

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

struct GlobalFlags {
  bool json = false;
  std::uint64_t seed = 42;
  int bound = 6;
  bool emit_matrices = false;
};

/// What a subcommand produced.
struct Outcome {
  bool ok = true;
  std::string witness;
  Json body = Json::object();
  std::string human;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Replaces "@path" arguments (and "--opt=@path") by the contents of the file.
std::vector<std::string> expand_file_arguments(int argc, char** argv) {
  std::vector<std::string> out;
  auto load = [](const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read input file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a.size() > 1 && a[0] == '@') {
      a = load(a.substr(1));
    } else if (auto eq = a.find("=@"); a.rfind("--", 0) == 0 && eq != std::string::npos) {
      a = a.substr(0, eq + 1) + load(a.substr(eq + 2));
    }
    out.push_back(a);
  }
  return out;
}

/// JSON when the text parses, otherwise the text as a JSON string.
Json parse_value(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) return Json(text);
  return j;
}

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !parts.empty()) parts.push_back(cur);
  return parts;
}

/// A form given as a Gram matrix (over `field`) or as a form object.
QuadraticForm read_form(const std::string& text, FieldRef field) {
  const Json j = parse_value(text);
  if (j.is_array()) return QuadraticForm(fmatrix_from_json(field, j));
  if (j.is_object()) {
    const QuadraticForm q = form_from_json(j, field);
    if (field && q.field() != field) fail(ErrorCode::FieldMismatch, "form lives over " + q.field()->name() + ", expected " + field->name());
    return q;
  }
  throw UsageError("a form must be a Gram matrix or a {\"field\",\"gram\"} object");
}

Json form_body(const QuadraticForm& q) { return to_json(q); }

std::string gram_string(const QuadraticForm& q) { return q.gram().to_string(); }

// ---------------------------------------------------------------------------
// witt

Outcome witt_diag(const std::string& field, const std::string& form) {
  const QuadraticForm q = read_form(form, parse_field(field));
  const Diagonalization dz = diagonalize(q);
  Outcome o;
  Json entries = Json::array();
  std::string h;
  for (const auto& e : dz.entries) {
    entries.push_back(to_json(e));
    h += (h.empty() ? "" : ", ") + e.to_string();
  }
  const bool certified = q.congruent(dz.basis).gram() == QuadraticForm::diagonal(q.field(), dz.entries).gram();
  o.ok = certified;
  if (!certified) o.witness = "P^T G P differs from the diagonal";
  o.body = Json{{"form", form_body(q)}, {"diagonal", entries}, {"basis", to_json(dz.basis)}, {"certified", certified}};
  o.human = "diagonal <" + h + ">\nbasis P = " + dz.basis.to_string() + "  (P^T G P = D " + (certified ? "holds" : "FAILS") + ")";
  return o;
}

Outcome witt_decompose_cmd(const std::string& field, const std::string& form) {
  const QuadraticForm q = read_form(form, parse_field(field));
  const WittClass c = witt_decompose(q);
  Outcome o;
  o.body = Json{{"form", form_body(q)}, {"class", to_json(c)}};
  o.human = "anisotropic part " + gram_string(c.anisotropic) + " (dim " + std::to_string(c.anisotropic.dim()) + ") plus " +
            std::to_string(c.hyperbolic_count) + " hyperbolic plane(s)";
  if (!c.anisotropy_certificate.empty()) o.human += "\nanisotropy: " + c.anisotropy_certificate;
  return o;
}

Outcome witt_equal_cmd(const std::string& field, const std::string& a, const std::string& b) {
  FieldRef f = parse_field(field);
  const QuadraticForm qa = read_form(a, f), qb = read_form(b, f);
  const bool eq = witt_equal(qa, qb);
  Outcome o;
  o.ok = eq;
  if (!eq) {
    const WittClass diff = witt_decompose(qa.orthogonal_sum(qb.negated()));
    o.witness = "a - b has anisotropic part " + gram_string(diff.anisotropic);
  }
  o.body = Json{{"a", form_body(qa)}, {"b", form_body(qb)}, {"equal", eq}};
  o.human = eq ? "equal in W(" + f->name() + ")" : "not equal in W(" + f->name() + ")";
  return o;
}

Outcome witt_hilbert(const std::string& a_text, const std::string& b_text, const std::string& place) {
  mpq_class a, b;
  try {
    a = mpq_class(a_text);
    b = mpq_class(b_text);
  } catch (const std::invalid_argument&) {
    throw UsageError("a and b must be rational numbers");
  }
  a.canonicalize();
  b.canonicalize();
  Outcome o;
  auto to_place = [](const std::string& s) { return s == "inf" ? Place::real() : Place::finite(std::stol(s)); };
  if (place == "all") {
    Json symbols = Json::object();
    int prod = 1;
    for (const auto& v : relevant_places({a, b})) {
      const int h = hilbert_symbol(a, b, v);
      prod *= h;
      symbols[v.is_real() ? std::string("inf") : std::to_string(v.prime)] = h;
      o.human += (o.human.empty() ? "" : "\n") + std::string(v.is_real() ? "inf" : std::to_string(v.prime)) + ": " + std::to_string(h);
    }
    o.ok = prod == 1;
    if (!o.ok) o.witness = "product of local symbols is -1";
    o.body = Json{{"a", a.get_str()}, {"b", b.get_str()}, {"symbols", symbols}, {"product", prod}};
    o.human += "\nproduct: " + std::to_string(prod);
    return o;
  }
  const Place v = to_place(place);
  if (!v.is_real() && !detail::is_prime(v.prime)) throw UsageError("place must be 'inf', 'all' or a prime");
  const int h = hilbert_symbol(a, b, v);
  o.body = Json{{"a", a.get_str()}, {"b", b.get_str()}, {"place", place}, {"symbol", h}};
  o.human = std::to_string(h);
  return o;
}

// ---------------------------------------------------------------------------
// transfer

/// "E/F" (or a longer tower, whose top and bottom are used).
ExtensionDatum read_extension(const std::string& text) {
  const auto tower = parse_tower(text);
  if (tower.size() < 2) throw UsageError("--ext needs a tower such as F9/F3");
  return ExtensionDatum(tower.front(), tower.back());
}

Outcome report_outcome(const CheckReport& r, bool emit) {
  Outcome o;
  o.ok = r.equal;
  o.witness = r.witness;
  o.body = to_json(r, emit);
  o.human = r.claim + ": " + (r.equal ? "holds" : "FAILS") + "\n(" + r.basis_note + ")";
  if (emit) o.human += "\nlhs = " + r.lhs.to_string() + "\nrhs = " + r.rhs.to_string();
  return o;
}

Outcome transfer_trace(const std::string& ext_text, const std::string& element) {
  const ExtensionDatum ext = read_extension(ext_text);
  const Scalar x = scalar_from_json(ext.top(), parse_value(element));
  const Scalar t = trace(ext, x);
  Outcome o;
  o.body = Json{{"extension", ext.name()}, {"element", to_json(x)}, {"trace", to_json(t)}};
  o.human = t.to_string();
  return o;
}

Outcome transfer_form(const std::string& ext_text) {
  const ExtensionDatum ext = read_extension(ext_text);
  const QuadraticForm t = trace_form(ext);
  Outcome o;
  o.body = Json{{"extension", ext.name()}, {"trace_form", form_body(t)}};
  o.human = gram_string(t);
  return o;
}

Outcome transfer_push(const std::string& ext_text, const std::string& form) {
  const ExtensionDatum ext = read_extension(ext_text);
  const QuadraticForm q = read_form(form, ext.top());
  const QuadraticForm t = scharlau_transfer(ext, q);
  Outcome o;
  o.body = Json{{"extension", ext.name()}, {"form", form_body(q)}, {"transfer", form_body(t)}};
  o.human = gram_string(t);
  return o;
}

Outcome transfer_check_compose(const std::string& tower_text, const std::string& form, bool emit) {
  const auto tower = parse_tower(tower_text);
  if (tower.size() != 3) throw UsageError("--tower needs three fields, e.g. F81/F9/F3");
  const QuadraticForm q = read_form(form, tower[2]);
  return report_outcome(transfer_compose_check(tower[0], tower[1], tower[2], q), emit);
}

Outcome transfer_check_basechange(const std::string& ext_text, const std::string& l_text, const std::string& form, bool emit) {
  const auto tower = parse_tower(ext_text);
  if (tower.size() != 2) throw UsageError("--ext must be a single simple extension E/F");
  FieldRef l = parse_field(l_text);
  const QuadraticForm q = read_form(form, tower[1]);
  return report_outcome(base_change_check(tower[1], l, q), emit);
}

Outcome transfer_check_projection(const std::string& ext_text, const std::string& x, const std::string& y, bool emit) {
  const ExtensionDatum ext = read_extension(ext_text);
  return report_outcome(projection_formula_check(ext, read_form(x, ext.top()), read_form(y, ext.base())), emit);
}

// ---------------------------------------------------------------------------
// complex

ChainComplex read_complex(const std::string& text) {
  const Json j = parse_value(text);
  if (!j.is_object()) throw UsageError("a complex must be a JSON object with ring, terms and diffs");
  return complex_from_json(j);
}

Outcome complex_result(const ChainComplex& c, const std::string& what) {
  Outcome o;
  o.body = Json{{what, to_json(c)}};
  o.human = c.to_string();
  return o;
}

Outcome complex_homology(const std::string& a) {
  const ChainComplex c = read_complex(a);
  const auto h = homology_dims(c);
  Outcome o;
  o.body = Json{{"complex", to_json(c)}, {"homology", to_json(h)}};
  for (const auto& [n, d] : h) o.human += (o.human.empty() ? "" : "\n") + std::string("H_") + std::to_string(n) + " = " + std::to_string(d);
  if (o.human.empty()) o.human = "zero complex";
  return o;
}

// ---------------------------------------------------------------------------
// koszul

KoszulDatum read_koszul(const std::string& field, const std::string& vars, const std::string& section) {
  Ring r{parse_field(field), {}};
  for (auto& v : split_top_level(vars)) {
    v.erase(std::remove_if(v.begin(), v.end(), [](unsigned char c) { return std::isspace(c); }), v.end());
    if (v.empty()) throw UsageError("empty variable name");
    r.vars.push_back(v);
  }
  std::vector<Poly> s;
  const Json j = parse_value(section);
  if (j.is_array()) {
    for (const auto& e : j) s.push_back(poly_from_json(r, e));
  } else {
    for (const auto& p : split_top_level(section)) s.push_back(parse_poly(r, p));
  }
  if (s.empty()) throw UsageError("--section needs at least one polynomial");
  return KoszulDatum(r, s);
}

Json koszul_inputs(const KoszulDatum& k) {
  Json sec = Json::array();
  for (const auto& p : k.section) sec.push_back(p.to_string(k.ring.vars));
  return Json{{"ring", ring_to_json(k.ring)}, {"section", sec}};
}

Outcome koszul_build(const KoszulDatum& k) {
  const ChainComplex c = koszul_complex(k);
  Outcome o;
  o.body = koszul_inputs(k);
  o.body["complex"] = to_json(c);
  o.human = c.to_string();
  return o;
}

Outcome koszul_form_cmd(const KoszulDatum& k, bool emit) {
  const SymmetricSpace s = koszul_form(k);
  Outcome o;
  o.body = koszul_inputs(k);
  o.body["duality"] = Json{{"twist", s.duality.twist}, {"shift", s.duality.shift}};
  o.body["symmetry_sign"] = s.symmetry_sign;
  if (emit) o.body["theta"] = to_json(s.form);
  o.human = "theta: Kos -> Hom(Kos, " + s.duality.twist + "[" + std::to_string(s.duality.shift) + "]), symmetry sign " +
            std::to_string(s.symmetry_sign);
  if (emit)
    for (const auto& [n, m] : s.form.components()) o.human += "\ntheta_" + std::to_string(n) + " = " + m.to_string();
  return o;
}

Outcome koszul_verify_xmap(const KoszulDatum& k, bool emit) {
  const ChainMap x = x_map(k), t = theta_map(k);
  Outcome o;
  o.ok = x == t;
  for (int n : x.source().degrees())
    if (x.component(n) != t.component(n)) {
      o.witness = "degree " + std::to_string(n) + ": x_map " + x.component(n).to_string() + " vs theta " + t.component(n).to_string();
      break;
    }
  if (!o.ok && o.witness.empty()) o.witness = "x_map and theta differ";
  o.body = koszul_inputs(k);
  o.body["claim"] = "x_map = theta";
  o.body["equal"] = o.ok;
  if (emit) {
    o.body["x_map"] = to_json(x);
    o.body["theta"] = to_json(t);
  }
  o.human = std::string("x_map = theta: ") + (o.ok ? "pass" : "FAIL");
  return o;
}

Outcome koszul_verify_trace(const KoszulDatum& k, int bound, bool emit) {
  Outcome o;
  o.body = koszul_inputs(k);
  o.body["bound"] = bound;
  try {
    const TraceDiagram t = trace_diagram(k, bound);
    o.ok = t.homotopy_verified;
    if (!o.ok) o.witness = "d h + h d differs from down o trace";
    o.body["regular"] = true;
    o.body["homotopy_verified"] = t.homotopy_verified;
    if (emit) {
      o.body["top"] = to_json(t.top);
      o.body["middle"] = to_json(t.middle);
      Json h = Json::object();
      for (const auto& [n, m] : t.homotopy) h[std::to_string(n)] = to_json(m, k.ring);
      o.body["homotopy"] = h;
    }
    o.human = "section regular through internal degree " + std::to_string(bound) + "; trace homotopy " + (o.ok ? "verified" : "FAILS");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotRegularSequence) throw;
    o.ok = false;
    o.witness = e.what();
    o.body["regular"] = false;
    o.human = "section rejected";
  }
  return o;
}

Outcome koszul_verify_split(const KoszulDatum& k) {
  const SplitFactorization f = split_factorization(k);
  Outcome o;
  const auto& m = f.multiplicativity;
  const bool xmap_checked = k.rank() <= 3;
  o.ok = f.cone_identified && m.iso_is_chain_isomorphism && m.theta_multiplicative && (!xmap_checked || m.xmap_multiplicative) &&
         f.lagrangian.isotropic && f.lagrangian.exact;
  if (!o.ok) {
    if (!f.cone_identified) o.witness = "last factor is not cone(s_1)";
    else if (!m.iso_is_chain_isomorphism) o.witness = "split map is not a chain isomorphism";
    else if (!m.theta_multiplicative) o.witness = "theta is not multiplicative";
    else if (xmap_checked && !m.xmap_multiplicative) o.witness = "x_map is not multiplicative";
    else o.witness = "Lagrangian certificate fails";
  }
  o.body = koszul_inputs(k);
  o.body["split"] = {f.d1, k.rank() - f.d1};
  o.body["cone_identified"] = f.cone_identified;
  o.body["split_isomorphism"] = m.iso_is_chain_isomorphism;
  o.body["theta_multiplicative"] = m.theta_multiplicative;
  if (xmap_checked) o.body["xmap_multiplicative"] = m.xmap_multiplicative;
  o.body["lagrangian"] = Json{{"isotropic", f.lagrangian.isotropic}, {"exact", f.lagrangian.exact}};
  o.human = std::string("split ") + std::to_string(f.d1) + "+" + std::to_string(k.rank() - f.d1) + ": cone " + (f.cone_identified ? "ok" : "FAIL") +
            ", theta multiplicative " + (m.theta_multiplicative ? "ok" : "FAIL") + ", Lagrangian " +
            (f.lagrangian.isotropic && f.lagrangian.exact ? "ok" : "FAIL");
  return o;
}

// ---------------------------------------------------------------------------
// proj

Json cohomology_json(const CohomologyReport& c) {
  Json w = Json::object();
  for (const auto& [i, ws] : c.witnesses) {
    Json list = Json::array();
    for (const auto& a : ws) list.push_back(monomial_string(a));
    w[std::to_string(i)] = list;
  }
  return Json{{"r", c.r}, {"m", c.m}, {"field", c.field->name()}, {"h", c.dims}, {"closed_form", c.closed_form}, {"agrees", c.agrees}, {"witnesses", w}};
}

std::string cohomology_human(const CohomologyReport& c) {
  std::string s;
  for (std::size_t i = 0; i < c.dims.size(); ++i) s += "h^" + std::to_string(i) + " = " + std::to_string(c.dims[i]) + "\n";
  for (const auto& [i, ws] : c.witnesses) {
    s += "witnesses for h^" + std::to_string(i) + ":";
    for (const auto& a : ws) s += " " + monomial_string(a);
    s += "\n";
  }
  s += std::string("closed formula ") + (c.agrees ? "agrees" : "DISAGREES");
  return s;
}

Outcome proj_cohomology(int r, int m, const std::string& field) {
  const CohomologyReport c = cohomology(r, m, parse_field(field));
  Outcome o;
  o.ok = c.agrees;
  if (!o.ok) o.witness = "monomial decomposition disagrees with the closed formula";
  o.body = cohomology_json(c);
  o.human = cohomology_human(c);
  return o;
}

Outcome proj_phi_r(int r, const std::string& field) {
  const PhiRCertificate c = pushforward_phi_r(r, parse_field(field));
  Outcome o;
  o.ok = c.pushforward_zero;
  if (!o.ok) o.witness = "O(" + std::to_string(c.twist) + ") has nonzero cohomology";
  o.body = Json{{"r", r}, {"twist", c.twist}, {"canonical_twist", c.canonical}, {"pushforward_zero", c.pushforward_zero},
                {"cohomology", cohomology_json(c.cohomology)}};
  o.human = "phi_r lives on O(" + std::to_string(c.twist) + ") with O(" + std::to_string(c.twist) + ")^2 = O(" + std::to_string(c.canonical) +
            "); push-forward " + (c.pushforward_zero ? "is zero" : "is NOT zero");
  return o;
}

// ---------------------------------------------------------------------------
// verify

Outcome verify_all(const VerifyOptions& opt, const std::string& only) {
  Outcome o;
  Json suites = Json::array();
  std::ostringstream h;
  std::size_t pass = 0, fail_count = 0, inconclusive = 0;
  bool matched = false;
  for (const auto& e : all_suites()) {
    if (!only.empty() && only != e.name) continue;
    matched = true;
    const SuiteResult r = run_suite(e, opt);
    suites.push_back(to_json(r));
    pass += r.count(CaseStatus::Pass);
    fail_count += r.count(CaseStatus::Fail);
    inconclusive += r.count(CaseStatus::Inconclusive);
    h << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.name << std::right << std::setw(5) << r.cases.size() << " cases  "
      << std::fixed << std::setprecision(2) << r.seconds << " s\n";
    for (const auto& c : r.cases)
      if (c.status != CaseStatus::Pass) {
        h << "     " << c.id << " " << to_string(c.status) << ": " << c.witness << "\n";
        if (o.witness.empty()) o.witness = c.id + ": " + c.witness;
      }
  }
  if (!matched) throw UsageError("unknown suite '" + only + "'");
  o.ok = fail_count == 0 && inconclusive == 0;
  o.body = Json{{"seed", opt.seed},
                {"bound", opt.bound},
                {"summary", {{"pass", pass}, {"fail", fail_count}, {"inconclusive", inconclusive}}},
                {"suites", suites}};
  h << pass << " passed, " << fail_count << " failed, " << inconclusive << " inconclusive";
  o.human = h.str();
  return o;
}

int usage_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidField:
    case ErrorCode::BoundsExceeded:
    case ErrorCode::FieldMismatch:
    case ErrorCode::RingMismatch: return kExitUsage;
    default: return kExitMathFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Witt-group push-forwards and their verification", "wittforge"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags g;
  app.add_flag("--json", g.json, "Emit JSON on stdout");
  app.add_option("--seed", g.seed, "Seed for randomized sweeps");
  app.add_option("--bound", g.bound, "Internal-degree bound for graded exactness (WITTFORGE_BOUND overrides)");
  app.add_flag("--emit-matrices", g.emit_matrices, "Include all matrices in reports");

  std::function<Outcome()> action;
  std::string command;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    s->parse_complete_callback([&command, parent, name] { command = parent->get_name() + " " + name; });
    return s;
  };

  // witt
  CLI::App* witt = app.add_subcommand("witt", "Quadratic forms and Witt classes");
  witt->require_subcommand(1);
  witt->fallthrough();
  std::string field = "Q", form, form_a, form_b, hil_a, hil_b, place = "all";
  {
    auto* s = leaf(witt, "diag", "Diagonalize a form with a congruence certificate");
    s->add_option("--field", field, "Field name, e.g. Q, F5, F9");
    s->add_option("--form", form, "Gram matrix or form object")->required();
    s->callback([&] { action = [&] { return witt_diag(field, form); }; });
  }
  {
    auto* s = leaf(witt, "decompose", "Witt decomposition into anisotropic part and hyperbolic planes");
    s->add_option("--field", field, "Field name");
    s->add_option("--form", form, "Gram matrix or form object")->required();
    s->callback([&] { action = [&] { return witt_decompose_cmd(field, form); }; });
  }
  {
    auto* s = leaf(witt, "equal", "Compare two forms in the Witt group");
    s->add_option("--field", field, "Field name");
    s->add_option("--a", form_a, "First form")->required();
    s->add_option("--b", form_b, "Second form")->required();
    s->callback([&] { action = [&] { return witt_equal_cmd(field, form_a, form_b); }; });
  }
  {
    auto* s = leaf(witt, "hilbert", "Hilbert symbol (a,b)_v over Q");
    s->add_option("-a", hil_a, "First rational")->required()->allow_extra_args(false);
    s->add_option("-b", hil_b, "Second rational")->required()->allow_extra_args(false);
    s->add_option("--place", place, "'inf', a prime, or 'all' for the product formula");
    s->callback([&] { action = [&] { return witt_hilbert(hil_a, hil_b, place); }; });
  }

  // transfer
  CLI::App* tr = app.add_subcommand("transfer", "Finite extensions and the Scharlau transfer");
  tr->require_subcommand(1);
  tr->fallthrough();
  std::string ext, element, tower, lfield, form_x, form_y;
  {
    auto* s = leaf(tr, "trace", "Trace of an element");
    s->add_option("--ext", ext, "Extension E/F, e.g. F9/F3")->required();
    s->add_option("--element", element, "Element as a coefficient array over the base")->required();
    s->callback([&] { action = [&] { return transfer_trace(ext, element); }; });
  }
  {
    auto* s = leaf(tr, "form", "Trace form of an extension");
    s->add_option("--ext", ext, "Extension E/F")->required();
    s->callback([&] { action = [&] { return transfer_form(ext); }; });
  }
  {
    auto* s = leaf(tr, "push", "Scharlau transfer of a form over E");
    s->add_option("--ext", ext, "Extension E/F")->required();
    s->add_option("--form", form, "Form over E")->required();
    s->callback([&] { action = [&] { return transfer_push(ext, form); }; });
  }
  {
    auto* s = leaf(tr, "check-compose", "Transfer along E/K/F versus composed transfers");
    s->add_option("--tower", tower, "Tower E/K/F, e.g. F81/F9/F3")->required();
    s->add_option("--form", form, "Form over E")->required();
    s->callback([&] { action = [&] { return transfer_check_compose(tower, form, g.emit_matrices); }; });
  }
  {
    auto* s = leaf(tr, "check-basechange", "Base change of the transfer along L/F");
    s->add_option("--ext", ext, "Simple extension E/F")->required();
    s->add_option("--L", lfield, "Extension L of F")->required();
    s->add_option("--form", form, "Form over E")->required();
    s->callback([&] { action = [&] { return transfer_check_basechange(ext, lfield, form, g.emit_matrices); }; });
  }
  {
    auto* s = leaf(tr, "check-projection", "Projection formula");
    s->add_option("--ext", ext, "Extension E/F")->required();
    s->add_option("--x", form_x, "Form over E")->required();
    s->add_option("--y", form_y, "Form over F")->required();
    s->callback([&] { action = [&] { return transfer_check_projection(ext, form_x, form_y, g.emit_matrices); }; });
  }

  // complex
  CLI::App* cx = app.add_subcommand("complex", "Bounded complexes of free modules");
  cx->require_subcommand(1);
  cx->fallthrough();
  std::string ca, cb, twist = "K";
  int dshift = 0;
  {
    auto* s = leaf(cx, "tensor", "Tensor product A (x) B");
    s->add_option("--a", ca, "Complex A")->required();
    s->add_option("--b", cb, "Complex B")->required();
    s->callback([&] { action = [&] { return complex_result(tensor(read_complex(ca), read_complex(cb)), "tensor"); }; });
  }
  {
    auto* s = leaf(cx, "hom", "Internal Hom(A, B)");
    s->add_option("--a", ca, "Complex A")->required();
    s->add_option("--b", cb, "Complex B")->required();
    s->callback([&] { action = [&] { return complex_result(hom_complex(read_complex(ca), read_complex(cb)), "hom"); }; });
  }
  {
    auto* s = leaf(cx, "dual", "Dual Hom(A, K[shift]) and the bidual check");
    s->add_option("--a", ca, "Complex A")->required();
    s->add_option("--shift", dshift, "Shift of the dualizing line");
    s->add_option("--twist", twist, "Name of the twist");
    s->callback([&] {
      action = [&] {
        const ChainComplex a = read_complex(ca);
        const DualityDatum dd{twist, dshift};
        const ChainComplex da = dualize(a, dd);
        Outcome o = complex_result(da, "dual");
        const ChainMap lhs = compose(dualize(bidual_map(a, dd), dd), bidual_map(da, dd));
        o.ok = lhs == identity_map(da);
        if (!o.ok) o.witness = "D(bid_A) o bid_{DA} is not the identity";
        o.body["bidual_coherent"] = o.ok;
        o.human += std::string("\nD(bid_A) o bid_{DA} = Id: ") + (o.ok ? "holds" : "FAILS");
        return o;
      };
    });
  }
  {
    auto* s = leaf(cx, "homology", "Homology dimensions over a field");
    s->add_option("--a", ca, "Complex A")->required();
    s->callback([&] { action = [&] { return complex_homology(ca); }; });
  }

  // koszul
  CLI::App* kz = app.add_subcommand("koszul", "Koszul complexes of sections");
  kz->require_subcommand(1);
  kz->fallthrough();
  std::string kfield = "Q", kvars, ksection;
  auto koszul_leaf = [&](const std::string& name, const std::string& desc) {
    auto* s = leaf(kz, name, desc);
    s->add_option("--field", kfield, "Coefficient field");
    s->add_option("--vars", kvars, "Comma-separated variables")->required();
    s->add_option("--section", ksection, "Comma-separated section entries")->required();
    return s;
  };
  koszul_leaf("build", "Koszul complex of the section")->callback([&] {
    action = [&] { return koszul_build(read_koszul(kfield, kvars, ksection)); };
  });
  koszul_leaf("form", "The form theta and its symmetry sign")->callback([&] {
    action = [&] { return koszul_form_cmd(read_koszul(kfield, kvars, ksection), g.emit_matrices); };
  });
  koszul_leaf("verify-xmap", "Check x_map = theta")->callback([&] {
    action = [&] { return koszul_verify_xmap(read_koszul(kfield, kvars, ksection), g.emit_matrices); };
  });
  koszul_leaf("verify-trace", "Regularity and the trace homotopy")->callback([&] {
    action = [&] { return koszul_verify_trace(read_koszul(kfield, kvars, ksection), g.bound, g.emit_matrices); };
  });
  koszul_leaf("verify-split", "Split factorization of the Koszul form")->callback([&] {
    action = [&] { return koszul_verify_split(read_koszul(kfield, kvars, ksection)); };
  });

  // proj
  CLI::App* pj = app.add_subcommand("proj", "Projective space");
  pj->require_subcommand(1);
  pj->fallthrough();
  int pr = 1, pm = 0;
  std::string pfield = "Q";
  {
    auto* s = leaf(pj, "cohomology", "h^i(P^r, O(m))");
    s->add_option("--r", pr, "Dimension r")->required();
    s->add_option("--m", pm, "Twist m")->required()->allow_extra_args(false);
    s->add_option("--field", pfield, "Field");
    s->callback([&] { action = [&] { return proj_cohomology(pr, pm, pfield); }; });
  }
  {
    auto* s = leaf(pj, "phi-r", "Push-forward of phi_r to the point");
    s->add_option("--r", pr, "Dimension r")->required();
    s->add_option("--field", pfield, "Field");
    s->callback([&] { action = [&] { return proj_phi_r(pr, pfield); }; });
  }

  // verify
  CLI::App* vf = app.add_subcommand("verify", "Seeded verification suites");
  vf->require_subcommand(1);
  vf->fallthrough();
  std::string only;
  int sweep = 60;
  {
    auto* s = leaf(vf, "all", "Run every suite");
    s->add_option("--suite", only, "Run only the named suite");
    s->add_option("--cases", sweep, "Size of each randomized sweep")->check(CLI::PositiveNumber);
    s->callback([&] {
      action = [&] {
        VerifyOptions opt;
        opt.seed = g.seed;
        opt.bound = g.bound;
        opt.cases = sweep;
        return verify_all(opt, only);
      };
    });
  }

  std::vector<std::string> args;
  try {
    args = expand_file_arguments(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (const char* env = std::getenv("WITTFORGE_BOUND")) {
    try {
      g.bound = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: WITTFORGE_BOUND must be an integer\n";
      return kExitUsage;
    }
  }
  if (g.bound < 0) {
    std::cerr << "error: bound must be nonnegative\n";
    return kExitUsage;
  }

  auto emit_error = [&](const std::string& code, const std::string& message, int exit_code) {
    if (g.json) {
      Json out{{"command", command}, {"status", exit_code == kExitUsage ? "usage-error" : "fail"}, {"error", code}, {"witness", message}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cerr << "error: " << message << "\n";
    }
    return exit_code;
  };

  try {
    Outcome o = action();
    if (g.json) {
      Json out{{"command", command}, {"status", o.ok ? "pass" : "fail"}};
      out["witness"] = o.ok ? Json(nullptr) : Json(o.witness);
      for (auto& [k, v] : o.body.items()) out[k] = v;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << o.human << "\n";
      if (!o.ok) std::cout << "FAIL: " << o.witness << "\n";
    }
    return o.ok ? kExitPass : kExitMathFailure;
  } catch (const UsageError& e) {
    return emit_error("UsageError", e.what(), kExitUsage);
  } catch (const Error& e) {
    return emit_error(std::string(to_string(e.code())), e.what(), usage_code(e.code()));
  } catch (const nlohmann::json::exception& e) {
    return emit_error("ParseError", e.what(), kExitUsage);
  } catch (const std::invalid_argument& e) {
    return emit_error("ParseError", e.what(), kExitUsage);
  }
}
