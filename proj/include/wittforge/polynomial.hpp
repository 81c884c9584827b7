#pragma once

// Sparse multivariate polynomials over a Field, terms kept in lexicographic
// order of exponent vectors (declared variable order).

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wittforge/field.hpp"
#include "wittforge/matrix.hpp"

namespace wittforge {

/// A polynomial ring field[vars]; a field itself when `vars` is empty.
struct Ring {
  FieldRef field = nullptr;
  std::vector<std::string> vars;

  bool is_field() const { return vars.empty(); }
  std::size_t nvars() const { return vars.size(); }
  friend bool operator==(const Ring& a, const Ring& b) { return a.field == b.field && a.vars == b.vars; }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }
  std::string name() const {
    if (vars.empty()) return field->name();
    std::string s = field->name() + "[";
    for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
    return s + "]";
  }
};

class Poly {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, Scalar>;

  Poly() = default;
  Poly(FieldRef field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static Poly zero(const Ring& r) { return Poly(r.field, r.nvars()); }
  static Poly constant(const Ring& r, const Scalar& c) {
    Poly p(r.field, r.nvars());
    p.add_term(Exponent(r.nvars(), 0), r.field->embed(c));
    return p;
  }
  static Poly constant(const Ring& r, long c) { return constant(r, r.field->from_int(c)); }
  static Poly one(const Ring& r) { return constant(r, 1); }
  static Poly variable(const Ring& r, std::size_t i) {
    Exponent e(r.nvars(), 0);
    e.at(i) = 1;
    return monomial(r, e, r.field->one());
  }
  static Poly monomial(const Ring& r, const Exponent& e, const Scalar& c) {
    Poly p(r.field, r.nvars());
    p.add_term(e, r.field->embed(c));
    return p;
  }

  FieldRef field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0); }
  Scalar constant_value() const {
    if (!is_constant()) fail(ErrorCode::NotAField, "non-constant polynomial where a scalar was expected: " + to_string());
    return terms_.empty() ? field_->zero() : terms_.begin()->second;
  }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second.is_one(); }

  static int total(const Exponent& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (total(e) != d) return false;
    return true;
  }

  /// Coefficient of the given monomial (zero if absent).
  Scalar coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_->zero() : it->second;
  }

  void add_term(const Exponent& e, const Scalar& c) {
    if (e.size() != nvars_) fail(ErrorCode::InvalidArgument, "exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.require_compatible(b);
    Poly p = a;
    for (const auto& [e, c] : b.terms_) p.add_term(e, c);
    return p;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.require_compatible(b);
    Poly p(a.field_, a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        p.add_term(e, ca * cb);
      }
    return p;
  }

  Poly scaled(const Scalar& s) const {
    Poly p(field_, nvars_);
    const Scalar t = field_->embed(s);
    for (const auto& [e, c] : terms_) p.add_term(e, c * t);
    return p;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.field_ != b.field_ || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (e != it->first || c != it->second) return false;
      ++it;
    }
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string(const std::vector<std::string>& vars = {}) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e0, c0] = *it;
      const Poly::Exponent& e = e0;
      Scalar c = c0;
      const bool negative = c.field()->kind() == Field::Kind::Rationals && sgn(c.rational()) < 0;
      if (negative) c = -c;
      if (first) os << (negative ? "-" : "");
      else os << (negative ? " - " : " + ");
      first = false;
      const bool monic = c.is_one() && total(e) > 0;
      if (!monic) {
        const bool wrap = c.field()->kind() == Field::Kind::Extension && total(e) > 0;
        os << (wrap ? "(" : "") << c.to_string() << (wrap ? ")" : "");
      }
      bool need_star = !monic;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (need_star) os << "*";
        need_star = true;
        os << (i < vars.size() ? vars[i] : "x" + std::to_string(i));
        if (e[i] > 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

 private:
  void require_compatible(const Poly& b) const {
    if (field_ != b.field_ || nvars_ != b.nvars_) fail(ErrorCode::RingMismatch, "polynomials from different rings");
  }

  FieldRef field_ = nullptr;
  std::size_t nvars_ = 0;
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

namespace detail {

// Recursive-descent parser for expressions such as "x*y - 3/2*z^2 + (x+1)^2".
class PolyParser {
 public:
  PolyParser(const Ring& ring, const std::string& text) : ring_(ring), s_(text) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Poly expr() {
    Poly acc = Poly::zero(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    for (;;) {
      Poly t = term();
      acc = negate ? acc - t : acc + t;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else return acc;
    }
  }
  Poly term() {
    Poly acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        Poly d = power();
        if (!d.is_constant() || d.is_zero()) error("division by a non-constant or zero");
        acc = acc.scaled(d.constant_value().inverse());
      } else {
        return acc;
      }
    }
  }
  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip();
      const long e = integer();
      if (e < 0) error("negative exponent");
      Poly r = Poly::one(ring_);
      for (long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }
  Poly atom() {
    skip();
    if (accept('(')) {
      Poly p = expr();
      if (!accept(')')) error("expected ')'");
      return p;
    }
    if (accept('-')) return -atom();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::constant(ring_, ring_.field->from_rational(mpq_class(s_.substr(start, pos_ - start))));
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) error("expected a term");
    const std::string name = s_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < ring_.vars.size(); ++i)
      if (ring_.vars[i] == name) return Poly::variable(ring_, i);
    error("unknown variable '" + name + "'");
  }

  const Ring& ring_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_poly(const Ring& ring, const std::string& text) { return detail::PolyParser(ring, text).parse(); }

using PMatrix = Matrix<Poly>;

}  // namespace wittforge
