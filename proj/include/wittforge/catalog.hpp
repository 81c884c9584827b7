#pragma once

// Named fields and towers: "Q", "F7", "F9", "Q(sqrt5)", "Q(2^(1/4))", and
// towers written top first such as "F81/F9/F3". A finite field F_{q^k} over
// a base of order q is the first monic irreducible of degree k in the
// enumeration order of Field::element, so names always resolve to the same
// interned field.

#include <cctype>
#include <string>
#include <vector>

#include "wittforge/field.hpp"

namespace wittforge {

/// base[t]/(g) for the first monic irreducible g of degree k over a finite base.
inline FieldRef finite_extension(FieldRef base, int k) {
  if (!base->is_finite()) fail(ErrorCode::UnsupportedField, "finite_extension needs a finite base");
  if (k == 1) return base;
  const std::uint64_t q = base->order();
  for (std::uint64_t idx = 0;; ++idx) {
    poly::Coeffs g;
    std::uint64_t rest = idx;
    for (int j = 0; j < k; ++j) {
      g.push_back(base->element(rest % q));
      rest /= q;
    }
    if (rest != 0) break;
    g.push_back(base->one());
    if (g[0].is_zero()) continue;
    if (decide_irreducible(g).value_or(false)) return Field::extension(base, g);
  }
  fail(ErrorCode::InvalidField, "no irreducible polynomial found");
}

/// Q[t]/(t^2 - n) for a non-square integer n.
inline FieldRef quadratic_field(long n) {
  FieldRef q = Q();
  return Field::extension(q, {q->from_int(-n), q->zero(), q->one()});
}

/// Q(2^(1/4)) = Q(sqrt2)[u]/(u^2 - sqrt2).
inline FieldRef fourth_root_of_two() {
  FieldRef k = quadratic_field(2);
  return Field::extension(k, {-k->generator(), k->zero(), k->one()});
}

namespace detail {

inline bool parse_prime_power(std::uint64_t q, std::int64_t& p, int& k) {
  if (q < 2) return false;
  std::uint64_t d = 2;
  while (d * d <= q && q % d) ++d;
  if (d * d > q) d = q;
  std::uint64_t r = q;
  int e = 0;
  while (r % d == 0) {
    r /= d;
    ++e;
  }
  if (r != 1) return false;
  p = static_cast<std::int64_t>(d);
  k = e;
  return true;
}

inline int exact_log(std::uint64_t q, std::uint64_t base) {
  int k = 0;
  std::uint64_t acc = 1;
  while (acc < q) {
    acc *= base;
    ++k;
  }
  if (acc != q) fail(ErrorCode::InvalidField, std::to_string(q) + " is not a power of " + std::to_string(base));
  return k;
}

inline std::vector<std::string> split_tower(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '/' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

inline FieldRef resolve_token(const std::string& tok, FieldRef base) {
  if (tok == "Q") {
    if (base) fail(ErrorCode::ParseError, "Q must be the bottom of a tower");
    return Q();
  }
  if (tok.size() > 1 && tok[0] == 'F' && std::isdigit(static_cast<unsigned char>(tok[1]))) {
    const std::uint64_t q = std::stoull(tok.substr(1));
    std::int64_t p = 0;
    int k = 0;
    if (!parse_prime_power(q, p, k)) fail(ErrorCode::InvalidField, tok + " is not a prime power field");
    if (!base) {
      FieldRef fp = Fp(p);
      return finite_extension(fp, k);
    }
    if (!base->is_finite() || base->characteristic() != p) fail(ErrorCode::InvalidField, tok + " cannot extend " + base->name());
    return finite_extension(base, exact_log(q, base->order()));
  }
  if (tok == "Q(2^(1/4))") {
    if (!base || base == Q() || base == quadratic_field(2)) return fourth_root_of_two();
    fail(ErrorCode::InvalidField, tok + " cannot extend " + base->name());
  }
  if (tok.rfind("Q(sqrt", 0) == 0 && tok.back() == ')') {
    const long n = std::stol(tok.substr(6, tok.size() - 7));
    if (base && base != Q()) fail(ErrorCode::InvalidField, tok + " must sit directly over Q");
    return quadratic_field(n);
  }
  fail(ErrorCode::ParseError, "unknown field name '" + tok + "'");
}

}  // namespace detail

/// Fields of a tower, bottom first.
inline std::vector<FieldRef> parse_tower(const std::string& text) {
  auto parts = detail::split_tower(text);
  std::vector<FieldRef> out;
  FieldRef base = nullptr;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (it->empty()) fail(ErrorCode::ParseError, "empty field name in '" + text + "'");
    base = detail::resolve_token(*it, base);
    out.push_back(base);
  }
  return out;
}

inline FieldRef parse_field(const std::string& text) { return parse_tower(text).back(); }

}  // namespace wittforge
