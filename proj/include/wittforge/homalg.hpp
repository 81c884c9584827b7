#pragma once

// Bounded chain complexes of finite free modules over a field or a
// polynomial ring, homological indexing (d_n: A_n -> A_{n-1}).
//
// Sign conventions, fixed once:
//   tensor   d(a (x) b) = da (x) b + (-1)^|a| a (x) db
//   Hom      Hom(A,B)_n = prod_i Hom(A_i, B_{i+n}),  D(f) = (-1)^|f| d_B f - f d_A
//   shift    (T^k A)_n = A_{n-k} with differential (-1)^k d
//   cone     Cone(f)_n = B_n (+) A_{n-1},  d = [[d_B, f], [0, -d_A]]
// Module bases: the tensor basis runs over i ascending, then a (x) b in
// Kronecker order; a Hom block Hom(A_i, B_j) is a rank(B_j) x rank(A_i)
// matrix flattened row-major.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittforge/matrix.hpp"
#include "wittforge/polynomial.hpp"

namespace wittforge {

inline constexpr std::size_t kMaxTotalRank = 4096;

inline PMatrix pzeros(const Ring& r, std::size_t rows, std::size_t cols) { return PMatrix(rows, cols, Poly::zero(r)); }
inline PMatrix pidentity(const Ring& r, std::size_t n) { return PMatrix::identity(n, Poly::zero(r), Poly::one(r)); }
inline Poly sign_poly(const Ring& r, int s) { return Poly::constant(r, s); }
inline int parity_sign(long n) { return (n % 2 == 0) ? 1 : -1; }
/// (-1)^(n(n+1)/2).
inline int epsilon(long n) {
  const long m = ((n % 4) + 4) % 4;
  return (m == 1 || m == 2) ? -1 : 1;
}

inline PMatrix to_pmatrix(const Ring& r, const FMatrix& m) {
  PMatrix out = pzeros(r, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Poly::constant(r, m(i, j));
  return out;
}

/// Entries must be constants.
inline FMatrix to_fmatrix(const Ring& r, const PMatrix& m) {
  FMatrix out = zeros(r.field, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).constant_value();
  return out;
}

class ChainComplex {
 public:
  ChainComplex() = default;
  /// `diffs[n]` is the rank(n-1) x rank(n) matrix of d_n; missing entries are zero.
  ChainComplex(Ring ring, std::map<int, std::size_t> ranks, std::map<int, PMatrix> diffs)
      : ring_(std::move(ring)) {
    std::size_t total = 0;
    for (const auto& [n, r] : ranks)
      if (r > 0) {
        ranks_[n] = r;
        total += r;
      }
    if (total > kMaxTotalRank) fail(ErrorCode::BoundsExceeded, "complex of total rank " + std::to_string(total) + " exceeds " + std::to_string(kMaxTotalRank));
    for (auto& [n, m] : diffs) {
      if (m.rows() != rank(n - 1) || m.cols() != rank(n))
        fail(ErrorCode::InvalidArgument, "d_" + std::to_string(n) + " has shape " + m.shape() + ", expected " +
                                             std::to_string(rank(n - 1)) + "x" + std::to_string(rank(n)));
      if (m.rows() > 0 && m.cols() > 0 && !m.is_zero()) {
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).field() != ring_.field || m(i, j).nvars() != ring_.nvars()) fail(ErrorCode::RingMismatch, "differential entry outside " + ring_.name());
        diffs_[n] = std::move(m);
      }
    }
    for (const auto& [n, m] : diffs_) {
      auto it = diffs_.find(n - 1);
      if (it != diffs_.end() && !(it->second * m).is_zero())
        fail(ErrorCode::InvalidArgument, "d_" + std::to_string(n - 1) + " o d_" + std::to_string(n) + " != 0");
    }
  }

  /// R in degree `degree`, rank 1.
  static ChainComplex line(const Ring& r, int degree = 0) { return ChainComplex(r, {{degree, 1}}, {}); }

  const Ring& ring() const { return ring_; }
  std::size_t rank(int n) const {
    auto it = ranks_.find(n);
    return it == ranks_.end() ? 0 : it->second;
  }
  const std::map<int, std::size_t>& ranks() const { return ranks_; }
  PMatrix d(int n) const {
    auto it = diffs_.find(n);
    return it == diffs_.end() ? pzeros(ring_, rank(n - 1), rank(n)) : it->second;
  }
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [n, r] : ranks_) out.push_back(n);
    return out;
  }
  bool empty() const { return ranks_.empty(); }
  int min_degree() const { return ranks_.empty() ? 0 : ranks_.begin()->first; }
  int max_degree() const { return ranks_.empty() ? -1 : ranks_.rbegin()->first; }
  std::size_t total_rank() const {
    std::size_t t = 0;
    for (const auto& [n, r] : ranks_) t += r;
    return t;
  }

  friend bool operator==(const ChainComplex& a, const ChainComplex& b) {
    if (a.ring_ != b.ring_ || a.ranks_ != b.ranks_) return false;
    for (int n : a.degrees())
      if (a.d(n) != b.d(n)) return false;
    if (!a.empty())
      if (a.d(a.max_degree() + 1) != b.d(b.max_degree() + 1)) return false;
    return true;
  }
  friend bool operator!=(const ChainComplex& a, const ChainComplex& b) { return !(a == b); }

  std::string to_string() const {
    std::string s = "complex over " + ring_.name() + ":";
    for (int n : degrees()) {
      s += " [" + std::to_string(n) + "] rank " + std::to_string(rank(n));
      if (rank(n - 1) > 0) s += " d=" + d(n).to_string();
    }
    return s;
  }

 private:
  Ring ring_;
  std::map<int, std::size_t> ranks_;
  std::map<int, PMatrix> diffs_;
};

/// Degree-preserving chain map; component n is rank(target_n) x rank(source_n).
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(ChainComplex source, ChainComplex target, std::map<int, PMatrix> components, bool verify = true)
      : source_(std::move(source)), target_(std::move(target)) {
    if (source_.ring() != target_.ring()) fail(ErrorCode::RingMismatch, "chain map between different rings");
    for (auto& [n, m] : components) {
      if (m.rows() != target_.rank(n) || m.cols() != source_.rank(n))
        fail(ErrorCode::InvalidArgument, "component " + std::to_string(n) + " has shape " + m.shape());
      if (m.rows() > 0 && m.cols() > 0) components_[n] = std::move(m);
    }
    if (verify) {
      if (auto bad = first_noncommuting_degree())
        fail(ErrorCode::NotAChainMap, "d f != f d in degree " + std::to_string(*bad));
    }
  }

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  PMatrix component(int n) const {
    auto it = components_.find(n);
    return it == components_.end() ? pzeros(source_.ring(), target_.rank(n), source_.rank(n)) : it->second;
  }
  const std::map<int, PMatrix>& components() const { return components_; }

  /// Degree n where d_T f_n != f_{n-1} d_S, if any.
  std::optional<int> first_noncommuting_degree() const {
    std::vector<int> ns = source_.degrees();
    for (int n : target_.degrees()) ns.push_back(n + 1);
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    for (int n : ns)
      if (target_.d(n) * component(n) != component(n - 1) * source_.d(n)) return n;
    return std::nullopt;
  }
  bool is_chain_map() const { return !first_noncommuting_degree().has_value(); }

  /// Every component square and invertible over the coefficient field
  /// (components must be constant matrices).
  bool is_degreewise_isomorphism() const {
    if (source_.ranks() != target_.ranks()) return false;
    for (int n : source_.degrees())
      if (!inverse(to_fmatrix(source_.ring(), component(n)))) return false;
    return true;
  }

  friend bool operator==(const ChainMap& a, const ChainMap& b) {
    if (a.source_ != b.source_ || a.target_ != b.target_) return false;
    for (int n : a.source_.degrees())
      if (a.component(n) != b.component(n)) return false;
    return true;
  }

  ChainMap scaled(int s) const {
    std::map<int, PMatrix> c;
    for (const auto& [n, m] : components_) c[n] = m.scaled(sign_poly(source_.ring(), s));
    return ChainMap(source_, target_, c, false);
  }

 private:
  ChainComplex source_, target_;
  std::map<int, PMatrix> components_;
};

inline ChainMap identity_map(const ChainComplex& a) {
  std::map<int, PMatrix> c;
  for (int n : a.degrees()) c[n] = pidentity(a.ring(), a.rank(n));
  return ChainMap(a, a, c, false);
}

inline ChainMap zero_map(const ChainComplex& a, const ChainComplex& b) { return ChainMap(a, b, {}, false); }

/// g o f.
inline ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (f.target() != g.source()) fail(ErrorCode::InvalidArgument, "composing maps whose complexes do not match");
  std::map<int, PMatrix> c;
  for (int n : f.source().degrees()) c[n] = g.component(n) * f.component(n);
  return ChainMap(f.source(), g.target(), c, false);
}

inline void require_same_ring(const ChainComplex& a, const ChainComplex& b) {
  if (a.ring() != b.ring()) fail(ErrorCode::RingMismatch, a.ring().name() + " vs " + b.ring().name());
}

// ---------------------------------------------------------------------------
// Shift.

inline ChainComplex shift(const ChainComplex& a, int k) {
  std::map<int, std::size_t> ranks;
  std::map<int, PMatrix> diffs;
  const Poly s = sign_poly(a.ring(), parity_sign(k));
  for (int n : a.degrees()) {
    ranks[n + k] = a.rank(n);
    if (a.rank(n - 1) > 0) diffs[n + k] = a.d(n).scaled(s);
  }
  return ChainComplex(a.ring(), ranks, diffs);
}

// ---------------------------------------------------------------------------
// Tensor product.

/// Offsets of the A_i (x) B_{n-i} blocks inside (A (x) B)_n.
inline std::map<int, std::size_t> tensor_offsets(const ChainComplex& a, const ChainComplex& b, int n) {
  std::map<int, std::size_t> off;
  std::size_t pos = 0;
  for (int i : a.degrees()) {
    const std::size_t rb = b.rank(n - i);
    if (rb == 0) continue;
    off[i] = pos;
    pos += a.rank(i) * rb;
  }
  return off;
}

inline ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
  require_same_ring(a, b);
  const Ring& r = a.ring();
  std::map<int, std::size_t> ranks;
  for (int i : a.degrees())
    for (int j : b.degrees()) ranks[i + j] += a.rank(i) * b.rank(j);
  std::map<int, PMatrix> diffs;
  for (const auto& [n, rk] : ranks) {
    const std::size_t rlow = ranks.count(n - 1) ? ranks[n - 1] : 0;
    if (rlow == 0) continue;
    PMatrix m = pzeros(r, rlow, rk);
    const auto src = tensor_offsets(a, b, n), dst = tensor_offsets(a, b, n - 1);
    for (const auto& [i, off] : src) {
      const int j = n - i;
      if (dst.count(i - 1) && a.rank(i - 1) > 0) m.set_block(dst.at(i - 1), off, kronecker(a.d(i), pidentity(r, b.rank(j))));
      if (dst.count(i) && b.rank(j - 1) > 0)
        m.set_block(dst.at(i), off, kronecker(pidentity(r, a.rank(i)), b.d(j)).scaled(sign_poly(r, parity_sign(i))));
    }
    diffs[n] = m;
  }
  return ChainComplex(r, ranks, diffs);
}

/// f (x) g for degree-0 maps: block (i,j) is f_i (x) g_j.
inline ChainMap tensor(const ChainMap& f, const ChainMap& g) {
  const ChainComplex src = tensor(f.source(), g.source()), tgt = tensor(f.target(), g.target());
  std::map<int, PMatrix> c;
  for (int n : src.degrees()) {
    PMatrix m = pzeros(src.ring(), tgt.rank(n), src.rank(n));
    const auto so = tensor_offsets(f.source(), g.source(), n), to = tensor_offsets(f.target(), g.target(), n);
    for (const auto& [i, off] : so)
      if (to.count(i)) m.set_block(to.at(i), off, kronecker(f.component(i), g.component(n - i)));
    c[n] = m;
  }
  return ChainMap(src, tgt, c, false);
}

/// A (x) R -> A where R is the unit complex.
inline ChainMap right_unitor(const ChainComplex& a) {
  const ChainComplex src = tensor(a, ChainComplex::line(a.ring(), 0));
  std::map<int, PMatrix> c;
  for (int n : a.degrees()) c[n] = pidentity(a.ring(), a.rank(n));
  return ChainMap(src, a, c);
}

/// R (x) A -> A.
inline ChainMap left_unitor(const ChainComplex& a) {
  const ChainComplex src = tensor(ChainComplex::line(a.ring(), 0), a);
  std::map<int, PMatrix> c;
  for (int n : a.degrees()) c[n] = pidentity(a.ring(), a.rank(n));
  return ChainMap(src, a, c);
}

/// (A (x) B) (x) C -> A (x) (B (x) C), (a (x) b) (x) c -> a (x) (b (x) c).
inline ChainMap associator(const ChainComplex& a, const ChainComplex& b, const ChainComplex& cc) {
  const ChainComplex ab = tensor(a, b), bc = tensor(b, cc);
  const ChainComplex src = tensor(ab, cc), tgt = tensor(a, bc);
  std::map<int, PMatrix> comps;
  for (int n : src.degrees()) {
    PMatrix m = pzeros(src.ring(), tgt.rank(n), src.rank(n));
    const auto so = tensor_offsets(ab, cc, n), to = tensor_offsets(a, bc, n);
    for (const auto& [ij, off_src] : so) {
      const int k = n - ij;
      const auto ab_off = tensor_offsets(a, b, ij);
      for (const auto& [i, off_ab] : ab_off) {
        const int j = ij - i;
        const auto bc_off = tensor_offsets(b, cc, j + k);
        const std::size_t ra = a.rank(i), rb = b.rank(j), rc = cc.rank(k);
        for (std::size_t x = 0; x < ra; ++x)
          for (std::size_t y = 0; y < rb; ++y)
            for (std::size_t z = 0; z < rc; ++z) {
              const std::size_t col = off_src + (off_ab + x * rb + y) * rc + z;
              const std::size_t row = to.at(i) + x * bc.rank(j + k) + bc_off.at(j) + y * rc + z;
              m(row, col) = Poly::one(src.ring());
            }
      }
    }
    comps[n] = m;
  }
  return ChainMap(src, tgt, comps);
}

// ---------------------------------------------------------------------------
// Hom complex.

/// Offsets of the Hom(A_i, B_{i+n}) blocks inside Hom(A,B)_n.
inline std::map<int, std::size_t> hom_offsets(const ChainComplex& a, const ChainComplex& b, int n) {
  std::map<int, std::size_t> off;
  std::size_t pos = 0;
  for (int i : a.degrees()) {
    const std::size_t rb = b.rank(i + n);
    if (rb == 0) continue;
    off[i] = pos;
    pos += rb * a.rank(i);
  }
  return off;
}

/// vec(M f) for row-major vec of f with `cols` columns.
inline PMatrix left_multiplication(const Ring& r, const PMatrix& m, std::size_t cols) { return kronecker(m, pidentity(r, cols)); }
/// vec(f N) for row-major vec of f with `rows` rows.
inline PMatrix right_multiplication(const Ring& r, const PMatrix& nmat, std::size_t rows) {
  return kronecker(pidentity(r, rows), nmat.transpose());
}

inline ChainComplex hom_complex(const ChainComplex& a, const ChainComplex& b) {
  require_same_ring(a, b);
  const Ring& r = a.ring();
  std::map<int, std::size_t> ranks;
  for (int i : a.degrees())
    for (int j : b.degrees()) ranks[j - i] += a.rank(i) * b.rank(j);
  std::map<int, PMatrix> diffs;
  for (const auto& [n, rk] : ranks) {
    const std::size_t rlow = ranks.count(n - 1) ? ranks[n - 1] : 0;
    if (rlow == 0) continue;
    PMatrix m = pzeros(r, rlow, rk);
    const auto src = hom_offsets(a, b, n), dst = hom_offsets(a, b, n - 1);
    for (const auto& [i, off] : src) {
      const std::size_t ra = a.rank(i), rb = b.rank(i + n);
      // (-1)^n d_B o f lands in Hom(A_i, B_{i+n-1})
      if (dst.count(i) && b.rank(i + n - 1) > 0)
        m.set_block(dst.at(i), off, left_multiplication(r, b.d(i + n), ra).scaled(sign_poly(r, parity_sign(n))));
      // -f o d_A lands in Hom(A_{i+1}, B_{i+n})
      if (dst.count(i + 1) && a.rank(i + 1) > 0)
        m.set_block(dst.at(i + 1), off, -right_multiplication(r, a.d(i + 1), rb));
    }
    diffs[n] = m;
  }
  return ChainComplex(r, ranks, diffs);
}

/// An element of Hom(A,B)_n as a family of block matrices f_i: A_i -> B_{i+n}.
using HomElement = std::map<int, PMatrix>;

inline PMatrix hom_vector(const ChainComplex& a, const ChainComplex& b, int n, const HomElement& f) {
  const auto off = hom_offsets(a, b, n);
  std::size_t total = 0;
  for (const auto& [i, o] : off) total += a.rank(i) * b.rank(i + n);
  PMatrix v = pzeros(a.ring(), total, 1);
  for (const auto& [i, blk] : f) {
    if (!off.count(i)) continue;
    for (std::size_t r = 0; r < blk.rows(); ++r)
      for (std::size_t c = 0; c < blk.cols(); ++c) v(off.at(i) + r * blk.cols() + c, 0) = blk(r, c);
  }
  return v;
}

inline HomElement hom_element(const ChainComplex& a, const ChainComplex& b, int n, const PMatrix& v, std::size_t column = 0) {
  HomElement f;
  for (const auto& [i, o] : hom_offsets(a, b, n)) {
    PMatrix blk = pzeros(a.ring(), b.rank(i + n), a.rank(i));
    for (std::size_t r = 0; r < blk.rows(); ++r)
      for (std::size_t c = 0; c < blk.cols(); ++c) blk(r, c) = v(o + r * blk.cols() + c, column);
    f[i] = blk;
  }
  return f;
}

/// Hom(C, g): Hom(C, B) -> Hom(C, B'), f -> g o f (g of degree 0).
inline ChainMap postcompose(const ChainComplex& c, const ChainMap& g) {
  const ChainComplex src = hom_complex(c, g.source()), tgt = hom_complex(c, g.target());
  const Ring& r = c.ring();
  std::map<int, PMatrix> comps;
  for (int n : src.degrees()) {
    PMatrix m = pzeros(r, tgt.rank(n), src.rank(n));
    const auto so = hom_offsets(c, g.source(), n), to = hom_offsets(c, g.target(), n);
    for (const auto& [i, off] : so)
      if (to.count(i)) m.set_block(to.at(i), off, left_multiplication(r, g.component(i + n), c.rank(i)));
    comps[n] = m;
  }
  return ChainMap(src, tgt, comps, false);
}

/// Hom(g, C): Hom(A', C) -> Hom(A, C), f -> f o g for g: A -> A'.
inline ChainMap precompose(const ChainMap& g, const ChainComplex& c) {
  const ChainComplex src = hom_complex(g.target(), c), tgt = hom_complex(g.source(), c);
  const Ring& r = c.ring();
  std::map<int, PMatrix> comps;
  for (int n : src.degrees()) {
    PMatrix m = pzeros(r, tgt.rank(n), src.rank(n));
    const auto so = hom_offsets(g.target(), c, n), to = hom_offsets(g.source(), c, n);
    for (const auto& [i, off] : so)
      if (to.count(i)) m.set_block(to.at(i), off, right_multiplication(r, g.component(i), c.rank(i + n)));
    comps[n] = m;
  }
  return ChainMap(src, tgt, comps, false);
}

/// Tensor-hom unit A -> Hom(B, A (x) B), a -> (b -> eps(|a|) a (x) b).
inline ChainMap adjunction_unit(const ChainComplex& a, const ChainComplex& b) {
  const ChainComplex ab = tensor(a, b);
  const ChainComplex tgt = hom_complex(b, ab);
  const Ring& r = a.ring();
  std::map<int, PMatrix> comps;
  for (int n : a.degrees()) {
    PMatrix m = pzeros(r, tgt.rank(n), a.rank(n));
    const Poly s = sign_poly(r, epsilon(n));
    for (const auto& [j, off] : hom_offsets(b, ab, n)) {
      const auto toff = tensor_offsets(a, b, n + j);
      if (!toff.count(n)) continue;
      const std::size_t rb = b.rank(j);
      for (std::size_t p = 0; p < a.rank(n); ++p)
        for (std::size_t q = 0; q < rb; ++q) {
          const std::size_t row_in_block = toff.at(n) + p * rb + q;
          m(off + row_in_block * rb + q, p) = s;
        }
    }
    comps[n] = m;
  }
  return ChainMap(a, tgt, comps);
}

/// Evaluation Hom(B, C) (x) B -> C, f (x) b -> eps(|f|) f(b).
inline ChainMap adjunction_counit(const ChainComplex& b, const ChainComplex& c) {
  const ChainComplex h = hom_complex(b, c);
  const ChainComplex src = tensor(h, b);
  const Ring& r = b.ring();
  std::map<int, PMatrix> comps;
  for (int n : src.degrees()) {
    PMatrix m = pzeros(r, c.rank(n), src.rank(n));
    for (const auto& [deg_f, off] : tensor_offsets(h, b, n)) {
      const int j = n - deg_f;  // degree of b
      const auto hoff = hom_offsets(b, c, deg_f);
      if (!hoff.count(j)) continue;
      const Poly s = sign_poly(r, epsilon(deg_f));
      const std::size_t rb = b.rank(j);
      // f in block j of Hom(B,C)_{deg_f} is rank(C_n) x rb; entry (x, y) has
      // flattened index hoff[j] + x*rb + y
      for (std::size_t x = 0; x < c.rank(n); ++x)
        for (std::size_t y = 0; y < rb; ++y) {
          const std::size_t fidx = hoff.at(j) + x * rb + y;
          m(x, off + fidx * rb + y) = s;
        }
    }
    comps[n] = m;
  }
  return ChainMap(src, c, comps);
}

// ---------------------------------------------------------------------------
// Duality D_K = Hom(-, K[d]).

struct DualityDatum {
  /// Name of the rank-one twist K (a line bundle class); the module itself is R.
  std::string twist = "O";
  int shift = 0;
};

inline ChainComplex dualizing_object(const Ring& r, const DualityDatum& dd) { return ChainComplex::line(r, dd.shift); }

inline ChainComplex dualize(const ChainComplex& a, const DualityDatum& dd) {
  return hom_complex(a, dualizing_object(a.ring(), dd));
}

/// D(phi): D(B) -> D(A), f -> f o phi.
inline ChainMap dualize(const ChainMap& phi, const DualityDatum& dd) {
  return precompose(phi, dualizing_object(phi.source().ring(), dd));
}

/// bid: A -> D(D(A)), a -> (f -> f(a)); identity matrices in the dual-of-dual bases.
inline ChainMap bidual_map(const ChainComplex& a, const DualityDatum& dd) {
  const ChainComplex dda = dualize(dualize(a, dd), dd);
  std::map<int, PMatrix> c;
  for (int n : a.degrees()) c[n] = pidentity(a.ring(), a.rank(n));
  return ChainMap(a, dda, c);
}

/// phi: A -> D(A) is symmetric with sign s when D(phi) o bid_A = s * phi.
inline std::optional<int> symmetry_sign(const ChainMap& phi, const DualityDatum& dd) {
  const ChainMap lhs = compose(dualize(phi, dd), bidual_map(phi.source(), dd));
  if (lhs == phi) return 1;
  if (lhs == phi.scaled(-1)) return -1;
  return std::nullopt;
}

/// The form component phi_n as a pairing matrix P with P[q][p] = phi(a_p)(b_q),
/// a_p in A_n and b_q in A_{d-n}.
inline PMatrix pairing_matrix(const ChainMap& phi, int n) { return phi.component(n); }

// ---------------------------------------------------------------------------
// Cone.

struct Cone {
  ChainComplex complex;
  /// B -> Cone(f).
  ChainMap inclusion;
  /// Cone(f) -> T A.
  ChainMap projection;
};

inline Cone cone(const ChainMap& f) {
  const ChainComplex& a = f.source();
  const ChainComplex& b = f.target();
  const Ring& r = a.ring();
  std::map<int, std::size_t> ranks;
  for (int n : b.degrees()) ranks[n] += b.rank(n);
  for (int n : a.degrees()) ranks[n + 1] += a.rank(n);
  std::map<int, PMatrix> diffs;
  for (const auto& [n, rk] : ranks) {
    const std::size_t rlow = ranks.count(n - 1) ? ranks[n - 1] : 0;
    if (rlow == 0) continue;
    PMatrix m = pzeros(r, rlow, rk);
    const std::size_t bn = b.rank(n), bn1 = b.rank(n - 1);
    if (bn1 > 0 && bn > 0) m.set_block(0, 0, b.d(n));
    if (bn1 > 0 && a.rank(n - 1) > 0) m.set_block(0, bn, f.component(n - 1));
    if (a.rank(n - 2) > 0 && a.rank(n - 1) > 0) m.set_block(bn1, bn, -a.d(n - 1));
    diffs[n] = m;
  }
  Cone out;
  out.complex = ChainComplex(r, ranks, diffs);
  std::map<int, PMatrix> inc, proj;
  const ChainComplex ta = shift(a, 1);
  for (int n : out.complex.degrees()) {
    const std::size_t bn = b.rank(n), an1 = a.rank(n - 1);
    if (bn > 0) {
      PMatrix m = pzeros(r, out.complex.rank(n), bn);
      m.set_block(0, 0, pidentity(r, bn));
      inc[n] = m;
    }
    if (an1 > 0) {
      PMatrix m = pzeros(r, an1, out.complex.rank(n));
      m.set_block(0, bn, pidentity(r, an1));
      proj[n] = m;
    }
  }
  out.inclusion = ChainMap(b, out.complex, inc);
  out.projection = ChainMap(out.complex, ta, proj);
  return out;
}

// ---------------------------------------------------------------------------
// Homology.

inline std::map<int, std::size_t> homology_dims(const ChainComplex& a) {
  if (!a.ring().is_field()) fail(ErrorCode::NotAField, "homology_dims needs a complex over a field, got " + a.ring().name());
  std::map<int, std::size_t> out;
  for (int n : a.degrees()) {
    const std::size_t rk_out = a.rank(n - 1) ? rank(to_fmatrix(a.ring(), a.d(n))) : 0;
    const std::size_t rk_in = a.rank(n + 1) ? rank(to_fmatrix(a.ring(), a.d(n + 1))) : 0;
    out[n] = a.rank(n) - rk_out - rk_in;
  }
  return out;
}

inline bool is_quasi_isomorphism(const ChainMap& f) {
  for (const auto& [n, h] : homology_dims(cone(f).complex))
    if (h != 0) return false;
  return true;
}

/// Internal degree of every basis vector, keyed by homological degree.
using InternalGrading = std::map<int, std::vector<int>>;

/// Breadth-first propagation over the graph whose edges are nonzero
/// differential entries; every connected block is anchored at 0, starting
/// from its basis vector of smallest absolute homological degree.
inline InternalGrading infer_grading(const ChainComplex& a) {
  std::map<std::pair<int, std::size_t>, std::optional<int>> deg;
  std::vector<std::pair<int, std::size_t>> order;
  for (int n : a.degrees())
    for (std::size_t i = 0; i < a.rank(n); ++i) {
      deg[{n, i}] = std::nullopt;
      order.push_back({n, i});
    }
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return std::abs(x.first) < std::abs(y.first); });
  for (int n : a.degrees()) {
    const PMatrix d = a.d(n);
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (!d(i, j).is_homogeneous())
          fail(ErrorCode::NotHomogeneous, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") of d_" + std::to_string(n) + " is not homogeneous");
  }
  for (const auto& anchor : order) {
    if (deg[anchor]) continue;
    deg[anchor] = 0;
    std::deque<std::pair<int, std::size_t>> queue{anchor};
    while (!queue.empty()) {
      const auto [n, i] = queue.front();
      queue.pop_front();
      const int here = *deg[{n, i}];
      auto visit = [&](std::pair<int, std::size_t> other, int value) {
        auto& slot = deg[other];
        if (!slot) {
          slot = value;
          queue.push_back(other);
        } else if (*slot != value) {
          fail(ErrorCode::GradingInconsistent, "no internal grading makes every differential entry degree-preserving");
        }
      };
      // column i of d_n: deg(e_i in A_n) = deg(row r in A_{n-1}) + deg(entry)
      if (a.rank(n - 1) > 0) {
        const PMatrix d = a.d(n);
        for (std::size_t r = 0; r < d.rows(); ++r)
          if (!d(r, i).is_zero()) visit({n - 1, r}, here - d(r, i).degree());
      }
      if (a.rank(n + 1) > 0) {
        const PMatrix d = a.d(n + 1);
        for (std::size_t c = 0; c < d.cols(); ++c)
          if (!d(i, c).is_zero()) visit({n + 1, c}, here + d(i, c).degree());
      }
    }
  }
  InternalGrading out;
  for (int n : a.degrees()) {
    out[n].resize(a.rank(n));
    for (std::size_t i = 0; i < a.rank(n); ++i) out[n][i] = *deg[{n, i}];
  }
  return out;
}

/// Exponent vectors of total degree t in `nvars` variables, lexicographic.
inline std::vector<Poly::Exponent> monomials_of_degree(std::size_t nvars, int t) {
  std::vector<Poly::Exponent> out;
  if (t < 0) return out;
  if (nvars == 0) {
    if (t == 0) out.push_back({});
    return out;
  }
  Poly::Exponent e(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == nvars) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, t);
  std::sort(out.begin(), out.end());
  return out;
}

struct GradedPiece {
  std::map<int, std::size_t> ranks;
  std::map<int, FMatrix> diffs;
};

/// Degree-t part of a graded free complex as a complex of vector spaces.
inline GradedPiece graded_piece(const ChainComplex& a, const InternalGrading& g, int t) {
  const Ring& r = a.ring();
  GradedPiece out;
  // basis of the degree-t part of A_n: pairs (basis vector, monomial)
  std::map<int, std::vector<std::pair<std::size_t, Poly::Exponent>>> basis;
  std::map<int, std::map<std::pair<std::size_t, Poly::Exponent>, std::size_t>> index;
  for (int n : a.degrees()) {
    for (std::size_t i = 0; i < a.rank(n); ++i)
      for (const auto& e : monomials_of_degree(r.nvars(), t - g.at(n)[i])) {
        index[n][{i, e}] = basis[n].size();
        basis[n].push_back({i, e});
      }
    out.ranks[n] = basis[n].size();
  }
  for (int n : a.degrees()) {
    if (a.rank(n - 1) == 0) continue;
    const PMatrix d = a.d(n);
    FMatrix m = zeros(r.field, basis[n - 1].size(), basis[n].size());
    for (std::size_t col = 0; col < basis[n].size(); ++col) {
      const auto& [i, e] = basis[n][col];
      for (std::size_t row = 0; row < d.rows(); ++row)
        for (const auto& [de, c] : d(row, i).terms()) {
          Poly::Exponent prod(e.size());
          for (std::size_t v = 0; v < e.size(); ++v) prod[v] = e[v] + de[v];
          m(index[n - 1].at({row, prod}), col) = m(index[n - 1].at({row, prod}), col) + c;
        }
    }
    out.diffs[n] = m;
  }
  return out;
}

/// (homological degree, internal degree) -> dim H for every internal degree
/// from the smallest basis degree up to `bound`.
inline std::map<std::pair<int, int>, std::size_t> graded_homology_dims(const ChainComplex& a, int bound) {
  const InternalGrading g = infer_grading(a);
  int lo = bound;
  for (const auto& [n, v] : g)
    for (int x : v) lo = std::min(lo, x);
  std::map<std::pair<int, int>, std::size_t> out;
  for (int t = lo; t <= bound; ++t) {
    const GradedPiece p = graded_piece(a, g, t);
    for (int n : a.degrees()) {
      auto rk = [&](int k) -> std::size_t {
        auto it = p.diffs.find(k);
        return it == p.diffs.end() ? 0 : rank(it->second);
      };
      out[{n, t}] = p.ranks.at(n) - rk(n) - rk(n + 1);
    }
  }
  return out;
}

}  // namespace wittforge
