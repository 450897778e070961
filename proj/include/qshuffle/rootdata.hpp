#pragma once

// The A-infinity alphabet on odd integers with the involution k -> -k,
// its Cartan pairing, dimension vectors, positive roots of types A and BC,
// and the BC-side Kostant partition function.

#include <qshuffle/laurent.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsh {

/// Simple root alpha_k, k odd.
struct Letter {
  int k = 1;

  Letter() = default;
  explicit Letter(int kk) : k(kk) {
    if (k % 2 == 0) throw std::invalid_argument("Letter: index must be odd, got " + std::to_string(k));
  }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter theta(Letter i) { return Letter(-i.k); }

/// Symmetric bilinear form of sl_infinity: 2 on the diagonal, -1 for
/// neighbours at distance 2, 0 otherwise.
inline int cartan(Letter i, Letter j) {
  if (i.k == j.k) return 2;
  const int d = i.k - j.k;
  if (d == 2 || d == -2) return -1;
  return 0;
}

/// Element of N[J] (or Z[J] transiently): finite support, no zero entries.
class DimVector {
 public:
  using Map = std::map<Letter, std::int64_t>;

  DimVector() = default;
  explicit DimVector(Letter i) { mult_[i] = 1; }

  const Map& mult() const { return mult_; }
  bool is_zero() const { return mult_.empty(); }

  std::int64_t operator[](Letter i) const {
    auto it = mult_.find(i);
    return it == mult_.end() ? 0 : it->second;
  }

  void add(Letter i, std::int64_t m) {
    if (m == 0) return;
    auto [it, inserted] = mult_.try_emplace(i, m);
    if (!inserted) {
      it->second += m;
      if (it->second == 0) mult_.erase(it);
    }
  }

  DimVector& operator+=(const DimVector& o) {
    for (const auto& [i, m] : o.mult_) add(i, m);
    return *this;
  }
  DimVector& operator-=(const DimVector& o) {
    for (const auto& [i, m] : o.mult_) add(i, -m);
    return *this;
  }
  friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
  friend DimVector operator-(DimVector a, const DimVector& b) { return a -= b; }

  friend auto operator<=>(const DimVector&, const DimVector&) = default;

  bool nonnegative() const {
    for (const auto& [i, m] : mult_)
      if (m < 0) return false;
    return true;
  }
  /// o <= *this componentwise
  bool dominates(const DimVector& o) const {
    for (const auto& [i, m] : o.mult_)
      if ((*this)[i] < m) return false;
    return true;
  }

  std::int64_t height() const {  // |beta|
    std::int64_t s = 0;
    for (const auto& [i, m] : mult_) s += m;
    return s;
  }

  /// Comma list "k:m", letters ascending; empty string for 0.
  std::string str() const {
    std::string s;
    for (const auto& [i, m] : mult_) {
      if (!s.empty()) s += ",";
      s += std::to_string(i.k) + ":" + std::to_string(m);
    }
    return s;
  }

 private:
  Map mult_;
};

inline DimVector theta_vec(const DimVector& b) {
  DimVector r;
  for (const auto& [i, m] : b.mult()) r.add(theta(i), m);
  return r;
}

inline bool is_self_dual(const DimVector& b) { return b == theta_vec(b); }

/// beta + theta(beta)
inline DimVector symmetrize(const DimVector& b) { return b + theta_vec(b); }

/// |beta|_theta = |beta|/2 for self-dual beta.
inline std::int64_t theta_height(const DimVector& b) {
  const auto h = b.height();
  if (h % 2 != 0) throw std::invalid_argument("theta_height: |beta| is odd");
  return h / 2;
}

inline int dot(const DimVector& a, const DimVector& b) {
  long long s = 0;
  for (const auto& [i, m] : a.mult())
    for (const auto& [j, n] : b.mult()) s += static_cast<long long>(m) * n * cartan(i, j);
  return static_cast<int>(s);
}

inline int dot(const DimVector& a, Letter j) {
  long long s = 0;
  for (const auto& [i, m] : a.mult()) s += static_cast<long long>(m) * cartan(i, j);
  return static_cast<int>(s);
}

/// N(beta) = (beta.beta - sum_i c_i (i.i)) / 2.
inline int n_of(const DimVector& b) {
  long long s = dot(b, b);
  for (const auto& [i, m] : b.mult()) s -= 2 * m;
  if (s % 2 != 0) throw std::logic_error("n_of: odd value");
  return static_cast<int>(s / 2);
}

/// Total arrow count between two vertices of the linearly oriented quiver
/// k -> k+2 (the grading weight of a distinct-letter crossing).
inline int arrow_bar(Letter i, Letter j) { return (i.k - j.k == 2 || j.k - i.k == 2) ? 1 : 0; }

/// Positive root beta_{lo,hi} = alpha_lo + alpha_{lo+2} + ... + alpha_hi.
struct RootA {
  Letter lo, hi;
  RootA(Letter l, Letter h) : lo(l), hi(h) {
    if (lo.k > hi.k) throw std::invalid_argument("RootA: lo > hi");
  }
  int length() const { return (hi.k - lo.k) / 2 + 1; }
  DimVector weight() const {
    DimVector w;
    for (int k = lo.k; k <= hi.k; k += 2) w.add(Letter(k), 1);
    return w;
  }
  friend auto operator<=>(const RootA&, const RootA&) = default;
};

/// All A+ roots whose weight fits inside beta.
inline std::vector<RootA> roots_inside(const DimVector& beta) {
  std::vector<RootA> out;
  if (beta.is_zero()) return out;
  const int lo = beta.mult().begin()->first.k;
  const int hi = beta.mult().rbegin()->first.k;
  for (int a = lo; a <= hi; a += 2)
    for (int b = a; b <= hi; b += 2) {
      RootA r{Letter(a), Letter(b)};
      if (beta.dominates(r.weight())) out.push_back(r);
    }
  return out;
}

/// Positive BC root presented by its A-side representative.  Non-symmetric
/// roots are stored with lo+hi <= 0; the contribution to a self-dual weight
/// is the symmetrization beta_{lo,hi} + beta_{-hi,-lo}.
struct RootBC {
  RootA rep;
  explicit RootBC(RootA r) : rep(canonical(r)) {}
  static RootA canonical(RootA r) {
    if (r.lo.k + r.hi.k > 0) return RootA{theta(r.hi), theta(r.lo)};
    return r;
  }
  bool symmetric() const { return rep.lo.k + rep.hi.k == 0; }
  DimVector weight() const { return symmetrize(rep.weight()); }
  friend auto operator<=>(const RootBC&, const RootBC&) = default;
};

/// Deduplicated BC+ roots whose symmetrized weight fits inside beta.
/// Representatives (a,b) with a <= b <= -a enumerate each BC root once.
inline std::vector<RootBC> bc_roots_inside(const DimVector& beta) {
  std::vector<RootBC> out;
  if (beta.is_zero()) return out;
  const int lo = beta.mult().begin()->first.k;
  const int hi = beta.mult().rbegin()->first.k;
  for (int a = lo; a <= hi; a += 2)
    for (int b = a; b <= -a && b <= hi; b += 2) {
      RootBC r{RootA{Letter(a), Letter(b)}};
      if (beta.dominates(r.weight())) out.push_back(r);
    }
  return out;
}

/// theta-Kostant partition function: the number of multisets of BC+ roots
/// summing to beta.  Dynamic programming over the box {0..beta}.
inline Int tkpf(const DimVector& beta) {
  if (!beta.nonnegative() || !is_self_dual(beta)) throw std::invalid_argument("tkpf: weight must be self-dual and nonnegative");
  if (beta.is_zero()) return Int(1);
  std::vector<Letter> letters;
  for (const auto& [i, m] : beta.mult()) letters.push_back(i);
  // rank a sub-vector of the box as a mixed-radix integer
  std::vector<std::int64_t> radix;
  for (const auto& [i, m] : beta.mult()) radix.push_back(m + 1);
  auto rank = [&](const DimVector& v) -> std::size_t {
    std::size_t r = 0;
    for (std::size_t t = 0; t < letters.size(); ++t) r = r * static_cast<std::size_t>(radix[t]) + static_cast<std::size_t>(v[letters[t]]);
    return r;
  };
  std::size_t box = 1;
  for (auto m : radix) box *= static_cast<std::size_t>(m);
  std::vector<Int> ways(box, Int(0));
  ways[0] = 1;
  // iterate sub-vectors in rank order; adding a root only increases the rank
  std::vector<DimVector> subs(box);
  {
    std::vector<std::int64_t> cur(letters.size(), 0);
    for (std::size_t r = 0; r < box; ++r) {
      DimVector v;
      for (std::size_t t = 0; t < letters.size(); ++t) v.add(letters[t], cur[t]);
      subs[rank(v)] = v;
      for (std::size_t t = letters.size(); t-- > 0;) {
        if (++cur[t] < radix[t]) break;
        cur[t] = 0;
      }
    }
  }
  for (const RootBC& root : bc_roots_inside(beta)) {
    const DimVector w = root.weight();
    for (std::size_t r = 0; r < box; ++r) {
      const DimVector& v = subs[r];
      if (ways[r] == 0) continue;
      DimVector nv = v + w;
      if (beta.dominates(nv)) ways[rank(nv)] += ways[r];
    }
  }
  return ways[rank(beta)];
}

/// Parse "k:m,k:m" (any order, repeated keys accumulate); "" is the zero vector.
/// On bad input reports the offending position.
inline DimVector parse_dimvector(const std::string& s) {
  DimVector v;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    const std::string item = s.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("weight: missing ':' at position " + std::to_string(pos));
    try {
      const int k = std::stoi(item.substr(0, colon));
      const long m = std::stol(item.substr(colon + 1));
      v.add(Letter(k), m);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("weight: malformed entry at position " + std::to_string(pos));
    }
    pos = comma + 1;
  }
  return v;
}

}  // namespace qsh
