#pragma once

// ADE root systems in the standard coordinate models.
//
// Coordinates are stored doubled (HalfVec holds 2x each coordinate), so the
// half-integer E8 roots live in plain integer vectors. Positive roots are:
//   A, D : first nonzero coordinate positive;
//   E    : f(v) > 0 for f = (1, 2, 3, 4, 5, 6, 7, 100), which selects the
//          positive system {±e_i + e_j (i < j)} ∪ {½(e_8 + Σ_{i<8} ±e_i)}.
// E7 and E6 are the E8 roots orthogonal to s = ½(1,…,1), resp. to s and
// e_1 + e_8, so all three E types share the 8-dimensional ambient space.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "weyl_ising/error.hpp"
#include "weyl_ising/matrix.hpp"

namespace weyl_ising {

using HalfVec = std::vector<int>;

inline int dot(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

/// Inner product of doubled-coordinate vectors; must be an integer.
inline int inner(const HalfVec& a, const HalfVec& b) {
  const int d = dot(a, b);
  if (d % 4 != 0) throw Error(ErrorCode::NotIntegral, "inner product is not an integer");
  return d / 4;
}

inline HalfVec negate(HalfVec v) {
  for (auto& x : v) x = -x;
  return v;
}

inline HalfVec operator+(HalfVec a, const HalfVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b.at(i);
  return a;
}

inline HalfVec operator-(HalfVec a, const HalfVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b.at(i);
  return a;
}

inline HalfVec scale(HalfVec a, int k) {
  for (auto& x : a) x *= k;
  return a;
}

inline std::vector<Rational> to_rational(const HalfVec& v) {
  std::vector<Rational> q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = make_rational(v[i], 2);
  return q;
}

enum class RootKind { A, D, E };

/// Standard E8 simple roots (Bourbaki order), doubled coordinates.
inline const std::vector<HalfVec>& e8_simple_roots() {
  static const std::vector<HalfVec> basis = {
      {1, -1, -1, -1, -1, -1, -1, 1},  // ½(e1 - e2 - … - e7 + e8)
      {2, 2, 0, 0, 0, 0, 0, 0},        // e1 + e2
      {-2, 2, 0, 0, 0, 0, 0, 0},       // e2 - e1
      {0, -2, 2, 0, 0, 0, 0, 0},
      {0, 0, -2, 2, 0, 0, 0, 0},
      {0, 0, 0, -2, 2, 0, 0, 0},
      {0, 0, 0, 0, -2, 2, 0, 0},
      {0, 0, 0, 0, 0, -2, 2, 0},       // e7 - e6
  };
  return basis;
}

/// All 240 E8 roots, doubled coordinates, descending lexicographic order.
inline const std::vector<HalfVec>& e8_roots() {
  static const std::vector<HalfVec> roots = [] {
    std::vector<HalfVec> r;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        for (int si : {2, -2})
          for (int sj : {2, -2}) {
            HalfVec v(8, 0);
            v[i] = si;
            v[j] = sj;
            r.push_back(v);
          }
    for (int mask = 0; mask < 256; ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
      HalfVec v(8);
      for (int i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
      r.push_back(v);
    }
    std::sort(r.begin(), r.end(), std::greater<>());
    return r;
  }();
  return roots;
}

/// Gram matrix of the standard E8 simple roots (the Cartan matrix).
inline QMatrix e8_gram() {
  const auto& b = e8_simple_roots();
  QMatrix g(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) g(i, j) = inner(b[i], b[j]);
  return g;
}

class RootSystem {
 public:
  static RootSystem build(RootKind kind, int rank) {
    RootSystem rs;
    rs.kind_ = kind;
    rs.rank_ = rank;
    std::vector<HalfVec> all;
    switch (kind) {
      case RootKind::A: {
        if (rank < 1) throw Error(ErrorCode::UnsupportedRank, "A_l needs l >= 1");
        rs.ambient_ = rank + 1;
        for (int i = 0; i < rs.ambient_; ++i)
          for (int j = 0; j < rs.ambient_; ++j) {
            if (i == j) continue;
            HalfVec v(static_cast<std::size_t>(rs.ambient_), 0);
            v[i] = 2;
            v[j] = -2;
            all.push_back(v);
          }
        break;
      }
      case RootKind::D: {
        if (rank < 4) throw Error(ErrorCode::UnsupportedRank, "D_n needs n >= 4");
        rs.ambient_ = rank;
        for (int i = 0; i < rank; ++i)
          for (int j = i + 1; j < rank; ++j)
            for (int si : {2, -2})
              for (int sj : {2, -2}) {
                HalfVec v(static_cast<std::size_t>(rank), 0);
                v[i] = si;
                v[j] = sj;
                all.push_back(v);
              }
        break;
      }
      case RootKind::E: {
        if (rank < 6 || rank > 8) throw Error(ErrorCode::UnsupportedRank, "E_l needs l in {6,7,8}");
        rs.ambient_ = 8;
        const HalfVec s(8, 1);                     // ½(1,…,1)
        const HalfVec t = {2, 0, 0, 0, 0, 0, 0, 2};  // e1 + e8
        for (const auto& r : e8_roots()) {
          if (rank <= 7 && dot(r, s) != 0) continue;
          if (rank == 6 && dot(r, t) != 0) continue;
          all.push_back(r);
        }
        break;
      }
    }
    for (const auto& v : all)
      if (rs.is_positive_direction(v)) rs.positive_.push_back(v);
    std::sort(rs.positive_.begin(), rs.positive_.end(), std::greater<>());
    rs.roots_ = rs.positive_;
    for (const auto& v : rs.positive_) rs.roots_.push_back(negate(v));
    for (std::size_t i = 0; i < rs.roots_.size(); ++i) rs.index_.emplace(rs.roots_[i], i);
    rs.simple_ = simple_roots_of(rs.positive_);
    return rs;
  }

  RootKind kind() const noexcept { return kind_; }
  int rank() const noexcept { return rank_; }
  int ambient_dim() const noexcept { return ambient_; }

  std::string name() const {
    const char letter = kind_ == RootKind::A ? 'A' : kind_ == RootKind::D ? 'D' : 'E';
    return std::string(1, letter) + std::to_string(rank_);
  }

  /// Positive roots first (descending lexicographic), then their negatives in the same order.
  const std::vector<HalfVec>& roots() const noexcept { return roots_; }
  const std::vector<HalfVec>& positive_roots() const noexcept { return positive_; }
  const std::vector<HalfVec>& simple_roots() const noexcept { return simple_; }

  int coxeter_number() const { return static_cast<int>(roots_.size()) / rank_; }

  std::optional<std::size_t> index_of(const HalfVec& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool is_root(const HalfVec& v) const { return index_.count(v) != 0; }

  HalfVec reflect(const HalfVec& alpha, const HalfVec& v) const {
    require_root(alpha);
    return v - scale(alpha, inner(alpha, v));
  }

  /// Number of positive roots β with ⟨α, β⟩ = ±1.
  int m_alpha(const HalfVec& alpha) const {
    require_root(alpha);
    int count = 0;
    for (const auto& b : positive_) {
      const int ip = inner(alpha, b);
      if (ip == 1 || ip == -1) ++count;
    }
    return count;
  }

  HalfVec canonical_positive(const HalfVec& v) const {
    require_root(v);
    return is_positive_direction(v) ? v : negate(v);
  }

  bool is_positive_direction(const HalfVec& v) const {
    if (kind_ == RootKind::E) {
      static constexpr int f[8] = {1, 2, 3, 4, 5, 6, 7, 100};
      int s = 0;
      for (std::size_t i = 0; i < 8; ++i) s += f[i] * v.at(i);
      return s > 0;
    }
    for (int x : v)
      if (x != 0) return x > 0;
    return false;
  }

  /// Positive roots that are not the sum of two positive roots.
  static std::vector<HalfVec> simple_roots_of(const std::vector<HalfVec>& positive) {
    std::map<HalfVec, bool> pos;
    for (const auto& p : positive) pos.emplace(p, true);
    std::vector<HalfVec> simple;
    for (const auto& p : positive) {
      bool decomposable = false;
      for (const auto& q : positive) {
        if (q == p) continue;
        if (pos.count(p - q)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) simple.push_back(p);
    }
    return simple;
  }

 private:
  void require_root(const HalfVec& v) const {
    if (!is_root(v)) throw Error(ErrorCode::NotARoot, "vector is not a root of " + name());
  }

  RootKind kind_ = RootKind::A;
  int rank_ = 0;
  int ambient_ = 0;
  std::vector<HalfVec> roots_;
  std::vector<HalfVec> positive_;
  std::vector<HalfVec> simple_;
  std::map<HalfVec, std::size_t> index_;
};

/// Dynkin types of the components of a simply-laced root system given by all
/// of its roots, e.g. {"A8"} or {"A1", "D4"}. Positivity is lexicographic.
inline std::vector<std::string> dynkin_type(const std::vector<HalfVec>& roots) {
  std::vector<HalfVec> positive;
  for (const auto& r : roots) {
    for (int x : r)
      if (x != 0) {
        if (x > 0) positive.push_back(r);
        break;
      }
  }
  const auto simple = RootSystem::simple_roots_of(positive);
  const std::size_t n = simple.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int ip = inner(simple[i], simple[j]);
      if (ip == -1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      } else if (ip != 0) {
        return {"?"};
      }
    }
  std::vector<std::string> types;
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp{start};
    seen[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (auto nb : adj[comp[k]])
        if (!seen[nb]) {
          seen[nb] = true;
          comp.push_back(nb);
        }
    std::size_t edges = 0, branch = n, max_deg = 0;
    for (auto v : comp) {
      edges += adj[v].size();
      max_deg = std::max(max_deg, adj[v].size());
      if (adj[v].size() == 3) branch = v;
    }
    edges /= 2;
    const std::size_t k = comp.size();
    if (edges != k - 1 || max_deg > 3) {
      types.push_back("?");
      continue;
    }
    if (max_deg <= 2) {
      types.push_back("A" + std::to_string(k));
      continue;
    }
    std::vector<std::size_t> arms;
    for (auto nb : adj[branch]) {
      std::size_t len = 1, prev = branch, cur = nb;
      while (adj[cur].size() == 2) {
        const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      if (adj[cur].size() == 3) len = 0;
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3 || arms[0] == 0) types.push_back("?");
    else if (arms[0] == 1 && arms[1] == 1) types.push_back("D" + std::to_string(k));
    else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) types.push_back("E" + std::to_string(k));
    else types.push_back("?");
  }
  std::sort(types.begin(), types.end());
  return types;
}

}  // namespace weyl_ising
