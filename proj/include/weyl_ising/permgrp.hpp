#pragma once

// Permutations act on the right: (p * q)(x) = q(p(x)), i.e. p is applied first.

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "weyl_ising/axes.hpp"
#include "weyl_ising/error.hpp"
#include "weyl_ising/rational.hpp"
#include "weyl_ising/rootsys.hpp"

namespace weyl_ising {

using Permutation = std::vector<std::uint32_t>;

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

inline bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

inline bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

/// lcm of the cycle lengths.
inline Integer permutation_order(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  Integer order = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    unsigned long len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    order = lcm(order, Integer(len));
  }
  return order;
}

inline Permutation to_permutation(const std::vector<std::size_t>& images) {
  Permutation p(images.begin(), images.end());
  if (!is_permutation(p)) throw Error(ErrorCode::InvalidArgument, "image list is not a permutation");
  return p;
}

/// Base and strong generating set built by the deterministic incremental
/// Schreier–Sims procedure: every Schreier generator of every level is sifted
/// once, and a non-trivial residue becomes a strong generator of the level
/// where sifting stopped and of every level above it.
class PermGroup {
 public:
  PermGroup(std::size_t degree, const std::vector<Permutation>& generators) : degree_(degree) {
    for (const auto& g : generators) {
      if (g.size() != degree || !is_permutation(g)) throw Error(ErrorCode::InvalidArgument, "bad generator");
      auto [h, level] = sift(g, 0);
      if (!is_identity(h)) {
        augment(level, h);
        generators_.push_back(g);
      }
    }
  }

  std::size_t degree() const noexcept { return degree_; }
  /// Generators that were not redundant when they were added.
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  std::vector<std::size_t> base() const {
    std::vector<std::size_t> b;
    for (const auto& l : levels_) b.push_back(l.point);
    return b;
  }

  std::vector<std::size_t> orbit_lengths() const {
    std::vector<std::size_t> o;
    for (const auto& l : levels_) o.push_back(l.orbit.size());
    return o;
  }

  Integer order() const {
    Integer o = 1;
    for (const auto& l : levels_) o *= static_cast<unsigned long>(l.orbit.size());
    return o;
  }

  bool contains(const Permutation& g) const {
    if (g.size() != degree_ || !is_permutation(g)) return false;
    return is_identity(sift(g, 0).first);
  }

 private:
  struct Level {
    std::size_t point;
    std::vector<Permutation> gens;
    std::vector<std::size_t> orbit;
    std::map<std::size_t, Permutation> transversal;  // u_b with point^{u_b} = b
  };

  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const auto& l = levels_[i];
      auto it = l.transversal.find(g[l.point]);
      if (it == l.transversal.end()) return {g, i};
      g = g * inverse(it->second);
    }
    return {g, levels_.size()};
  }

  void test_schreier(std::size_t i, const Permutation& ub, const Permutation& s, std::size_t c) {
    Permutation sg = ub * s;
    const Permutation& uc = levels_[i].transversal.at(c);
    if (sg == uc) return;
    sg = sg * inverse(uc);
    auto [h, level] = sift(sg, i + 1);
    if (!is_identity(h)) augment(level, h);
  }

  // Precondition: h fixes the base points of levels < i and is not in the
  // current stabiliser chain from level i on. h then lies in every stabiliser
  // G^(j) with j <= i, so it joins the generating set of each of those levels.
  void augment(std::size_t i, const Permutation& h) {
    if (i == levels_.size()) {
      std::size_t p = 0;
      while (h[p] == p) ++p;
      Level l;
      l.point = p;
      l.orbit.push_back(p);
      l.transversal.emplace(p, identity_permutation(degree_));
      levels_.push_back(std::move(l));
    }
    for (std::size_t j = i + 1; j-- > 0;) extend(j, h);
  }

  void extend(std::size_t i, const Permutation& h) {
    levels_[i].gens.push_back(h);
    const std::size_t gi = levels_[i].gens.size() - 1;
    // the new generator against every existing orbit point
    const std::size_t old_size = levels_[i].orbit.size();
    for (std::size_t k = 0; k < old_size; ++k) process(i, k, gi);
    // new orbit points against every generator (the list grows while we scan)
    for (std::size_t k = old_size; k < levels_[i].orbit.size(); ++k)
      for (std::size_t g = 0; g < levels_[i].gens.size(); ++g) process(i, k, g);
  }

  void process(std::size_t i, std::size_t k, std::size_t g) {
    const std::size_t b = levels_[i].orbit[k];
    const Permutation s = levels_[i].gens[g];
    const Permutation ub = levels_[i].transversal.at(b);
    const std::size_t c = s[b];
    if (!levels_[i].transversal.count(c)) {
      levels_[i].transversal.emplace(c, ub * s);
      levels_[i].orbit.push_back(c);
      return;
    }
    test_schreier(i, ub, s, c);
  }

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

/// Reflection r_α as a permutation of the listed roots.
inline Permutation reflection_permutation(const RootSystem& rs, const HalfVec& alpha) {
  Permutation p(rs.roots().size());
  for (std::size_t i = 0; i < rs.roots().size(); ++i) p[i] = static_cast<std::uint32_t>(*rs.index_of(rs.reflect(alpha, rs.roots()[i])));
  return p;
}

inline Permutation negation_permutation(const RootSystem& rs) {
  Permutation p(rs.roots().size());
  for (std::size_t i = 0; i < rs.roots().size(); ++i) p[i] = static_cast<std::uint32_t>(*rs.index_of(negate(rs.roots()[i])));
  return p;
}

/// W(R) acting on Φ(R), generated by r_α for α ∈ Φ⁺(R).
inline PermGroup weyl_group(const RootSystem& rs) {
  std::vector<Permutation> gens;
  for (const auto& a : rs.positive_roots()) gens.push_back(reflection_permutation(rs, a));
  return PermGroup(rs.roots().size(), gens);
}

inline bool contains_minus_one(const RootSystem& rs, const PermGroup& weyl) { return weyl.contains(negation_permutation(rs)); }
inline bool contains_minus_one(const RootSystem& rs) { return contains_minus_one(rs, weyl_group(rs)); }

inline std::vector<Permutation> miyamoto_generators(const AxisAlgebra& alg) {
  std::vector<Permutation> gens;
  for (std::size_t e = 0; e < alg.size(); ++e) gens.push_back(to_permutation(miyamoto_permutation(alg, e)));
  return gens;
}

inline PermGroup miyamoto_group(const AxisAlgebra& alg) { return PermGroup(alg.size(), miyamoto_generators(alg)); }

/// Orders of τ_e τ_f over unordered pairs of distinct axes: order → count.
inline std::map<unsigned long, std::size_t> transposition_profile(const AxisAlgebra& alg) {
  const auto gens = miyamoto_generators(alg);
  std::map<unsigned long, std::size_t> profile;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) ++profile[permutation_order(gens[i] * gens[j]).get_ui()];
  return profile;
}

/// Order by explicit closure (breadth-first over right multiplication by the
/// generators); std::nullopt once more than `limit` elements are found.
inline std::optional<std::size_t> enumerate_group_order(std::size_t degree, const std::vector<Permutation>& gens,
                                                        std::size_t limit = 10000) {
  std::set<Permutation> seen{identity_permutation(degree)};
  std::vector<Permutation> frontier{identity_permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Permutation h = g * s;
        if (seen.insert(h).second) {
          if (seen.size() > limit) return std::nullopt;
          next.push_back(std::move(h));
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace weyl_ising
