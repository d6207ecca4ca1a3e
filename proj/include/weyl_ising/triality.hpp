#pragma once

// Twisted axes ρ_i^ℓ(e^{i,j}) for X = E8ⁿ.
//
// Bookkeeping: ρ^a = Π ρ_t^{a_t} with a ∈ (Z/3)ⁿ and P_σ the block permutation
// (so P_σ ρ_t P_σ⁻¹ = ρ_{σ(t)}, and τ_{e^{i,j}} acts as P_{(i j)}). Since ρ_iρ_j
// fixes e^{i,j}, ρ^a(e^{i,j}) = ρ_i^{a_i − a_j}(e^{i,j}); the canonical label of
// an axis uses the smaller block index. A group element is the pair (a, σ)
// standing for ρ^a P_σ, composed as maps:
//   (a, σ)(a', σ') = (a + a'∘σ⁻¹, σσ').

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "weyl_ising/axes.hpp"
#include "weyl_ising/error.hpp"
#include "weyl_ising/hnf.hpp"
#include "weyl_ising/lattice.hpp"
#include "weyl_ising/permgrp.hpp"
#include "weyl_ising/rootsys.hpp"

namespace weyl_ising {

inline int mod3(long x) { return static_cast<int>(((x % 3) + 3) % 3); }

// ---------------------------------------------------------------------------
// δ and K = {β ∈ E8 : ⟨β,δ⟩ ∈ 3Z}

struct DeltaResult {
  HalfVec delta;  // doubled coordinates
  Rational norm;
  Lattice k;
  Integer index;
  Rational determinant;
  std::size_t root_count = 0;
  std::vector<std::string> type;
  bool ok() const {
    return index == 3 && determinant == 9 && root_count == 72 && type == std::vector<std::string>{"A8"};
  }
};

inline Lattice delta_kernel(const HalfVec& delta) {
  const auto& simple = e8_simple_roots();
  ZMatrix m(9, 1);
  for (int k = 0; k < 8; ++k) m(k, 0) = inner(simple[k], delta);
  m(8, 0) = 3;
  const ZMatrix ker = integer_left_kernel(m);
  QMatrix gens(ker.rows(), 8);
  const QMatrix b = rows_to_matrix(simple);
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (int k = 0; k < 8; ++k) {
      if (ker(r, k) == 0) continue;
      for (int t = 0; t < 8; ++t) gens(r, t) += Rational(ker(r, k)) * b(k, t);
    }
  return Lattice::span(gens);
}

inline HalfVec to_half(const QVector& v) {
  HalfVec h(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational s = 2 * v[i];
    if (!is_integer(s)) throw Error(ErrorCode::InvalidArgument, "coordinate is not a half-integer");
    h[i] = static_cast<int>(s.get_num().get_si());
  }
  return h;
}

/// Smallest-norm δ ∈ E8 (lexicographically first in its shell) with K ≅ A8,
/// confirmed by index, determinant, root count and Dynkin type.
inline DeltaResult find_delta() {
  const Lattice e8 = e8_lattice();
  const auto& roots = e8_roots();
  for (int norm = 2; norm <= 8; norm += 2) {
    Shell sh = shell(e8, Rational(norm));
    std::vector<HalfVec> candidates;
    for (const auto& v : sh.vectors) candidates.push_back(to_half(v));
    std::sort(candidates.begin(), candidates.end());
    for (const auto& d : candidates) {
      std::size_t divisible = 0;
      for (const auto& r : roots) divisible += mod3(inner(r, d)) == 0;
      if (divisible != 72) continue;
      DeltaResult res;
      res.delta = d;
      res.norm = norm;
      res.k = delta_kernel(d);
      res.index = lattice_index(res.k, e8).value_or(Integer(0));
      res.determinant = res.k.determinant();
      const Shell kr = shell(res.k, Rational(2));
      res.root_count = kr.size();
      std::vector<HalfVec> kroots;
      for (const auto& v : kr.vectors) kroots.push_back(to_half(v));
      res.type = dynkin_type(kroots);
      if (res.ok()) return res;
    }
  }
  throw Error(ErrorCode::NotFound, "no δ of norm ≤ 8 gives K ≅ A8");
}

// ---------------------------------------------------------------------------
// Twisted axes and the induced action

struct TwistedAxis {
  int i = 0, j = 1, l = 0;  // ρ_i^l(e^{i,j}), i < j, l mod 3
  friend bool operator==(const TwistedAxis&, const TwistedAxis&) = default;
  std::string label() const {
    return "rho" + std::to_string(i + 1) + "^" + std::to_string(l) + "(e" + std::to_string(i + 1) + "," +
           std::to_string(j + 1) + ")";
  }
};

/// ρ_p^s(e^{p,q}) for arbitrary distinct p, q, in canonical form.
inline TwistedAxis canonical_axis(int p, int q, long s) {
  if (p == q) throw Error(ErrorCode::InvalidArgument, "twisted axis needs two distinct blocks");
  return p < q ? TwistedAxis{p, q, mod3(s)} : TwistedAxis{q, p, mod3(-s)};
}

class TwistedAxes {
 public:
  explicit TwistedAxes(int n) : n_(n) {
    if (n < 2) throw Error(ErrorCode::UnsupportedRank, "twisted axes need n >= 2");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int l = 0; l < 3; ++l) axes_.push_back({i, j, l});
  }
  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return axes_.size(); }
  const TwistedAxis& operator[](std::size_t k) const { return axes_.at(k); }
  const std::vector<TwistedAxis>& axes() const noexcept { return axes_; }
  std::size_t index_of(const TwistedAxis& t) const {
    // axes are listed by (i, j, l) lexicographically
    std::size_t k = 0;
    for (int i = 0; i < t.i; ++i) k += 3 * static_cast<std::size_t>(n_ - 1 - i);
    return k + 3 * static_cast<std::size_t>(t.j - t.i - 1) + static_cast<std::size_t>(t.l);
  }

 private:
  int n_;
  std::vector<TwistedAxis> axes_;
};

struct TwistedGroupElement {
  std::vector<int> a;      // ρ-exponents mod 3, one per block
  std::vector<int> sigma;  // block permutation

  static TwistedGroupElement identity(int n) {
    TwistedGroupElement g;
    g.a.assign(n, 0);
    g.sigma.resize(n);
    std::iota(g.sigma.begin(), g.sigma.end(), 0);
    return g;
  }

  /// τ_{ρ_i^l(e^{i,j})} = ρ_i^l P_{(i j)} ρ_i^{−l} = ρ^{l e_i − l e_j} P_{(i j)}.
  static TwistedGroupElement tau(int n, const TwistedAxis& t) {
    TwistedGroupElement g = identity(n);
    g.a[t.i] = mod3(t.l);
    g.a[t.j] = mod3(-t.l);
    std::swap(g.sigma[t.i], g.sigma[t.j]);
    return g;
  }

  int n() const { return static_cast<int>(a.size()); }

  /// Image of ρ_p^s(e^{p,q}).
  TwistedAxis act(const TwistedAxis& t) const {
    const int p = sigma[t.i], q = sigma[t.j];
    return canonical_axis(p, q, static_cast<long>(a[p]) - a[q] + t.l);
  }

  friend TwistedGroupElement operator*(const TwistedGroupElement& g, const TwistedGroupElement& h) {
    TwistedGroupElement r;
    const int n = g.n();
    r.a.resize(n);
    r.sigma.resize(n);
    for (int t = 0; t < n; ++t) {
      r.sigma[t] = g.sigma[h.sigma[t]];
      r.a[g.sigma[t]] = mod3(g.a[g.sigma[t]] + h.a[t]);  // (a'∘σ⁻¹)(σ(t)) = a'(t)
    }
    return r;
  }

  /// Reduces a modulo the constant vectors c·(1,…,1) with n·c ≡ 0 (mod 3).
  void normalize() {
    if (n() % 3 != 0) return;
    const int c = a[0];
    for (auto& x : a) x = mod3(x - c);
  }

  bool is_identity() const {
    TwistedGroupElement g = *this;
    g.normalize();
    for (int t = 0; t < n(); ++t)
      if (g.a[t] != 0 || g.sigma[t] != t) return false;
    return true;
  }

  friend bool operator==(const TwistedGroupElement&, const TwistedGroupElement&) = default;
};

inline Permutation twisted_tau(const TwistedAxes& axes, std::size_t k) {
  const auto g = TwistedGroupElement::tau(axes.n(), axes[k]);
  Permutation p(axes.size());
  for (std::size_t m = 0; m < axes.size(); ++m) p[m] = static_cast<std::uint32_t>(axes.index_of(g.act(axes[m])));
  return p;
}

/// 2B for disjoint index pairs, otherwise 3C with third axis τ_e(f).
inline AxisAlgebra twisted_axis_algebra(int n) {
  const TwistedAxes axes(n);
  const std::size_t m = axes.size();
  std::vector<std::string> labels;
  for (const auto& t : axes.axes()) labels.push_back(t.label());
  std::vector<std::vector<RelationEntry>> table(m, std::vector<RelationEntry>(m));
  for (std::size_t e = 0; e < m; ++e) {
    const Permutation tau = twisted_tau(axes, e);
    for (std::size_t f = 0; f < m; ++f) {
      if (e == f) {
        table[e][f].kind = Relation::Same;
        continue;
      }
      const auto &x = axes[e], &y = axes[f];
      const bool disjoint = x.i != y.i && x.i != y.j && x.j != y.i && x.j != y.j;
      if (!disjoint) table[e][f] = RelationEntry{Relation::ThreeC, tau[f]};
    }
  }
  return AxisAlgebra(std::move(labels), std::move(table));
}

struct TwistedGroupReport {
  int n = 0;
  Integer order;
  Integer pair_action_order;  // image in the action on index pairs
  Integer kernel_order;
  Integer untwisted_order;    // ⟨τ_{(i,j,0)}⟩
  int exponent_k = 0;         // n−2 if 3 | n, else n−1
  Integer expected_order;     // 3^k · n!
  bool ok() const {
    return order == expected_order && kernel_order == pow(Integer(3), exponent_k) && untwisted_order == factorial(n);
  }
};

inline TwistedGroupReport twisted_group(int n) {
  if (n < 3) throw Error(ErrorCode::UnsupportedRank, "twisted group needs n >= 3");
  const TwistedAxes axes(n);
  std::vector<Permutation> gens, untwisted;
  for (std::size_t k = 0; k < axes.size(); ++k) {
    gens.push_back(twisted_tau(axes, k));
    if (axes[k].l == 0) untwisted.push_back(gens.back());
  }
  // induced action on unordered index pairs {i, j} (axis index / 3)
  const std::size_t pairs = axes.size() / 3;
  std::vector<Permutation> pair_gens;
  for (const auto& g : gens) {
    Permutation p(pairs);
    for (std::size_t q = 0; q < pairs; ++q) p[q] = g[3 * q] / 3;
    pair_gens.push_back(p);
  }
  TwistedGroupReport r;
  r.n = n;
  r.order = PermGroup(axes.size(), gens).order();
  r.pair_action_order = PermGroup(pairs, pair_gens).order();
  r.kernel_order = r.order / r.pair_action_order;
  r.untwisted_order = PermGroup(axes.size(), untwisted).order();
  r.exponent_k = n % 3 == 0 ? n - 2 : n - 1;
  r.expected_order = pow(Integer(3), r.exponent_k) * factorial(n);
  return r;
}

struct AbstractGroupReport {
  Integer order;
  Integer kernel_order;  // elements with σ = id
};

/// Closure of the τ elements under composition in the (a, σ) model.
inline AbstractGroupReport abstract_twisted_group(int n) {
  if (n < 3 || n > 8) throw Error(ErrorCode::UnsupportedRank, "abstract model supports 3 <= n <= 8");
  // Same law as TwistedGroupElement::operator*, on fixed-size arrays for speed.
  struct Flat {
    std::array<std::int8_t, 8> a{}, s{};
  };
  const TwistedAxes axes(n);
  std::vector<Flat> gens;
  for (const auto& t : axes.axes()) {
    const auto g = TwistedGroupElement::tau(n, t);
    Flat f;
    for (int i = 0; i < n; ++i) {
      f.a[i] = static_cast<std::int8_t>(g.a[i]);
      f.s[i] = static_cast<std::int8_t>(g.sigma[i]);
    }
    gens.push_back(f);
  }
  std::uint64_t pow3 = 1;
  for (int i = 0; i < n; ++i) pow3 *= 3;
  const bool quotient = n % 3 == 0;
  auto encode = [&](Flat& g) {
    if (quotient) {
      const int c = g.a[0];
      for (int i = 0; i < n; ++i) g.a[i] = static_cast<std::int8_t>((g.a[i] - c + 3) % 3);
    }
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) code = 3 * code + static_cast<std::uint64_t>(g.a[i]);
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
      std::uint64_t smaller = 0;
      for (int j = i + 1; j < n; ++j) smaller += g.s[j] < g.s[i];
      rank = rank * static_cast<std::uint64_t>(n - i) + smaller;
    }
    return rank * pow3 + code;
  };
  const std::uint64_t space = factorial(n).get_ui() * pow3;
  std::vector<bool> seen(space, false);
  Flat id;
  for (int i = 0; i < n; ++i) id.s[i] = static_cast<std::int8_t>(i);
  std::vector<Flat> frontier{id};
  seen[encode(id)] = true;
  AbstractGroupReport r{Integer(1), Integer(1)};
  std::uint64_t order = 1, kernel = 1;
  while (!frontier.empty()) {
    std::vector<Flat> next;
    for (const auto& g : frontier)
      for (const auto& h : gens) {
        Flat p;
        for (int t = 0; t < n; ++t) {
          p.s[t] = g.s[h.s[t]];
          p.a[g.s[t]] = static_cast<std::int8_t>((g.a[g.s[t]] + h.a[t]) % 3);
        }
        const std::uint64_t c = encode(p);
        if (seen[c]) continue;
        seen[c] = true;
        ++order;
        bool trivial = true;
        for (int t = 0; t < n; ++t) trivial = trivial && p.s[t] == t;
        kernel += trivial;
        next.push_back(p);
      }
    frontier = std::move(next);
  }
  r.order = static_cast<unsigned long>(order);
  r.kernel_order = static_cast<unsigned long>(kernel);
  return r;
}

/// 8n(n−1)/(n+9).
inline Rational twisted_central_charge_formula(int n) { return make_rational(8L * n * (n - 1), n + 9); }

/// 8hℓ/(h+30).
inline Rational central_charge_formula(const RootSystem& rs) {
  const long h = rs.coxeter_number(), l = rs.rank();
  return make_rational(8 * h * l, h + 30);
}

}  // namespace weyl_ising
