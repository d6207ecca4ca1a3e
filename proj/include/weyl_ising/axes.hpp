#pragma once

// Closed-form Griess algebra on a set of axes with 2B/3C incidence:
//   e·e = 2e,  e·f = 0 (2B),  e·f = (e + f − g)/32 (3C with third axis g),
//   ⟨e,e⟩ = 1/4,  ⟨e,f⟩ = 0 (2B),  ⟨e,f⟩ = 1/256 (3C).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "weyl_ising/error.hpp"
#include "weyl_ising/matrix.hpp"
#include "weyl_ising/rootsys.hpp"

namespace weyl_ising {

enum class Relation { Same, TwoB, ThreeC };

struct RelationEntry {
  Relation kind = Relation::TwoB;
  std::size_t third = 0;  // meaningful for ThreeC only
  friend bool operator==(const RelationEntry&, const RelationEntry&) = default;
};

using AxisElement = std::vector<Rational>;

class AxisAlgebra {
 public:
  AxisAlgebra() = default;

  /// Validates the table: symmetric, Same on the diagonal, 3C triples closed.
  AxisAlgebra(std::vector<std::string> labels, std::vector<std::vector<RelationEntry>> table)
      : labels_(std::move(labels)), table_(std::move(table)) {
    const std::size_t n = labels_.size();
    if (table_.size() != n) throw Error(ErrorCode::InvalidRelation, "relation table has the wrong size");
    for (std::size_t i = 0; i < n; ++i) {
      if (table_[i].size() != n) throw Error(ErrorCode::InvalidRelation, "relation table has the wrong size");
      if (table_[i][i].kind != Relation::Same) throw Error(ErrorCode::InvalidRelation, "relation(e,e) must be Same");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& r = table_[i][j];
        if (r.kind != table_[j][i].kind) throw Error(ErrorCode::InvalidRelation, "relation is not symmetric");
        if (r.kind != Relation::ThreeC) continue;
        const std::size_t g = r.third;
        if (g >= n || g == i || g == j || table_[j][i].third != g)
          throw Error(ErrorCode::InvalidRelation, "bad third axis for " + labels_[i] + ", " + labels_[j]);
        if (!(table_[i][g] == RelationEntry{Relation::ThreeC, j}) || !(table_[j][g] == RelationEntry{Relation::ThreeC, i}))
          throw Error(ErrorCode::InvalidRelation, "3C triple through " + labels_[i] + ", " + labels_[j] + " is not closed");
      }
    partners_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && table_[i][j].kind != Relation::TwoB) partners_[i].push_back(j);
  }

  /// Axes = positive roots; 3C iff ⟨α,β⟩ = ±1 with third axis the positive root of α ∓ β.
  static AxisAlgebra from_root_system(const RootSystem& rs) {
    const auto& pos = rs.positive_roots();
    const std::size_t n = pos.size();
    std::vector<std::string> labels;
    for (const auto& a : pos) labels.push_back(format_root(a));
    std::vector<std::vector<RelationEntry>> table(n, std::vector<RelationEntry>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          table[i][j].kind = Relation::Same;
          continue;
        }
        const int ip = inner(pos[i], pos[j]);
        if (ip == 0) continue;
        const HalfVec third = rs.canonical_positive(pos[i] - scale(pos[j], ip));  // r_β(α)
        const auto idx = std::find(pos.begin(), pos.end(), third);
        table[i][j] = RelationEntry{Relation::ThreeC, static_cast<std::size_t>(idx - pos.begin())};
      }
    return AxisAlgebra(std::move(labels), std::move(table));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const RelationEntry& relation(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
  /// Axes in Same or ThreeC relation with axis i (excluding i).
  const std::vector<std::size_t>& partners(std::size_t i) const { return partners_.at(i); }

  AxisElement zero() const { return AxisElement(size(), Rational(0)); }
  AxisElement basis(std::size_t i) const {
    AxisElement e = zero();
    e.at(i) = 1;
    return e;
  }
  AxisElement sum_of_axes() const { return AxisElement(size(), Rational(1)); }

  /// Adds c · (e_i · e_j) to out.
  void accumulate_basis_product(std::size_t i, std::size_t j, const Rational& c, AxisElement& out) const {
    const auto& r = table_[i][j];
    switch (r.kind) {
      case Relation::Same:
        out[j] += 2 * c;
        break;
      case Relation::TwoB:
        break;
      case Relation::ThreeC: {
        const Rational k = c / 32;
        out[i] += k;
        out[j] += k;
        out[r.third] -= k;
        break;
      }
    }
  }

  AxisElement product(const AxisElement& u, const AxisElement& v) const {
    AxisElement out = zero();
    for (std::size_t i = 0; i < size(); ++i) {
      if (u[i] == 0) continue;
      if (v[i] != 0) accumulate_basis_product(i, i, u[i] * v[i], out);
      for (std::size_t j : partners_[i])
        if (v[j] != 0) accumulate_basis_product(i, j, u[i] * v[j], out);
    }
    return out;
  }

  Rational basis_pairing(std::size_t i, std::size_t j) const {
    switch (table_[i][j].kind) {
      case Relation::Same: return make_rational(1, 4);
      case Relation::TwoB: return Rational(0);
      case Relation::ThreeC: return make_rational(1, 256);
    }
    return Rational(0);
  }

  Rational pairing(const AxisElement& u, const AxisElement& v) const {
    Rational s = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      if (u[i] == 0) continue;
      if (v[i] != 0) s += u[i] * v[i] * basis_pairing(i, i);
      for (std::size_t j : partners_[i])
        if (v[j] != 0) s += u[i] * v[j] * basis_pairing(i, j);
    }
    return s;
  }

  QMatrix gram() const {
    QMatrix g(size(), size());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) g(i, j) = basis_pairing(i, j);
    return g;
  }

  static std::string format_root(const HalfVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += v[i] % 2 == 0 ? std::to_string(v[i] / 2) : std::to_string(v[i]) + "/2";
    }
    return s + ")";
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<RelationEntry>> table_;
  std::vector<std::vector<std::size_t>> partners_;
};

inline AxisElement operator+(AxisElement a, const AxisElement& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b.at(i);
  return a;
}
inline AxisElement operator-(AxisElement a, const AxisElement& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b.at(i);
  return a;
}
inline AxisElement operator*(const Rational& c, AxisElement a) {
  for (auto& x : a) x *= c;
  return a;
}
inline bool is_zero(const AxisElement& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

struct VirasoroReport {
  AxisElement vector;
  Rational norm;
  Rational central_charge;
  bool is_conformal = false;
};

/// Solves w·x = 2x for every axis x over the span of the axes.
inline VirasoroReport virasoro(const AxisAlgebra& a) {
  const std::size_t n = a.size();
  // component m of w·e_k: Σ_j w_j (e_j·e_k)_m
  std::vector<std::vector<LinearEquation>> eqs(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<std::pair<std::size_t, Rational>>> by_comp(n);
    auto add_terms = [&](std::size_t j) {
      AxisElement prod = a.zero();
      a.accumulate_basis_product(j, k, Rational(1), prod);
      for (std::size_t m = 0; m < n; ++m)
        if (prod[m] != 0) by_comp[m].emplace_back(j, prod[m]);
    };
    add_terms(k);
    for (std::size_t j : a.partners(k)) add_terms(j);
    for (std::size_t m = 0; m < n; ++m)
      if (!by_comp[m].empty() || m == k) eqs[k].push_back(LinearEquation{by_comp[m], Rational(m == k ? 2 : 0)});
    // diagonal component first
    std::stable_partition(eqs[k].begin(), eqs[k].end(), [&](const LinearEquation& e) { return e.rhs != 0; });
  }
  RowReducer solver(n);
  for (std::size_t k = 0; k < n; ++k) solver.add(eqs[k].front());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t t = 1; t < eqs[k].size(); ++t) solver.add(eqs[k][t]);
  if (!solver.consistent()) throw Error(ErrorCode::NoConformalVector, "w·x = 2x has no solution");
  const auto sol = solver.unique_solution();
  if (!sol)
    throw Error(ErrorCode::NonUniqueConformalVector,
                "solution space has dimension " + std::to_string(solver.nullity()));
  VirasoroReport rep;
  rep.vector = *sol;
  rep.norm = a.pairing(rep.vector, rep.vector);
  rep.central_charge = 2 * rep.norm;
  rep.is_conformal = true;
  for (std::size_t k = 0; k < n && rep.is_conformal; ++k)
    rep.is_conformal = a.product(rep.vector, a.basis(k)) == Rational(2) * a.basis(k);
  return rep;
}

struct SubVirasoroReport {
  AxisElement a;
  bool idempotent = false;    // a·a = 2a
  Rational norm;              // ⟨a,a⟩
  bool annihilates_e = false; // e·a = 0
  Rational pairing_with_e;    // ⟨e,a⟩
  bool ok() const {
    return idempotent && annihilates_e && norm == make_rational(21, 44) && pairing_with_e == 0;
  }
};

/// a = (32/33)(e + f + g) − e for the 3C triple through axes e and f.
inline SubVirasoroReport sub_virasoro_3c(const AxisAlgebra& alg, std::size_t e, std::size_t f) {
  if (e == f || alg.relation(e, f).kind != Relation::ThreeC)
    throw Error(ErrorCode::NotATriple, "axes do not span a 3C triple");
  const std::size_t g = alg.relation(e, f).third;
  AxisElement w = alg.zero();
  for (std::size_t x : {e, f, g}) w[x] = make_rational(32, 33);
  SubVirasoroReport rep;
  rep.a = w - alg.basis(e);
  rep.idempotent = alg.product(rep.a, rep.a) == Rational(2) * rep.a;
  rep.norm = alg.pairing(rep.a, rep.a);
  rep.annihilates_e = is_zero(alg.product(alg.basis(e), rep.a));
  rep.pairing_with_e = alg.pairing(alg.basis(e), rep.a);
  return rep;
}

/// τ_e on axes: swaps f ↔ g in every 3C triple {e, f, g}, fixes the rest.
inline std::vector<std::size_t> miyamoto_permutation(const AxisAlgebra& alg, std::size_t e) {
  std::vector<std::size_t> p(alg.size());
  for (std::size_t f = 0; f < alg.size(); ++f) {
    const auto& r = alg.relation(e, f);
    p[f] = r.kind == Relation::ThreeC ? r.third : f;
  }
  return p;
}

inline bool gram_positive_definite(const AxisAlgebra& alg) { return is_positive_definite(alg.gram()); }

/// ⟨e_i·e_j, e_k⟩ = ⟨e_i, e_j·e_k⟩ on one basis triple.
inline bool form_associates(const AxisAlgebra& alg, std::size_t i, std::size_t j, std::size_t k) {
  return alg.pairing(alg.product(alg.basis(i), alg.basis(j)), alg.basis(k)) ==
         alg.pairing(alg.basis(i), alg.product(alg.basis(j), alg.basis(k)));
}

/// Exhaustive over all basis triples when size() ≤ exhaustive_limit, else
/// `samples` triples drawn from a seeded mt19937.
inline bool check_form_associativity(const AxisAlgebra& alg, std::size_t exhaustive_limit = 12,
                                     std::size_t samples = 1000, unsigned seed = 20240611) {
  const std::size_t n = alg.size();
  if (n <= exhaustive_limit) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!form_associates(alg, i, j, k)) return false;
    return true;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s)
    if (!form_associates(alg, pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

/// Every τ_e preserves the product and the form on all basis pairs.
inline bool check_miyamoto_automorphisms(const AxisAlgebra& alg) {
  const std::size_t n = alg.size();
  for (std::size_t e = 0; e < n; ++e) {
    const auto p = miyamoto_permutation(alg, e);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& r = alg.relation(i, j);
        const auto& s = alg.relation(p[i], p[j]);
        if (r.kind != s.kind) return false;
        if (r.kind == Relation::ThreeC && p[r.third] != s.third) return false;
      }
  }
  return true;
}

}  // namespace weyl_ising
