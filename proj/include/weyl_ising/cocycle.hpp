#pragma once

// The bilinear cocycle ε₀ on ½X, X = E8ⁿ.
//
// Within one block, x_k = α_k / 2 for the E8 simple roots α_1..α_8 in the
// order of e8_simple_roots(), and
//   ε₀(x_k, x_l) = 4⟨x_k, x_l⟩ = ⟨α_k, α_l⟩  (k > l),   1  (k = l),   0  (k < l),
// extended bilinearly and summed over blocks. Values are residues mod 8.

#include <array>
#include <cstddef>
#include <vector>

#include "weyl_ising/cyclotomic.hpp"
#include "weyl_ising/error.hpp"
#include "weyl_ising/matrix.hpp"
#include "weyl_ising/rootsys.hpp"

namespace weyl_ising {

/// Ambient vector with 4x-scaled integer coordinates (exact for ½X when the
/// lattice coordinates are half-integers).
using QuarterVec = std::vector<int>;

inline QuarterVec quarter_from_half(const HalfVec& v) { return scale(v, 2); }

/// r ⊗ γ in 4x-scaled coordinates (r and γ doubled).
inline QuarterVec realize_quarter(const HalfVec& r, const HalfVec& gamma) {
  QuarterVec v(8 * r.size(), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0)
      for (std::size_t t = 0; t < 8; ++t) v[8 * i + t] = r[i] * gamma.at(t);
  return v;
}

/// 16·⟨u, v⟩ for 4x-scaled vectors.
inline long quarter_dot(const QuarterVec& u, const QuarterVec& v) {
  long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += static_cast<long>(u[i]) * v[i];
  return s;
}

/// Coordinates of a ½X vector in the basis {ι_t(x_k)}, blocks stored densely.
struct HalfCoords {
  std::vector<long> c;              // 8 per block
  std::vector<std::size_t> blocks;  // indices of nonzero blocks
};

class CocycleTable {
 public:
  explicit CocycleTable(std::size_t blocks) : blocks_(blocks) {
    const auto& a = e8_simple_roots();
    const QMatrix ginv = inverse(e8_gram());
    for (int k = 0; k < 8; ++k)
      for (int l = 0; l < 8; ++l) {
        table_[k][l] = k > l ? ((inner(a[k], a[l]) % 8) + 8) % 8 : (k == l ? 1 : 0);
        ginv_[k][l] = ginv(k, l).get_num().get_si();
      }
  }

  std::size_t blocks() const noexcept { return blocks_; }

  /// Table value ε₀(x_k, x_l) for 0-based k, l.
  int basis_value(int k, int l) const { return table_.at(k).at(l); }

  HalfCoords coords(const QuarterVec& a) const {
    if (a.size() != 8 * blocks_) throw Error(ErrorCode::InvalidArgument, "vector length does not match block count");
    const auto& roots = e8_simple_roots();
    HalfCoords h;
    h.c.assign(8 * blocks_, 0);
    for (std::size_t t = 0; t < blocks_; ++t) {
      bool zero = true;
      for (int i = 0; i < 8; ++i) zero = zero && a[8 * t + i] == 0;
      if (zero) continue;
      std::array<long, 8> pair{};  // ⟨2a_t, α_l⟩
      for (int l = 0; l < 8; ++l) {
        long s = 0;
        for (int i = 0; i < 8; ++i) s += static_cast<long>(a[8 * t + i]) * roots[l][i];
        if (s % 4 != 0) throw Error(ErrorCode::NotInHalfLattice, "vector is not in ½X");
        pair[l] = s / 4;
      }
      for (int k = 0; k < 8; ++k) {
        long s = 0;
        for (int l = 0; l < 8; ++l) s += pair[l] * ginv_[l][k];
        h.c[8 * t + k] = s;
      }
      // 4a_t = Σ c_k (2α_k): both sides are in the stored integer units
      for (int i = 0; i < 8; ++i) {
        long s = 0;
        for (int k = 0; k < 8; ++k) s += h.c[8 * t + k] * roots[k][i];
        if (s != a[8 * t + i]) throw Error(ErrorCode::NotInHalfLattice, "vector is not in ½X");
      }
      h.blocks.push_back(t);
    }
    return h;
  }

  int eps0(const HalfCoords& a, const HalfCoords& b) const {
    long s = 0;
    std::size_t j = 0;
    for (std::size_t t : a.blocks) {
      while (j < b.blocks.size() && b.blocks[j] < t) ++j;
      if (j == b.blocks.size()) break;
      if (b.blocks[j] != t) continue;
      const long* x = &a.c[8 * t];
      const long* y = &b.c[8 * t];
      for (int k = 0; k < 8; ++k) {
        if (x[k] == 0) continue;
        long row = 0;
        for (int l = 0; l <= k; ++l) row += table_[k][l] * y[l];
        s += x[k] * row;
      }
    }
    return static_cast<int>(((s % 8) + 8) % 8);
  }

  int eps0(const QuarterVec& a, const QuarterVec& b) const { return eps0(coords(a), coords(b)); }

  CycInt8Scalar eps(const QuarterVec& a, const QuarterVec& b) const { return CycInt8Scalar::zeta_pow(eps0(a, b)); }

 private:
  std::size_t blocks_;
  std::array<std::array<int, 8>, 8> table_{};
  std::array<std::array<long, 8>, 8> ginv_{};
};

/// ε(α⊗γ, β⊗γ) = −1 for all roots α, β of R with ⟨α,β⟩ = ±1 and all E8 roots γ.
/// Exhaustive over ordered pairs of roots (both signs) and all 240 γ.
inline bool check_sign_lemma(const RootSystem& rs) {
  const CocycleTable table(static_cast<std::size_t>(rs.ambient_dim()));
  const auto& roots = rs.roots();
  const auto& gammas = e8_roots();
  std::vector<std::vector<HalfCoords>> cache(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (const auto& g : gammas) cache[i].push_back(table.coords(realize_quarter(roots[i], g)));
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) {
      const int ip = inner(roots[i], roots[j]);
      if (ip != 1 && ip != -1) continue;
      for (std::size_t g = 0; g < gammas.size(); ++g)
        if (table.eps0(cache[i][g], cache[j][g]) != 4) return false;
    }
  return true;
}

}  // namespace weyl_ising
