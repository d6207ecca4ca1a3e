#pragma once

// Weight-2 oracle: the θ-symmetric part of the weight-2 space of a lattice VOA
// V_L with L rootless, spanned by Heisenberg quadratics Σ S_ij b_i(−1)b_j(−1)𝟙
// over an orthonormal ambient basis and symmetric exponentials e^x + e^{−x}
// with ⟨x,x⟩ = 4. Products are the 1-st products, the form is the invariant
// bilinear form normalised by ⟨𝟙,𝟙⟩ = 1.

#include <cstddef>
#include <map>
#include <vector>

#include "weyl_ising/cocycle.hpp"
#include "weyl_ising/cyclotomic.hpp"
#include "weyl_ising/error.hpp"
#include "weyl_ising/lattice.hpp"

namespace weyl_ising {

/// Sign-normalised label: first nonzero coordinate positive.
inline QuarterVec canonical_label(QuarterVec v) {
  for (int x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

class Weight2Element {
 public:
  Weight2Element() = default;
  explicit Weight2Element(std::size_t dim) : dim_(dim), quad_(dim * dim) {}

  std::size_t dim() const noexcept { return dim_; }

  const CycInt8Scalar& quad(std::size_t i, std::size_t j) const { return quad_[i * dim_ + j]; }

  /// Adds c to S_ij and S_ji (once if i == j).
  void add_quad(std::size_t i, std::size_t j, const CycInt8Scalar& c) {
    quad_[i * dim_ + j] += c;
    if (i != j) quad_[j * dim_ + i] += c;
  }

  const std::map<QuarterVec, CycInt8Scalar>& exps() const noexcept { return exps_; }

  /// Adds c·(e^x + e^{−x}).
  void add_exp(const QuarterVec& x, const CycInt8Scalar& c) {
    if (c.is_zero()) return;
    if (quarter_dot(x, x) != 64) throw Error(ErrorCode::InvalidArgument, "exponential label must have norm 4");
    auto [it, inserted] = exps_.try_emplace(canonical_label(x), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) exps_.erase(it);
    }
  }

  Weight2Element& operator+=(const Weight2Element& o) {
    require_dim(o);
    for (std::size_t k = 0; k < quad_.size(); ++k)
      if (!o.quad_[k].is_zero()) quad_[k] += o.quad_[k];
    for (const auto& [x, c] : o.exps_) add_exp(x, c);
    return *this;
  }

  Weight2Element& operator*=(const CycInt8Scalar& s) {
    for (auto& q : quad_)
      if (!q.is_zero()) q *= s;
    for (auto it = exps_.begin(); it != exps_.end();) {
      it->second *= s;
      it = it->second.is_zero() ? exps_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend Weight2Element operator+(Weight2Element a, const Weight2Element& b) { return a += b; }
  friend Weight2Element operator-(Weight2Element a, Weight2Element b) { return a += (b *= CycInt8Scalar(-1)); }
  friend Weight2Element operator*(const CycInt8Scalar& s, Weight2Element a) { return a *= s; }

  bool is_zero() const {
    for (const auto& q : quad_)
      if (!q.is_zero()) return false;
    return exps_.empty();
  }

  /// Every coefficient lies in Q.
  bool all_rational() const {
    for (const auto& q : quad_)
      if (!q.is_rational()) return false;
    for (const auto& [x, c] : exps_)
      if (!c.is_rational()) return false;
    return true;
  }

  friend bool operator==(const Weight2Element& a, const Weight2Element& b) {
    return a.dim_ == b.dim_ && a.quad_ == b.quad_ && a.exps_ == b.exps_;
  }

  void require_dim(const Weight2Element& o) const {
    if (o.dim_ != dim_) throw Error(ErrorCode::IncompatibleAmbient, "weight-2 elements over different ambient spaces");
  }

 private:
  std::size_t dim_ = 0;
  std::vector<CycInt8Scalar> quad_;
  std::map<QuarterVec, CycInt8Scalar> exps_;
};

/// Orthogonal projector onto span(M) in ambient coordinates (identity ambient form).
inline QMatrix span_projector(const Lattice& m) { return m.basis().transpose() * inverse(m.gram()) * m.basis(); }

/// ω_M = ½ Σ h_i(−1)² over an orthonormal frame of Q⊗M, i.e. S = ½ P_M.
inline Weight2Element conformal_quadratic(const Lattice& m) {
  const QMatrix p = span_projector(m);
  Weight2Element w(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      if (p(i, j) != 0) w.add_quad(i, j, Rational(p(i, j) / 2));
  return w;
}

inline QuarterVec to_quarter(const QVector& v) {
  QuarterVec q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational s = v[i] * 4;
    if (!is_integer(s)) throw Error(ErrorCode::NotInHalfLattice, "coordinate is not a multiple of 1/4");
    q[i] = static_cast<int>(s.get_num().get_si());
  }
  return q;
}

/// e_M = 1/16 ω_M + 1/32 Σ_{x ∈ M(4)} e^x for M ≅ √2E8.
inline Weight2Element ising_vector(const Lattice& m) {
  const Shell s = shell(m, Rational(4));
  if (s.size() != 240)
    throw Error(ErrorCode::WrongShellSize, "norm-4 shell has " + std::to_string(s.size()) + " vectors, expected 240");
  Weight2Element e = CycInt8Scalar(make_rational(1, 16)) * conformal_quadratic(m);
  Weight2Element exps(m.dim());
  for (const auto& v : s.vectors) exps.add_exp(to_quarter(v), CycInt8Scalar(make_rational(1, 64)));
  // each ± pair was added twice, giving 1/32 per symmetric exponential
  return e + exps;
}

inline Weight2Element ising_vector_for_root(const HalfVec& alpha) { return ising_vector(m_alpha_lattice(alpha)); }

class Oracle {
 public:
  explicit Oracle(std::size_t blocks) : table_(blocks), dim_(8 * blocks) {}

  std::size_t dim() const noexcept { return dim_; }
  const CocycleTable& cocycle() const noexcept { return table_; }

  Weight2Element product(const Weight2Element& u, const Weight2Element& v) const {
    u.require_dim(v);
    Weight2Element out(dim_);
    quad_quad(u, v, out);
    quad_exp(u, v, out);
    quad_exp(v, u, out);
    exp_exp(u, v, out);
    return out;
  }

  CycInt8Scalar pairing(const Weight2Element& u, const Weight2Element& v) const {
    u.require_dim(v);
    CycInt8Scalar trace;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        const auto& a = u.quad(i, j);
        if (a.is_zero()) continue;
        const auto& b = v.quad(j, i);
        if (!b.is_zero()) trace += a * b;
      }
    CycInt8Scalar exps;
    for (const auto& [x, c] : u.exps()) {
      auto it = v.exps().find(x);
      if (it != v.exps().end()) exps += c * it->second;
    }
    return CycInt8Scalar(2) * trace + CycInt8Scalar(2) * exps;
  }

 private:
  // (Σ S h h)(Σ S' g g) = Σ M b b with M = 2(SS' + S'S).
  void quad_quad(const Weight2Element& u, const Weight2Element& v, Weight2Element& out) const {
    std::vector<CycInt8Scalar> ss(dim_ * dim_);
    bool any = false;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < dim_; ++k) {
        const auto& a = u.quad(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
          const auto& b = v.quad(k, j);
          if (b.is_zero()) continue;
          ss[i * dim_ + j] += a * b;
          any = true;
        }
      }
    if (!any) return;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j) {
        CycInt8Scalar m = ss[i * dim_ + j] + ss[j * dim_ + i];  // (SS' + (SS')ᵀ)_ij, and S'S = (SS')ᵀ
        if (!m.is_zero()) out.add_quad(i, j, CycInt8Scalar(2) * m);
      }
  }

  // (Σ S h h)·(e^x + e^{−x}) = (xᵀ S x)(e^x + e^{−x}).
  void quad_exp(const Weight2Element& q, const Weight2Element& e, Weight2Element& out) const {
    bool any = false;
    for (std::size_t i = 0; i < dim_ * dim_ && !any; ++i) any = !q.quad(i / dim_, i % dim_).is_zero();
    if (!any) return;
    for (const auto& [x, c] : e.exps()) {
      CycInt8Scalar s;
      for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j)
          if (x[j] != 0 && !q.quad(i, j).is_zero()) s += q.quad(i, j) * Rational(x[i] * x[j]);
      }
      s *= make_rational(1, 16);
      if (!s.is_zero()) out.add_exp(x, s * c);
    }
  }

  void exp_exp(const Weight2Element& u, const Weight2Element& v, Weight2Element& out) const {
    std::map<QuarterVec, HalfCoords> coords;
    auto coords_of = [&](const QuarterVec& x) -> const HalfCoords& {
      auto it = coords.find(x);
      if (it == coords.end()) it = coords.emplace(x, table_.coords(x)).first;
      return it->second;
    };
    for (const auto& [a, ca] : u.exps()) {
      for (const auto& [b, cb] : v.exps()) {
        const long ip16 = quarter_dot(a, b);
        if (ip16 % 16 != 0) throw Error(ErrorCode::InvalidArgument, "exponential labels pair non-integrally");
        const long ip = ip16 / 16;
        if (ip >= -1 && ip <= 1) continue;
        if (ip == 3 || ip == -3) throw Error(ErrorCode::RootCreated, "a sum of two norm-4 labels has norm 2");
        // b' ∈ {±b} with ⟨a, b'⟩ < 0 carries the surviving term
        QuarterVec bp = ip < 0 ? b : negate(b);
        const int e0 = table_.eps0(coords_of(a), ip < 0 ? coords_of(b) : table_.coords(bp));
        if (e0 != 0 && e0 != 4) throw Error(ErrorCode::NonRealCocycle, "cocycle value is not ±1");
        const CycInt8Scalar coeff = ca * cb * CycInt8Scalar::zeta_pow(e0);
        if (ip == 2 || ip == -2) {
          out.add_exp(a + bp, coeff);
        } else {  // b' = −a: e^a_1 e^{−a} + e^{−a}_1 e^a = a(−1)²
          for (std::size_t i = 0; i < dim_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = i; j < dim_; ++j)
              if (a[j] != 0) out.add_quad(i, j, coeff * make_rational(static_cast<long>(a[i]) * a[j], 16));
          }
        }
      }
    }
  }

  CocycleTable table_;
  std::size_t dim_;
};

}  // namespace weyl_ising
