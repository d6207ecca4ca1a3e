#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weyl_ising/error.hpp"
#include "weyl_ising/hnf.hpp"
#include "weyl_ising/matrix.hpp"
#include "weyl_ising/rootsys.hpp"

namespace weyl_ising {

using QVector = std::vector<Rational>;

/// A lattice spanned by the rows of `basis` inside an ambient rational space
/// carrying the symmetric form `form`.
class Lattice {
 public:
  Lattice() = default;

  static Lattice from_basis(const QMatrix& basis) { return from_basis(basis, QMatrix::identity(basis.cols())); }

  static Lattice from_basis(const QMatrix& basis, const QMatrix& form) {
    if (form.rows() != basis.cols() || form.cols() != basis.cols() || !form.is_symmetric())
      throw Error(ErrorCode::InvalidArgument, "ambient form does not match the basis");
    Lattice l;
    l.basis_ = basis;
    l.form_ = form;
    if (weyl_ising::rank(basis) != basis.rows()) throw Error(ErrorCode::DependentBasis, "basis rows are dependent");
    l.gram_ = basis * form * basis.transpose();
    if (!is_positive_definite(l.gram_)) throw Error(ErrorCode::NotPositiveDefinite, "Gram matrix is not positive definite");
    return l;
  }

  /// Abstract lattice Z^n with the given Gram matrix as its form.
  static Lattice from_gram(const QMatrix& gram) { return from_basis(QMatrix::identity(gram.rows()), gram); }

  /// Lattice spanned by possibly dependent generators (rows).
  static Lattice span(const QMatrix& generators, const QMatrix& form) {
    const Integer den = common_denominator(generators);
    const auto scaled = to_integer(Rational(den) * generators);
    const ZMatrix h = hnf_basis(*scaled);
    QMatrix basis(h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < h.cols(); ++j) basis(i, j) = Rational(h(i, j), den);
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < h.cols(); ++j) basis(i, j).canonicalize();
    return from_basis(basis, form);
  }

  static Lattice span(const QMatrix& generators) { return span(generators, QMatrix::identity(generators.cols())); }

  std::size_t rank() const noexcept { return basis_.rows(); }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const QMatrix& basis() const noexcept { return basis_; }
  const QMatrix& form() const noexcept { return form_; }
  const QMatrix& gram() const noexcept { return gram_; }

  Rational determinant() const { return weyl_ising::determinant(gram_); }

  bool is_integral() const { return to_integer(gram_).has_value(); }

  bool is_even() const {
    if (!is_integral()) return false;
    for (std::size_t i = 0; i < rank(); ++i)
      if (!mpz_even_p(gram_(i, i).get_num_mpz_t())) return false;
    return true;
  }

  Rational inner(const QVector& u, const QVector& v) const {
    Rational s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        if (form_(i, j) != 0 && v[j] != 0) s += u[i] * form_(i, j) * v[j];
    }
    return s;
  }

  /// Rows: the dual basis, expressed in ambient coordinates.
  QMatrix dual_basis() const { return inverse(gram_) * basis_; }

  /// Canonical (Hermite) basis; equal lattices give equal results.
  QMatrix canonical_basis() const {
    const Integer den = common_denominator(basis_);
    const ZMatrix h = hnf_basis(*to_integer(Rational(den) * basis_));
    QMatrix b(h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < h.cols(); ++j) {
        b(i, j) = Rational(h(i, j), den);
        b(i, j).canonicalize();
      }
    return b;
  }

  bool contains(const QVector& v) const { return Membership(*this).contains(v); }

  bool same_ambient(const Lattice& other) const { return dim() == other.dim() && form_ == other.form_; }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.same_ambient(b) && a.canonical_basis() == b.canonical_basis();
  }

  /// Reusable membership tester (one Hermite form, many queries).
  class Membership {
   public:
    explicit Membership(const Lattice& l) : den_(common_denominator(l.basis_)) {
      hnf_ = hnf_basis(*to_integer(Rational(den_) * l.basis_));
    }
    bool contains(const QVector& v) const {
      std::vector<Integer> z(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * den_;
        if (!is_integer(s)) return false;
        z[i] = s.get_num();
      }
      return hnf_contains(hnf_, std::move(z));
    }

   private:
    Integer den_;
    ZMatrix hnf_;
  };

 private:
  QMatrix basis_;
  QMatrix form_;
  QMatrix gram_;
};

/// Tensor product: Kronecker product of bases and of ambient forms.
inline Lattice tensor(const Lattice& a, const Lattice& b) {
  return Lattice::from_basis(kronecker(a.basis(), b.basis()), kronecker(a.form(), b.form()));
}

inline Lattice scaled(const Lattice& l, const Rational& norm_factor) {
  return Lattice::from_basis(l.basis(), norm_factor * l.form());
}

/// Elementary divisors > 1 of a finite abelian group.
struct AbelianInvariants {
  std::vector<Integer> divisors;

  Integer order() const {
    Integer o = 1;
    for (const auto& d : divisors) o *= d;
    return o;
  }

  Integer exponent() const { return divisors.empty() ? Integer(1) : divisors.back(); }
};

inline AbelianInvariants discriminant_group(const Lattice& l) {
  const auto g = to_integer(l.gram());
  if (!g) throw Error(ErrorCode::NotIntegral, "discriminant group needs an integral lattice");
  AbelianInvariants inv;
  for (const auto& d : smith_invariants(*g))
    if (d > 1) inv.divisors.push_back(d);
  return inv;
}

inline void require_common_ambient(const Lattice& a, const Lattice& b) {
  if (!a.same_ambient(b)) throw Error(ErrorCode::IncompatibleAmbient, "lattices live in different ambient spaces");
}

inline bool is_sublattice(const Lattice& m, const Lattice& l) {
  require_common_ambient(m, l);
  Lattice::Membership member(l);
  for (std::size_t i = 0; i < m.rank(); ++i)
    if (!member.contains(m.basis().row(i))) return false;
  return true;
}

inline Lattice lattice_sum(const Lattice& m, const Lattice& n) {
  require_common_ambient(m, n);
  QMatrix gens = m.basis();
  for (std::size_t i = 0; i < n.rank(); ++i) gens.append_row(n.basis().row(i));
  return Lattice::span(gens, m.form());
}

/// M ∩ N; std::nullopt when the intersection is the zero lattice.
inline std::optional<Lattice> lattice_intersection(const Lattice& m, const Lattice& n) {
  require_common_ambient(m, n);
  QMatrix stacked = m.basis();
  for (std::size_t i = 0; i < n.rank(); ++i) stacked.append_row(n.basis().row(i));
  const Integer den = common_denominator(stacked);
  const ZMatrix kernel = integer_left_kernel(*to_integer(Rational(den) * stacked));
  if (kernel.rows() == 0) return std::nullopt;
  QMatrix gens(kernel.rows(), m.dim());
  for (std::size_t k = 0; k < kernel.rows(); ++k)
    for (std::size_t i = 0; i < m.rank(); ++i) {
      if (kernel(k, i) == 0) continue;
      for (std::size_t j = 0; j < m.dim(); ++j) gens(k, j) += Rational(kernel(k, i)) * m.basis()(i, j);
    }
  return Lattice::span(gens, m.form());
}

/// ann_L(M) = {v ∈ L : ⟨v, M⟩ = 0}; std::nullopt when it is zero.
inline std::optional<Lattice> annihilator(const Lattice& m, const Lattice& l) {
  require_common_ambient(m, l);
  const QMatrix pairing = l.basis() * l.form() * m.basis().transpose();
  const Integer den = common_denominator(pairing);
  const ZMatrix kernel = integer_left_kernel(*to_integer(Rational(den) * pairing));
  if (kernel.rows() == 0) return std::nullopt;
  return Lattice::span(to_rational(kernel) * l.basis(), l.form());
}

/// [L : M] for a sublattice of full rank; std::nullopt if the index is infinite.
inline std::optional<Integer> lattice_index(const Lattice& m, const Lattice& l) {
  if (!is_sublattice(m, l)) throw Error(ErrorCode::NotASublattice, "M is not contained in L");
  if (m.rank() != l.rank()) return std::nullopt;
  Rational root;
  if (!exact_sqrt(m.determinant() / l.determinant(), root) || !is_integer(root))
    throw Error(ErrorCode::InvalidArgument, "index is not an integer");
  return root.get_num();
}

/// 2L ≤ M + ann_L(M).
inline bool is_rssd(const Lattice& m, const Lattice& l) {
  if (!is_sublattice(m, l)) throw Error(ErrorCode::NotASublattice, "M is not contained in L");
  const auto ann = annihilator(m, l);
  const Lattice sum = ann ? lattice_sum(m, *ann) : m;
  Lattice::Membership member(sum);
  for (std::size_t i = 0; i < l.rank(); ++i) {
    QVector v = l.basis().row(i);
    for (auto& x : v) x *= 2;
    if (!member.contains(v)) return false;
  }
  return true;
}

/// 2M* ≤ M.
inline bool is_ssd(const Lattice& m) {
  if (!m.is_integral()) throw Error(ErrorCode::NotIntegral, "SSD needs an integral lattice");
  const QMatrix dual = m.dual_basis();
  Lattice::Membership member(m);
  for (std::size_t i = 0; i < dual.rows(); ++i) {
    QVector v = dual.row(i);
    for (auto& x : v) x *= 2;
    if (!member.contains(v)) return false;
  }
  return true;
}

/// The isometry t_M: −1 on span(M), +1 on its orthogonal complement.
struct Isometry {
  ZMatrix in_basis;  // action on L-coordinates (row vectors): b_k ↦ Σ_j in_basis(k, j) b_j
  QMatrix ambient;   // action on ambient row vectors: v ↦ v · ambient
};

inline Isometry t_involution(const Lattice& m, const Lattice& l) {
  if (!is_rssd(m, l)) throw Error(ErrorCode::NotRSSD, "M is not RSSD in L");
  const std::size_t dim = l.dim();
  const QMatrix proj = l.form() * m.basis().transpose() * inverse(m.gram()) * m.basis();
  const QMatrix t = QMatrix::identity(dim) - Rational(2) * proj;
  const QMatrix coords = l.basis() * t * l.form() * l.basis().transpose() * inverse(l.gram());
  if (!(coords * l.basis() == l.basis() * t)) throw Error(ErrorCode::NotRSSD, "t_M does not preserve span(L)");
  const auto z = to_integer(coords);
  if (!z) throw Error(ErrorCode::NotRSSD, "t_M is not integral on L");
  return Isometry{*z, t};
}

/// Multiplicative order of a square integer matrix, 0 if it exceeds `cap`.
inline int matrix_order(const ZMatrix& a, int cap = 64) {
  const ZMatrix id = ZMatrix::identity(a.rows());
  ZMatrix p = a;
  for (int k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = p * a;
  }
  return 0;
}

/// Lattice vectors of a fixed norm, by Fincke–Pohst enumeration over an exact
/// LDLᵀ factorisation of the Gram matrix.
struct Shell {
  std::vector<std::vector<Integer>> coords;  // L-coordinates, lexicographic order
  std::vector<QVector> vectors;              // ambient coordinates, same order
  std::size_t size() const noexcept { return coords.size(); }
};

inline constexpr std::size_t kShellRankCap = 24;

namespace detail {

// Smallest / largest integer x with (x - c)^2 <= bound.
inline std::pair<Integer, Integer> integer_window(const Rational& c, const Rational& bound) {
  const double cd = c.get_d();
  const double rd = std::sqrt(std::max(0.0, bound.get_d()));
  Integer lo(std::floor(cd - rd) - 1);
  Integer hi(std::ceil(cd + rd) + 1);
  auto fits = [&](const Integer& x) {
    Rational d = Rational(x) - c;
    return d * d <= bound;
  };
  while (!fits(lo) && lo <= hi) ++lo;
  while (lo > Integer(std::floor(cd - rd) - 3) && fits(lo - 1)) --lo;
  while (!fits(hi) && hi >= lo) --hi;
  while (fits(hi + 1)) ++hi;
  return {lo, hi};
}

}  // namespace detail

inline Shell shell(const Lattice& l, const Rational& norm, std::size_t cap = kShellRankCap) {
  const std::size_t r = l.rank();
  if (r > cap) throw Error(ErrorCode::RankTooLarge, "shell enumeration is capped at rank " + std::to_string(cap));
  const auto f = ldlt(l.gram());
  Shell out;
  if (r == 0 || norm <= 0) return out;
  std::vector<Integer> x(r, 0);
  std::vector<Rational> budget(r + 1);
  budget[r] = norm;

  std::function<void(std::size_t)> descend = [&](std::size_t k1) {
    const std::size_t k = k1 - 1;
    Rational centre = 0;
    for (std::size_t i = k + 1; i < r; ++i)
      if (f.lower(i, k) != 0 && x[i] != 0) centre -= f.lower(i, k) * Rational(x[i]);
    const Rational bound = budget[k1] / f.pivots[k];
    auto [lo, hi] = detail::integer_window(centre, bound);
    for (Integer v = lo; v <= hi; ++v) {
      x[k] = v;
      const Rational d = Rational(v) - centre;
      budget[k] = budget[k1] - f.pivots[k] * d * d;
      if (k == 0) {
        if (budget[0] == 0) {
          bool nonzero = false;
          for (const auto& xi : x) nonzero = nonzero || xi != 0;
          if (nonzero) out.coords.push_back(x);
        }
      } else {
        descend(k);
      }
    }
    x[k] = 0;
  };
  descend(r);

  std::sort(out.coords.begin(), out.coords.end());
  out.vectors.reserve(out.coords.size());
  for (const auto& c : out.coords) {
    QVector v(l.dim(), Rational(0));
    for (std::size_t i = 0; i < r; ++i) {
      if (c[i] == 0) continue;
      for (std::size_t j = 0; j < l.dim(); ++j) v[j] += Rational(c[i]) * l.basis()(i, j);
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Standard models: X = E8 ⊥ … ⊥ E8 (n copies) in R^{8n}.

inline QMatrix rows_to_matrix(const std::vector<HalfVec>& rows) {
  QMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = make_rational(rows[i][j], 2);
  return m;
}

inline Lattice e8_lattice() { return Lattice::from_basis(rows_to_matrix(e8_simple_roots())); }

inline Lattice root_lattice(const RootSystem& rs) { return Lattice::from_basis(rows_to_matrix(rs.simple_roots())); }

/// ι_i : E8 → X^{(i)}, block index i in [0, blocks).
struct CopyEmbedding {
  std::size_t index;
  std::size_t blocks;

  QVector operator()(const HalfVec& gamma) const {
    QVector v(8 * blocks, Rational(0));
    for (std::size_t t = 0; t < 8; ++t) v[8 * index + t] = make_rational(gamma.at(t), 2);
    return v;
  }
};

/// r ⊗ γ realised in X as Σ_i r_i ι_i(γ); r has one coordinate per block.
inline QVector realize(const HalfVec& r, const HalfVec& gamma) {
  QVector v(8 * r.size(), Rational(0));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    for (std::size_t t = 0; t < 8; ++t) v[8 * i + t] = make_rational(r[i] * gamma.at(t), 4);
  }
  return v;
}

/// ν_{i,j}(γ) = ι_i(γ) − ι_j(γ).
inline QVector nu(std::size_t i, std::size_t j, std::size_t blocks, const HalfVec& gamma) {
  HalfVec r(blocks, 0);
  r.at(i) = 2;
  r.at(j) = -2;
  return realize(r, gamma);
}

/// μ_{i,j}(γ) = ι_i(γ) + ι_j(γ).
inline QVector mu(std::size_t i, std::size_t j, std::size_t blocks, const HalfVec& gamma) {
  HalfVec r(blocks, 0);
  r.at(i) = 2;
  r.at(j) = 2;
  return realize(r, gamma);
}

/// Lattice spanned by {r ⊗ α_k} for the given R-side vectors r and the E8 simple roots α_k.
inline Lattice realized_tensor(const std::vector<HalfVec>& r_basis) {
  QMatrix b;
  for (const auto& r : r_basis)
    for (const auto& a : e8_simple_roots()) b.append_row(realize(r, a));
  return Lattice::from_basis(b);
}

/// R ⊗ E8 realised inside X (or ½X for the E types).
inline Lattice tensor_model(const RootSystem& rs) { return realized_tensor(rs.simple_roots()); }

/// M_α = Zα ⊗ E8 ≅ √2 E8.
inline Lattice m_alpha_lattice(const HalfVec& alpha) { return realized_tensor({alpha}); }

struct IdentificationReport {
  std::string name;
  std::size_t rank = 0;
  Rational determinant;
  Rational expected_determinant;
  bool even = false;
  bool gram_matches = false;   // the explicit basis map is an isometry
  bool image_matches = false;  // its image is the model lattice as defined by generators / orthogonality
  bool ok() const { return even && gram_matches && image_matches && determinant == expected_determinant; }
};

/// Checks 𝒜_{n−1} ≅ A_{n−1}⊗E8 ("A", n), 𝒟_n ≅ D_n⊗E8 ("D", n), ℰ8 ≅ E8⊗E8,
/// ℰ7 ≅ E7⊗E8 and ℰ6 ≅ E6⊗E8 through explicit basis maps.
inline IdentificationReport verify_identification(const std::string& name, int n = 0) {
  RootSystem rs;
  std::size_t blocks = 0;
  if (name == "A") {
    if (n < 2) throw Error(ErrorCode::UnsupportedRank, "A(n-1) needs n >= 2");
    rs = RootSystem::build(RootKind::A, n - 1);
    blocks = static_cast<std::size_t>(n);
  } else if (name == "D") {
    if (n < 4) throw Error(ErrorCode::UnsupportedRank, "D(n) needs n >= 4");
    rs = RootSystem::build(RootKind::D, n);
    blocks = static_cast<std::size_t>(n);
  } else if (name == "E8" || name == "E7" || name == "E6") {
    rs = RootSystem::build(RootKind::E, name[1] - '0');
    blocks = 8;
  } else {
    throw Error(ErrorCode::UnsupportedName, "unknown identification '" + name + "'");
  }

  IdentificationReport rep;
  rep.name = rs.name();
  const Lattice abstract = tensor(root_lattice(rs), e8_lattice());
  const Lattice image = tensor_model(rs);
  rep.rank = image.rank();
  rep.determinant = image.determinant();
  rep.expected_determinant = abstract.determinant();
  rep.even = image.is_even();
  rep.gram_matches = image.gram() == abstract.gram();

  const auto& e8 = e8_simple_roots();
  QMatrix gens;
  for (std::size_t i = 0; i < blocks; ++i)
    for (std::size_t j = i + 1; j < blocks; ++j)
      for (const auto& a : e8) {
        gens.append_row(nu(i, j, blocks, a));
        if (rs.kind() != RootKind::A) gens.append_row(mu(i, j, blocks, a));
      }
  if (rs.kind() == RootKind::E) {
    const HalfVec half_d(8, 1);  // ½ d(·)
    QMatrix d_gens;
    for (const auto& a : e8) d_gens.append_row(realize(half_d, a));
    for (std::size_t k = 0; k < d_gens.rows(); ++k) gens.append_row(d_gens.row(k));
    Lattice model = Lattice::span(gens);  // ℰ8
    if (rs.rank() <= 7) {
      for (const auto& a : e8) d_gens.append_row(mu(0, 7, 8, a));
      if (rs.rank() == 7) d_gens = [&] {
        QMatrix only_d;
        for (std::size_t k = 0; k < 8; ++k) only_d.append_row(d_gens.row(k));
        return only_d;
      }();
      const Lattice constraints = Lattice::span(d_gens);
      const auto ann = annihilator(constraints, model);
      if (!ann) return rep;
      model = *ann;
    }
    rep.image_matches = model == image;
  } else {
    rep.image_matches = Lattice::span(gens) == image;
  }
  return rep;
}

}  // namespace weyl_ising
