#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "weyl_ising/matrix.hpp"

namespace weyl_ising {

namespace detail {

inline void swap_rows(ZMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// rows (r, i) <- (s*r + t*i, -b/g*r + a/g*i); determinant of the 2x2 block is 1.
inline void gcd_combine_rows(ZMatrix& m, std::size_t r, std::size_t i, const Integer& s, const Integer& t,
                             const Integer& u, const Integer& v) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer x = m(r, j), y = m(i, j);
    if (x == 0 && y == 0) continue;
    m(r, j) = s * x + t * y;
    m(i, j) = u * x + v * y;
  }
}

inline void add_row_multiple(ZMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) += f * m(src, j);
}

}  // namespace detail

/// Row-style Hermite normal form: `transform * input == form`, with the nonzero
/// rows of `form` in echelon shape, positive pivots, and entries above each
/// pivot reduced into [0, pivot). Zero rows are collected at the bottom.
struct HermiteForm {
  ZMatrix form;
  ZMatrix transform;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

inline HermiteForm hermite_form(const ZMatrix& input, bool with_transform = true) {
  HermiteForm h{input, with_transform ? ZMatrix::identity(input.rows()) : ZMatrix(), {}};
  ZMatrix& a = h.form;
  ZMatrix& u = h.transform;
  const std::size_t m = a.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (a(i, c) == 0) continue;
      if (a(r, c) == 0) {
        detail::swap_rows(a, r, i);
        if (with_transform) detail::swap_rows(u, r, i);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(r, c).get_mpz_t(), a(i, c).get_mpz_t());
      Integer uu = -a(i, c) / g;
      Integer vv = a(r, c) / g;
      detail::gcd_combine_rows(a, r, i, s, t, uu, vv);
      if (with_transform) detail::gcd_combine_rows(u, r, i, s, t, uu, vv);
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
      if (with_transform)
        for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
    }
    for (std::size_t k = 0; k < r; ++k) {
      Integer f = -floor_div(a(k, c), a(r, c));
      detail::add_row_multiple(a, k, r, f);
      if (with_transform) detail::add_row_multiple(u, k, r, f);
    }
    h.pivot_cols.push_back(c);
    ++r;
  }
  return h;
}

/// Basis (as rows) of the integer left kernel {x : x * a == 0}.
inline ZMatrix integer_left_kernel(const ZMatrix& a) {
  const auto h = hermite_form(a, true);
  ZMatrix k(a.rows() - h.rank(), a.rows());
  for (std::size_t i = h.rank(); i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) k(i - h.rank(), j) = h.transform(i, j);
  return k;
}

/// Nonzero rows of the Hermite normal form: the canonical basis of the row lattice.
inline ZMatrix hnf_basis(const ZMatrix& a) {
  const auto h = hermite_form(a, false);
  ZMatrix b(h.rank(), a.cols());
  for (std::size_t i = 0; i < h.rank(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) b(i, j) = h.form(i, j);
  return b;
}

/// Membership of `v` in the row lattice of an HNF basis (as returned by hnf_basis).
inline bool hnf_contains(const ZMatrix& hnf, std::vector<Integer> v) {
  std::size_t row = 0;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (row < hnf.rows() && hnf(row, c) != 0) {
      if (v[c] != 0) {
        if (!mpz_divisible_p(v[c].get_mpz_t(), hnf(row, c).get_mpz_t())) return false;
        Integer f = v[c] / hnf(row, c);
        for (std::size_t j = c; j < v.size(); ++j)
          if (hnf(row, j) != 0) v[j] -= f * hnf(row, j);
      }
      ++row;
    } else if (v[c] != 0) {
      return false;
    }
  }
  return true;
}

/// Invariant factors (diagonal of the Smith normal form), nonzero ones only.
inline std::vector<Integer> smith_invariants(ZMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // pick the smallest nonzero entry of the trailing block as pivot
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(pr, pc)))) {
          found = true;
          pr = i;
          pc = j;
        }
    if (!found) break;
    detail::swap_rows(a, t, pr);
    for (std::size_t i = 0; i < m; ++i) std::swap(a(i, t), a(i, pc));
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = floor_div(a(i, t), a(t, t));
        for (std::size_t j = t; j < n; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) {
          clean = false;
          detail::swap_rows(a, t, i);
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = floor_div(a(t, j), a(t, t));
        for (std::size_t i = t; i < m; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) {
          clean = false;
          for (std::size_t i = 0; i < m; ++i) std::swap(a(i, t), a(i, j));
        }
      }
      if (!clean) continue;
      // the pivot must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            for (std::size_t k = t; k < n; ++k) a(t, k) += a(i, k);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a(t, t)));
  }
  return diag;
}

}  // namespace weyl_ising
