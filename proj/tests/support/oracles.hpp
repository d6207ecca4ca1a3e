#pragma once

// Independent reference computations. Nothing here calls into the library's
// algorithms; only plain data types are shared.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;  // doubled coordinates

inline int dot2(const Vec& a, const Vec& b) {  // 4<a,b>
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Every vector of the ambient box with doubled entries in [-lim, lim] and the
// requested parity pattern, visited recursively.
inline void box(std::size_t dim, int lim, bool half, const std::function<void(const Vec&)>& visit) {
  Vec v(dim);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == dim) return visit(v);
    for (int x = -lim; x <= lim; ++x) {
      if ((x % 2 != 0) != half) continue;
      v[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
}

inline std::set<Vec> e8_vectors(int norm) {
  std::set<Vec> out;
  const int lim = 2 * norm;  // |x_i| <= sqrt(norm)
  for (bool half : {false, true})
    box(8, lim, half, [&](const Vec& v) {
      if (dot2(v, v) != 4 * norm) return;
      int sum = 0;
      for (int x : v) sum += x;
      if (sum % 4 == 0) out.insert(v);  // coordinate sum is an even integer
    });
  return out;
}

/// Roots of A_n, D_n, E_n by brute force over the ambient box.
inline std::set<Vec> roots(char kind, int rank) {
  std::set<Vec> out;
  if (kind == 'A') {
    box(static_cast<std::size_t>(rank + 1), 2, false, [&](const Vec& v) {
      if (dot2(v, v) == 8 && std::accumulate(v.begin(), v.end(), 0) == 0) out.insert(v);
    });
  } else if (kind == 'D') {
    box(static_cast<std::size_t>(rank), 2, false, [&](const Vec& v) {
      if (dot2(v, v) == 8) out.insert(v);
    });
  } else {
    const Vec ones(8, 1), e18{2, 0, 0, 0, 0, 0, 0, 2};
    for (const auto& v : e8_vectors(2)) {
      if (rank <= 7 && dot2(v, ones) != 0) continue;
      if (rank == 6 && dot2(v, e18) != 0) continue;
      out.insert(v);
    }
  }
  return out;
}

using Perm = std::vector<std::uint32_t>;

/// Group order by closing the generated set under left multiplication.
inline std::size_t closure_order(const std::vector<Perm>& gens) {
  const std::size_t n = gens.front().size();
  Perm id(n);
  std::iota(id.begin(), id.end(), 0u);
  std::set<Perm> seen{id};
  std::vector<Perm> todo{id};
  while (!todo.empty()) {
    Perm g = todo.back();
    todo.pop_back();
    for (const auto& s : gens) {
      Perm h(n);
      for (std::size_t i = 0; i < n; ++i) h[i] = g[s[i]];
      if (seen.insert(h).second) todo.push_back(std::move(h));
    }
  }
  return seen.size();
}

// Twisted axes rho_p^s(e^{p,q}) as triples, rewritten one letter at a time.
struct Axis {
  int p, q, s;
  bool operator==(const Axis& o) const { return p == o.p && q == o.q && s == o.s; }
};

inline int m3(int x) { return ((x % 3) + 3) % 3; }

inline Axis canon(Axis a) {
  // rho_p rho_q fixes e^{p,q}, so rho_q^s(e^{p,q}) = rho_p^{-s}(e^{p,q})
  if (a.p > a.q) return {a.q, a.p, m3(-a.s)};
  return {a.p, a.q, m3(a.s)};
}

/// rho_t^k applied to an axis.
inline Axis rho(int t, int k, Axis a) {
  if (t == a.p) a.s += k;
  else if (t == a.q) a.s -= k;
  return canon(a);
}

/// The block transposition P_(i j).
inline Axis swap_blocks(int i, int j, Axis a) {
  auto f = [&](int x) { return x == i ? j : x == j ? i : x; };
  return canon({f(a.p), f(a.q), a.s});
}

/// tau of the axis rho_i^l(e^{i,j}) is the conjugate rho_i^l P_(i j) rho_i^{-l}.
inline Axis tau(const Axis& e, const Axis& f) { return rho(e.p, e.s, swap_blocks(e.p, e.q, rho(e.p, -e.s, f))); }

// Integer determinant by cofactor expansion (small matrices only).
inline long long det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    s += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return s;
}

/// Smith invariants d_k = D_k / D_{k-1} from gcds of k x k minors.
inline std::vector<long long> smith_by_minors(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  std::vector<long long> dk{1};
  for (std::size_t k = 1; k <= n; ++k) {
    long long g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    std::function<void(std::size_t, std::size_t)> pick_cols;
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t at, std::size_t from) {
      if (at == k) return pick_cols(0, 0);
      for (std::size_t r = from; r < n; ++r) {
        rows[at] = r;
        pick_rows(at + 1, r + 1);
      }
    };
    pick_cols = [&](std::size_t at, std::size_t from) {
      if (at == k) {
        std::vector<std::vector<long long>> sub(k, std::vector<long long>(k));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[rows[a]][cols[b]];
        g = std::gcd(g, det(sub));
        return;
      }
      for (std::size_t c = from; c < n; ++c) {
        cols[at] = c;
        pick_cols(at + 1, c + 1);
      }
    };
    pick_rows(0, 0);
    dk.push_back(g);
  }
  std::vector<long long> inv;
  for (std::size_t k = 1; k <= n; ++k) inv.push_back(dk[k] / dk[k - 1]);
  return inv;
}

}  // namespace oracle
