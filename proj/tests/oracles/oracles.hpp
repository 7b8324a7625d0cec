#pragma once

// Reference implementations used only by the tests. None of them calls the
// engine code they are compared against.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Z = mpz_class;

inline Z factorial(int n) {
  Z f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline int perm_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

/// Isotypic dimensions of V^{(x)n} by direct character averaging: V has a
/// homogeneous basis with the given degrees (even degrees only); sigma acts by
/// permuting tensor factors, so its trace on each degree is the number of
/// basis tuples it fixes.
inline std::map<int, Z> isotypic_by_fixed_points(const std::vector<int>& basis_degrees, int n, bool sign) {
  const std::size_t b = basis_degrees.size();
  std::vector<std::vector<int>> tuples{{}};
  for (int k = 0; k < n; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& t : tuples)
      for (std::size_t i = 0; i < b; ++i) {
        auto u = t;
        u.push_back(static_cast<int>(i));
        next.push_back(u);
      }
    tuples.swap(next);
  }
  std::map<int, Z> sum;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    const int chi = sign ? perm_sign(p) : 1;
    for (const auto& t : tuples) {
      bool fixed = true;
      for (int k = 0; k < n && fixed; ++k) fixed = t[static_cast<std::size_t>(p[static_cast<std::size_t>(k)])] == t[static_cast<std::size_t>(k)];
      if (!fixed) continue;
      int d = 0;
      for (int i : t) d += basis_degrees[static_cast<std::size_t>(i)];
      sum[d] += chi;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<int, Z> out;
  const Z nf = factorial(n);
  for (const auto& [d, s] : sum) {
    const Z q = s / nf;
    if (q != 0) out[d] = q;
  }
  return out;
}

/// H^*(P^1)^{(x)n} = permutation modules on k-subsets. The trivial character
/// occurs once in each; the sign character occurs iff the stabiliser
/// S_k x S_{n-k} has no transposition, i.e. k <= 1 and n - k <= 1.
inline std::map<int, Z> sphere_power_isotypic(int n, bool sign) {
  std::map<int, Z> out;
  for (int k = 0; k <= n; ++k)
    if (!sign || (k <= 1 && n - k <= 1)) out[2 * k] = 1;
  return out;
}

/// Number of partitions of n (Euler's pentagonal recurrence).
inline long partition_count(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long s = (k % 2) ? 1 : -1;
      total += s * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) total += s * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return p[static_cast<std::size_t>(n)];
}

/// Mukai pairing of the rank-3 K3 model with H^2 = 2k, written out.
inline Z k3_pairing(const std::vector<Z>& v, const std::vector<Z>& w, long k = 1) {
  return 2 * k * v[1] * w[1] - v[0] * w[2] - v[2] * w[0];
}

inline std::vector<Z> k3_reflection(const std::vector<Z>& e, const std::vector<Z>& v, long k = 1) {
  const Z c = k3_pairing(e, v, k);
  return {v[0] + c * e[0], v[1] + c * e[1], v[2] + c * e[2]};
}

/// det of a square integer matrix by cofactor expansion.
inline Z determinant(const std::vector<std::vector<Z>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Z det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Z>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Z> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    const Z term = m[0][c] * determinant(minor);
    det += (c % 2 ? -term : term);
  }
  return det;
}

/// Full tensor of rank^n coefficients, index tuple encoded little-endian.
struct FullTensor {
  std::size_t rank;
  int n;
  std::vector<Z> data;
};

inline std::vector<int> decode(std::size_t index, std::size_t rank, int n) {
  std::vector<int> t(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    t[static_cast<std::size_t>(k)] = static_cast<int>(index % rank);
    index /= rank;
  }
  return t;
}

inline FullTensor pure_tensor_sum(const std::vector<std::vector<std::vector<Z>>>& terms, std::size_t rank) {
  const int n = static_cast<int>(terms.front().size());
  std::size_t size = 1;
  for (int k = 0; k < n; ++k) size *= rank;
  FullTensor t{rank, n, std::vector<Z>(size)};
  for (std::size_t i = 0; i < size; ++i) {
    const auto idx = decode(i, rank, n);
    for (const auto& term : terms) {
      Z p = 1;
      for (int k = 0; k < n; ++k) p *= term[static_cast<std::size_t>(k)][static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
      t.data[i] += p;
    }
  }
  return t;
}

/// phi^{(x)n} applied coordinate by coordinate; phi is given by columns
/// phi[i][j] = i-th coordinate of phi(e_j).
inline FullTensor apply_tensor_power(const std::vector<std::vector<Z>>& phi, const FullTensor& x) {
  FullTensor out{x.rank, x.n, std::vector<Z>(x.data.size())};
  for (std::size_t src = 0; src < x.data.size(); ++src) {
    if (x.data[src] == 0) continue;
    const auto s = decode(src, x.rank, x.n);
    for (std::size_t dst = 0; dst < x.data.size(); ++dst) {
      const auto d = decode(dst, x.rank, x.n);
      Z p = x.data[src];
      for (int k = 0; k < x.n && p != 0; ++k)
        p *= phi[static_cast<std::size_t>(d[static_cast<std::size_t>(k)])][static_cast<std::size_t>(s[static_cast<std::size_t>(k)])];
      out.data[dst] += p;
    }
  }
  return out;
}

/// Coefficient at the sorted index tuple of a symmetric tensor.
inline Z sorted_coefficient(const FullTensor& t, std::vector<int> m) {
  std::sort(m.begin(), m.end());
  std::size_t index = 0;
  for (int k = t.n - 1; k >= 0; --k) index = index * t.rank + static_cast<std::size_t>(m[static_cast<std::size_t>(k)]);
  return t.data[index];
}

/// The two-column shift table of the P^n-twists and induced twists on the
/// two linearisations of E^{(x)n}, E spherical on a surface.
inline std::vector<std::vector<int>> value_table_rows(int n) {
  return {{-2 * n, 0}, {0, -2 * n}, {-n, -n}, {-n, -n}};
}

}  // namespace oracle
