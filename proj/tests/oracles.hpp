#pragma once

// Independent reference computations used to freeze and cross-check expected
// values. Nothing here calls into the library's reduction kernels.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Dense = std::vector<std::vector<Int>>;

/// Fraction-free (Bareiss) determinant of a square matrix.
inline Int determinant(Dense m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Invariant factors through determinantal divisors: D_k = gcd of all k x k
/// minors and d_k = D_k / D_{k-1}. Returns min(rows, cols) entries, zeros last.
inline std::vector<Int> invariant_factors_by_minors(const Dense& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  const std::size_t n = std::min(rows, cols);
  std::vector<Int> out(n, Int(0));
  Int previous = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Int g = 0;
    for_each_subset(rows, k, [&](const std::vector<std::size_t>& r) {
      for_each_subset(cols, k, [&](const std::vector<std::size_t>& c) {
        Dense minor(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[r[i]][c[j]];
        g = gcd(g, determinant(std::move(minor)));
      });
    });
    if (g == 0) break;
    out[k - 1] = g / previous;
    previous = g;
  }
  return out;
}

/// Textbook elementary reduction: Euclid on the leading row and column using
/// the first nonzero entry, then a divisibility sweep. Returns the diagonal.
inline std::vector<Int> invariant_factors_by_elimination(Dense a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    bool found = false;
    for (std::size_t i = t; i < rows && !found; ++i)
      for (std::size_t j = t; j < cols && !found; ++j)
        if (a[i][j] != 0) {
          std::swap(a[t], a[i]);
          for (auto& row : a) std::swap(row[t], row[j]);
          found = true;
        }
    if (!found) break;
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        while (a[i][t] != 0) {
          Int q = a[i][t] / a[t][t];
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
          if (a[i][t] != 0) std::swap(a[t], a[i]);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        while (a[t][j] != 0) {
          Int q = a[t][j] / a[t][t];
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
          if (a[t][j] != 0)
            for (auto& row : a) std::swap(row[t], row[j]);
        }
      }
      // column swaps may have refilled column t
      for (std::size_t i = t + 1; i < rows && !dirty; ++i)
        if (a[i][t] != 0) dirty = true;
      for (std::size_t i = t + 1; i < rows && !dirty; ++i)
        for (std::size_t j = t + 1; j < cols && !dirty; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
            dirty = true;
          }
    }
  }
  std::vector<Int> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = abs(a[i][i]);
  return d;
}

/// |Hom(Z^g / rowspan(R), Z/m)| by brute force over (Z/m)^g.
inline std::uint64_t hom_count_brute_force(std::size_t g, const Dense& relations, long m) {
  std::uint64_t count = 0;
  std::vector<long> x(g, 0);
  while (true) {
    bool ok = true;
    for (const auto& rel : relations) {
      Int s = 0;
      for (std::size_t j = 0; j < g; ++j) s += rel[j] * x[j];
      if (s % m != 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < g && ++x[i] == m) x[i++] = 0;
    if (i == g) break;
  }
  return count;
}

/// |Hom(Z^rank + sum Z/t_i, Z/m)| from a normal form.
inline std::uint64_t hom_count_from_normal_form(std::size_t rank, const std::vector<Int>& torsion,
                                                long m) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < rank; ++i) c *= static_cast<std::uint64_t>(m);
  for (const auto& t : torsion) {
    Int g = gcd(t, Int(m));
    c *= g.get_ui();
  }
  return c;
}

/// Number of Z/m-valued bilinear maps Z/a x Z/b -> Z/m (0 meaning Z): the
/// value on (1, 1) must be killed by a and by b.
inline std::uint64_t bilinear_count(long a, long b, long m) {
  std::uint64_t c = 0;
  for (long v = 0; v < m; ++v) {
    bool ok = (a == 0 || (a * v) % m == 0) && (b == 0 || (b * v) % m == 0);
    if (ok) ++c;
  }
  return c;
}

/// Deterministic small-integer draw in [lo, hi] independent of the standard
/// distributions (whose output is implementation-defined).
inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace oracle
