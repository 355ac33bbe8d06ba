#pragma once

#include "oracles.hpp"

#include "towercalc/complex/chain_complex.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using towercalc::complex::ChainComplex;
using towercalc::exactalg::Integer;
using towercalc::exactalg::IntegerMatrix;
using towercalc::exactalg::Presentation;

// Homology recorded as cyclic orders per degree (0 meaning Z), orders > 1 only.
using CyclicProfile = std::map<long, std::vector<Integer>>;

// A free complex assembled from spheres Z[n] and pieces Z --t--> Z (degrees
// n+1 -> n), then scrambled by a unimodular change of basis in every degree.
// The homology of each piece is known in closed form.
struct ScrambledComplex {
  ChainComplex complex;
  CyclicProfile homology;
};

struct Unimodular {
  IntegerMatrix forward;
  IntegerMatrix inverse;
};

inline Unimodular random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  Unimodular u{IntegerMatrix::identity(n), IntegerMatrix::identity(n)};
  if (n < 2) return u;
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = rng() % n;
    std::size_t j = rng() % n;
    if (i == j) j = (j + 1) % n;
    const long c = draw(rng, -2, 2);
    // forward <- E forward with E = I + c e_ij; inverse <- inverse E^{-1}.
    for (std::size_t col = 0; col < n; ++col) u.forward(i, col) += c * u.forward(j, col);
    for (std::size_t row = 0; row < n; ++row) u.inverse(row, j) -= c * u.inverse(row, i);
  }
  return u;
}

inline void record(CyclicProfile& h, long k, const Integer& order) {
  if (order == 1) return;
  h[k].push_back(order);
}

inline ScrambledComplex scrambled_complex(std::mt19937_64& rng, long lo, long hi, int pieces) {
  const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::size_t> gens(len, 0);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> links(len);  // (row in k-1, col in k)
  std::vector<std::vector<Integer>> scales(len);
  CyclicProfile h;
  for (int p = 0; p < pieces; ++p) {
    const bool sphere = hi == lo || rng() % 3 == 0;
    if (sphere) {
      const long n = draw(rng, lo, hi);
      ++gens[static_cast<std::size_t>(n - lo)];
      record(h, n, 0);
    } else {
      const long n = draw(rng, lo, hi - 1);
      const Integer t = draw(rng, 0, 6);
      const std::size_t low = gens[static_cast<std::size_t>(n - lo)]++;
      const std::size_t high = gens[static_cast<std::size_t>(n + 1 - lo)]++;
      links[static_cast<std::size_t>(n + 1 - lo)].push_back({low, high});
      scales[static_cast<std::size_t>(n + 1 - lo)].push_back(t);
      if (t == 0) {
        record(h, n, 0);
        record(h, n + 1, 0);
      } else {
        record(h, n, t < 0 ? Integer(-t) : t);
      }
    }
  }
  std::vector<Unimodular> change;
  for (std::size_t j = 0; j < len; ++j) change.push_back(random_unimodular(rng, gens[j], 12));
  std::vector<Presentation> degrees;
  std::vector<IntegerMatrix> diffs;
  for (std::size_t j = 0; j < len; ++j) {
    degrees.push_back(Presentation::free(gens[j]));
    if (j == 0) continue;
    IntegerMatrix d(gens[j - 1], gens[j]);
    for (std::size_t e = 0; e < links[j].size(); ++e)
      d(links[j][e].first, links[j][e].second) = scales[j][e];
    diffs.push_back(change[j - 1].forward * d * change[j].inverse);
  }
  return {ChainComplex(lo, std::move(degrees), std::move(diffs)), std::move(h)};
}

// X with every degree reduced mod t (relations t * I).
inline ChainComplex reduce_mod(const ChainComplex& x, const Integer& t) {
  std::vector<Presentation> degrees;
  for (const auto& p : x.degrees())
    degrees.push_back(Presentation(p.generators, IntegerMatrix::diagonal(p.generators, p.generators,
                                                                         towercalc::exactalg::IntegerVector(
                                                                             p.generators, t))));
  return ChainComplex(x.min_degree(), std::move(degrees), x.differentials());
}

// Homology of a free complex with known cyclic profile, reduced mod t:
// H_k(F) (x) Z/t + Tor(H_{k-1}(F), Z/t).
inline CyclicProfile reduced_profile(const CyclicProfile& h, const Integer& t) {
  CyclicProfile out;
  for (const auto& [k, orders] : h)
    for (const auto& o : orders) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), o.get_mpz_t(), t.get_mpz_t());
      record(out, k, g);
      if (o != 0) record(out, k + 1, g);
    }
  return out;
}

// Rank and sorted prime-power elementary divisors of a sum of cyclic groups.
struct Elementary {
  std::size_t rank = 0;
  std::vector<Integer> prime_powers;
  friend bool operator==(const Elementary&, const Elementary&) = default;
};

inline Elementary elementary(const std::vector<Integer>& orders) {
  Elementary e;
  for (Integer o : orders) {
    if (o < 0) o = -o;
    if (o == 0) {
      ++e.rank;
      continue;
    }
    for (Integer p = 2; p * p <= o; ++p) {
      Integer q = 1;
      while (o % p == 0) {
        o /= p;
        q *= p;
      }
      if (q > 1) e.prime_powers.push_back(q);
    }
    if (o > 1) e.prime_powers.push_back(o);
  }
  std::sort(e.prime_powers.begin(), e.prime_powers.end());
  return e;
}

}  // namespace oracle
