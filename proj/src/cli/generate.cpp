#include "towercalc/cli/generate.hpp"

#include <algorithm>
#include <stdexcept>

namespace towercalc::cli {

using complex::ChainComplex;
using exactalg::Integer;
using exactalg::IntegerMatrix;
using exactalg::Presentation;

long draw(std::mt19937_64& rng, long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("draw: empty range");
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

namespace {

bool within(const IntegerMatrix& m, long bound) {
  return std::all_of(m.entries().begin(), m.entries().end(),
                     [&](const Integer& e) { return abs(e) <= bound; });
}

}  // namespace

ChainComplex random_complex(std::mt19937_64& rng, const Profile& profile) {
  if (profile.max_span < 1 || profile.max_generators < 1)
    throw std::invalid_argument("random_complex: empty profile");
  const long lo = draw(rng, 0, profile.max_min_degree);
  const long span = draw(rng, 1, profile.max_span);
  std::vector<std::size_t> gens(static_cast<std::size_t>(span), 0);
  // Pieces: (degree offset, t) with t = 0 for a sphere, else Z --t--> Z from offset + 1.
  std::vector<std::pair<long, long>> pieces;
  const long attempts = draw(rng, 1, span * 2);
  for (long a = 0; a < attempts; ++a) {
    const long n = draw(rng, 0, span - 1);
    const bool pair = n + 1 < span && rng() % 3 != 0;
    const auto u = static_cast<std::size_t>(n);
    if (gens[u] >= profile.max_generators) continue;
    if (pair) {
      if (gens[u + 1] >= profile.max_generators) continue;
      pieces.emplace_back(n, draw(rng, 1, std::min(5L, profile.max_entry)));
      ++gens[u];
      ++gens[u + 1];
    } else {
      pieces.emplace_back(n, 0);
      ++gens[u];
    }
  }

  // Lay the pieces out and record the differentials d_n : n -> n - 1.
  std::vector<std::size_t> next(gens.size(), 0);
  std::vector<IntegerMatrix> d;
  for (long n = 1; n < span; ++n)
    d.emplace_back(gens[static_cast<std::size_t>(n - 1)], gens[static_cast<std::size_t>(n)]);
  for (const auto& [n, t] : pieces) {
    const auto u = static_cast<std::size_t>(n);
    if (t == 0) {
      ++next[u];
      continue;
    }
    d[u](next[u], next[u + 1]) = t;
    ++next[u];
    ++next[u + 1];
  }

  // Change basis in degree n by T = I + s e_ij: d_n <- d_n T and d_{n+1} <- T^-1 d_{n+1}.
  for (long n = 0; n < span; ++n) {
    const auto u = static_cast<std::size_t>(n);
    if (gens[u] < 2) continue;
    const long steps = draw(rng, 0, 6);
    for (long s = 0; s < steps; ++s) {
      const auto i = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(gens[u]) - 1));
      auto j = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(gens[u]) - 2));
      if (j >= i) ++j;
      const Integer sign = rng() % 2 ? 1 : -1;
      IntegerMatrix below = n > 0 ? d[u - 1] : IntegerMatrix();
      IntegerMatrix above = n + 1 < span ? d[u] : IntegerMatrix();
      // Column j of d_n gains s times column i; row i of d_{n+1} loses s times row j.
      if (n > 0) below.add_col_multiple(j, i, sign);
      if (n + 1 < span) above.add_row_multiple(i, j, -sign);
      if ((n > 0 && !within(below, profile.max_entry)) ||
          (n + 1 < span && !within(above, profile.max_entry)))
        continue;
      if (n > 0) d[u - 1] = std::move(below);
      if (n + 1 < span) d[u] = std::move(above);
    }
  }

  std::vector<Presentation> degrees;
  for (auto g : gens) degrees.push_back(Presentation::free(g));
  return ChainComplex(lo, std::move(degrees), std::move(d));
}

ComplexDocument generate(std::uint64_t seed, const Profile& profile) {
  std::mt19937_64 rng(seed);
  ComplexDocument doc;
  doc.name = "generated-" + std::to_string(seed);
  doc.complex = random_complex(rng, profile);
  doc.metadata = {{"seed", seed},
                  {"profile",
                   {{"max_span", profile.max_span},
                    {"max_generators", profile.max_generators},
                    {"max_entry", profile.max_entry},
                    {"max_min_degree", profile.max_min_degree}}}};
  return doc;
}

}  // namespace towercalc::cli
