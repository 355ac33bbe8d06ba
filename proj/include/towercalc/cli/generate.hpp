#pragma once

#include "towercalc/cli/document.hpp"

#include <cstdint>
#include <random>

namespace towercalc::cli {

struct Profile {
  long max_span = 8;            // number of degrees
  std::size_t max_generators = 4;
  long max_entry = 5;           // bound on |entry| of every differential
  long max_min_degree = 2;      // bottom degree drawn from 0..max_min_degree
};

/// Uniform-ish draw in [lo, hi] as rng() % (hi - lo + 1), which, unlike the
/// standard distributions, is the same on every platform.
long draw(std::mt19937_64& rng, long lo, long hi);

/// A free complex assembled from spheres and pieces Z --t--> Z with
/// t in {1, ..., 5}, then scrambled by elementary changes of basis that keep
/// every entry within the profile. d o d = 0 holds by construction; torsion
/// primes lie in {2, 3, 5}. Deterministic per seed.
ComplexDocument generate(std::uint64_t seed, const Profile& profile = {});

/// Same, drawing from an existing stream.
complex::ChainComplex random_complex(std::mt19937_64& rng, const Profile& profile = {});

}  // namespace towercalc::cli
