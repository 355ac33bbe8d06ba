#pragma once

#include "towercalc/complex/chain_complex.hpp"

#include <vector>

namespace towercalc::complex {

/// shift(X, n)_k = X_{k-n}, differential multiplied by (-1)^n.
ChainComplex shift(const ChainComplex& x, long n);

ChainComplex direct_sum(const ChainComplex& x, const ChainComplex& y);

/// Cone_k = X_{k-1} + Y_k with d(x, y) = (-d x, f x + d y).
ChainComplex mapping_cone(const ChainMap& f);

/// Hom(M, N)_k = sum_i Hom(M_i, N_{i+k}), with
/// (df) = d o f + (-1)^{k+1} f o d. A component f_i : M_i -> N_{i+k} is
/// flattened column-major. Throws TorsionSource if M has relations.
///
/// With this convention H_k(Hom(Z[i], N)) = H_{k+i}(N).
ChainComplex hom_complex(const ChainComplex& m, const ChainComplex& n);

struct ComplexPullback {
  ChainComplex complex;
  ChainMap to_first;
  ChainMap to_second;
};

/// Degreewise pullback of f : A -> C and g : B -> C, presented on a basis of
/// {(a, b) : f a = g b} in each degree. Throws IllFormedMap if the targets differ.
ComplexPullback degreewise_pullback(const ChainMap& f, const ChainMap& g);

/// The map Z -> pullback determined by a : Z -> A and b : Z -> B with
/// f a = g b (up to relations).
ChainMap pullback_corner(const ComplexPullback& pb, const ChainMap& a, const ChainMap& b);

/// Kernel of a chain map as the pullback along 0 -> target.
ComplexPullback degreewise_kernel(const ChainMap& f);

/// Sum of presented groups, generators of `a` first.
Presentation direct_sum(const Presentation& a, const Presentation& b);

}  // namespace towercalc::complex
