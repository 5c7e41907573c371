#pragma once

#include "ogring/chow_ring.hpp"
#include "ogring/expression.hpp"

#include <vector>

namespace ogring {

// Integral representative of the linear part of the total Steenrod operation
// on the Chern class c(i): sum_{j=0}^{i-1} binom(i-1,j) c(i+j), with terms
// beyond c(n) dropped.
ExprPtr shat(int i, int n);

// Product of shat over an index set.
ExprPtr shat_set(const std::vector<int>& indices, int n);

// Torsion index 2^{n - 2 v2(n) + 2}; n must be a power of two.
Int torsion_index(int n);
int torsion_exponent(int n);  // the exponent m

// (degree_top(a) / ind X) mod 2; throws when the top coefficient is not
// divisible by the torsion index.
int deg_over_index(const ChowElem& a, const ChowRing& ring);

}  // namespace ogring
