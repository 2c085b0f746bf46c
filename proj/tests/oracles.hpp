// Test-only independent oracles: bounded-degree linear algebra and
// exhaustive enumeration, kept apart from the Groebner-based paths
// they cross-check.
#ifndef QUOTDEFORM_TESTS_ORACLES_HPP
#define QUOTDEFORM_TESTS_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "quotdeform/fpmod.hpp"

namespace qd::oracle {

// Ideal membership by exhaustive linear algebra: is f in the span of
// { m * g : g in gens, deg(m g) <= maxdeg } over k?  A "true" answer
// certifies membership; "false" only says no witness exists below the
// degree bound.
bool membership_linear(const std::vector<Poly>& gens, const Poly& f,
                       int maxdeg);

// k-dimension of a finite-dimensional module, computed by enumerating
// monomial multiples of the generators up to stability and taking
// ranks (no Groebner machinery on the quotient side).
int kdim_linear(const Mod& M, int maxdeg);

// dim_k Hom_B(M, N) for finite-dimensional N: unknowns are the k
// coordinates of the generator images, constraints are the relation
// rows evaluated through normal-form arithmetic.
int hom_dim_linear(const Mod& M, const Mod& N);

// Exhaustive Hom count over GF(p): enumerates all |N|^gens(M) image
// tuples and checks each relation directly.  Returns the number of
// module maps (= p^dim Hom).
uint64_t hom_count_exhaustive(const Mod& M, const Mod& N, uint64_t cap);

// Ext^1 dimension by exhaustive structure enumeration over GF(p) on
// finite-dimensional M, N: counts upper-triangular module structures
// on N (+) M and coboundary identifications, both by brute force.
struct ExtCount {
  uint64_t valid;         // extensions as structure tuples
  uint64_t coboundaries;  // distinct trivializing tuples
  int dim_p;              // log_p(valid / coboundaries)
};
std::optional<ExtCount> ext1_count_exhaustive(const Mod& M, const Mod& N,
                                              uint64_t cap);

}  // namespace qd::oracle

#endif
