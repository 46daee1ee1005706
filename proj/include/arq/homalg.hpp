#ifndef ARQ_HOMALG_HPP
#define ARQ_HOMALG_HPP

#include "arq/complex.hpp"

namespace arq {

enum class Direction { Forward, Inverse };

// Minimal projective resolution of M as a complex in degrees [-pdim, 0]
// (degree-0 term P_{M.hi}); quasi-isomorphic to the stalk of M.
Complex proj_resolution(const AlgebraSpec& alg, const IntervalModule& m);
// Minimal injective resolution, degrees [0, idim], degree-0 term I_{M.lo}.
Complex inj_resolution(const AlgebraSpec& alg, const IntervalModule& m);

int pdim(const AlgebraSpec& alg, const IntervalModule& m);
int idim(const AlgebraSpec& alg, const IntervalModule& m);
int gldim(const AlgebraSpec& alg);

// (maximal cardinality of an intersecting subset of the relation paths) + 1;
// singletons count as 1, empty relation set gives 1.
int gdim_bound(const AlgebraSpec& alg);

// nu(P_i) = I_i, nu^{-1}(I_i) = P_i on modules.
IntervalModule nakayama_module(const AlgebraSpec& alg, const IntervalModule& m, Direction dir);

// Omega(M) (kernel of the projective cover) / Omega^{-1}(M) (cokernel of the
// injective envelope); zero module when M is projective (resp. injective).
IntervalModule syzygy(const AlgebraSpec& alg, const IntervalModule& m, Direction dir);

// All valid interval modules, sorted.
std::vector<IntervalModule> all_modules(const AlgebraSpec& alg);

} // namespace arq

#endif
