#ifndef ARQ_REP_HPP
#define ARQ_REP_HPP

#include <vector>

#include "arq/algebra.hpp"
#include "arq/matrix.hpp"

namespace arq {

// A linear representation of the A_n quiver in the engine's convention:
// per-vertex spaces and "down" maps acting from vertex v+1 to vertex v
// (composition factors descend from the top towards the socle).
struct LinearRepresentation {
  int n = 0;
  std::vector<int> dims;   // dims[v-1], 1-based vertices
  std::vector<Mat> down;   // down[v-1]: space(v+1) -> space(v), v = 1..n-1

  int dim(int v) const { return dims.at(v - 1); }
  const Mat& down_map(int v) const { return down.at(v - 1); }

  void check_consistent() const;
};

// Interval module as an explicit representation: dimension 1 on [lo,hi],
// identity maps inside the interval.
LinearRepresentation rep_oracle(const AlgebraSpec& alg, const IntervalModule& m);

// Direct sum of interval representations, in the given summand order; the
// summand index is the block coordinate at every vertex the interval covers.
LinearRepresentation rep_of_sum(const AlgebraSpec& alg, const std::vector<IntervalModule>& ms);

// Matrix of the canonical map between two direct sums of intervals at a fixed
// vertex v: entry (r,c) of `scalars` is carried to vertex v iff v lies in
// src[c] and dst[r] and the canonical map is supported there.
Mat rep_map_at_vertex(const AlgebraSpec& alg, const std::vector<IntervalModule>& src,
                      const std::vector<IntervalModule>& dst, const Mat& scalars, int v);

// Rank-counting decomposition into intervals; sorted multiset.
std::vector<IntervalModule> decompose_rep(const LinearRepresentation& rep);

} // namespace arq

#endif
