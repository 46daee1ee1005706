#ifndef ARQ_AR_HPP
#define ARQ_AR_HPP

#include "arq/endalg.hpp"
#include "arq/projectivize.hpp"

namespace arq {

// AR triangle tauZ -> middle -> Z -> nu(Z); everything stored as minimal
// projective-kind complexes.
struct ARTriangle {
  Complex z;
  ChainMap w; // z -> nu(z), the connecting map
  Complex tau_z;
  Complex middle_complex; // minimize(cone(w')[-1]) as one complex
  std::vector<std::pair<Complex, int>> middle;
  std::vector<StripEvent> strips;
};

// Representative of the 1-dimensional space of maps z -> nu(z) killing the
// radical of End_K(z) under composition.
ChainMap connecting_map(const Complex& z);

ARTriangle ar_triangle_ending(const Complex& z);

Complex tau(const Complex& x, Direction dir);

// The three hom-vanishing conditions and the predicted middle summands.
struct PreConditions {
  bool c1 = false, c2 = false, c3 = false;
  std::vector<Complex> predicted; // nonzero, noncontractible, minimal p-form
  int holds() const { return int(c1) + int(c2) + int(c3); }
};

PreConditions pre_conditions(const AlgebraSpec& alg, const IntervalModule& m);

struct PredecessorInfo {
  int count = 0;
  std::vector<Complex> predecessors;
};

PredecessorInfo simple_predecessors(const AlgebraSpec& alg, int i);
PredecessorInfo projective_predecessor(const AlgebraSpec& alg, int i);

bool p_irreducible(const AlgebraSpec& alg, const CanonicalMap& f);

// stalk of a module in degree 0, as its minimal projective resolution
Complex p_stalk(const AlgebraSpec& alg, const IntervalModule& m);

} // namespace arq

#endif
