#ifndef ARQ_ENDALG_HPP
#define ARQ_ENDALG_HPP

#include <vector>

#include "arq/hom.hpp"

namespace arq {

// End_K(X) for a minimal complex X: Hom_K(X,X) basis, structure constants,
// and the radical via the characteristic-zero trace-form criterion.
struct EndAlgebra {
  Complex x;
  HomSpace hom;
  std::vector<ChainMap> basis; // Hom_K class representatives
  std::vector<Mat> left_mult;  // left_mult[i] = matrix of a -> e_i * a
  std::vector<Rat> unit;       // coordinates of the identity
  Mat radical;                 // columns: radical basis in class coordinates

  int dim() const { return int(basis.size()); }
  int radical_dim() const { return radical.cols(); }
  // product coordinates of a * b (a after b)
  std::vector<Rat> mult(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
  Mat left_mult_of(const std::vector<Rat>& a) const;
  ChainMap element(const std::vector<Rat>& a) const;
};

EndAlgebra end_algebra(const Complex& x);

bool is_indecomposable_k(const Complex& x);

// Full decomposition into indecomposable minimal complexes via idempotent
// search in End_K and strict lifting; deterministic given the global seed.
std::vector<Complex> decompose(const Complex& x);

// Grouped (complex, multiplicity) view of decompose, merged by isomorphism.
std::vector<std::pair<Complex, int>> decompose_grouped(const Complex& x);

} // namespace arq

#endif
