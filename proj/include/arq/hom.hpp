#ifndef ARQ_HOM_HPP
#define ARQ_HOM_HPP

#include <optional>
#include <vector>

#include "arq/complex.hpp"

namespace arq {

// One matrix entry of a degreewise map, restricted to positions where the
// hom space between the two summands is non-zero.
struct VarKey {
  int deg = 0, row = 0, col = 0;
};

// Hom(X, Y) at the chain level together with the null-homotopic subspace and
// chosen Hom_K coset representatives. All coordinates refer to the fixed
// allowed-entry variable list `fvars`.
class HomSpace {
public:
  Complex src, dst;
  std::vector<VarKey> fvars; // chain-map entry slots
  std::vector<VarKey> hvars; // homotopy entry slots (src^k -> dst^{k-1})
  Mat chain;                 // columns: basis of chain maps
  Mat bnd_gen;               // columns: boundary of each unit homotopy
  Mat bnd;                   // columns: basis of null-homotopic chain maps
  Mat reps;                  // columns: Hom_K class representatives

  int dim_chain() const { return chain.cols(); }
  int dim_null() const { return bnd.cols(); }
  int dim_k() const { return reps.cols(); }

  ChainMap to_map(const std::vector<Rat>& fcoords) const;
  std::vector<Rat> vec_of(const ChainMap& f) const;
  ChainMap chain_basis(int i) const;
  ChainMap class_rep(int i) const;
  Homotopy to_homotopy(const std::vector<Rat>& hcoords) const;

  // Coordinates of the class of f in the `reps` basis.
  std::vector<Rat> class_coords(const ChainMap& f) const;
  bool is_null_homotopic(const ChainMap& f, Homotopy* witness = nullptr) const;
};

HomSpace hom_spaces(const Complex& x, const Complex& y);

// Solve sum_i x_i gens[i] - target = dh + hd for (x, h); gens and target all
// map hs.src -> hs.dst. Returns false if no solution.
bool solve_modulo_homotopy(const HomSpace& hs, const std::vector<ChainMap>& gens,
                           const ChainMap& target, std::vector<Rat>& coeffs, Homotopy& h);

// Given a quasi-isomorphism rho: Q -> X with Q of projective kind and a map
// w: Z -> X from a projective-kind complex, produce w': Z -> Q with
// rho o w' homotopic to w.
ChainMap lift_along(const ChainMap& rho, const ChainMap& w);

// Dual lift: for a quasi-isomorphism iota: X -> J into an injective-kind
// complex and w: X -> Z into injective kind, produce w': J -> Z with
// w' o iota homotopic to w.
ChainMap lift_against(const ChainMap& iota, const ChainMap& w);

bool is_isomorphic_k(const Complex& x, const Complex& y);

} // namespace arq

#endif
