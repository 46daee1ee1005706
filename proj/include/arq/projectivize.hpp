#ifndef ARQ_PROJECTIVIZE_HPP
#define ARQ_PROJECTIVIZE_HPP

#include "arq/hom.hpp"
#include "arq/homalg.hpp"

namespace arq {

// A projective-kind replacement Q of an injective-kind complex X, with the
// quasi-isomorphism q: Q -> X; Q is minimal.
struct Projectivization {
  Complex q;
  ChainMap map; // q -> x
};

Projectivization projectivize(const Complex& x);

// Dual: injective replacement J of a projective-kind complex with j: X -> J.
struct Injectivization {
  Complex j;
  ChainMap map; // x -> j
};

Injectivization injectivize(const Complex& x);

} // namespace arq

#endif
