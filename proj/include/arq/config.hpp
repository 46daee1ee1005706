#ifndef ARQ_CONFIG_HPP
#define ARQ_CONFIG_HPP

#include <cstdint>

namespace arq {

// Single seed feeding every randomized internal (idempotent sampling,
// isomorphism search). Fixed default keeps all output deterministic.
uint64_t global_seed();
void set_global_seed(uint64_t seed);

} // namespace arq

#endif
