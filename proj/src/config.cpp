#include "arq/config.hpp"

namespace arq {

namespace {
uint64_t seed_ = 0x5eed0001;
}

uint64_t global_seed() { return seed_; }
void set_global_seed(uint64_t seed) { seed_ = seed; }

} // namespace arq
