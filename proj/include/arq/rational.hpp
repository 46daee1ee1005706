#ifndef ARQ_RATIONAL_HPP
#define ARQ_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace arq {

typedef mpq_class Rat;

inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
  Rat q(s);
  q.canonicalize();
  return q;
}

} // namespace arq

#endif
