#include "arq/homalg.hpp"

#include <algorithm>

namespace arq {

namespace {

IntervalModule cover_kernel(const AlgebraSpec& alg, const IntervalModule& m) {
  // kernel of P_b ->> [a,b] is [b - c_b + 1, a - 1]
  int lo = m.hi - alg.proj_len(m.hi) + 1;
  return lo <= m.lo - 1 ? IntervalModule::make(lo, m.lo - 1) : IntervalModule::zero();
}

IntervalModule envelope_cokernel(const AlgebraSpec& alg, const IntervalModule& m) {
  // cokernel of [a,b] into I_a is [b + 1, a + r_a - 1]
  int hi = m.lo + alg.inj_len(m.lo) - 1;
  return m.hi + 1 <= hi ? IntervalModule::make(m.hi + 1, hi) : IntervalModule::zero();
}

} // namespace

Complex proj_resolution(const AlgebraSpec& alg, const IntervalModule& m) {
  if (m.is_zero()) fail(Err::ZeroModule, "resolution of the zero module");
  alg.require_valid(m);
  std::vector<Summand> covers;
  IntervalModule cur = m;
  while (!cur.is_zero()) {
    covers.push_back(Summand{false, cur.hi});
    cur = cover_kernel(alg, cur);
    engine_check(int(covers.size()) <= alg.n() + 1, "projective resolution did not terminate");
  }
  int len = int(covers.size());
  std::vector<std::vector<Summand>> terms(len);
  std::vector<Mat> diffs(len - 1);
  for (int i = 0; i < len; ++i) terms[i] = {covers[len - 1 - i]};
  for (int i = 0; i + 1 < len; ++i) {
    Mat d(1, 1);
    d.at(0, 0) = 1;
    diffs[i] = d;
  }
  return build_complex(alg, -(len - 1), terms, diffs);
}

Complex inj_resolution(const AlgebraSpec& alg, const IntervalModule& m) {
  if (m.is_zero()) fail(Err::ZeroModule, "resolution of the zero module");
  alg.require_valid(m);
  std::vector<Summand> envs;
  IntervalModule cur = m;
  while (!cur.is_zero()) {
    envs.push_back(Summand{true, cur.lo});
    cur = envelope_cokernel(alg, cur);
    engine_check(int(envs.size()) <= alg.n() + 1, "injective resolution did not terminate");
  }
  int len = int(envs.size());
  std::vector<std::vector<Summand>> terms(len);
  std::vector<Mat> diffs(len - 1);
  for (int i = 0; i < len; ++i) terms[i] = {envs[i]};
  for (int i = 0; i + 1 < len; ++i) {
    Mat d(1, 1);
    d.at(0, 0) = 1;
    diffs[i] = d;
  }
  return build_complex(alg, 0, terms, diffs);
}

int pdim(const AlgebraSpec& alg, const IntervalModule& m) {
  return -proj_resolution(alg, m).lo;
}

int idim(const AlgebraSpec& alg, const IntervalModule& m) {
  return inj_resolution(alg, m).hi();
}

int gldim(const AlgebraSpec& alg) {
  int g = 0;
  for (const IntervalModule& m : all_modules(alg)) g = std::max(g, pdim(alg, m));
  return g;
}

int gdim_bound(const AlgebraSpec& alg) {
  const auto& rels = alg.relations();
  if (rels.empty()) return 1;
  // two relation paths intersect iff their arrow sets overlap
  auto overlap = [&](size_t i, size_t j) {
    return std::max(rels[i].first, rels[j].first) < std::min(rels[i].second, rels[j].second);
  };
  int non_isolated = 0;
  for (size_t i = 0; i < rels.size(); ++i) {
    bool any = false;
    for (size_t j = 0; j < rels.size(); ++j)
      if (i != j && overlap(i, j)) any = true;
    if (any) ++non_isolated;
  }
  return std::max(non_isolated, 1) + 1;
}

IntervalModule nakayama_module(const AlgebraSpec& alg, const IntervalModule& m, Direction dir) {
  if (m.is_zero()) fail(Err::ZeroModule, "nu of the zero module");
  alg.require_valid(m);
  if (dir == Direction::Forward) {
    for (int i = 1; i <= alg.n(); ++i)
      if (alg.proj(i) == m) return alg.inj(i);
    fail(Err::WrongKind, "nu needs a projective module");
  }
  for (int i = 1; i <= alg.n(); ++i)
    if (alg.inj(i) == m) return alg.proj(i);
  fail(Err::WrongKind, "nu^{-1} needs an injective module");
}

IntervalModule syzygy(const AlgebraSpec& alg, const IntervalModule& m, Direction dir) {
  if (m.is_zero()) fail(Err::ZeroModule, "syzygy of the zero module");
  alg.require_valid(m);
  return dir == Direction::Forward ? cover_kernel(alg, m) : envelope_cokernel(alg, m);
}

std::vector<IntervalModule> all_modules(const AlgebraSpec& alg) {
  std::vector<IntervalModule> out;
  for (int a = 1; a <= alg.n(); ++a)
    for (int b = a; b <= alg.n(); ++b) {
      IntervalModule m{a, b};
      if (alg.valid_module(m)) out.push_back(m);
    }
  return out;
}

} // namespace arq
