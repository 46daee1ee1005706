#ifndef ARQ_TEST_HELPERS_HPP
#define ARQ_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "arq/algebra.hpp"
#include "arq/matrix.hpp"

namespace arqtest {

using arq::AlgebraSpec;
using arq::IntervalModule;
using arq::Mat;
using arq::Rat;

// Independent hom oracle: dimension of the space of representation maps
// M -> N, built from interval indicators only (no library formulas).
inline int hom_oracle(const AlgebraSpec& alg, const IntervalModule& m, const IntervalModule& n) {
  int nn = alg.n();
  auto inm = [&](int v) { return m.lo <= v && v <= m.hi; };
  auto inn = [&](int v) { return n.lo <= v && v <= n.hi; };
  std::vector<int> var(nn + 1, -1);
  int nvars = 0;
  for (int v = 1; v <= nn; ++v)
    if (inm(v) && inn(v)) var[v] = nvars++;
  if (nvars == 0) return 0;
  std::vector<std::vector<Rat>> rows;
  for (int v = 1; v < nn; ++v) {
    // naturality square for the arrow v+1 -> v, nontrivial iff M_{v+1}, N_v != 0
    if (!inm(v + 1) || !inn(v)) continue;
    std::vector<Rat> row(nvars, Rat(0));
    bool any = false;
    if (inn(v + 1) && var[v + 1] >= 0) {
      row[var[v + 1]] += 1;
      any = true;
    }
    if (inm(v) && var[v] >= 0) {
      row[var[v]] -= 1;
      any = true;
    }
    if (any) rows.push_back(row);
  }
  Mat sys(int(rows.size()), nvars);
  for (int r = 0; r < int(rows.size()); ++r)
    for (int c = 0; c < nvars; ++c) sys.at(r, c) = rows[r][c];
  return nvars - sys.rank();
}

// Brute-force Loewy lengths straight from the relation list.
inline bool interval_ok(const std::vector<std::pair<int, int>>& rels, int lo, int hi) {
  for (auto& [u, v] : rels)
    if (lo <= u && v <= hi) return false;
  return true;
}

inline int kupisch_oracle_c(const AlgebraSpec& alg, int i) {
  int t = 1;
  while (i - t >= 1 && interval_ok(alg.relations(), i - t, i)) ++t;
  return t;
}

inline int kupisch_oracle_r(const AlgebraSpec& alg, int i) {
  int t = 1;
  while (i + t <= alg.n() && interval_ok(alg.relations(), i, i + t)) ++t;
  return t;
}

// Random minimal relation set: sampled intervals, kept when incomparable
// with everything kept so far.
inline AlgebraSpec random_algebra(std::mt19937_64& rng, int n) {
  std::vector<std::pair<int, int>> rels;
  if (n >= 3) {
    int tries = int(rng() % 5);
    for (int t = 0; t < tries; ++t) {
      int u = 1 + int(rng() % (n - 2));
      int v = u + 2 + int(rng() % (n - u - 1));
      bool ok = true;
      for (auto& [a, b] : rels)
        if ((a <= u && v <= b) || (u <= a && b <= v)) ok = false;
      if (ok) rels.push_back({u, v});
    }
  }
  return arq::algebra_new(n, rels);
}

// All minimal relation sets on A_n (antichains of intervals of length >= 3).
inline std::vector<std::vector<std::pair<int, int>>> all_relation_sets(int n) {
  std::vector<std::pair<int, int>> ivs;
  for (int u = 1; u <= n - 2; ++u)
    for (int v = u + 2; v <= n; ++v) ivs.push_back({u, v});
  std::vector<std::vector<std::pair<int, int>>> out;
  int m = int(ivs.size());
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<std::pair<int, int>> rels;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) rels.push_back(ivs[i]);
    bool anti = true;
    for (size_t a = 0; a < rels.size() && anti; ++a)
      for (size_t b = 0; b < rels.size() && anti; ++b)
        if (a != b && rels[a].first <= rels[b].first && rels[b].second <= rels[a].second)
          anti = false;
    if (anti) out.push_back(rels);
  }
  return out;
}

} // namespace arqtest

#endif
