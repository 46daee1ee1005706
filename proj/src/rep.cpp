#include "arq/rep.hpp"

namespace arq {

void LinearRepresentation::check_consistent() const {
  if (int(dims.size()) != n || int(down.size()) != (n > 0 ? n - 1 : 0))
    fail(Err::InconsistentRep, "representation arrays do not match n");
  for (int v = 1; v < n; ++v)
    if (down_map(v).rows() != dim(v) || down_map(v).cols() != dim(v + 1))
      fail(Err::InconsistentRep, "down map shape mismatch at vertex " + std::to_string(v));
}

LinearRepresentation rep_oracle(const AlgebraSpec& alg, const IntervalModule& m) {
  if (!m.is_zero()) alg.require_valid(m);
  return rep_of_sum(alg, m.is_zero() ? std::vector<IntervalModule>{} : std::vector<IntervalModule>{m});
}

LinearRepresentation rep_of_sum(const AlgebraSpec& alg, const std::vector<IntervalModule>& ms) {
  LinearRepresentation rep;
  rep.n = alg.n();
  rep.dims.assign(rep.n, 0);
  auto covers = [&](const IntervalModule& m, int v) { return !m.is_zero() && m.lo <= v && v <= m.hi; };
  for (int v = 1; v <= rep.n; ++v)
    for (auto& m : ms)
      if (covers(m, v)) ++rep.dims[v - 1];
  for (int v = 1; v < rep.n; ++v) {
    Mat d(rep.dims[v - 1], rep.dims[v]);
    int col = 0;
    for (size_t j = 0; j < ms.size(); ++j) {
      if (!covers(ms[j], v + 1)) continue;
      if (covers(ms[j], v)) {
        int row = 0;
        for (size_t i = 0; i < j; ++i)
          if (covers(ms[i], v)) ++row;
        d.at(row, col) = 1;
      }
      ++col;
    }
    rep.down.push_back(std::move(d));
  }
  return rep;
}

Mat rep_map_at_vertex(const AlgebraSpec& alg, const std::vector<IntervalModule>& src,
                      const std::vector<IntervalModule>& dst, const Mat& scalars, int v) {
  (void)alg;
  auto covers = [&](const IntervalModule& m) { return !m.is_zero() && m.lo <= v && v <= m.hi; };
  std::vector<int> srows, scols;
  for (size_t i = 0; i < dst.size(); ++i)
    if (covers(dst[i])) srows.push_back(int(i));
  for (size_t j = 0; j < src.size(); ++j)
    if (covers(src[j])) scols.push_back(int(j));
  Mat m(int(srows.size()), int(scols.size()));
  for (size_t r = 0; r < srows.size(); ++r)
    for (size_t c = 0; c < scols.size(); ++c) {
      // canonical [a,b] -> [c,d] is supported exactly on the intersection
      const IntervalModule& s = src[scols[c]];
      const IntervalModule& d = dst[srows[r]];
      if (std::max(s.lo, d.lo) <= v && v <= std::min(s.hi, d.hi))
        m.at(int(r), int(c)) = scalars.at(srows[r], scols[c]);
    }
  return m;
}

std::vector<IntervalModule> decompose_rep(const LinearRepresentation& rep) {
  rep.check_consistent();
  int n = rep.n;
  // r(a,b) = rank of the composite map from vertex b down to vertex a.
  auto r = [&](int a, int b) -> int {
    if (a < 1 || b > n || a > b) return 0;
    if (a == b) return rep.dim(a);
    Mat m = rep.down_map(b - 1); // space(b) -> space(b-1)
    for (int v = b - 2; v >= a; --v) m = rep.down_map(v) * m;
    return m.rank();
  };
  std::vector<IntervalModule> out;
  long long total = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      int mult = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1);
      if (mult < 0) fail(Err::InconsistentRep, "negative interval multiplicity");
      for (int k = 0; k < mult; ++k) out.push_back(IntervalModule::make(a, b));
      total += (long long)mult * (b - a + 1);
    }
  long long dimsum = 0;
  for (int v = 1; v <= n; ++v) dimsum += rep.dim(v);
  if (total != dimsum) fail(Err::InconsistentRep, "interval multiplicities do not fill the representation");
  return out;
}

} // namespace arq
