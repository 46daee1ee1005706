#include "arq/ar.hpp"

#include <algorithm>

namespace arq {

Complex p_stalk(const AlgebraSpec& alg, const IntervalModule& m) {
  return proj_resolution(alg, m);
}

ChainMap connecting_map(const Complex& z0) {
  Complex z = minimize_only(z0);
  if (z.is_zero_complex()) fail(Err::ZeroModule, "connecting map of the zero complex");
  if (!z.pure(Kind::Projective)) fail(Err::WrongKind, "connecting map needs projective kind");
  EndAlgebra e = end_algebra(z);
  if (e.dim() - e.radical_dim() != 1)
    fail(Err::NotIndecomposable, "connecting map needs an indecomposable complex");
  Complex nuz = nu_complex(z);
  HomSpace hs = hom_spaces(z, nuz);
  int dk = hs.dim_k();
  // solve w o f = 0 in Hom_K for every radical basis element f
  std::vector<std::vector<Rat>> rows;
  for (int j = 0; j < e.radical.cols(); ++j) {
    ChainMap f = e.element(e.radical.col(j));
    // class coordinates of w_i o f, one constraint row per coordinate
    std::vector<std::vector<Rat>> block(static_cast<size_t>(dk));
    for (int i = 0; i < dk; ++i) block[i] = hs.class_coords(compose(f, hs.class_rep(i)));
    for (int r = 0; r < dk; ++r) {
      std::vector<Rat> row(dk, Rat(0));
      bool nz = false;
      for (int i = 0; i < dk; ++i)
        if (block[i][r] != 0) {
          row[i] = block[i][r];
          nz = true;
        }
      if (nz) rows.push_back(std::move(row));
    }
  }
  Mat con(int(rows.size()), dk);
  for (int r = 0; r < int(rows.size()); ++r)
    for (int c = 0; c < dk; ++c) con.at(r, c) = rows[r][c];
  Mat sol = con.nullspace();
  if (sol.cols() != 1)
    fail(Err::SocleDimensionError, "connecting-map space has dimension " + std::to_string(sol.cols()));
  std::vector<Rat> coords = sol.col(0);
  ChainMap w = zero_map(z, nuz);
  for (int i = 0; i < dk; ++i)
    if (coords[i] != 0) w = chain_add(w, chain_scale(hs.class_rep(i), coords[i]));
  // normalize the first nonzero entry to 1
  Rat s(0);
  for (int k = z.lo; k <= z.hi() && s == 0; ++k) {
    Mat m = w.mat(k);
    for (int r = 0; r < m.rows() && s == 0; ++r)
      for (int c = 0; c < m.cols() && s == 0; ++c)
        if (m.at(r, c) != 0) s = m.at(r, c);
  }
  engine_check(s != 0, "connecting map is zero");
  w = chain_scale(w, 1 / s);
  w.validate();
  return w;
}

ARTriangle ar_triangle_ending(const Complex& z0) {
  ARTriangle t;
  t.z = minimize_only(z0);
  t.w = connecting_map(t.z);
  Projectivization p = projectivize(nu_complex(t.z));
  ChainMap wp = lift_along(p.map, t.w);
  MinimizeResult mr = minimize(shift(cone(wp), -1));
  t.middle_complex = mr.min;
  t.strips = mr.strips;
  t.middle = decompose_grouped(mr.min);
  t.tau_z = shift(p.q, -1);
  return t;
}

Complex tau(const Complex& x, Direction dir) {
  Complex xm = minimize_only(x);
  if (xm.is_zero_complex()) return xm;
  if (dir == Direction::Forward) {
    Projectivization p = projectivize(nu_complex(xm));
    return shift(p.q, -1);
  }
  Injectivization j = injectivize(xm);
  return shift(nu_inv_complex(j.j), 1);
}

PreConditions pre_conditions(const AlgebraSpec& alg, const IntervalModule& m) {
  alg.require_valid(m);
  int n = alg.n();
  int i = m.hi, t = m.length();
  int l = alg.proj_len(i), lbar = alg.inj_len(i - t + 1);
  auto d = [&](int a, int b) {
    if (a < 1 || a > n || b < 1 || b > n) return 0;
    return hom_dim(alg, alg.inj(a), alg.inj(b));
  };
  int pd = pdim(alg, m), id = idim(alg, m);
  PreConditions pc;
  pc.c1 = d(i - l, i - t + 1) == 0 || pd <= 1;
  pc.c2 = d(i, i + lbar - t + 1) == 0 || id <= 1;
  pc.c3 = d(i - t, i + 1) == 0 || pd == 0 || id == 0;
  if (pc.c1 && pc.c3) {
    IntervalModule om = syzygy(alg, m, Direction::Forward);
    if (!om.is_zero()) pc.predicted.push_back(projectivize(nu_complex(p_stalk(alg, om))).q);
  }
  if (pc.c2 && pc.c3) {
    IntervalModule om = syzygy(alg, m, Direction::Inverse);
    if (!om.is_zero()) pc.predicted.push_back(shift(p_stalk(alg, om), -1));
  }
  if (pc.c1 && pc.c2 && t > 1) {
    Mat one(1, 1);
    one.at(0, 0) = 1;
    Complex two = build_complex(alg, 0, {{Summand{true, i - t + 1}}, {Summand{true, i}}}, {one});
    pc.predicted.push_back(projectivize(two).q);
  }
  std::sort(pc.predicted.begin(), pc.predicted.end(),
            [](const Complex& a, const Complex& b) { return descriptor(a) < descriptor(b); });
  return pc;
}

PredecessorInfo simple_predecessors(const AlgebraSpec& alg, int i) {
  if (i < 1 || i > alg.n()) fail(Err::IndexOutOfRange, "vertex out of range");
  if (i == 1 || i == alg.n()) fail(Err::NotApplicable, "boundary simple");
  if (alg.proj_len(i) == 1 || alg.inj_len(i) == 1)
    fail(Err::NotApplicable, "simple is projective or injective");
  PredecessorInfo info;
  info.count = hom_dim(alg, alg.inj(i - 1), alg.inj(i + 1)) == 0 ? 2 : 1;
  if (info.count == 2) {
    IntervalModule radp = IntervalModule::make(i - alg.proj_len(i) + 1, i - 1);
    info.predecessors.push_back(projectivize(nu_complex(p_stalk(alg, radp))).q);
    IntervalModule isoc = IntervalModule::make(i + 1, i + alg.inj_len(i) - 1);
    info.predecessors.push_back(shift(p_stalk(alg, isoc), -1));
  } else {
    ARTriangle t = ar_triangle_ending(p_stalk(alg, alg.simple(i)));
    int total = 0;
    for (auto& [c, mlt] : t.middle) total += mlt;
    engine_check(total == 1, "single-predecessor simple with decomposable middle");
    info.predecessors.push_back(t.middle[0].first);
  }
  return info;
}

PredecessorInfo projective_predecessor(const AlgebraSpec& alg, int i) {
  if (i < 1 || i > alg.n()) fail(Err::IndexOutOfRange, "vertex out of range");
  bool nu_projective = false, is_injective = false;
  for (int j = 1; j <= alg.n(); ++j) {
    if (alg.proj(j) == alg.inj(i)) nu_projective = true;
    if (alg.inj(j) == alg.proj(i)) is_injective = true;
  }
  if (!nu_projective && !is_injective)
    fail(Err::NotApplicable, "nu(P) not projective and P not injective");
  ARTriangle t = ar_triangle_ending(stalk_complex(alg, Summand{false, i}, 0));
  int total = 0;
  for (auto& [c, mlt] : t.middle) total += mlt;
  engine_check(total == 1, "projective with decomposable middle");
  PredecessorInfo info;
  info.count = 1;
  info.predecessors.push_back(t.middle[0].first);
  return info;
}

bool p_irreducible(const AlgebraSpec& alg, const CanonicalMap& f) {
  int a = -1, b = -1;
  for (int j = 1; j <= alg.n(); ++j) {
    if (alg.proj(j) == f.src) a = j;
    if (alg.proj(j) == f.dst) b = j;
  }
  if (a < 0 || b < 0) fail(Err::WrongKind, "p_irreducible needs projective endpoints");
  if (f.scalar == 0 || hom_dim(alg, f.src, f.dst) == 0) fail(Err::ZeroMap, "zero map");
  if (a == b) return false; // isomorphism
  // irreducible iff src is the projective cover of rad(dst)
  if (alg.proj_len(b) < 2) return false;
  return a == b - 1;
}

} // namespace arq
