#include "arq/projectivize.hpp"

namespace arq {

namespace {

bool complexes_equal(const Complex& a, const Complex& b) {
  return a.lo == b.lo && a.terms == b.terms && a.diffs == b.diffs;
}

// X (one degree, injective summands) -> direct sum of shifted minimal
// projective resolutions, with the canonical cover map.
Projectivization projectivize_stalk(const Complex& x) {
  const AlgebraSpec& alg = x.alg;
  int m = x.lo;
  Complex q = zero_complex(alg);
  std::vector<int> top_pos; // position of each resolution's degree-m summand in q
  for (const Summand& s : x.term(m)) {
    Complex r = shift(proj_resolution(alg, x.interval_of(s)), -m);
    top_pos.push_back(int(q.term(m).size()) + int(r.term(m).size()) - 1);
    q = direct_sum(q, r);
  }
  ChainMap f = zero_map(q, x);
  Mat top(int(x.term(m).size()), int(q.term(m).size()));
  for (size_t j = 0; j < top_pos.size(); ++j) top.at(int(j), top_pos[j]) = 1;
  f.set(m, top);
  f.validate();
  engine_check(acyclic(cone_mixed(f)), "stalk projectivization is not a quasi-isomorphism");
  return {q, f};
}

Injectivization injectivize_stalk(const Complex& x) {
  const AlgebraSpec& alg = x.alg;
  int m = x.lo;
  Complex j = zero_complex(alg);
  std::vector<int> bot_pos;
  for (const Summand& s : x.term(m)) {
    Complex r = shift(inj_resolution(alg, x.interval_of(s)), -m);
    bot_pos.push_back(int(j.term(m).size()));
    j = direct_sum(j, r);
  }
  ChainMap f = zero_map(x, j);
  Mat bot(int(j.term(m).size()), int(x.term(m).size()));
  for (size_t c = 0; c < bot_pos.size(); ++c) bot.at(bot_pos[c], int(c)) = 1;
  f.set(m, bot);
  f.validate();
  engine_check(acyclic(cone_mixed(f)), "stalk injectivization is not a quasi-isomorphism");
  return {j, f};
}

} // namespace

Projectivization projectivize(const Complex& x0) {
  if (!x0.pure(Kind::Injective)) fail(Err::WrongKind, "projectivize needs an injective-kind complex");
  Complex x = x0;
  x.trim();
  if (x.is_zero_complex()) return {x, zero_map(x, x)};
  if (x.lo == x.hi()) {
    Projectivization p = projectivize_stalk(x);
    MinimizeResult mr = minimize(p.q);
    return {mr.min, compose(mr.incl, p.map)};
  }
  const AlgebraSpec& alg = x.alg;
  int lo = x.lo;
  // X = cone(c) for the bottom stalk B and the brutal truncation Y
  Complex b = build_complex(alg, lo, {x.term(lo)}, {});
  Complex y = truncate_ge(x, lo + 1);
  ChainMap c = zero_map(shift(b, -1), y);
  c.set(lo + 1, x.diff(lo));
  c.validate();
  engine_check(complexes_equal(cone_mixed(c), x), "bottom-strip cone mismatch");

  Projectivization pb = projectivize_stalk(b);
  Projectivization py = projectivize(y);
  ChainMap qb1 = shift_map(pb.map, -1); // QB[-1] -> B[-1]
  ChainMap target = compose(qb1, c);    // QB[-1] -> Y

  HomSpace cand = hom_spaces(qb1.src, py.q);
  std::vector<ChainMap> raw, gens;
  for (int i = 0; i < cand.dim_chain(); ++i) {
    raw.push_back(cand.chain_basis(i));
    gens.push_back(compose(raw.back(), py.map));
  }
  HomSpace hs = hom_spaces(qb1.src, y);
  std::vector<Rat> coeffs;
  Homotopy h;
  engine_check(solve_modulo_homotopy(hs, gens, target, coeffs, h),
               "projectivize: no lift of the connecting map");
  ChainMap psi = zero_map(qb1.src, py.q);
  for (size_t i = 0; i < raw.size(); ++i)
    if (coeffs[i] != 0) psi = chain_add(psi, chain_scale(raw[i], coeffs[i]));
  psi.validate();

  Complex q = cone(psi);
  ChainMap f = zero_map(q, x);
  for (int k = q.lo; k <= q.hi(); ++k) {
    int bc = int(qb1.src.term(k + 1).size());
    int yc = int(py.q.term(k).size());
    int br = int(qb1.dst.term(k + 1).size());
    int yr = int(y.term(k).size());
    Mat mm(br + yr, bc + yc);
    Mat mb = qb1.mat(k + 1), mh = h.mat(k + 1), my = py.map.mat(k);
    for (int r = 0; r < br; ++r)
      for (int cc2 = 0; cc2 < bc; ++cc2) mm.at(r, cc2) = mb.at(r, cc2);
    for (int r = 0; r < yr; ++r)
      for (int cc2 = 0; cc2 < bc; ++cc2) mm.at(br + r, cc2) = mh.at(r, cc2);
    for (int r = 0; r < yr; ++r)
      for (int cc2 = 0; cc2 < yc; ++cc2) mm.at(br + r, bc + cc2) = my.at(r, cc2);
    f.set(k, std::move(mm));
  }
  f.validate();
  engine_check(acyclic(cone_mixed(f)), "projectivize is not a quasi-isomorphism");
  MinimizeResult mr = minimize(q);
  return {mr.min, compose(mr.incl, f)};
}

Injectivization injectivize(const Complex& x0) {
  if (!x0.pure(Kind::Projective)) fail(Err::WrongKind, "injectivize needs a projective-kind complex");
  Complex x = x0;
  x.trim();
  if (x.is_zero_complex()) return {x, zero_map(x, x)};
  if (x.lo == x.hi()) {
    Injectivization p = injectivize_stalk(x);
    MinimizeResult mr = minimize(p.j);
    return {mr.min, compose(p.map, mr.proj)};
  }
  const AlgebraSpec& alg = x.alg;
  int hi = x.hi();
  // X = cone(c) for c: Y[-1] -> B with the top stalk B
  Complex b = build_complex(alg, hi, {x.term(hi)}, {});
  Complex y = truncate_le(x, hi - 1);
  ChainMap c = zero_map(shift(y, -1), b);
  c.set(hi, x.diff(hi - 1));
  c.validate();
  engine_check(complexes_equal(cone_mixed(c), x), "top-strip cone mismatch");

  Injectivization jb = injectivize_stalk(b);
  Injectivization jy = injectivize(y);
  ChainMap jy1 = shift_map(jy.map, -1);  // Y[-1] -> JY[-1]
  ChainMap target = compose(c, jb.map);  // Y[-1] -> JB

  HomSpace cand = hom_spaces(jy1.dst, jb.j);
  std::vector<ChainMap> raw, gens;
  for (int i = 0; i < cand.dim_chain(); ++i) {
    raw.push_back(cand.chain_basis(i));
    gens.push_back(compose(jy1, raw.back()));
  }
  HomSpace hs = hom_spaces(jy1.src, jb.j);
  std::vector<Rat> coeffs;
  Homotopy h;
  engine_check(solve_modulo_homotopy(hs, gens, target, coeffs, h),
               "injectivize: no extension of the connecting map");
  ChainMap chi = zero_map(jy1.dst, jb.j);
  for (size_t i = 0; i < raw.size(); ++i)
    if (coeffs[i] != 0) chi = chain_add(chi, chain_scale(raw[i], coeffs[i]));
  chi.validate();

  Complex j = cone(chi);
  ChainMap f = zero_map(x, j);
  for (int k = j.lo; k <= j.hi(); ++k) {
    int yc = int(jy1.src.term(k + 1).size()); // Y[-1]^{k+1} = X-part
    int bc = int(b.term(k).size());
    int yr = int(jy1.dst.term(k + 1).size());
    int br = int(jb.j.term(k).size());
    Mat mm(yr + br, yc + bc);
    Mat my = jy1.mat(k + 1), mh = h.mat(k + 1), mb = jb.map.mat(k);
    for (int r = 0; r < yr; ++r)
      for (int cc2 = 0; cc2 < yc; ++cc2) mm.at(r, cc2) = my.at(r, cc2);
    for (int r = 0; r < br; ++r)
      for (int cc2 = 0; cc2 < yc; ++cc2) mm.at(yr + r, cc2) = mh.at(r, cc2);
    for (int r = 0; r < br; ++r)
      for (int cc2 = 0; cc2 < bc; ++cc2) mm.at(yr + r, yc + cc2) = mb.at(r, cc2);
    f.set(k, std::move(mm));
  }
  f.validate();
  engine_check(acyclic(cone_mixed(f)), "injectivize is not a quasi-isomorphism");
  MinimizeResult mr = minimize(j);
  return {mr.min, compose(f, mr.proj)};
}

} // namespace arq
