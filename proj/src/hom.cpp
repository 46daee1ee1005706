#include "arq/hom.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "arq/config.hpp"

namespace arq {

namespace {

int find_var(const std::vector<VarKey>& vars, int deg, int row, int col) {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i].deg == deg && vars[i].row == row && vars[i].col == col) return int(i);
  return -1;
}

} // namespace

ChainMap HomSpace::to_map(const std::vector<Rat>& fcoords) const {
  engine_check(fcoords.size() == fvars.size(), "hom coordinate length");
  ChainMap f = zero_map(src, dst);
  for (size_t i = 0; i < fvars.size(); ++i) {
    if (fcoords[i] == 0) continue;
    Mat m = f.mat(fvars[i].deg);
    m.at(fvars[i].row, fvars[i].col) = fcoords[i];
    f.set(fvars[i].deg, m);
  }
  return f;
}

std::vector<Rat> HomSpace::vec_of(const ChainMap& f) const {
  engine_check(f.src == src && f.dst == dst, "vec_of: wrong hom space");
  std::vector<Rat> v(fvars.size(), Rat(0));
  for (size_t i = 0; i < fvars.size(); ++i) v[i] = f.mat(fvars[i].deg).at(fvars[i].row, fvars[i].col);
  // everything outside the allowed slots must vanish
  int a = std::min(src.lo, dst.lo), b = std::max(src.hi(), dst.hi());
  for (int k = a; k <= b; ++k) {
    Mat m = f.mat(k);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (m.at(r, c) != 0 && find_var(fvars, k, r, c) < 0)
          fail(Err::HomViolation, "chain map entry outside Hom support");
  }
  return v;
}

ChainMap HomSpace::chain_basis(int i) const { return to_map(chain.col(i)); }
ChainMap HomSpace::class_rep(int i) const { return to_map(reps.col(i)); }

Homotopy HomSpace::to_homotopy(const std::vector<Rat>& hcoords) const {
  engine_check(hcoords.size() == hvars.size(), "homotopy coordinate length");
  Homotopy h;
  h.src = src;
  h.dst = dst;
  for (size_t i = 0; i < hvars.size(); ++i) {
    if (hcoords[i] == 0) continue;
    Mat m = h.mat(hvars[i].deg);
    m.at(hvars[i].row, hvars[i].col) = hcoords[i];
    h.set(hvars[i].deg, m);
  }
  return h;
}

std::vector<Rat> HomSpace::class_coords(const ChainMap& f) const {
  std::vector<Rat> v = vec_of(f);
  int n = int(fvars.size());
  Mat a(n, bnd.cols() + reps.cols());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < bnd.cols(); ++c) a.at(r, c) = bnd.at(r, c);
    for (int c = 0; c < reps.cols(); ++c) a.at(r, bnd.cols() + c) = reps.at(r, c);
  }
  std::vector<Rat> sol;
  engine_check(a.solve(v, sol), "class_coords: map is not a chain map of this space");
  return std::vector<Rat>(sol.begin() + bnd.cols(), sol.end());
}

bool HomSpace::is_null_homotopic(const ChainMap& f, Homotopy* witness) const {
  std::vector<Rat> v = vec_of(f);
  std::vector<Rat> y;
  if (!bnd_gen.solve(v, y)) return false;
  if (witness) *witness = to_homotopy(y);
  return true;
}

HomSpace hom_spaces(const Complex& x, const Complex& y) {
  engine_check(x.alg == y.alg, "hom across algebras");
  HomSpace hs;
  hs.src = x;
  hs.dst = y;
  const AlgebraSpec& alg = x.alg;
  for (int k = std::max(x.lo, y.lo); k <= std::min(x.hi(), y.hi()); ++k) {
    auto sv = x.intervals(k), dv = y.intervals(k);
    for (int r = 0; r < int(dv.size()); ++r)
      for (int c = 0; c < int(sv.size()); ++c)
        if (hom_dim(alg, sv[c], dv[r]) != 0) hs.fvars.push_back(VarKey{k, r, c});
  }
  for (int k = std::max(x.lo, y.lo + 1); k <= std::min(x.hi(), y.hi() + 1); ++k) {
    auto sv = x.intervals(k), dv = y.intervals(k - 1);
    for (int r = 0; r < int(dv.size()); ++r)
      for (int c = 0; c < int(sv.size()); ++c)
        if (hom_dim(alg, sv[c], dv[r]) != 0) hs.hvars.push_back(VarKey{k, r, c});
  }
  // chain-map constraints: (d_Y f - f d_X)(r,c) = 0 wherever the composite
  // hom space is non-zero
  std::vector<std::vector<Rat>> rows;
  int nf = int(hs.fvars.size());
  for (int k = std::min(x.lo, y.lo) - 1; k <= std::max(x.hi(), y.hi()); ++k) {
    auto sv = x.intervals(k);
    auto dv1 = y.intervals(k + 1);
    auto mvx = x.intervals(k + 1);
    auto mvy = y.intervals(k);
    Mat dx = x.diff(k), dy = y.diff(k);
    for (int r = 0; r < int(dv1.size()); ++r)
      for (int c = 0; c < int(sv.size()); ++c) {
        if (hom_dim(x.alg, sv[c], dv1[r]) == 0) continue;
        std::vector<Rat> row(nf, Rat(0));
        bool nz = false;
        for (int m = 0; m < int(mvy.size()); ++m) {
          int v = find_var(hs.fvars, k, m, c);
          if (v >= 0 && dy.at(r, m) != 0) {
            row[v] += dy.at(r, m);
            nz = true;
          }
        }
        for (int m = 0; m < int(mvx.size()); ++m) {
          int v = find_var(hs.fvars, k + 1, r, m);
          if (v >= 0 && dx.at(m, c) != 0) {
            row[v] -= dx.at(m, c);
            nz = true;
          }
        }
        if (nz) rows.push_back(std::move(row));
      }
  }
  Mat con(int(rows.size()), nf);
  for (int r = 0; r < int(rows.size()); ++r)
    for (int c = 0; c < nf; ++c) con.at(r, c) = rows[r][c];
  hs.chain = con.nullspace();

  // null-homotopic generators
  hs.bnd_gen = Mat(nf, int(hs.hvars.size()));
  for (int j = 0; j < int(hs.hvars.size()); ++j) {
    std::vector<Rat> hc(hs.hvars.size(), Rat(0));
    hc[j] = 1;
    ChainMap b = boundary_of(hs.to_homotopy(hc));
    std::vector<Rat> v = hs.vec_of(b);
    for (int r = 0; r < nf; ++r) hs.bnd_gen.at(r, j) = v[r];
  }
  hs.bnd = hs.bnd_gen.column_space();

  // extend the null-homotopic basis by chain-basis columns to get class reps
  std::vector<std::vector<Rat>> cols;
  for (int c = 0; c < hs.bnd.cols(); ++c) cols.push_back(hs.bnd.col(c));
  Mat span = hs.bnd;
  std::vector<std::vector<Rat>> repcols;
  for (int c = 0; c < hs.chain.cols(); ++c) {
    std::vector<Rat> v = hs.chain.col(c);
    if (!in_span(span, v)) {
      cols.push_back(v);
      repcols.push_back(v);
      span = Mat::from_columns(nf, cols);
    }
  }
  hs.reps = Mat::from_columns(nf, repcols);
  return hs;
}

bool solve_modulo_homotopy(const HomSpace& hs, const std::vector<ChainMap>& gens,
                           const ChainMap& target, std::vector<Rat>& coeffs, Homotopy& h) {
  int nf = int(hs.fvars.size());
  int ng = int(gens.size());
  Mat a(nf, ng + hs.bnd_gen.cols());
  for (int j = 0; j < ng; ++j) {
    std::vector<Rat> v = hs.vec_of(gens[j]);
    for (int r = 0; r < nf; ++r) a.at(r, j) = v[r];
  }
  for (int j = 0; j < hs.bnd_gen.cols(); ++j)
    for (int r = 0; r < nf; ++r) a.at(r, ng + j) = -hs.bnd_gen.at(r, j);
  std::vector<Rat> t = hs.vec_of(target);
  std::vector<Rat> sol;
  if (!a.solve(t, sol)) return false;
  coeffs.assign(sol.begin(), sol.begin() + ng);
  h = hs.to_homotopy(std::vector<Rat>(sol.begin() + ng, sol.end()));
  return true;
}

ChainMap lift_along(const ChainMap& rho, const ChainMap& w) {
  engine_check(w.dst == rho.dst, "lift_along: targets differ");
  HomSpace hzq = hom_spaces(w.src, rho.src);
  std::vector<ChainMap> gens, raw;
  for (int i = 0; i < hzq.dim_chain(); ++i) {
    ChainMap g = hzq.chain_basis(i);
    raw.push_back(g);
    gens.push_back(compose(g, rho));
  }
  HomSpace hzx = hom_spaces(w.src, w.dst);
  std::vector<Rat> coeffs;
  Homotopy h;
  engine_check(solve_modulo_homotopy(hzx, gens, w, coeffs, h),
               "lift through quasi-isomorphism failed");
  ChainMap out = zero_map(w.src, rho.src);
  for (size_t i = 0; i < raw.size(); ++i)
    if (coeffs[i] != 0) out = chain_add(out, chain_scale(raw[i], coeffs[i]));
  out.validate();
  return out;
}

ChainMap lift_against(const ChainMap& iota, const ChainMap& w) {
  engine_check(w.src == iota.src, "lift_against: sources differ");
  HomSpace hjz = hom_spaces(iota.dst, w.dst);
  std::vector<ChainMap> gens, raw;
  for (int i = 0; i < hjz.dim_chain(); ++i) {
    ChainMap g = hjz.chain_basis(i);
    raw.push_back(g);
    gens.push_back(compose(iota, g));
  }
  HomSpace hxz = hom_spaces(w.src, w.dst);
  std::vector<Rat> coeffs;
  Homotopy h;
  engine_check(solve_modulo_homotopy(hxz, gens, w, coeffs, h),
               "lift against quasi-isomorphism failed");
  ChainMap out = zero_map(iota.dst, w.dst);
  for (size_t i = 0; i < raw.size(); ++i)
    if (coeffs[i] != 0) out = chain_add(out, chain_scale(raw[i], coeffs[i]));
  out.validate();
  return out;
}

bool is_isomorphic_k(const Complex& x0, const Complex& y0) {
  engine_check(x0.alg == y0.alg, "iso test across algebras");
  Complex x = minimize_only(x0);
  Complex y = minimize_only(y0);
  if (x.is_zero_complex() || y.is_zero_complex()) return x.is_zero_complex() == y.is_zero_complex();
  if (x.lo != y.lo || x.hi() != y.hi()) return false;
  for (int k = x.lo; k <= x.hi(); ++k) {
    std::vector<Summand> a = x.term(k), b = y.term(k);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    // summand labels may differ between isomorphic modules (P/I coincidences),
    // so compare interval multisets
    std::vector<IntervalModule> ai, bi;
    for (auto& s : a) ai.push_back(x.interval_of(s));
    for (auto& s : b) bi.push_back(y.interval_of(s));
    std::sort(ai.begin(), ai.end());
    std::sort(bi.begin(), bi.end());
    if (ai != bi) return false;
  }
  if (homology(x) != homology(y)) return false;
  HomSpace hs = hom_spaces(x, y);
  if (hs.dim_chain() == 0) return false;
  // a chain map between minimal complexes with all degreewise blocks
  // invertible is an isomorphism; sample the chain-map space
  std::mt19937_64 rng(global_seed() ^ 0x15051a11);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  auto invertible_everywhere = [&](const ChainMap& f) {
    for (int k = x.lo; k <= x.hi(); ++k) {
      Mat m = f.mat(k);
      if (m.rows() != m.cols() || m.rank() != m.rows()) return false;
    }
    return true;
  };
  for (int i = 0; i < hs.dim_chain(); ++i)
    if (invertible_everywhere(hs.chain_basis(i))) return true;
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<Rat> v(hs.fvars.size(), Rat(0));
    for (int i = 0; i < hs.dim_chain(); ++i) {
      Rat c(dist(rng));
      std::vector<Rat> col = hs.chain.col(i);
      for (size_t r = 0; r < v.size(); ++r) v[r] += c * col[r];
    }
    if (invertible_everywhere(hs.to_map(v))) return true;
  }
  return false;
}

} // namespace arq
