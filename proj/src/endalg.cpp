#include "arq/endalg.hpp"

#include <algorithm>
#include <random>

#include "arq/config.hpp"

namespace arq {

namespace {

// ---- small polynomial kit over the rationals (ascending coefficients) ----

using Poly = std::vector<Rat>;

void pnorm(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int pdeg(const Poly& p) { return int(p.size()) - 1; }

Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  pnorm(r);
  return r;
}

Poly psub(const Poly& a, const Poly& b) {
  Poly r = a;
  if (r.size() < b.size()) r.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  pnorm(r);
  return r;
}

Poly pscale(const Poly& a, const Rat& s) {
  Poly r = a;
  for (Rat& x : r) x *= s;
  pnorm(r);
  return r;
}

void pdivmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  engine_check(!b.empty(), "polynomial division by zero");
  r = a;
  pnorm(r);
  q.clear();
  while (pdeg(r) >= pdeg(b)) {
    int d = pdeg(r) - pdeg(b);
    Rat c = r.back() / b.back();
    if (int(q.size()) < d + 1) q.resize(d + 1, Rat(0));
    q[d] += c;
    Poly shifted(d, Rat(0));
    shifted.insert(shifted.end(), b.begin(), b.end());
    r = psub(r, pscale(shifted, c));
    if (r.empty()) break;
  }
  pnorm(q);
}

// monic gcd with Bezout coefficients: u a + v b = g
Poly pextgcd(const Poly& a, const Poly& b, Poly& u, Poly& v) {
  Poly r0 = a, r1 = b;
  Poly u0 = {Rat(1)}, v0 = {}, u1 = {}, v1 = {Rat(1)};
  while (!r1.empty()) {
    Poly q, r;
    pdivmod(r0, r1, q, r);
    Poly u2 = psub(u0, pmul(q, u1));
    Poly v2 = psub(v0, pmul(q, v1));
    r0 = r1; r1 = r;
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  if (!r0.empty() && r0.back() != 1) {
    Rat inv = 1 / r0.back();
    r0 = pscale(r0, inv);
    u0 = pscale(u0, inv);
    v0 = pscale(v0, inv);
  }
  u = u0;
  v = v0;
  return r0;
}

Rat peval(const Poly& p, const Rat& x) {
  Rat v(0);
  for (int i = pdeg(p); i >= 0; --i) v = v * x + p[i];
  return v;
}

// rational root candidates of an integerized polynomial via divisor trial
std::vector<Rat> rational_roots(const Poly& f) {
  std::vector<Rat> roots;
  if (f.size() < 2) return roots;
  Poly g = f;
  if (peval(g, Rat(0)) == 0) roots.push_back(Rat(0));
  // integerize
  mpz_class lcm = 1;
  for (const Rat& c : g) lcm = lcm * c.get_den() / gcd(lcm, c.get_den());
  mpz_class a0 = 0, ad = Rat(g.back() * Rat(lcm)).get_num();
  for (size_t i = 0; i < g.size(); ++i)
    if (g[i] != 0) {
      a0 = Rat(g[i] * Rat(lcm)).get_num();
      break;
    }
  auto divisors = [](mpz_class n) {
    std::vector<mpz_class> ds;
    n = abs(n);
    if (n == 0) return ds;
    for (mpz_class d = 1; d * d <= n && d < 2000000; ++d)
      if (n % d == 0) {
        ds.push_back(d);
        ds.push_back(n / d);
      }
    return ds;
  };
  for (const mpz_class& p : divisors(a0))
    for (const mpz_class& q : divisors(ad))
      for (int s : {1, -1}) {
        Rat cand(s * p, q);
        cand.canonicalize();
        if (peval(g, cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

} // namespace

std::vector<Rat> EndAlgebra::mult(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
  return left_mult_of(a).apply(b);
}

Mat EndAlgebra::left_mult_of(const std::vector<Rat>& a) const {
  engine_check(int(a.size()) == dim(), "element coordinate length");
  Mat m(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (a[i] != 0) m = m + left_mult[i].scaled(a[i]);
  return m;
}

ChainMap EndAlgebra::element(const std::vector<Rat>& a) const {
  ChainMap f = zero_map(x, x);
  for (int i = 0; i < dim(); ++i)
    if (a[i] != 0) f = chain_add(f, chain_scale(basis[i], a[i]));
  return f;
}

EndAlgebra end_algebra(const Complex& x0) {
  Complex x = x0.is_minimal() ? x0 : minimize_only(x0);
  EndAlgebra e;
  e.x = x;
  e.hom = hom_spaces(x, x);
  for (int i = 0; i < e.hom.dim_k(); ++i) e.basis.push_back(e.hom.class_rep(i));
  int d = e.dim();
  e.unit = x.is_zero_complex() ? std::vector<Rat>{} : e.hom.class_coords(identity_map(x));
  // structure constants: column j of left_mult[i] is the class of e_i o e_j
  for (int i = 0; i < d; ++i) {
    Mat li(d, d);
    for (int j = 0; j < d; ++j) {
      std::vector<Rat> c = e.hom.class_coords(compose(e.basis[j], e.basis[i]));
      for (int r = 0; r < d; ++r) li.at(r, j) = c[r];
    }
    e.left_mult.push_back(std::move(li));
  }
  // radical via the trace form of the regular representation
  Mat gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Mat p = e.left_mult[i] * e.left_mult[j];
      Rat tr(0);
      for (int k = 0; k < d; ++k) tr += p.at(k, k);
      gram.at(i, j) = tr;
    }
  e.radical = gram.nullspace();
  // sanity: the radical is a nilpotent ideal
  Mat cur = e.radical;
  for (int step = 0; step <= d && cur.cols() > 0; ++step) {
    std::vector<std::vector<Rat>> next;
    for (int a = 0; a < cur.cols(); ++a)
      for (int b = 0; b < e.radical.cols(); ++b)
        next.push_back(e.left_mult_of(cur.col(a)).apply(e.radical.col(b)));
    cur = Mat::from_columns(d, next).column_space();
    engine_check(step < d || cur.cols() == 0, "radical is not nilpotent");
  }
  return e;
}

bool is_indecomposable_k(const Complex& x) {
  Complex m = minimize_only(x);
  if (m.is_zero_complex()) return false;
  EndAlgebra e = end_algebra(m);
  return e.dim() - e.radical_dim() == 1;
}

namespace {

// find a strict nontrivial idempotent in End_K via minimal-polynomial
// splitting of sampled elements
bool find_idempotent(const EndAlgebra& e, std::vector<Rat>& out) {
  int d = e.dim();
  auto try_candidate = [&](const std::vector<Rat>& z) -> bool {
    // minimal polynomial of z by power dependence
    std::vector<std::vector<Rat>> pows;
    pows.push_back(e.unit);
    std::vector<Rat> cur = e.unit;
    Poly f;
    for (int k = 1; k <= d + 1; ++k) {
      cur = e.mult(z, cur);
      Mat basis = Mat::from_columns(d, pows);
      std::vector<Rat> coords;
      if (in_span(basis, cur, &coords)) {
        f.assign(k + 1, Rat(0));
        for (int i = 0; i < k; ++i) f[i] = -coords[i];
        f[k] = 1;
        break;
      }
      pows.push_back(cur);
    }
    if (f.empty()) return false;
    for (const Rat& lam : rational_roots(f)) {
      // split off the generalized eigenspace at lam
      Poly lin = {-lam, Rat(1)};
      Poly g = {Rat(1)}, rest = f;
      while (true) {
        Poly q, r;
        pdivmod(rest, lin, q, r);
        if (!r.empty()) break;
        g = pmul(g, lin);
        rest = q;
      }
      if (pdeg(rest) < 1) continue; // f is a pure power, no split
      Poly u, v;
      Poly gc = pextgcd(g, rest, u, v);
      engine_check(pdeg(gc) == 0, "eigenfactor split not coprime");
      Poly proj = pmul(v, rest); // = 1 mod g, = 0 mod rest
      // evaluate proj at z in the algebra (Horner)
      std::vector<Rat> val(d, Rat(0));
      for (int i = pdeg(proj); i >= 0; --i) {
        val = e.mult(z, val);
        for (int r = 0; r < d; ++r) val[r] += proj[i] * e.unit[r];
      }
      engine_check(e.mult(val, val) == val, "spectral projector is not idempotent");
      bool zero = true, one = true;
      for (int r = 0; r < d; ++r) {
        if (val[r] != 0) zero = false;
        if (val[r] != e.unit[r]) one = false;
      }
      if (!zero && !one) {
        out = val;
        return true;
      }
    }
    return false;
  };

  std::vector<std::vector<Rat>> cands;
  for (int i = 0; i < d; ++i) {
    std::vector<Rat> z(d, Rat(0));
    z[i] = 1;
    cands.push_back(z);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      std::vector<Rat> z(d, Rat(0));
      z[i] = 1;
      z[j] = 1;
      cands.push_back(z);
    }
  std::mt19937_64 rng(global_seed() ^ 0x1de0907e);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (int t = 0; t < 200; ++t) {
    std::vector<Rat> z(d);
    for (int i = 0; i < d; ++i) z[i] = Rat(dist(rng));
    cands.push_back(z);
  }
  for (auto& z : cands)
    if (try_candidate(z)) return true;
  return false;
}

bool map_equal(const ChainMap& a, const ChainMap& b) {
  int lo = std::min(a.src.lo, a.dst.lo), hi = std::max(a.src.hi(), a.dst.hi());
  for (int k = lo; k <= hi; ++k)
    if (a.mat(k) != b.mat(k)) return false;
  return true;
}

// split a minimal complex along a strict chain-level idempotent
std::pair<Complex, Complex> split_by_idempotent(const Complex& x, const ChainMap& e) {
  const AlgebraSpec& alg = x.alg;
  int lo = x.lo, hi = x.hi();
  // sort summands per degree by interval (lex); hom between distinct
  // intervals only points lex-upward, giving block triangularity
  std::vector<std::vector<int>> perm(hi - lo + 1);
  std::vector<std::vector<IntervalModule>> ivs(hi - lo + 1);
  std::vector<std::vector<Summand>> terms(hi - lo + 1);
  for (int k = lo; k <= hi; ++k) {
    auto orig = x.intervals(k);
    std::vector<int> idx(orig.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return orig[a] < orig[b]; });
    perm[k - lo] = idx;
    for (int i : idx) {
      ivs[k - lo].push_back(orig[i]);
      terms[k - lo].push_back(x.term(k)[i]);
    }
  }
  auto permuted = [&](const Mat& m, int kdst, int ksrc) {
    Mat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        r.at(i, j) = m.at(perm[kdst - lo][i], perm[ksrc - lo][j]);
    return r;
  };
  std::vector<Mat> d(hi - lo), em(hi - lo + 1);
  for (int k = lo; k < hi; ++k) d[k - lo] = permuted(x.diff(k), k + 1, k);
  for (int k = lo; k <= hi; ++k) em[k - lo] = permuted(e.mat(k), k, k);

  auto mm = [&](int deg_src, int deg_dst, const Mat& second, const Mat& first) {
    // composition of degree-wise morphisms src(deg_src) -> mid -> dst(deg_dst)
    engine_check(first.cols() == int(ivs[deg_src - lo].size()) &&
                     second.rows() == int(ivs[deg_dst - lo].size()),
                 "split product shape");
    Mat p = second * first;
    for (int r = 0; r < p.rows(); ++r)
      for (int c = 0; c < p.cols(); ++c)
        if (p.at(r, c) != 0 && hom_dim(alg, ivs[deg_src - lo][c], ivs[deg_dst - lo][r]) == 0)
          p.at(r, c) = 0;
    return p;
  };

  std::vector<Mat> w(hi - lo + 1), winv(hi - lo + 1);
  std::vector<std::vector<bool>> keep(hi - lo + 1);
  for (int k = lo; k <= hi; ++k) {
    int n = int(ivs[k - lo].size());
    // per-interval diagonal blocks of the idempotent, diagonalized
    Mat v = Mat::identity(n), vinv = Mat::identity(n), dmat(n, n);
    std::vector<bool> ones(n, false);
    int i = 0;
    while (i < n) {
      int j = i;
      while (j < n && ivs[k - lo][j] == ivs[k - lo][i]) ++j;
      int g = j - i;
      Mat b(g, g);
      for (int r = 0; r < g; ++r)
        for (int c = 0; c < g; ++c) b.at(r, c) = em[k - lo].at(i + r, i + c);
      engine_check(b * b == b, "diagonal idempotent block");
      Mat im = b.column_space(), ker = b.nullspace();
      engine_check(im.cols() + ker.cols() == g, "idempotent block splitting");
      Mat vg(g, g);
      for (int c = 0; c < im.cols(); ++c)
        for (int r = 0; r < g; ++r) vg.at(r, c) = im.at(r, c);
      for (int c = 0; c < ker.cols(); ++c)
        for (int r = 0; r < g; ++r) vg.at(r, im.cols() + c) = ker.at(r, c);
      Mat vginv = vg.inverse();
      for (int r = 0; r < g; ++r)
        for (int c = 0; c < g; ++c) {
          v.at(i + r, i + c) = vg.at(r, c);
          vinv.at(i + r, i + c) = vginv.at(r, c);
        }
      for (int c = 0; c < im.cols(); ++c) {
        dmat.at(i + c, i + c) = 1;
        ones[i + c] = true;
      }
      i = j;
    }
    Mat ep = mm(k, k, vinv, mm(k, k, em[k - lo], v));
    Mat two_d_minus_i = dmat.scaled(Rat(2)) - Mat::identity(n);
    Mat nmat = mm(k, k, two_d_minus_i, ep - dmat);
    Mat u = Mat::identity(n) + nmat;
    // unipotent inverse via the finite Neumann series
    Mat uinv = Mat::identity(n), pw = nmat;
    int sgn = -1;
    while (!pw.is_zero()) {
      uinv = uinv + (sgn > 0 ? pw : -pw);
      pw = mm(k, k, nmat, pw);
      sgn = -sgn;
    }
    engine_check(mm(k, k, u, uinv) == Mat::identity(n), "unipotent inverse");
    w[k - lo] = mm(k, k, u, vinv);
    winv[k - lo] = mm(k, k, v, uinv);
    Mat conj = mm(k, k, mm(k, k, w[k - lo], em[k - lo]), winv[k - lo]);
    engine_check(conj == dmat, "idempotent not diagonalized");
    keep[k - lo] = ones;
  }
  // transform differentials and read off the two blocks
  std::vector<std::vector<Summand>> t1(hi - lo + 1), t0(hi - lo + 1);
  std::vector<std::vector<int>> pos1(hi - lo + 1), pos0(hi - lo + 1);
  for (int k = lo; k <= hi; ++k)
    for (size_t i2 = 0; i2 < keep[k - lo].size(); ++i2) {
      if (keep[k - lo][i2]) {
        pos1[k - lo].push_back(int(i2));
        t1[k - lo].push_back(terms[k - lo][i2]);
      } else {
        pos0[k - lo].push_back(int(i2));
        t0[k - lo].push_back(terms[k - lo][i2]);
      }
    }
  std::vector<Mat> d1(hi - lo), d0(hi - lo);
  for (int k = lo; k < hi; ++k) {
    Mat nd = mm(k, k + 1, w[k + 1 - lo], mm(k, k + 1, d[k - lo], winv[k - lo]));
    // cross-blocks between kept and dropped summands must vanish
    for (int r = 0; r < nd.rows(); ++r)
      for (int c = 0; c < nd.cols(); ++c)
        engine_check(keep[k - lo][c] == keep[k + 1 - lo][r] || nd.at(r, c) == 0,
                     "split differential not block diagonal");
    Mat m1(int(pos1[k + 1 - lo].size()), int(pos1[k - lo].size()));
    for (int r = 0; r < m1.rows(); ++r)
      for (int c = 0; c < m1.cols(); ++c) m1.at(r, c) = nd.at(pos1[k + 1 - lo][r], pos1[k - lo][c]);
    Mat m0(int(pos0[k + 1 - lo].size()), int(pos0[k - lo].size()));
    for (int r = 0; r < m0.rows(); ++r)
      for (int c = 0; c < m0.cols(); ++c) m0.at(r, c) = nd.at(pos0[k + 1 - lo][r], pos0[k - lo][c]);
    d1[k - lo] = std::move(m1);
    d0[k - lo] = std::move(m0);
  }
  Complex c1 = build_complex(alg, lo, t1, d1);
  Complex c0 = build_complex(alg, lo, t0, d0);
  return {c1, c0};
}

} // namespace

std::vector<Complex> decompose(const Complex& x0) {
  Complex x = minimize_only(x0);
  if (x.is_zero_complex()) return {};
  EndAlgebra e = end_algebra(x);
  std::vector<Complex> out;
  if (e.dim() - e.radical_dim() == 1) {
    out.push_back(canonicalize(x));
  } else {
    std::vector<Rat> idem;
    if (!find_idempotent(e, idem))
      fail(Err::DecompositionFailure, "no idempotent found in End_K");
    // lift the class representative to a strict idempotent in Comp
    ChainMap em = e.element(idem);
    bool strict = false;
    for (int it = 0; it < 64; ++it) {
      ChainMap sq = compose(em, em);
      if (map_equal(sq, em)) {
        strict = true;
        break;
      }
      // E <- 3E^2 - 2E^3
      em = chain_add(chain_scale(sq, Rat(3)), chain_scale(compose(em, sq), Rat(-2)));
    }
    if (!strict) fail(Err::DecompositionFailure, "idempotent lifting did not converge");
    em.validate();
    auto [c1, c0] = split_by_idempotent(x, em);
    engine_check(!c1.is_zero_complex() && !c0.is_zero_complex(), "trivial idempotent split");
    for (auto& part : {c1, c0})
      for (auto& s : decompose(part)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(),
            [](const Complex& a, const Complex& b) { return descriptor(a) < descriptor(b); });
  // round-trip check
  Complex sum = zero_complex(x.alg);
  for (auto& s : out) sum = direct_sum(sum, s);
  engine_check(is_isomorphic_k(sum, x), "decompose round-trip failed");
  return out;
}

std::vector<std::pair<Complex, int>> decompose_grouped(const Complex& x) {
  std::vector<Complex> parts = decompose(x);
  std::vector<std::pair<Complex, int>> out;
  for (auto& p : parts) {
    bool merged = false;
    for (auto& [c, m] : out)
      if (descriptor(c) == descriptor(p) || is_isomorphic_k(c, p)) {
        ++m;
        merged = true;
        break;
      }
    if (!merged) out.push_back({p, 1});
  }
  return out;
}

} // namespace arq
