#include "arq/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace arq {

std::string summand_str(const Summand& s) {
  return (s.inj ? "I" : "P") + std::to_string(s.vertex);
}

static const std::vector<Summand> kEmptyTerm;

const std::vector<Summand>& Complex::term(int deg) const {
  if (deg < lo || deg > hi()) return kEmptyTerm;
  return terms[deg - lo];
}

Mat Complex::diff(int deg) const {
  int next = int(term(deg + 1).size());
  int cur = int(term(deg).size());
  if (deg < lo || deg >= hi()) return Mat(next, cur);
  return diffs[deg - lo];
}

std::vector<IntervalModule> Complex::intervals(int deg) const {
  std::vector<IntervalModule> v;
  for (auto& s : term(deg)) v.push_back(interval_of(s));
  return v;
}

bool Complex::pure(Kind k) const {
  for (auto& t : terms)
    for (auto& s : t)
      if (s.inj != (k == Kind::Injective)) return false;
  return true;
}

int Complex::summand_count() const {
  int c = 0;
  for (auto& t : terms) c += int(t.size());
  return c;
}

void Complex::trim() {
  while (!terms.empty() && terms.front().empty()) {
    terms.erase(terms.begin());
    if (!diffs.empty()) diffs.erase(diffs.begin());
    ++lo;
  }
  while (!terms.empty() && terms.back().empty()) {
    terms.pop_back();
    if (!diffs.empty()) diffs.pop_back();
  }
  if (terms.empty()) {
    diffs.clear();
    lo = 0;
  }
  engine_check(terms.empty() || diffs.size() + 1 == terms.size(), "complex shape after trim");
}

Mat masked_mul(const AlgebraSpec& alg, const std::vector<IntervalModule>& src,
               const std::vector<IntervalModule>& mid, const std::vector<IntervalModule>& dst,
               const Mat& second, const Mat& first) {
  engine_check(first.rows() == int(mid.size()) && first.cols() == int(src.size()), "masked_mul first shape");
  engine_check(second.rows() == int(dst.size()) && second.cols() == int(mid.size()), "masked_mul second shape");
  Mat p = second * first;
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p.cols(); ++c)
      if (p.at(r, c) != 0 && hom_dim(alg, src[c], dst[r]) == 0) p.at(r, c) = 0;
  return p;
}

void Complex::validate() const {
  engine_check(terms.empty() || diffs.size() + 1 == terms.size(), "complex shape");
  for (int k = lo; k < hi(); ++k) {
    const Mat& d = diffs[k - lo];
    engine_check(d.rows() == int(term(k + 1).size()) && d.cols() == int(term(k).size()),
                 "differential shape at degree " + std::to_string(k));
    auto sv = intervals(k), dv = intervals(k + 1);
    for (int r = 0; r < d.rows(); ++r)
      for (int c = 0; c < d.cols(); ++c)
        if (d.at(r, c) != 0 && hom_dim(alg, sv[c], dv[r]) == 0)
          fail(Err::HomViolation, "differential entry outside Hom support at degree " + std::to_string(k));
  }
  for (int k = lo; k + 1 < hi(); ++k) {
    Mat sq = masked_mul(alg, intervals(k), intervals(k + 1), intervals(k + 2), diff(k + 1), diff(k));
    if (!sq.is_zero()) fail(Err::NotSquareZero, "d^2 != 0 at degree " + std::to_string(k));
  }
}

bool Complex::is_minimal() const {
  for (int k = lo; k < hi(); ++k) {
    const Mat& d = diffs[k - lo];
    for (int r = 0; r < d.rows(); ++r)
      for (int c = 0; c < d.cols(); ++c)
        if (d.at(r, c) != 0 && term(k)[c] == term(k + 1)[r]) return false;
  }
  return true;
}

Mat ChainMap::mat(int deg) const {
  int r = int(dst.term(deg).size());
  int c = int(src.term(deg).size());
  int idx = deg - lo;
  if (idx < 0 || idx >= int(mats.size())) return Mat(r, c);
  engine_check(mats[idx].rows() == r && mats[idx].cols() == c, "chain map block shape");
  return mats[idx];
}

void ChainMap::set(int deg, Mat m) {
  if (mats.empty()) {
    lo = deg;
    mats.push_back(std::move(m));
    return;
  }
  while (deg < lo) {
    mats.insert(mats.begin(), Mat(int(dst.term(lo - 1).size()), int(src.term(lo - 1).size())));
    --lo;
  }
  while (deg >= lo + int(mats.size())) {
    int d = lo + int(mats.size());
    mats.push_back(Mat(int(dst.term(d).size()), int(src.term(d).size())));
  }
  mats[deg - lo] = std::move(m);
}

bool ChainMap::is_zero() const {
  for (auto& m : mats)
    if (!m.is_zero()) return false;
  return true;
}

void ChainMap::validate() const {
  engine_check(src.alg == dst.alg, "chain map across algebras");
  int a = std::min(src.lo, dst.lo) - 1, b = std::max(src.hi(), dst.hi()) + 1;
  for (int k = a; k <= b; ++k) {
    Mat f = mat(k);
    auto sv = src.intervals(k), dv = dst.intervals(k);
    for (int r = 0; r < f.rows(); ++r)
      for (int c = 0; c < f.cols(); ++c)
        if (f.at(r, c) != 0 && hom_dim(src.alg, sv[c], dv[r]) == 0)
          fail(Err::HomViolation, "chain map entry outside Hom support");
    // d_dst f = f_{k+1} d_src
    Mat lhs = masked_mul(src.alg, sv, dv, dst.intervals(k + 1), dst.diff(k), f);
    Mat rhs = masked_mul(src.alg, sv, src.intervals(k + 1), dst.intervals(k + 1), mat(k + 1), src.diff(k));
    engine_check(lhs == rhs, "chain map does not commute with differentials at degree " + std::to_string(k));
  }
}

Mat Homotopy::mat(int deg) const {
  int r = int(dst.term(deg - 1).size());
  int c = int(src.term(deg).size());
  int idx = deg - lo;
  if (idx < 0 || idx >= int(mats.size())) return Mat(r, c);
  return mats[idx];
}

void Homotopy::set(int deg, Mat m) {
  if (mats.empty()) {
    lo = deg;
    mats.push_back(std::move(m));
    return;
  }
  while (deg < lo) {
    mats.insert(mats.begin(), Mat(int(dst.term(lo - 2).size()), int(src.term(lo - 1).size())));
    --lo;
  }
  while (deg >= lo + int(mats.size())) {
    int d = lo + int(mats.size());
    mats.push_back(Mat(int(dst.term(d - 1).size()), int(src.term(d).size())));
  }
  mats[deg - lo] = std::move(m);
}

ChainMap compose(const ChainMap& first, const ChainMap& second) {
  engine_check(first.dst == second.src, "compose: middle complex mismatch");
  ChainMap r;
  r.src = first.src;
  r.dst = second.dst;
  int a = std::min({first.src.lo, second.dst.lo, first.dst.lo});
  int b = std::max({first.src.hi(), second.dst.hi(), first.dst.hi()});
  for (int k = a; k <= b; ++k)
    r.set(k, masked_mul(r.src.alg, first.src.intervals(k), first.dst.intervals(k),
                        second.dst.intervals(k), second.mat(k), first.mat(k)));
  return r;
}

ChainMap chain_add(const ChainMap& a, const ChainMap& b) {
  engine_check(a.src == b.src && a.dst == b.dst, "chain_add shape");
  ChainMap r = a;
  int x = std::min(a.src.lo, a.dst.lo), y = std::max(a.src.hi(), a.dst.hi());
  for (int k = x; k <= y; ++k) r.set(k, a.mat(k) + b.mat(k));
  return r;
}

ChainMap chain_scale(const ChainMap& f, const Rat& s) {
  ChainMap r = f;
  for (auto& m : r.mats) m = m.scaled(s);
  return r;
}

ChainMap identity_map(const Complex& x) {
  ChainMap r;
  r.src = r.dst = x;
  for (int k = x.lo; k <= x.hi(); ++k) r.set(k, Mat::identity(int(x.term(k).size())));
  return r;
}

ChainMap zero_map(const Complex& src, const Complex& dst) {
  ChainMap r;
  r.src = src;
  r.dst = dst;
  int a = std::min(src.lo, dst.lo), b = std::max(src.hi(), dst.hi());
  for (int k = a; k <= b; ++k) r.set(k, Mat(int(dst.term(k).size()), int(src.term(k).size())));
  return r;
}

ChainMap boundary_of(const Homotopy& h) {
  const Complex& x = h.src;
  const Complex& y = h.dst;
  ChainMap r;
  r.src = x;
  r.dst = y;
  int a = std::min(x.lo, y.lo), b = std::max(x.hi(), y.hi());
  for (int k = a; k <= b; ++k) {
    Mat dh = masked_mul(x.alg, x.intervals(k), y.intervals(k - 1), y.intervals(k), y.diff(k - 1), h.mat(k));
    Mat hd = masked_mul(x.alg, x.intervals(k), x.intervals(k + 1), y.intervals(k), h.mat(k + 1), x.diff(k));
    r.set(k, dh + hd);
  }
  return r;
}

Complex build_complex(const AlgebraSpec& alg, int lo, std::vector<std::vector<Summand>> terms,
                      std::vector<Mat> diffs) {
  Complex c;
  c.alg = alg;
  c.lo = lo;
  c.terms = std::move(terms);
  c.diffs = std::move(diffs);
  for (auto& t : c.terms)
    for (auto& s : t)
      if (s.vertex < 1 || s.vertex > alg.n()) fail(Err::IndexOutOfRange, "summand vertex out of range");
  c.trim();
  c.validate();
  return c;
}

Complex zero_complex(const AlgebraSpec& alg) {
  Complex c;
  c.alg = alg;
  return c;
}

Complex stalk_complex(const AlgebraSpec& alg, const Summand& s, int deg) {
  return build_complex(alg, deg, {{s}}, {});
}

Complex shift(const Complex& x, int k) {
  Complex r = x;
  r.lo -= k;
  if (k % 2 != 0)
    for (auto& d : r.diffs) d = -d;
  return r;
}

ChainMap shift_map(const ChainMap& f, int k) {
  ChainMap r;
  r.src = shift(f.src, k);
  r.dst = shift(f.dst, k);
  int a = std::min(r.src.lo, r.dst.lo), b = std::max(r.src.hi(), r.dst.hi());
  for (int d = a; d <= b; ++d) r.set(d, f.mat(d + k));
  return r;
}

Complex truncate_le(const Complex& x, int n) {
  Complex r = x;
  for (int k = x.lo; k <= x.hi(); ++k)
    if (k > n) r.terms[k - x.lo].clear();
  for (int k = x.lo; k < x.hi(); ++k)
    if (k >= n) r.diffs[k - x.lo] = Mat(int(r.terms[k + 1 - x.lo].size()), int(r.terms[k - x.lo].size()));
  r.trim();
  return r;
}

Complex truncate_ge(const Complex& x, int n) {
  Complex r = x;
  for (int k = x.lo; k <= x.hi(); ++k)
    if (k < n) r.terms[k - x.lo].clear();
  for (int k = x.lo; k < x.hi(); ++k)
    if (k < n) r.diffs[k - x.lo] = Mat(int(r.terms[k + 1 - x.lo].size()), int(r.terms[k - x.lo].size()));
  r.trim();
  return r;
}

Complex direct_sum(const Complex& x, const Complex& y) {
  engine_check(x.alg == y.alg, "direct sum across algebras");
  if (x.is_zero_complex()) return y;
  if (y.is_zero_complex()) return x;
  // Reject only a sum of purely-projective with purely-injective content;
  // internally produced mixed complexes may be summed freely.
  bool x_p = x.pure(Kind::Projective), x_i = x.pure(Kind::Injective);
  bool y_p = y.pure(Kind::Projective), y_i = y.pure(Kind::Injective);
  if ((x_p && !x_i && y_i && !y_p) || (x_i && !x_p && y_p && !y_i))
    fail(Err::KindMismatch, "direct sum across kinds");
  int a = std::min(x.lo, y.lo), b = std::max(x.hi(), y.hi());
  std::vector<std::vector<Summand>> terms;
  std::vector<Mat> diffs;
  for (int k = a; k <= b; ++k) {
    std::vector<Summand> t = x.term(k);
    for (auto& s : y.term(k)) t.push_back(s);
    terms.push_back(std::move(t));
  }
  for (int k = a; k < b; ++k) {
    Mat dx = x.diff(k), dy = y.diff(k);
    Mat d(dx.rows() + dy.rows(), dx.cols() + dy.cols());
    for (int i = 0; i < dx.rows(); ++i)
      for (int j = 0; j < dx.cols(); ++j) d.at(i, j) = dx.at(i, j);
    for (int i = 0; i < dy.rows(); ++i)
      for (int j = 0; j < dy.cols(); ++j) d.at(dx.rows() + i, dx.cols() + j) = dy.at(i, j);
    diffs.push_back(std::move(d));
  }
  Complex r;
  r.alg = x.alg;
  r.lo = a;
  r.terms = std::move(terms);
  r.diffs = std::move(diffs);
  r.trim();
  return r;
}

Complex cone(const ChainMap& f) {
  bool proj_ok = f.src.pure(Kind::Projective) && f.dst.pure(Kind::Projective);
  bool inj_ok = f.src.pure(Kind::Injective) && f.dst.pure(Kind::Injective);
  if (!proj_ok && !inj_ok) fail(Err::KindMismatch, "cone needs a common summand kind");
  return cone_mixed(f);
}

Complex cone_mixed(const ChainMap& f) {
  const Complex& x = f.src;
  const Complex& y = f.dst;
  engine_check(x.alg == y.alg, "cone across algebras");
  int a = std::min(x.lo - 1, y.lo), b = std::max(x.hi() - 1, y.hi());
  std::vector<std::vector<Summand>> terms;
  std::vector<Mat> diffs;
  for (int k = a; k <= b; ++k) {
    std::vector<Summand> t = x.term(k + 1);
    for (auto& s : y.term(k)) t.push_back(s);
    terms.push_back(std::move(t));
  }
  for (int k = a; k < b; ++k) {
    int xr = int(x.term(k + 2).size()), xc = int(x.term(k + 1).size());
    int yr = int(y.term(k + 1).size()), yc = int(y.term(k).size());
    Mat d(xr + yr, xc + yc);
    Mat dx = x.diff(k + 1), dy = y.diff(k), fm = f.mat(k + 1);
    for (int i = 0; i < xr; ++i)
      for (int j = 0; j < xc; ++j) d.at(i, j) = -dx.at(i, j);
    for (int i = 0; i < yr; ++i)
      for (int j = 0; j < xc; ++j) d.at(xr + i, j) = fm.at(i, j);
    for (int i = 0; i < yr; ++i)
      for (int j = 0; j < yc; ++j) d.at(xr + i, xc + j) = dy.at(i, j);
    diffs.push_back(std::move(d));
  }
  Complex r;
  r.alg = x.alg;
  r.lo = a;
  r.terms = std::move(terms);
  r.diffs = std::move(diffs);
  r.trim();
  r.validate();
  return r;
}

ChainMap cone_inclusion(const ChainMap& f) {
  Complex c = cone_mixed(f);
  ChainMap r;
  r.src = f.dst;
  r.dst = c;
  for (int k = c.lo; k <= c.hi(); ++k) {
    int xc = int(f.src.term(k + 1).size());
    int yc = int(f.dst.term(k).size());
    Mat m(xc + yc, yc);
    for (int i = 0; i < yc; ++i) m.at(xc + i, i) = 1;
    r.set(k, std::move(m));
  }
  return r;
}

ChainMap cone_projection(const ChainMap& f) {
  Complex c = cone_mixed(f);
  Complex x1 = shift(f.src, 1);
  ChainMap r;
  r.src = c;
  r.dst = x1;
  for (int k = c.lo; k <= c.hi(); ++k) {
    int xc = int(f.src.term(k + 1).size());
    int yc = int(f.dst.term(k).size());
    Mat m(xc, xc + yc);
    for (int i = 0; i < xc; ++i) m.at(i, i) = 1;
    r.set(k, std::move(m));
  }
  return r;
}

static Complex flip_kind(const Complex& x, bool to_inj) {
  Complex r = x;
  for (auto& t : r.terms)
    for (auto& s : t) s.inj = to_inj;
  r.validate();
  return r;
}

Complex nu_complex(const Complex& x) {
  if (!x.pure(Kind::Projective)) fail(Err::WrongKind, "nu needs a complex of projectives");
  return flip_kind(x, true);
}

Complex nu_inv_complex(const Complex& x) {
  if (!x.pure(Kind::Injective)) fail(Err::WrongKind, "nu^{-1} needs a complex of injectives");
  return flip_kind(x, false);
}

// ---- homology via representation expansion ----

std::map<int, std::vector<IntervalModule>> homology(const Complex& x) {
  std::map<int, std::vector<IntervalModule>> out;
  int n = x.alg.n();
  for (int k = x.lo; k <= x.hi(); ++k) {
    auto cur = x.intervals(k);
    auto nxt = x.intervals(k + 1);
    auto prv = x.intervals(k - 1);
    LinearRepresentation mod = rep_of_sum(x.alg, cur);
    // Per-vertex homology bases, kept as ambient-coordinate columns.
    std::vector<Mat> img(n + 1), hbasis(n + 1);
    std::vector<int> hdim(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
      Mat dk = rep_map_at_vertex(x.alg, cur, nxt, x.diff(k), v);
      Mat dprev = rep_map_at_vertex(x.alg, prv, cur, x.diff(k - 1), v);
      Mat K = dk.nullspace();
      Mat B = dprev.column_space();
      // Extend B by columns of K to a basis of ker.
      std::vector<std::vector<Rat>> cols;
      for (int c = 0; c < B.cols(); ++c) cols.push_back(B.col(c));
      Mat span = B;
      for (int c = 0; c < K.cols(); ++c) {
        std::vector<Rat> v2 = K.col(c);
        if (!in_span(span, v2)) {
          cols.push_back(v2);
          span = Mat::from_columns(int(v2.size()), cols);
        }
      }
      img[v] = B;
      std::vector<std::vector<Rat>> hb(cols.begin() + B.cols(), cols.end());
      hbasis[v] = Mat::from_columns(mod.dim(v), hb);
      hdim[v] = int(hb.size());
    }
    LinearRepresentation h;
    h.n = n;
    for (int v = 1; v <= n; ++v) h.dims.push_back(hdim[v]);
    for (int v = 1; v < n; ++v) {
      // induced map H(v+1) -> H(v) through the module's down map
      Mat m(hdim[v], hdim[v + 1]);
      if (hdim[v + 1] > 0) {
        std::vector<std::vector<Rat>> full;
        for (int c = 0; c < img[v].cols(); ++c) full.push_back(img[v].col(c));
        for (int c = 0; c < hbasis[v].cols(); ++c) full.push_back(hbasis[v].col(c));
        Mat basis = Mat::from_columns(mod.dim(v), full);
        for (int c = 0; c < hdim[v + 1]; ++c) {
          std::vector<Rat> w = mod.down_map(v).apply(hbasis[v + 1].col(c));
          std::vector<Rat> coords;
          engine_check(in_span(basis, w, &coords), "homology: down map leaves kernel");
          for (int r = 0; r < hdim[v]; ++r) m.at(r, c) = coords[img[v].cols() + r];
        }
      }
      h.down.push_back(std::move(m));
    }
    std::vector<IntervalModule> parts = decompose_rep(h);
    if (!parts.empty()) out[k] = parts;
  }
  return out;
}

bool same_homology(const Complex& x, const Complex& y) { return homology(x) == homology(y); }

bool acyclic(const Complex& x) { return homology(x).empty(); }

bool is_quasi_iso(const ChainMap& f) { return acyclic(cone(f)); }

std::vector<long long> euler_vector(const Complex& x) {
  std::vector<long long> e(x.alg.n(), 0);
  for (int k = x.lo; k <= x.hi(); ++k)
    for (auto& iv : x.intervals(k)) {
      long long sgn = (k % 2 == 0) ? 1 : -1;
      for (int v = iv.lo; v <= iv.hi; ++v) e[v - 1] += sgn;
    }
  return e;
}

// ---- minimization by Gaussian cancellation ----

MinimizeResult minimize(const Complex& x0) {
  Complex x = x0;
  x.validate();
  MinimizeResult res;
  res.strips.clear();
  ChainMap incl = identity_map(x); // current -> x0
  ChainMap proj = identity_map(x); // x0 -> current
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int k = x.lo; k < x.hi() && !progressed; ++k) {
      const Mat d = x.diff(k);
      for (int c = 0; c < d.cols() && !progressed; ++c)
        for (int r = 0; r < d.rows() && !progressed; ++r) {
          if (d.at(r, c) == 0 || !(x.term(k)[c] == x.term(k + 1)[r])) continue;
          Rat alpha = d.at(r, c);
          res.strips.push_back(StripEvent{x.term(k)[c], k});
          // Build the reduced complex.
          Complex y = x;
          std::vector<Summand>& tk = y.terms[k - y.lo];
          std::vector<Summand>& tk1 = y.terms[k + 1 - y.lo];
          Mat eps = d.without_row(r).without_col(c);
          // gamma: d(c) into the other degree-(k+1) summands; beta: row r off c.
          std::vector<Rat> gamma, beta;
          std::vector<IntervalModule> src_iv, dst_iv;
          for (int i = 0; i < d.rows(); ++i)
            if (i != r) gamma.push_back(d.at(i, c));
          for (int j = 0; j < d.cols(); ++j)
            if (j != c) beta.push_back(d.at(r, j));
          for (int j = 0; j < d.cols(); ++j)
            if (j != c) src_iv.push_back(x.interval_of(x.term(k)[j]));
          for (int i = 0; i < d.rows(); ++i)
            if (i != r) dst_iv.push_back(x.interval_of(x.term(k + 1)[i]));
          for (size_t i = 0; i < gamma.size(); ++i)
            for (size_t j = 0; j < beta.size(); ++j) {
              if (gamma[i] == 0 || beta[j] == 0) continue;
              if (hom_dim(x.alg, src_iv[j], dst_iv[i]) == 0) continue;
              eps.at(int(i), int(j)) -= gamma[i] / alpha * beta[j];
            }
          tk.erase(tk.begin() + c);
          tk1.erase(tk1.begin() + r);
          y.diffs[k - y.lo] = eps;
          if (k - 1 >= y.lo) y.diffs[k - 1 - y.lo] = x.diff(k - 1).without_row(c);
          if (k + 1 < y.hi()) y.diffs[k + 1 - y.lo] = x.diff(k + 1).without_col(r);
          y.trim();
          // Step maps: p: x -> y, i: y -> x.
          ChainMap pstep;
          pstep.src = x;
          pstep.dst = y;
          ChainMap istep;
          istep.src = y;
          istep.dst = x;
          for (int kk = x.lo; kk <= x.hi(); ++kk) {
            int xs = int(x.term(kk).size());
            int ys = int(y.term(kk).size());
            Mat pm(ys, xs), im(xs, ys);
            if (kk == k) {
              for (int j = 0, o = 0; j < xs; ++j) {
                if (j == c) continue;
                pm.at(o, j) = 1;
                im.at(j, o) = 1;
                im.at(c, o) = -beta[o] / alpha;
                ++o;
              }
            } else if (kk == k + 1) {
              for (int i = 0, o = 0; i < xs; ++i) {
                if (i == r) continue;
                pm.at(o, i) = 1;
                im.at(i, o) = 1;
                ++o;
              }
              for (int i = 0, o = 0; i < xs; ++i) {
                if (i == r) continue;
                pm.at(o, r) = -gamma[o] / alpha;
                ++o;
              }
            } else {
              engine_check(xs == ys, "minimize: degree size mismatch away from pivot");
              pm = Mat::identity(xs);
              im = Mat::identity(xs);
            }
            pstep.set(kk, std::move(pm));
            istep.set(kk, std::move(im));
          }
          proj = compose(proj, pstep);
          incl = compose(istep, incl);
          x = y;
          progressed = true;
        }
    }
  }
  res.min = x;
  res.min.validate();
  engine_check(res.min.is_minimal(), "minimize did not reach a minimal complex");
  res.incl = incl;
  res.proj = proj;
  res.incl.validate();
  res.proj.validate();
  ChainMap pi = compose(res.incl, res.proj);
  ChainMap id = identity_map(res.min);
  for (int k = res.min.lo; k <= res.min.hi(); ++k)
    engine_check(pi.mat(k) == id.mat(k), "minimize: proj o incl != id");
  return res;
}

Complex minimize_only(const Complex& x) { return minimize(x).min; }

int l_p(const Complex& x) {
  if (!x.pure(Kind::Projective)) fail(Err::WrongKind, "l_p needs a complex of projectives");
  return minimize_only(x).summand_count();
}

// ---- canonical form and descriptors ----

Complex canonicalize(const Complex& x0) {
  Complex x = x0;
  x.trim();
  // Sort summands per degree, tracking the permutations.
  for (int k = x.lo; k <= x.hi(); ++k) {
    auto& t = x.terms[k - x.lo];
    std::vector<int> idx(t.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return t[a] < t[b]; });
    std::vector<Summand> nt;
    for (int i : idx) nt.push_back(t[i]);
    if (k < x.hi()) {
      Mat& d = x.diffs[k - x.lo];
      Mat nd(d.rows(), d.cols());
      for (int r = 0; r < d.rows(); ++r)
        for (int c = 0; c < d.cols(); ++c) nd.at(r, c) = d.at(r, idx[c]);
      d = nd;
    }
    if (k > x.lo) {
      Mat& d = x.diffs[k - 1 - x.lo];
      Mat nd(d.rows(), d.cols());
      for (int r = 0; r < d.rows(); ++r)
        for (int c = 0; c < d.cols(); ++c) nd.at(r, c) = d.at(idx[r], c);
      d = nd;
    }
    t = nt;
  }
  // Scalar normalization: first non-zero entry of each outgoing column -> 1.
  // Descending degrees: rescaling a source only touches the not-yet-visited
  // incoming differential, so one pass reaches the fixpoint.
  for (int k = x.hi() - 1; k >= x.lo; --k) {
    Mat& d = x.diffs[k - x.lo];
    for (int c = 0; c < d.cols(); ++c) {
      Rat s(0);
      for (int r = 0; r < d.rows(); ++r)
        if (d.at(r, c) != 0) {
          s = d.at(r, c);
          break;
        }
      if (s == 0 || s == 1) continue;
      for (int r = 0; r < d.rows(); ++r) d.at(r, c) /= s;
      if (k > x.lo) {
        Mat& prev = x.diffs[k - 1 - x.lo];
        for (int j = 0; j < prev.cols(); ++j) prev.at(c, j) *= s;
      }
    }
  }
  return x;
}

std::string descriptor(const Complex& x0) {
  Complex x = canonicalize(x0);
  if (x.is_zero_complex()) return "0";
  std::ostringstream os;
  for (int k = x.lo; k <= x.hi(); ++k) {
    if (k > x.lo) os << " ";
    os << k << ":{";
    const auto& t = x.term(k);
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) os << ",";
      os << summand_str(t[i]);
    }
    os << "}";
  }
  for (int k = x.lo; k < x.hi(); ++k) {
    const Mat d = x.diff(k);
    os << " d" << k << "=[";
    bool first = true;
    for (int r = 0; r < d.rows(); ++r)
      for (int c = 0; c < d.cols(); ++c) {
        if (!first) os << ",";
        os << rat_str(d.at(r, c));
        first = false;
      }
    os << "]";
  }
  return os.str();
}

Complex parse_descriptor(const AlgebraSpec& alg, const std::string& text) {
  if (text == "0") return zero_complex(alg);
  std::map<int, std::vector<Summand>> terms;
  std::map<int, std::vector<Rat>> raw_diffs;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    try {
      if (tok.size() > 1 && tok[0] == 'd') {
        size_t eq = tok.find("=[");
        if (eq == std::string::npos || tok.back() != ']') fail(Err::ParseError, "bad descriptor token: " + tok);
        int deg = std::stoi(tok.substr(1, eq - 1));
        std::string body = tok.substr(eq + 2, tok.size() - eq - 3);
        std::vector<Rat> vals;
        std::istringstream bs(body);
        std::string e;
        while (std::getline(bs, e, ','))
          if (!e.empty()) vals.push_back(rat_parse(e));
        raw_diffs[deg] = vals;
      } else {
        size_t col = tok.find(":{");
        if (col == std::string::npos || tok.back() != '}') fail(Err::ParseError, "bad descriptor token: " + tok);
        int deg = std::stoi(tok.substr(0, col));
        std::string body = tok.substr(col + 2, tok.size() - col - 3);
        std::vector<Summand> t;
        std::istringstream bs(body);
        std::string e;
        while (std::getline(bs, e, ',')) {
          if (e.empty()) continue;
          if (e[0] != 'P' && e[0] != 'I') fail(Err::ParseError, "bad summand: " + e);
          t.push_back(Summand{e[0] == 'I', std::stoi(e.substr(1))});
        }
        terms[deg] = t;
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Err::ParseError, "bad descriptor token: " + tok);
    }
  }
  if (terms.empty()) fail(Err::ParseError, "empty descriptor");
  int lo = terms.begin()->first, hi = terms.rbegin()->first;
  std::vector<std::vector<Summand>> tv;
  for (int k = lo; k <= hi; ++k) tv.push_back(terms.count(k) ? terms[k] : std::vector<Summand>{});
  std::vector<Mat> dv;
  for (int k = lo; k < hi; ++k) {
    int rows = int(tv[k + 1 - lo].size()), cols = int(tv[k - lo].size());
    Mat m(rows, cols);
    if (raw_diffs.count(k)) {
      auto& vals = raw_diffs[k];
      if (int(vals.size()) != rows * cols) fail(Err::ParseError, "differential size mismatch in descriptor");
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = vals[r * cols + c];
    }
    dv.push_back(std::move(m));
  }
  return build_complex(alg, lo, std::move(tv), std::move(dv));
}

} // namespace arq
