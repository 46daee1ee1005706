#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "arq/ar.hpp"
#include "arq/homalg.hpp"
#include "helpers.hpp"

using namespace arq;
using namespace arqtest;

namespace {

Complex rand_object(std::mt19937_64& rng, const AlgebraSpec& a) {
  auto mods = all_modules(a);
  Complex c = proj_resolution(a, mods[rng() % mods.size()]);
  return shift(c, int(rng() % 5) - 2);
}

} // namespace

TEST_CASE("build_complex validation") {
  AlgebraSpec a = preset_a4gamma();
  Mat one(1, 1);
  one.at(0, 0) = 1;
  // P4 -> P1 has no hom support
  CHECK_THROWS_AS(build_complex(a, 0, {{Summand{false, 4}}, {Summand{false, 1}}}, {one}), Error);
  // d^2 != 0: P1 -> P2 -> P3 with identity scalars composes to the canonical map
  CHECK_THROWS_AS(
      build_complex(a, 0, {{Summand{false, 1}}, {Summand{false, 2}}, {Summand{false, 3}}},
                    {one, one}),
      Error);
  Complex ok = build_complex(a, 0, {{Summand{false, 1}}, {Summand{false, 2}}}, {one});
  ok.validate();
  CHECK(ok.summand_count() == 2);
}

TEST_CASE("shift conventions") {
  AlgebraSpec a = preset_a4gamma();
  Complex p = proj_resolution(a, {3, 4}); // P1 -> P2 -> P4 in degrees -2..0
  Complex s1 = shift(p, 1);
  CHECK(s1.lo == -3);
  CHECK(s1.diff(-3) == -p.diff(-2)); // odd shift flips the differential
  Complex s2 = shift(shift(p, 1), 1);
  CHECK(s2.lo == -4);
  CHECK(s2.diff(-4) == p.diff(-2)); // [1][1] = [2] restores signs
  CHECK(shift(p, 0) == p);
  CHECK(shift(shift(p, 3), -3) == p);
}

TEST_CASE("cone and rotation bookkeeping") {
  AlgebraSpec a = preset_a4gamma();
  Complex p = proj_resolution(a, {2, 3});
  ChainMap id = identity_map(p);
  Complex c = cone(id);
  CHECK(minimize_only(c).is_zero_complex()); // cone(id) is contractible
  MinimizeResult mr = minimize(c);
  CHECK(mr.strips.size() == 2);
  // inclusion/projection triangle maps commute and compose to zero in K
  Complex q = proj_resolution(a, {2, 2});
  HomSpace hs = hom_spaces(q, p);
  REQUIRE(hs.dim_chain() >= 1);
  ChainMap f = hs.chain_basis(0);
  ChainMap incl = cone_inclusion(f);
  ChainMap proj = cone_projection(f);
  incl.validate();
  proj.validate();
  ChainMap comp = compose(incl, proj); // p -> cone -> q[1]
  HomSpace hs2 = hom_spaces(comp.src, comp.dst);
  CHECK(hs2.is_null_homotopic(comp));
}

TEST_CASE("direct_sum rejects mixing pure kinds") {
  AlgebraSpec a = preset_a4gamma();
  Complex p = proj_resolution(a, {2, 3});
  Complex i = inj_resolution(a, {2, 3});
  CHECK_THROWS_AS(direct_sum(p, i), Error);
  Complex s = direct_sum(p, shift(p, -1));
  s.validate();
  CHECK(s.summand_count() == 4);
}

TEST_CASE("masked composition is associative on chain maps") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    AlgebraSpec a = random_algebra(rng, 4 + int(rng() % 3));
    Complex x = rand_object(rng, a), y = rand_object(rng, a), z = rand_object(rng, a),
            w = rand_object(rng, a);
    HomSpace fxy = hom_spaces(x, y), fyz = hom_spaces(y, z), fzw = hom_spaces(z, w);
    if (!fxy.dim_chain() || !fyz.dim_chain() || !fzw.dim_chain()) continue;
    ChainMap f = fxy.chain_basis(rng() % fxy.dim_chain());
    ChainMap g = fyz.chain_basis(rng() % fyz.dim_chain());
    ChainMap h = fzw.chain_basis(rng() % fzw.dim_chain());
    ChainMap lhs = compose(compose(f, g), h);
    ChainMap rhs = compose(f, compose(g, h));
    for (int d = x.lo; d <= x.hi(); ++d) CHECK(lhs.mat(d) == rhs.mat(d));
  }
}

TEST_CASE("homology through the representation expansion") {
  AlgebraSpec a = preset_a4gamma();
  for (const IntervalModule& m : all_modules(a)) {
    auto h = homology(proj_resolution(a, m));
    REQUIRE(h.count(0) == 1);
    CHECK(h.at(0) == std::vector<IntervalModule>{m});
    CHECK(h.size() == 1);
    auto hs = homology(shift(proj_resolution(a, m), 2));
    REQUIRE(hs.count(-2) == 1);
    CHECK(hs.at(-2) == std::vector<IntervalModule>{m});
  }
  Complex p = proj_resolution(a, {2, 3});
  CHECK(acyclic(cone(identity_map(p))));
  CHECK(!acyclic(p));
}

TEST_CASE("quasi-isomorphism detection") {
  AlgebraSpec a = preset_radsquare(4);
  for (const IntervalModule& m : all_modules(a)) {
    Complex p = proj_resolution(a, m);
    CHECK(is_quasi_iso(identity_map(p)));
    ChainMap z = zero_map(p, p);
    CHECK(is_quasi_iso(z) == p.is_zero_complex());
  }
}

TEST_CASE("minimize: homology-preserving, idempotent, strict retraction") {
  std::mt19937_64 rng(246810);
  for (int trial = 0; trial < 30; ++trial) {
    AlgebraSpec a = random_algebra(rng, 4 + int(rng() % 3));
    Complex x = rand_object(rng, a), y = rand_object(rng, a);
    HomSpace hs = hom_spaces(x, y);
    Complex c = hs.dim_chain() ? cone(hs.chain_basis(rng() % hs.dim_chain())) : direct_sum(shift(x, -1), y);
    MinimizeResult mr = minimize(c);
    CHECK(same_homology(mr.min, c));
    CHECK(mr.min.is_minimal());
    CHECK(minimize_only(mr.min) == mr.min);
    CHECK(int(mr.strips.size()) * 2 == c.summand_count() - mr.min.summand_count());
    ChainMap round = compose(mr.incl, mr.proj);
    for (int d = mr.min.lo; d <= mr.min.hi(); ++d)
      CHECK(round.mat(d) == Mat::identity(int(mr.min.term(d).size())));
    CHECK(l_p(c) == mr.min.summand_count());
  }
}

TEST_CASE("euler vector is a cone invariant") {
  std::mt19937_64 rng(1357);
  for (int trial = 0; trial < 20; ++trial) {
    AlgebraSpec a = random_algebra(rng, 4 + int(rng() % 3));
    Complex x = rand_object(rng, a), y = rand_object(rng, a);
    HomSpace hs = hom_spaces(x, y);
    if (!hs.dim_chain()) continue;
    Complex c = cone(hs.chain_basis(0));
    auto ex = euler_vector(x), ey = euler_vector(y), ec = euler_vector(c);
    for (int v = 0; v < int(ex.size()); ++v) CHECK(ec[v] == ey[v] - ex[v]);
  }
}

TEST_CASE("descriptor round trip and canonical form") {
  std::mt19937_64 rng(8642);
  for (int trial = 0; trial < 30; ++trial) {
    AlgebraSpec a = random_algebra(rng, 4 + int(rng() % 3));
    Complex x = canonicalize(rand_object(rng, a));
    CHECK(canonicalize(x) == x);
    Complex back = parse_descriptor(a, descriptor(x));
    CHECK(back == x);
  }
  AlgebraSpec a = preset_a4gamma();
  CHECK(descriptor(zero_complex(a)) == "0");
  CHECK(parse_descriptor(a, "0").is_zero_complex());
}

TEST_CASE("Serre duality: dim Hom_K(X, nu Y) = dim Hom_K(Y, X)") {
  std::mt19937_64 rng(0x5e77e);
  for (const char* name : {"a4gamma", "radsquare:5", "longrel:5", "hereditary:4"}) {
    AlgebraSpec a = *preset_by_name(name);
    int pairs = 0;
    while (pairs < 50) {
      Complex x = rand_object(rng, a), y = rand_object(rng, a);
      int lhs = hom_spaces(x, nu_complex(y)).dim_k();
      int rhs = hom_spaces(y, x).dim_k();
      CHECK(lhs == rhs);
      ++pairs;
    }
  }
}

TEST_CASE("lift_along produces honest homotopy factorizations") {
  AlgebraSpec a = preset_a4gamma();
  Complex x = proj_resolution(a, {2, 3});
  Projectivization p = projectivize(nu_complex(x));
  ChainMap w = connecting_map(x);
  ChainMap wp = lift_along(p.map, w);
  ChainMap diff = chain_add(compose(wp, p.map), chain_scale(w, Rat(-1)));
  CHECK(hom_spaces(x, nu_complex(x)).is_null_homotopic(diff));
}

TEST_CASE("is_isomorphic_k distinguishes shifts and ignores summand order") {
  std::mt19937_64 rng(1122);
  for (int trial = 0; trial < 20; ++trial) {
    AlgebraSpec a = random_algebra(rng, 4 + int(rng() % 3));
    Complex x = rand_object(rng, a), y = rand_object(rng, a);
    CHECK(is_isomorphic_k(x, x));
    CHECK(!is_isomorphic_k(x, shift(x, 1)));
    CHECK(is_isomorphic_k(direct_sum(x, y), direct_sum(y, x)));
  }
}

TEST_CASE("decompose round-trips direct sums") {
  std::mt19937_64 rng(3344);
  for (int trial = 0; trial < 15; ++trial) {
    AlgebraSpec a = random_algebra(rng, 4 + int(rng() % 3));
    Complex x = rand_object(rng, a), y = rand_object(rng, a);
    Complex s = direct_sum(direct_sum(x, y), x);
    auto parts = decompose(s);
    CHECK(parts.size() == 3);
    int nx = 0, ny = 0;
    for (const Complex& p : parts) {
      if (is_isomorphic_k(p, x)) ++nx;
      else if (is_isomorphic_k(p, y)) ++ny;
    }
    if (is_isomorphic_k(x, y)) {
      CHECK(nx == 3);
    } else {
      CHECK(nx == 2);
      CHECK(ny == 1);
    }
    Complex back = zero_complex(a);
    for (const Complex& p : parts) back = direct_sum(back, p);
    CHECK(is_isomorphic_k(back, s));
  }
}

TEST_CASE("end algebra structure") {
  AlgebraSpec a = preset_a4gamma();
  Complex x = direct_sum(proj_resolution(a, {2, 3}), proj_resolution(a, {2, 2}));
  EndAlgebra e = end_algebra(minimize_only(x));
  CHECK(e.dim() == hom_spaces(e.x, e.x).dim_k());
  // the radical is nilpotent: some power of every radical element vanishes
  for (int j = 0; j < e.radical.cols(); ++j) {
    std::vector<Rat> v = e.radical.col(j);
    for (int it = 0; it < e.dim(); ++it) v = e.mult(v, e.radical.col(j));
    for (const Rat& c : v) CHECK(c == 0);
  }
  // unit really is the identity class
  ChainMap u = e.element(e.unit);
  ChainMap d = chain_add(u, chain_scale(identity_map(e.x), Rat(-1)));
  CHECK(hom_spaces(e.x, e.x).is_null_homotopic(d));
  CHECK(is_indecomposable_k(proj_resolution(a, {2, 3})));
  CHECK(!is_indecomposable_k(minimize_only(x)));
}
