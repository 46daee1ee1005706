#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "arq/algebra.hpp"
#include "arq/homalg.hpp"
#include "arq/rep.hpp"
#include "helpers.hpp"

using namespace arq;
using namespace arqtest;

TEST_CASE("relation validation") {
  CHECK_THROWS_AS(algebra_new(4, {{1, 2}}), Error);       // too short
  CHECK_THROWS_AS(algebra_new(4, {{0, 3}}), Error);       // out of range
  CHECK_THROWS_AS(algebra_new(4, {{2, 5}}), Error);       // out of range
  CHECK_THROWS_AS(algebra_new(5, {{1, 4}, {2, 4}}), Error); // nested
  CHECK(algebra_new(5, {{1, 3}, {1, 3}}).relations().size() == 1); // duplicates normalize
  AlgebraSpec a = algebra_new(6, {{3, 6}, {1, 4}});
  CHECK(a.relations() == std::vector<std::pair<int, int>>{{1, 4}, {3, 6}}); // sorted
}

TEST_CASE("Kupisch data of the presets") {
  AlgebraSpec a4 = preset_a4gamma();
  CHECK(std::vector<int>{a4.proj_len(1), a4.proj_len(2), a4.proj_len(3), a4.proj_len(4)} ==
        std::vector<int>{1, 2, 3, 3});
  CHECK(std::vector<int>{a4.inj_len(1), a4.inj_len(2), a4.inj_len(3), a4.inj_len(4)} ==
        std::vector<int>{3, 3, 2, 1});
  AlgebraSpec rs = preset_radsquare(5);
  for (int i = 1; i <= 5; ++i) CHECK(rs.proj_len(i) == (i == 1 ? 1 : 2));
  AlgebraSpec h = preset_hereditary(4);
  for (int i = 1; i <= 4; ++i) CHECK(h.proj_len(i) == i);
  AlgebraSpec lr = preset_longrel(6);
  for (int i = 1; i <= 6; ++i) CHECK(lr.proj_len(i) == std::min(i, 5));
}

TEST_CASE("Kupisch data vs brute-force oracle on random algebras") {
  std::mt19937_64 rng(0xa19eb7a);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 3 + int(rng() % 5);
    AlgebraSpec a = random_algebra(rng, n);
    for (int i = 1; i <= n; ++i) {
      CHECK(a.proj_len(i) == kupisch_oracle_c(a, i));
      CHECK(a.inj_len(i) == kupisch_oracle_r(a, i));
    }
  }
}

TEST_CASE("valid_module matches the relation test") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + int(rng() % 4);
    AlgebraSpec a = random_algebra(rng, n);
    for (int lo = 1; lo <= n; ++lo)
      for (int hi = lo; hi <= n; ++hi)
        CHECK(a.valid_module({lo, hi}) == interval_ok(a.relations(), lo, hi));
  }
}

TEST_CASE("hom formula vs representation oracle, exhaustive n <= 6") {
  std::vector<AlgebraSpec> algs = {preset_a4gamma(), preset_hereditary(6)};
  for (int n = 3; n <= 6; ++n) {
    algs.push_back(preset_radsquare(n));
    if (n >= 4) algs.push_back(preset_longrel(n));
  }
  for (auto& rels : all_relation_sets(5)) algs.push_back(algebra_new(5, rels));
  for (const AlgebraSpec& a : algs) {
    auto mods = all_modules(a);
    for (const IntervalModule& m : mods)
      for (const IntervalModule& n : mods) CHECK(hom_dim(a, m, n) == hom_oracle(a, m, n));
  }
}

TEST_CASE("hom is one-dimensional at most and reflexive only on equals") {
  AlgebraSpec a = preset_radsquare(4);
  for (const IntervalModule& m : all_modules(a)) {
    CHECK(hom_dim(a, m, m) == 1);
    for (const IntervalModule& n : all_modules(a)) {
      int d = hom_dim(a, m, n);
      CHECK((d == 0 || d == 1));
      if (m != n && d == 1) CHECK(hom_dim(a, n, m) == 0);
    }
  }
}

TEST_CASE("compose_scalar is associative and respects hom support") {
  AlgebraSpec a = preset_longrel(5);
  auto mods = all_modules(a);
  for (const IntervalModule& x : mods)
    for (const IntervalModule& y : mods) {
      if (!hom_dim(a, x, y)) continue;
      for (const IntervalModule& z : mods) {
        if (!hom_dim(a, y, z)) continue;
        CanonicalMap f{x, y, Rat(2)}, g{y, z, Rat(3)};
        CanonicalMap gf = compose_scalar(a, f, g);
        CHECK(gf.src == x);
        CHECK(gf.dst == z);
        if (hom_dim(a, x, z))
          CHECK(gf.scalar == 6);
        else
          CHECK(gf.scalar == 0);
        for (const IntervalModule& w : mods) {
          if (!hom_dim(a, z, w)) continue;
          CanonicalMap h{z, w, Rat(5)};
          CHECK(compose_scalar(a, gf, h).scalar == compose_scalar(a, f, compose_scalar(a, g, h)).scalar);
        }
      }
    }
}

TEST_CASE("hom is not transitive: masking is really needed") {
  AlgebraSpec a = preset_hereditary(5);
  IntervalModule x{1, 2}, y{2, 4}, z{3, 5};
  CHECK(hom_dim(a, x, y) == 1);
  CHECK(hom_dim(a, y, z) == 1);
  CHECK(hom_dim(a, x, z) == 0);
  CHECK(compose_scalar(a, {x, y, Rat(1)}, {y, z, Rat(1)}).scalar == 0);
}

TEST_CASE("module parts and quotients") {
  AlgebraSpec a = preset_a4gamma();
  ModuleParts p4 = module_parts(a, a.proj(4));
  CHECK(p4.radical == IntervalModule{2, 3});
  CHECK(p4.socle == IntervalModule{2, 2});
  CHECK(p4.top == IntervalModule{4, 4});
  CHECK(interval_module(a, ModKind::Quotient, 4, 2) == IntervalModule{3, 4});
  CHECK(interval_module(a, ModKind::P, 3, 0) == IntervalModule{1, 3});
  CHECK(interval_module(a, ModKind::I, 1, 0) == IntervalModule{1, 3});
  CHECK(interval_module(a, ModKind::S, 2, 0) == IntervalModule{2, 2});
  CHECK_THROWS_AS(interval_module(a, ModKind::Quotient, 2, 3), Error);
  CHECK_THROWS_AS(interval_module(a, ModKind::P, 9, 0), Error);
}

TEST_CASE("presets by name and json round trip") {
  CHECK(preset_by_name("a4gamma"));
  CHECK(preset_by_name("radsquare:5"));
  CHECK(preset_by_name("longrel:6"));
  CHECK(preset_by_name("hereditary:3"));
  CHECK(!preset_by_name("longrel:abc"));
  CHECK(!preset_by_name("mystery"));
  AlgebraSpec a = algebra_new(6, {{1, 4}, {3, 6}});
  AlgebraSpec b = algebra_from_json(algebra_to_json(a));
  CHECK(a == b);
  CHECK_THROWS_AS(algebra_from_json("{\"n\": 4, \"relations\": [], \"extra\": 1}"), Error);
  CHECK_THROWS_AS(algebra_from_json("not json"), Error);
}

TEST_CASE("rep oracle expansion and rank-counting decomposition") {
  AlgebraSpec a = preset_a4gamma();
  LinearRepresentation r = rep_oracle(a, {2, 4});
  CHECK(r.dims == std::vector<int>{0, 1, 1, 1});
  std::vector<IntervalModule> sum = {{1, 2}, {2, 4}, {2, 2}};
  LinearRepresentation s = rep_of_sum(a, sum);
  CHECK(s.dims == std::vector<int>{1, 3, 1, 1});
  auto parts = decompose_rep(s);
  std::vector<IntervalModule> want = {{1, 2}, {2, 2}, {2, 4}};
  CHECK(parts == want);
}

TEST_CASE("decompose_rep round-trips random interval sums") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 3 + int(rng() % 4);
    AlgebraSpec a = random_algebra(rng, n);
    auto mods = all_modules(a);
    std::vector<IntervalModule> pick;
    int k = 1 + int(rng() % 5);
    for (int i = 0; i < k; ++i) pick.push_back(mods[rng() % mods.size()]);
    auto parts = decompose_rep(rep_of_sum(a, pick));
    std::sort(pick.begin(), pick.end());
    CHECK(parts == pick);
  }
}

TEST_CASE("canonical map expansion respects interval overlap") {
  AlgebraSpec a = preset_a4gamma();
  std::vector<IntervalModule> src = {{1, 2}}, dst = {{2, 3}};
  Mat sc(1, 1);
  sc.at(0, 0) = 7;
  CHECK(rep_map_at_vertex(a, src, dst, sc, 2).at(0, 0) == 7);
  CHECK(rep_map_at_vertex(a, src, dst, sc, 1).rows() == 0); // target dim 0 at vertex 1
  CHECK(rep_map_at_vertex(a, src, dst, sc, 1).cols() == 1);
  CHECK(rep_map_at_vertex(a, src, dst, sc, 3).cols() == 0); // source dies at 3
}
