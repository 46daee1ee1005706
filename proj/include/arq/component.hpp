#ifndef ARQ_COMPONENT_HPP
#define ARQ_COMPONENT_HPP

#include <optional>
#include <string>

#include "arq/ar.hpp"

namespace arq {

// Human name of a module: P/I aliases win over S (the worked example prints
// P_1 for the simple projective), then M-style names, then the interval.
std::string module_alias(const AlgebraSpec& alg, const IntervalModule& m);
std::optional<IntervalModule> module_by_alias(const AlgebraSpec& alg, const std::string& name);

// Human name of a complex: shifted module stalk, else nu/nu^{-1} of one,
// else the canonical descriptor.
std::string complex_alias(const AlgebraSpec& alg, const Complex& c);

struct ComponentVertex {
  Complex c;
  std::string desc;
  bool expanded = false;
  bool shift_only = false; // identified with a shift of an earlier vertex
};

// τ-orbit bookkeeping: vertices carry a potential (shift level relative to
// their graph component's root); each component of the τ/shift graph covers
// `period` distinct τ-orbits of the ambient component (0 = open).
struct OrbitData {
  std::vector<int> comp;      // per vertex
  std::vector<long long> pot; // per vertex
  std::vector<long long> period; // per graph component
  int orbit_count = 0;
  bool closed = false;
};

struct Component {
  AlgebraSpec alg;
  std::vector<ComponentVertex> vertices;
  std::vector<std::tuple<int, int, int>> arrows;      // from, to, multiplicity
  std::vector<std::pair<int, int>> tau_edges;         // (z, tau z)
  std::vector<std::tuple<int, int, int>> shift_edges; // (a, b, k): a ≅ b[k]
  std::vector<std::pair<int, StripEvent>> strip_events; // triangle endpoint, event
  bool budget_exceeded = false;
  bool closed = false;
  OrbitData orbits;

  int find_vertex(const Complex& c) const; // -1 when absent
  // τ-orbit id of c[level], when c occurs in the explored region
  std::optional<std::pair<int, long long>> row_of(const Complex& c, long long level) const;
};

Component build_component(const AlgebraSpec& alg, const Complex& start, int budget);

struct ComponentReport {
  int orbit_count = 0;
  std::string verdict; // "Z[A_m]", "Z[D_m]", "inconclusive"
  bool closed = false;
  bool budget_exceeded = false;
};

ComponentReport component_report(const Component& c);

std::string component_dot(const Component& c);
std::string component_json(const Component& c);

struct VerifyResult {
  bool pass = true;
  std::vector<std::string> lines;
  std::string first_fail;
};

VerifyResult verify_example_d4();
VerifyResult verify_zan(int n);
VerifyResult verify_zdn(int n);

} // namespace arq

#endif
