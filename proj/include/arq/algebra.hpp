#ifndef ARQ_ALGEBRA_HPP
#define ARQ_ALGEBRA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arq/errors.hpp"
#include "arq/rational.hpp"

namespace arq {

// Indecomposable module over kA_n/I as a support interval [lo,hi],
// socle at lo, top at hi. The zero module is a distinguished value.
struct IntervalModule {
  int lo = 0;
  int hi = 0;

  static IntervalModule zero() { return IntervalModule{0, 0}; }
  static IntervalModule make(int lo, int hi) {
    engine_check(1 <= lo && lo <= hi, "bad interval");
    return IntervalModule{lo, hi};
  }

  bool is_zero() const { return lo == 0; }
  int length() const { return is_zero() ? 0 : hi - lo + 1; }

  bool operator==(const IntervalModule& o) const { return lo == o.lo && hi == o.hi; }
  bool operator!=(const IntervalModule& o) const { return !(*this == o); }
  bool operator<(const IntervalModule& o) const {
    return lo != o.lo ? lo < o.lo : hi < o.hi;
  }
};

// Linear Nakayama algebra kA_n/I with quiver 1 -> 2 -> ... -> n and
// relations given as zero-path intervals [u,v], v-u >= 2.
class AlgebraSpec {
public:
  AlgebraSpec() = default;

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& relations() const { return relations_; }
  // Loewy lengths c_i of P_i and r_i of I_i, 1-based access.
  int proj_len(int i) const { return proj_len_.at(i - 1); }
  int inj_len(int i) const { return inj_len_.at(i - 1); }

  IntervalModule proj(int i) const { return IntervalModule::make(i - proj_len(i) + 1, i); }
  IntervalModule inj(int i) const { return IntervalModule::make(i, i + inj_len(i) - 1); }
  IntervalModule simple(int i) const { return IntervalModule::make(i, i); }

  bool valid_module(const IntervalModule& m) const;
  void require_valid(const IntervalModule& m) const;

  bool operator==(const AlgebraSpec& o) const {
    return n_ == o.n_ && relations_ == o.relations_;
  }

  std::string name() const { return name_; }
  void set_name(const std::string& s) { name_ = s; }

  friend AlgebraSpec algebra_new(int n, std::vector<std::pair<int, int>> relations);

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> relations_;
  std::vector<int> proj_len_, inj_len_;
  std::string name_;
};

AlgebraSpec algebra_new(int n, std::vector<std::pair<int, int>> relations);

// Presets used by the CLI and the theorem suites.
AlgebraSpec preset_a4gamma();               // A_4, relation [1,4]
AlgebraSpec preset_radsquare(int n);        // all paths of length 2 are zero
AlgebraSpec preset_longrel(int n);          // single relation [1,n]
AlgebraSpec preset_hereditary(int n);       // kA_n
std::optional<AlgebraSpec> preset_by_name(const std::string& name);

AlgebraSpec algebra_from_json(const std::string& text);
std::string algebra_to_json(const AlgebraSpec& alg);

// A basis map between indecomposables: `scalar` times the canonical map.
struct CanonicalMap {
  IntervalModule src;
  IntervalModule dst;
  Rat scalar;
};

// 1 iff Hom(src,dst) is one-dimensional: src.lo <= dst.lo <= src.hi <= dst.hi.
int hom_dim(const AlgebraSpec& alg, const IntervalModule& m, const IntervalModule& n);

CanonicalMap compose_scalar(const AlgebraSpec& alg, const CanonicalMap& f, const CanonicalMap& g);

enum class ModKind { P, I, S, Quotient };

IntervalModule interval_module(const AlgebraSpec& alg, ModKind kind, int i, int t = 0);

struct ModuleParts {
  IntervalModule radical;
  IntervalModule socle;
  IntervalModule top;
};

ModuleParts module_parts(const AlgebraSpec& alg, const IntervalModule& m);

} // namespace arq

#endif
