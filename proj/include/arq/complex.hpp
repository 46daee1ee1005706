#ifndef ARQ_COMPLEX_HPP
#define ARQ_COMPLEX_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arq/algebra.hpp"
#include "arq/matrix.hpp"
#include "arq/rep.hpp"

namespace arq {

enum class Kind { Projective, Injective };

// One indecomposable summand label in a complex degree: P_v or I_v.
struct Summand {
  bool inj = false;
  int vertex = 0;

  bool operator==(const Summand& o) const { return inj == o.inj && vertex == o.vertex; }
  bool operator<(const Summand& o) const {
    return inj != o.inj ? !inj : vertex < o.vertex;
  }
};

std::string summand_str(const Summand& s);

// Bounded complex whose entries are direct sums of indecomposable projectives
// or injectives and whose differentials are rational matrices over the
// canonical maps. Mixed kinds are allowed internally (connecting maps and
// quasi-isomorphism checks need them); operations that require a pure kind
// say so.
class Complex {
public:
  AlgebraSpec alg;
  int lo = 0;                              // degree of terms[0]
  std::vector<std::vector<Summand>> terms; // empty vector = zero complex
  std::vector<Mat> diffs;                  // diffs[j] : terms[j] -> terms[j+1]

  int hi() const { return lo + int(terms.size()) - 1; }
  bool is_zero_complex() const { return terms.empty(); }

  const std::vector<Summand>& term(int deg) const;
  Mat diff(int deg) const; // zero matrix of the right shape outside support

  IntervalModule interval_of(const Summand& s) const {
    return s.inj ? alg.inj(s.vertex) : alg.proj(s.vertex);
  }
  std::vector<IntervalModule> intervals(int deg) const;

  // All-projective / all-injective; zero complex passes both.
  bool pure(Kind k) const;

  int summand_count() const;

  void trim();     // drop empty boundary degrees
  void validate() const; // hom support + d^2 = 0
  bool is_minimal() const;

  bool operator==(const Complex& o) const {
    return lo == o.lo && terms == o.terms && diffs == o.diffs;
  }
};

// Degreewise rational matrices over canonical maps; f^k : src^k -> dst^k.
struct ChainMap {
  Complex src, dst;
  int lo = 0;
  std::vector<Mat> mats;

  Mat mat(int deg) const;
  void set(int deg, Mat m);
  bool is_zero() const;
  void validate() const; // support + commutation with differentials
};

// Degreewise maps src^k -> dst^{k-1}.
struct Homotopy {
  Complex src, dst;
  int lo = 0;
  std::vector<Mat> mats;

  Mat mat(int deg) const;
  void set(int deg, Mat m);
};

// Matrix product over canonical maps: ordinary product, then entries where
// Hom(src,dst) = 0 vanish (the composite of canonical maps is the canonical
// map exactly when the hom space is non-zero).
Mat masked_mul(const AlgebraSpec& alg, const std::vector<IntervalModule>& src,
               const std::vector<IntervalModule>& mid, const std::vector<IntervalModule>& dst,
               const Mat& second, const Mat& first);

ChainMap compose(const ChainMap& first, const ChainMap& second); // second after first
ChainMap chain_add(const ChainMap& a, const ChainMap& b);
ChainMap chain_scale(const ChainMap& f, const Rat& s);
ChainMap identity_map(const Complex& x);
ChainMap zero_map(const Complex& src, const Complex& dst);
// d h + h d, a null-homotopic chain map.
ChainMap boundary_of(const Homotopy& h);

Complex build_complex(const AlgebraSpec& alg, int lo, std::vector<std::vector<Summand>> terms,
                      std::vector<Mat> diffs);
Complex zero_complex(const AlgebraSpec& alg);
Complex stalk_complex(const AlgebraSpec& alg, const Summand& s, int deg);

Complex shift(const Complex& x, int k); // X[k]^i = X^{i+k}, d scaled by (-1)^k
ChainMap shift_map(const ChainMap& f, int k);
Complex truncate_le(const Complex& x, int n);
Complex truncate_ge(const Complex& x, int n);
Complex direct_sum(const Complex& x, const Complex& y);

// cone(f)^k = src^{k+1} (+) dst^k, differential blocks (-d_src, 0; f, d_dst).
// `cone` insists on a common kind; `cone_mixed` is the internal form used for
// quasi-isomorphism checks across the P/I divide.
Complex cone(const ChainMap& f);
Complex cone_mixed(const ChainMap& f);
ChainMap cone_inclusion(const ChainMap& f);  // dst -> cone(f)
ChainMap cone_projection(const ChainMap& f); // cone(f) -> src[1]

Complex nu_complex(const Complex& x);     // P_i -> I_i entrywise, scalars kept
Complex nu_inv_complex(const Complex& x); // I_i -> P_i entrywise

// Per-degree homology as interval multisets, computed through the
// representation expansion.
std::map<int, std::vector<IntervalModule>> homology(const Complex& x);
bool same_homology(const Complex& x, const Complex& y);
bool acyclic(const Complex& x);

// Whether a chain map is a quasi-isomorphism: its cone is acyclic.
bool is_quasi_iso(const ChainMap& f);

// Alternating per-vertex dimension sums (Euler characteristic vector).
std::vector<long long> euler_vector(const Complex& x);

struct StripEvent {
  Summand label;
  int degree; // contractible occupies degrees (degree, degree+1)

  bool operator==(const StripEvent& o) const { return label == o.label && degree == o.degree; }
  bool operator<(const StripEvent& o) const {
    if (degree != o.degree) return degree < o.degree;
    return label < o.label;
  }
};

struct MinimizeResult {
  Complex min;
  std::vector<StripEvent> strips;
  ChainMap incl; // min -> x, a homotopy equivalence
  ChainMap proj; // x -> min, with proj o incl = id strictly
};

MinimizeResult minimize(const Complex& x);
Complex minimize_only(const Complex& x);

int l_p(const Complex& x); // summand count of the minimal representative

// Canonical form: summands sorted per degree, scalars normalized so the first
// non-zero entry of each outgoing differential column is 1 where possible.
Complex canonicalize(const Complex& x);
std::string descriptor(const Complex& x); // of the canonical form
Complex parse_descriptor(const AlgebraSpec& alg, const std::string& text);

} // namespace arq

#endif
