#include "arq/algebra.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace arq {

namespace {

bool contains(std::pair<int, int> outer, std::pair<int, int> inner) {
  return outer.first <= inner.first && inner.second <= outer.second;
}

} // namespace

bool AlgebraSpec::valid_module(const IntervalModule& m) const {
  if (m.is_zero()) return false;
  if (m.lo < 1 || m.hi > n_) return false;
  for (auto& r : relations_)
    if (m.lo <= r.first && r.second <= m.hi) return false;
  return true;
}

void AlgebraSpec::require_valid(const IntervalModule& m) const {
  if (!valid_module(m))
    fail(Err::InvalidModule, "interval [" + std::to_string(m.lo) + "," + std::to_string(m.hi) +
                                 "] is not a module of this algebra");
}

AlgebraSpec algebra_new(int n, std::vector<std::pair<int, int>> relations) {
  if (n < 1) fail(Err::IndexOutOfRange, "vertex count must be >= 1");
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
  for (auto& r : relations) {
    if (r.first < 1 || r.second > n || r.first > r.second)
      fail(Err::RelationOutOfRange, "relation [" + std::to_string(r.first) + "," +
                                        std::to_string(r.second) + "] out of range");
    if (r.second - r.first < 2)
      fail(Err::RelationTooShort, "relation [" + std::to_string(r.first) + "," +
                                      std::to_string(r.second) + "] has path length < 2");
  }
  for (size_t i = 0; i < relations.size(); ++i)
    for (size_t j = 0; j < relations.size(); ++j)
      if (i != j && contains(relations[i], relations[j]))
        fail(Err::RedundantRelation, "relation [" + std::to_string(relations[j].first) + "," +
                                         std::to_string(relations[j].second) +
                                         "] is contained in another generator");

  AlgebraSpec a;
  a.n_ = n;
  a.relations_ = relations;
  a.proj_len_.resize(n);
  a.inj_len_.resize(n);
  // Loewy lengths: largest relation-free interval ending (resp. starting) at i.
  for (int i = 1; i <= n; ++i) {
    int c = 0;
    for (int t = 1; t <= i; ++t) {
      bool ok = true;
      for (auto& r : relations)
        if (i - t + 1 <= r.first && r.second <= i) ok = false;
      if (ok) c = t;
      else break;
    }
    a.proj_len_[i - 1] = c;
    int rlen = 0;
    for (int t = 1; t <= n - i + 1; ++t) {
      bool ok = true;
      for (auto& r : relations)
        if (i <= r.first && r.second <= i + t - 1) ok = false;
      if (ok) rlen = t;
      else break;
    }
    a.inj_len_[i - 1] = rlen;
  }
  return a;
}

AlgebraSpec preset_a4gamma() {
  AlgebraSpec a = algebra_new(4, {{1, 4}});
  a.set_name("a4gamma");
  return a;
}

AlgebraSpec preset_radsquare(int n) {
  if (n < 3) fail(Err::IndexOutOfRange, "radsquare needs n >= 3");
  std::vector<std::pair<int, int>> rels;
  for (int i = 1; i + 2 <= n; ++i) rels.push_back({i, i + 2});
  AlgebraSpec a = algebra_new(n, rels);
  a.set_name("radsquare:" + std::to_string(n));
  return a;
}

AlgebraSpec preset_longrel(int n) {
  if (n < 3) fail(Err::IndexOutOfRange, "longrel needs n >= 3");
  AlgebraSpec a = algebra_new(n, {{1, n}});
  a.set_name("longrel:" + std::to_string(n));
  return a;
}

AlgebraSpec preset_hereditary(int n) {
  AlgebraSpec a = algebra_new(n, {});
  a.set_name("hereditary:" + std::to_string(n));
  return a;
}

std::optional<AlgebraSpec> preset_by_name(const std::string& name) {
  if (name == "a4gamma") return preset_a4gamma();
  auto parse_n = [&](const std::string& prefix) -> int {
    if (name.rfind(prefix, 0) != 0) return -1;
    try {
      size_t pos = 0;
      int n = std::stoi(name.substr(prefix.size()), &pos);
      if (pos != name.size() - prefix.size()) return -1;
      return n;
    } catch (...) {
      return -1;
    }
  };
  if (int n = parse_n("radsquare:"); n > 0) return preset_radsquare(n);
  if (int n = parse_n("longrel:"); n > 0) return preset_longrel(n);
  if (int n = parse_n("hereditary:"); n > 0) return preset_hereditary(n);
  return std::nullopt;
}

AlgebraSpec algebra_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Err::ParseError, std::string("algebra file: ") + e.what());
  }
  if (!j.is_object()) fail(Err::ParseError, "algebra file: expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "n" && it.key() != "relations")
      fail(Err::ParseError, "algebra file: unknown field '" + it.key() + "'");
  if (!j.contains("n") || !j["n"].is_number_integer())
    fail(Err::ParseError, "algebra file: missing integer field 'n'");
  std::vector<std::pair<int, int>> rels;
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) fail(Err::ParseError, "algebra file: 'relations' must be an array");
    for (auto& r : j["relations"]) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
        fail(Err::ParseError, "algebra file: each relation must be [u, v]");
      rels.push_back({r[0].get<int>(), r[1].get<int>()});
    }
  }
  return algebra_new(j["n"].get<int>(), rels);
}

std::string algebra_to_json(const AlgebraSpec& alg) {
  nlohmann::json j;
  j["n"] = alg.n();
  j["relations"] = nlohmann::json::array();
  for (auto& r : alg.relations()) j["relations"].push_back({r.first, r.second});
  return j.dump();
}

int hom_dim(const AlgebraSpec& alg, const IntervalModule& m, const IntervalModule& n) {
  if (m.is_zero() || n.is_zero()) return 0;
  alg.require_valid(m);
  alg.require_valid(n);
  return (m.lo <= n.lo && n.lo <= m.hi && m.hi <= n.hi) ? 1 : 0;
}

CanonicalMap compose_scalar(const AlgebraSpec& alg, const CanonicalMap& f, const CanonicalMap& g) {
  if (f.dst != g.src) fail(Err::NonComposable, "compose_scalar: f.dst != g.src");
  Rat s = f.scalar * g.scalar * hom_dim(alg, f.src, g.dst);
  return CanonicalMap{f.src, g.dst, s};
}

IntervalModule interval_module(const AlgebraSpec& alg, ModKind kind, int i, int t) {
  if (i < 1 || i > alg.n()) fail(Err::IndexOutOfRange, "vertex index out of range");
  switch (kind) {
    case ModKind::P: return alg.proj(i);
    case ModKind::I: return alg.inj(i);
    case ModKind::S: return alg.simple(i);
    case ModKind::Quotient:
      if (t < 1 || t > alg.proj_len(i)) fail(Err::QuotientTooLong, "quotient length out of range");
      return IntervalModule::make(i - t + 1, i);
  }
  fail(Err::Internal, "unreachable");
}

ModuleParts module_parts(const AlgebraSpec& alg, const IntervalModule& m) {
  if (m.is_zero()) fail(Err::ZeroModule, "module_parts of the zero module");
  alg.require_valid(m);
  ModuleParts p;
  p.radical = (m.lo <= m.hi - 1) ? IntervalModule::make(m.lo, m.hi - 1) : IntervalModule::zero();
  p.socle = IntervalModule::make(m.lo, m.lo);
  p.top = IntervalModule::make(m.hi, m.hi);
  return p;
}

} // namespace arq
