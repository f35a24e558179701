#include "strata/poset.hpp"

#include <algorithm>

namespace strata {

FinPoset::FinPoset(std::vector<std::string> ids,
                   const std::vector<std::pair<std::string, std::string>>& relations)
    : ids_(std::move(ids)) {
  for (int i = 0; i < int(ids_.size()); ++i) {
    if (!index_.emplace(ids_[i], i).second)
      throw invalid_input("duplicate poset element id: " + ids_[i]);
  }
  int n = size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq_[i][i] = true;
  for (const auto& [a, b] : relations) {
    auto ia = index_.find(a), ib = index_.find(b);
    if (ia == index_.end()) throw invalid_input("relation names unknown element: " + a);
    if (ib == index_.end()) throw invalid_input("relation names unknown element: " + b);
    leq_[ia->second][ib->second] = true;
  }
  // Floyd-Warshall style transitive closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!leq_[i][k]) continue;
      for (int j = 0; j < n; ++j)
        if (leq_[k][j]) leq_[i][j] = true;
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq_[i][j] && leq_[j][i])
        throw invalid_input("antisymmetry violated between '" + ids_[i] + "' and '" +
                            ids_[j] + "'");
}

int FinPoset::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw invalid_input("unknown poset element: " + id);
  return it->second;
}

std::vector<std::pair<int, int>> FinPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!lt(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c)
        if (lt(a, c) && lt(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

std::vector<int> FinPoset::linear_extension() const {
  int n = size();
  std::vector<int> out;
  std::vector<bool> placed(n, false);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i = 0; i < n && pick < 0; ++i) {
      if (placed[i]) continue;
      bool minimal = true;
      for (int j = 0; j < n; ++j)
        if (!placed[j] && lt(j, i)) {
          minimal = false;
          break;
        }
      if (minimal) pick = i;
    }
    placed[pick] = true;
    out.push_back(pick);
  }
  return out;
}

Subposet Subposet::of_ids(const FinPoset& parent, const std::vector<std::string>& ids) {
  Subposet s;
  for (const auto& id : ids) s.members.push_back(parent.index_of(id));
  std::sort(s.members.begin(), s.members.end());
  auto dup = std::adjacent_find(s.members.begin(), s.members.end());
  if (dup != s.members.end())
    throw invalid_input("duplicate member in subposet: " + parent.id(*dup));
  return s;
}

Subposet Subposet::all(const FinPoset& parent) {
  Subposet s;
  for (int i = 0; i < parent.size(); ++i) s.members.push_back(i);
  return s;
}

bool Subposet::contains(int idx) const {
  return std::binary_search(members.begin(), members.end(), idx);
}

Subposet Subposet::complement(const FinPoset& parent) const {
  Subposet s;
  for (int i = 0; i < parent.size(); ++i)
    if (!contains(i)) s.members.push_back(i);
  return s;
}

MonotoneMap::MonotoneMap(FinPoset source, FinPoset target, std::vector<int> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
  if (int(values_.size()) != source_.size())
    throw invalid_input("monotone map value count mismatch");
  for (int v : values_)
    if (v < 0 || v >= target_.size()) throw invalid_input("monotone map value out of range");
  for (int a = 0; a < source_.size(); ++a)
    for (int b = 0; b < source_.size(); ++b)
      if (source_.leq(a, b) && !target_.leq(values_[a], values_[b]))
        throw invalid_input("map is not order-preserving at '" + source_.id(a) + "' <= '" +
                            source_.id(b) + "'");
}

MonotoneMap MonotoneMap::identity(const FinPoset& p) {
  std::vector<int> v(p.size());
  for (int i = 0; i < p.size(); ++i) v[i] = i;
  return MonotoneMap(p, p, std::move(v));
}

MonotoneMap MonotoneMap::inclusion(const FinPoset& parent, const Subposet& s) {
  return MonotoneMap(induced_poset(parent, s), parent, s.members);
}

bool is_closed(const FinPoset& p, const Subposet& s) {
  for (int m : s.members) {
    if (m < 0 || m >= p.size()) throw invalid_input("subposet member outside parent");
    for (int q = 0; q < p.size(); ++q)
      if (p.leq(q, m) && !s.contains(q)) return false;
  }
  return true;
}

bool is_open(const FinPoset& p, const Subposet& s) {
  for (int m : s.members) {
    if (m < 0 || m >= p.size()) throw invalid_input("subposet member outside parent");
    for (int q = 0; q < p.size(); ++q)
      if (p.leq(m, q) && !s.contains(q)) return false;
  }
  return true;
}

Subposet minimal_elements(const FinPoset& p) {
  Subposet s;
  for (int i = 0; i < p.size(); ++i) {
    bool minimal = true;
    for (int j = 0; j < p.size(); ++j)
      if (p.lt(j, i)) {
        minimal = false;
        break;
      }
    if (minimal) s.members.push_back(i);
  }
  return s;
}

int krull_dim(const FinPoset& p) {
  if (p.empty()) return -1;
  int n = p.size();
  // longest strict chain ending at i, by DP over a linear extension
  std::vector<int> depth(n, 0);
  int best = 0;
  for (int i : p.linear_extension()) {
    for (int j = 0; j < n; ++j)
      if (p.lt(j, i)) depth[i] = std::max(depth[i], depth[j] + 1);
    best = std::max(best, depth[i]);
  }
  return best;
}

Subposet comma_down(const MonotoneMap& f, int d) {
  if (d < 0 || d >= f.target().size()) throw invalid_input("comma_down: element not in target");
  Subposet s;
  for (int c = 0; c < f.source().size(); ++c)
    if (f.target().leq(f.apply(c), d)) s.members.push_back(c);
  return s;
}

Subposet comma_up(const MonotoneMap& f, int d) {
  if (d < 0 || d >= f.target().size()) throw invalid_input("comma_up: element not in target");
  Subposet s;
  for (int c = 0; c < f.source().size(); ++c)
    if (f.target().leq(d, f.apply(c))) s.members.push_back(c);
  return s;
}

FinPoset induced_poset(const FinPoset& parent, const Subposet& s) {
  std::vector<std::string> ids;
  for (int m : s.members) {
    if (m < 0 || m >= parent.size()) throw invalid_input("subposet member outside parent");
    ids.push_back(parent.id(m));
  }
  std::vector<std::pair<std::string, std::string>> rel;
  for (int a : s.members)
    for (int b : s.members)
      if (parent.leq(a, b)) rel.emplace_back(parent.id(a), parent.id(b));
  return FinPoset(std::move(ids), rel);
}

MonotoneMap restrict_map(const MonotoneMap& f, const Subposet& s) {
  FinPoset sub = induced_poset(f.source(), s);
  std::vector<int> vals;
  for (int m : s.members) vals.push_back(f.apply(m));
  return MonotoneMap(sub, f.target(), std::move(vals));
}

Subposet preimage(const MonotoneMap& f, const Subposet& t) {
  Subposet s;
  for (int c = 0; c < f.source().size(); ++c)
    if (t.contains(f.apply(c))) s.members.push_back(c);
  return s;
}

MonotoneMap corestrict(const MonotoneMap& f, const Subposet& t) {
  FinPoset sub = induced_poset(f.target(), t);
  std::vector<int> vals;
  for (int c = 0; c < f.source().size(); ++c) {
    int v = f.apply(c);
    auto it = std::lower_bound(t.members.begin(), t.members.end(), v);
    if (it == t.members.end() || *it != v)
      throw invalid_input("corestrict: image leaves the subposet at '" +
                          f.source().id(c) + "'");
    vals.push_back(int(it - t.members.begin()));
  }
  return MonotoneMap(f.source(), sub, std::move(vals));
}

}  // namespace strata
