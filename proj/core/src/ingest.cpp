#include "strata/ingest.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "strata/nerve.hpp"

namespace strata {

StratSimplicialComplex StratSimplicialComplex::build(FinPoset strata,
                                                     std::vector<std::string> vertex_ids,
                                                     std::vector<int> vertex_stratum,
                                                     std::vector<std::vector<int>> simplices) {
  StratSimplicialComplex k;
  k.strata = std::move(strata);
  k.vertex_ids = std::move(vertex_ids);
  k.vertex_stratum = std::move(vertex_stratum);
  if (k.vertex_ids.size() != k.vertex_stratum.size())
    throw invalid_input("simplicial complex: vertex/stratum count mismatch");
  for (int s : k.vertex_stratum)
    if (s < 0 || s >= k.strata.size())
      throw invalid_input("simplicial complex: vertex stratum out of range");
  {
    std::set<std::string> seen(k.vertex_ids.begin(), k.vertex_ids.end());
    if (int(seen.size()) != int(k.vertex_ids.size()))
      throw invalid_input("simplicial complex: duplicate vertex id");
  }

  std::set<std::vector<int>> have;
  for (auto s : simplices) {
    if (s.empty()) throw invalid_input("simplicial complex: empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw invalid_input("simplicial complex: repeated vertex in simplex");
    for (int v : s)
      if (v < 0 || v >= int(k.vertex_ids.size()))
        throw invalid_input("simplicial complex: simplex names unknown vertex");
    have.insert(s);
  }
  // close under faces
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::vector<int>> add;
    for (const auto& s : have) {
      if (s.size() == 1) continue;
      for (size_t i = 0; i < s.size(); ++i) {
        std::vector<int> face = s;
        face.erase(face.begin() + i);
        if (!have.count(face) && !add.count(face)) add.insert(face);
      }
    }
    if (!add.empty()) {
      grew = true;
      have.insert(add.begin(), add.end());
    }
  }
  // deterministic order: by dimension, then lexicographic
  k.simplices.assign(have.begin(), have.end());
  std::sort(k.simplices.begin(), k.simplices.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return k;
}

int StratSimplicialComplex::vertex_index(const std::string& id) const {
  for (int i = 0; i < int(vertex_ids.size()); ++i)
    if (vertex_ids[i] == id) return i;
  throw invalid_input("unknown vertex id: " + id);
}

std::string StratSimplicialComplex::simplex_name(int s) const {
  std::string out = "{";
  for (size_t i = 0; i < simplices[s].size(); ++i) {
    if (i) out += ",";
    out += vertex_ids[simplices[s][i]];
  }
  return out + "}";
}

FacePosetModel face_poset(const StratSimplicialComplex& k) {
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < int(k.simplices.size()); ++i) index[k.simplices[i]] = i;

  std::vector<std::string> ids;
  for (int i = 0; i < int(k.simplices.size()); ++i) ids.push_back(k.simplex_name(i));

  std::vector<std::pair<std::string, std::string>> rel;
  for (int a = 0; a < int(k.simplices.size()); ++a)
    for (int b = 0; b < int(k.simplices.size()); ++b) {
      if (a == b) continue;
      if (std::includes(k.simplices[b].begin(), k.simplices[b].end(),
                        k.simplices[a].begin(), k.simplices[a].end()))
        rel.emplace_back(ids[a], ids[b]);
    }

  FinPoset shape(ids, rel);
  std::vector<int> strat_values;
  for (const auto& s : k.simplices) {
    // the labels of a simplex must have a maximum in P
    int best = k.vertex_stratum[s[0]];
    for (int v : s) {
      int lab = k.vertex_stratum[v];
      if (k.strata.leq(best, lab)) best = lab;
    }
    for (int v : s)
      if (!k.strata.leq(k.vertex_stratum[v], best))
        throw invalid_input("incompatible stratification: labels of simplex " +
                            k.simplex_name(index[s]) + " have no maximum");
    strat_values.push_back(best);
  }
  return {shape, MonotoneMap(shape, k.strata, std::move(strat_values))};
}

FiberDiagnostics stratum_fiber(const FacePosetModel& m, int p) {
  FiberDiagnostics out;
  out.fiber = preimage(m.strat, Subposet{{p}});
  ChainFamily fam = ChainFamily::enumerate(m.shape, out.fiber.members);
  for (const auto& ch : fam.chains)
    out.nerve_euler += (ch.size() % 2 == 1) ? 1 : -1;
  // connected components of the comparability graph
  int n = out.fiber.size();
  std::vector<int> root(n);
  for (int i = 0; i < n; ++i) root[i] = i;
  std::function<int(int)> find = [&](int x) {
    return root[x] == x ? x : root[x] = find(root[x]);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.shape.leq(out.fiber.members[i], out.fiber.members[j])) {
        int a = find(i), b = find(j);
        if (a != b) root[a] = b;
      }
  std::set<int> roots;
  for (int i = 0; i < n; ++i) roots.insert(find(i));
  out.components = int(roots.size());
  return out;
}

}  // namespace strata
