#pragma once

// JSON (de)serialization for every on-disk format: posets, complexes,
// diagrams, stratified simplicial complexes and check reports.  Rationals
// are always written as "num/den" strings; integers are accepted on input.
// Serialization is canonical (sorted keys, no floats) so fixed-seed runs
// are byte-identical.

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "strata/diagram.hpp"
#include "strata/ingest.hpp"
#include "strata/k0.hpp"
#include "strata/report.hpp"

namespace strata {

using nlohmann::json;

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw invalid_input("JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw invalid_input("cannot write file: " + path);
  out << text;
}

// --- posets -----------------------------------------------------------------

inline FinPoset poset_from_json(const json& j) {
  if (!j.contains("elements")) throw invalid_input("poset JSON: missing 'elements'");
  std::vector<std::string> ids;
  for (const auto& e : j.at("elements")) ids.push_back(e.get<std::string>());
  std::vector<std::pair<std::string, std::string>> rel;
  if (j.contains("leq"))
    for (const auto& r : j.at("leq")) {
      if (!r.is_array() || r.size() != 2) throw invalid_input("poset JSON: bad leq pair");
      rel.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
    }
  return FinPoset(std::move(ids), rel);
}

inline json poset_to_json(const FinPoset& p) {
  json j;
  j["elements"] = json::array();
  for (const auto& id : p.ids()) j["elements"].push_back(id);
  j["leq"] = json::array();
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.lt(a, b)) j["leq"].push_back({p.id(a), p.id(b)});
  return j;
}

// --- field scalars ----------------------------------------------------------

template <class K>
K scalar_from_json(const json& j) {
  if (j.is_number_integer()) return K((long long)j.template get<long long>());
  if (j.is_string()) return K::from_string(j.template get<std::string>());
  throw invalid_input("scalar JSON: expected integer or string");
}

inline json scalar_to_json(const Rat& x) { return x.str_canonical(); }
inline json scalar_to_json(const Fp& x) { return (long long)x.raw(); }

// --- matrices / complexes ----------------------------------------------------

template <class K>
Matrix<K> matrix_from_json(const json& j, int rows, int cols) {
  if (!j.is_array() || int(j.size()) != rows)
    throw invalid_input("matrix JSON: wrong row count");
  Matrix<K> m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || int(row.size()) != cols)
      throw invalid_input("matrix JSON: wrong column count");
    for (int c = 0; c < cols; ++c) m(i, c) = scalar_from_json<K>(row[c]);
  }
  return m;
}

template <class K>
json matrix_to_json(const Matrix<K>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class K>
ChainComplex<K> complex_from_json(const json& j) {
  int lo = j.value("lo", 0);
  std::vector<int> dims;
  for (const auto& d : j.at("dims")) dims.push_back(d.template get<int>());
  std::vector<Matrix<K>> diffs;
  const json& ds = j.contains("differentials") ? j.at("differentials") : json::array();
  for (int i = 0; i < int(dims.size()); ++i) {
    int rows = i > 0 ? dims[i - 1] : 0;
    if (i < int(ds.size()) && !ds[i].is_null())
      diffs.push_back(matrix_from_json<K>(ds[i], rows, dims[i]));
    else
      diffs.push_back(Matrix<K>(rows, dims[i]));
  }
  return ChainComplex<K>(lo, std::move(dims), std::move(diffs));
}

template <class K>
json complex_to_json(const ChainComplex<K>& x) {
  json j;
  j["lo"] = x.is_zero_complex() ? 0 : x.lo();
  j["dims"] = json::array();
  j["differentials"] = json::array();
  for (int n = x.lo(); n <= x.hi(); ++n) {
    j["dims"].push_back(x.dim(n));
    j["differentials"].push_back(matrix_to_json(x.d(n)));
  }
  return j;
}

// --- diagrams -----------------------------------------------------------------

// {"poset": {...}, "strat": {"poset": {...}, "values": {"c": "p", ...}},
//  "complexes": {"c": {...}}, "maps": [{"from","to","lo","components":[...]}]}
template <class K>
RawDiagram<K> raw_diagram_from_json(const json& j) {
  RawDiagram<K> raw;
  raw.shape = poset_from_json(j.at("poset"));
  if (j.contains("strat")) {
    FinPoset p = poset_from_json(j.at("strat").at("poset"));
    std::vector<int> vals(raw.shape.size(), 0);
    const auto& v = j.at("strat").at("values");
    for (int c = 0; c < raw.shape.size(); ++c) {
      if (!v.contains(raw.shape.id(c)))
        throw invalid_input("diagram JSON: strat misses element " + raw.shape.id(c));
      vals[c] = p.index_of(v.at(raw.shape.id(c)).template get<std::string>());
    }
    raw.strat = MonotoneMap(raw.shape, std::move(p), std::move(vals));
  } else {
    raw.strat = MonotoneMap::identity(raw.shape);
  }
  raw.values.assign(raw.shape.size(), ChainComplex<K>::zero());
  if (j.contains("complexes"))
    for (const auto& [id, cj] : j.at("complexes").items())
      raw.values[raw.shape.index_of(id)] = complex_from_json<K>(cj);
  if (j.contains("maps"))
    for (const auto& mj : j.at("maps")) {
      int x = raw.shape.index_of(mj.at("from").template get<std::string>());
      int y = raw.shape.index_of(mj.at("to").template get<std::string>());
      if (!raw.shape.lt(x, y))
        throw invalid_input("diagram JSON: map on unrelated pair " + raw.shape.id(x) +
                            " -> " + raw.shape.id(y));
      int lo = mj.value("lo", 0);
      std::vector<Matrix<K>> comps;
      const auto& cs = mj.at("components");
      for (int i = 0; i < int(cs.size()); ++i) {
        int n = lo + i;
        comps.push_back(
            matrix_from_json<K>(cs[i], raw.values[y].dim(n), raw.values[x].dim(n)));
      }
      raw.maps.emplace(std::make_pair(x, y),
                       ChainMap<K>(raw.values[x], raw.values[y], lo, std::move(comps)));
    }
  return raw;
}

template <class K>
StratDiagram<K> diagram_from_json(const json& j) {
  RawDiagram<K> raw = raw_diagram_from_json<K>(j);
  ValidationReport rep = validate_diagram(raw);
  if (!rep.ok()) throw invalid_input("invalid diagram: " + rep.first_message());
  return StratDiagram<K>(raw.shape, raw.strat, std::move(raw.values), std::move(raw.maps));
}

template <class K>
json diagram_to_json(const StratDiagram<K>& f) {
  json j;
  j["poset"] = poset_to_json(f.shape());
  json strat;
  strat["poset"] = poset_to_json(f.strat().target());
  json vals;
  for (int c = 0; c < f.shape().size(); ++c)
    vals[f.shape().id(c)] = f.strat().target().id(f.strat().apply(c));
  strat["values"] = std::move(vals);
  j["strat"] = std::move(strat);
  json cx;
  for (int c = 0; c < f.shape().size(); ++c)
    cx[f.shape().id(c)] = complex_to_json(f.value(c));
  j["complexes"] = std::move(cx);
  json maps = json::array();
  for (const auto& [key, m] : f.raw_maps()) {
    json mj;
    mj["from"] = f.shape().id(key.first);
    mj["to"] = f.shape().id(key.second);
    const ChainComplex<K>& src = f.value(key.first);
    int lo = src.is_zero_complex() ? 0 : src.lo();
    int hi = src.is_zero_complex() ? -1 : src.hi();
    mj["lo"] = lo;
    json comps = json::array();
    for (int n = lo; n <= hi; ++n) comps.push_back(matrix_to_json(m.comp(n)));
    mj["components"] = std::move(comps);
    maps.push_back(std::move(mj));
  }
  j["maps"] = std::move(maps);
  return j;
}

// --- stratified simplicial complexes ------------------------------------------

// {"strata_poset": {...}, "vertices": [{"id": ..., "stratum": ...}],
//  "simplices": [["v0","v1"], ...]}
inline StratSimplicialComplex simplicial_from_json(const json& j) {
  FinPoset strata = poset_from_json(j.at("strata_poset"));
  std::vector<std::string> vids;
  std::vector<int> vstrat;
  for (const auto& v : j.at("vertices")) {
    vids.push_back(v.at("id").get<std::string>());
    vstrat.push_back(strata.index_of(v.at("stratum").get<std::string>()));
  }
  std::vector<std::vector<int>> simplices;
  std::map<std::string, int> vidx;
  for (int i = 0; i < int(vids.size()); ++i) vidx[vids[i]] = i;
  for (const auto& s : j.at("simplices")) {
    std::vector<int> simp;
    for (const auto& v : s) {
      auto it = vidx.find(v.get<std::string>());
      if (it == vidx.end())
        throw invalid_input("simplicial JSON: unknown vertex " + v.get<std::string>());
      simp.push_back(it->second);
    }
    simplices.push_back(std::move(simp));
  }
  return StratSimplicialComplex::build(std::move(strata), std::move(vids),
                                       std::move(vstrat), std::move(simplices));
}

// --- reports -------------------------------------------------------------------

inline json triangle_report_to_json(const TriangleReport& r) {
  json j;
  j["name"] = r.name;
  j["pass"] = r.pass();
  j["entries"] = json::array();
  for (const auto& e : r.entries) {
    json je;
    je["element"] = e.element;
    je["pass"] = e.pass;
    json h;
    for (const auto& [deg, dim] : e.cone_homology)
      if (dim != 0) h[std::to_string(deg)] = dim;
    je["nonvanishing_cone_homology"] = std::move(h);
    j["entries"].push_back(std::move(je));
  }
  return j;
}

inline json k0_vector_to_json(const K0Vector& v) {
  json j;
  for (size_t i = 0; i < v.index.size(); ++i) j[v.index[i]] = v.entries[i];
  return j;
}

inline json split_report_to_json(const SplitReport& r) {
  json j;
  j["pass"] = r.pass();
  j["k0"] = {{"pass", r.k0_pass},
             {"class", k0_vector_to_json(r.total_class)},
             {"reassembled", k0_vector_to_json(r.reassembled)}};
  json pieces;
  for (size_t i = 0; i < r.strata.size(); ++i)
    pieces[r.strata[i]] = k0_vector_to_json(r.piece_classes[i]);
  j["stratum_classes"] = std::move(pieces);
  j["generator_matrix"] = r.generator_matrix;
  j["generator"] = {{"pass", r.generator_pass}, {"det", r.generator_det}};
  j["recursion"] = {{"depth", r.depth}, {"pass", r.depth_pass}};
  json t3s = json::array();
  for (const auto& t : r.per_step_t3) t3s.push_back(triangle_report_to_json(t));
  j["per_step_t3"] = std::move(t3s);
  return j;
}

}  // namespace strata
