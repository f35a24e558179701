#pragma once

// Finite poset models from stratified simplicial complexes: the face poset
// ordered by face inclusion, stratified by the maximum vertex label.  This
// is the combinatorial stand-in for exit paths of a stratified space; the
// stratum of a simplex must be well defined (its vertex labels need a
// maximum), and complexes violating that are rejected rather than repaired.

#include <string>
#include <vector>

#include "strata/poset.hpp"

namespace strata {

struct StratSimplicialComplex {
  FinPoset strata;                       // the poset P of strata
  std::vector<std::string> vertex_ids;
  std::vector<int> vertex_stratum;       // index into strata, per vertex
  std::vector<std::vector<int>> simplices;  // sorted vertex index lists

  // Validates face closure, label membership and uniqueness.
  static StratSimplicialComplex build(FinPoset strata, std::vector<std::string> vertex_ids,
                                      std::vector<int> vertex_stratum,
                                      std::vector<std::vector<int>> simplices);

  int vertex_index(const std::string& id) const;
  std::string simplex_name(int s) const;  // "{v0,v1}" style, used as poset id
};

struct FacePosetModel {
  FinPoset shape;      // simplices ordered by face inclusion
  MonotoneMap strat;   // simplex -> max vertex label
};

// C = face poset, s(sigma) = max of vertex labels; throws invalid_input if
// some simplex has incomparable labels without a maximum.
FacePosetModel face_poset(const StratSimplicialComplex& k);

struct FiberDiagnostics {
  Subposet fiber;          // s^{-1}(p) in the face poset
  long long nerve_euler = 0;
  int components = 0;
};

FiberDiagnostics stratum_fiber(const FacePosetModel& m, int p);

}  // namespace strata
