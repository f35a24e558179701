#pragma once

// Nondegenerate nerve chains x_0 < x_1 < ... < x_k of (a subset of) a finite
// poset.  Enumeration order is deterministic: grouped by length, then
// lexicographic in element indices.  These index the (co)simplicial
// replacements that compute homotopy (co)limits.

#include <map>
#include <vector>

#include "strata/poset.hpp"

namespace strata {

struct ChainFamily {
  std::vector<std::vector<int>> chains;       // ascending in the poset order
  std::map<std::vector<int>, int> id_of;

  static ChainFamily enumerate(const FinPoset& p, const std::vector<int>& members);

  int size() const { return int(chains.size()); }
  int len(int id) const { return int(chains[id].size()) - 1; }
  int find(const std::vector<int>& chain) const {
    auto it = id_of.find(chain);
    return it == id_of.end() ? -1 : it->second;
  }
};

}  // namespace strata
