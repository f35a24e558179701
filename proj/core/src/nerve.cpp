#include "strata/nerve.hpp"

#include <algorithm>

namespace strata {

namespace {

void extend(const FinPoset& p, const std::vector<int>& members, std::vector<int>& cur,
            std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  for (int m : members) {
    if (p.lt(cur.back(), m)) {
      cur.push_back(m);
      extend(p, members, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

ChainFamily ChainFamily::enumerate(const FinPoset& p, const std::vector<int>& members) {
  ChainFamily fam;
  std::vector<int> ms = members;
  std::sort(ms.begin(), ms.end());
  for (int m : ms) {
    std::vector<int> cur{m};
    extend(p, ms, cur, fam.chains);
  }
  std::sort(fam.chains.begin(), fam.chains.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (int i = 0; i < int(fam.chains.size()); ++i) fam.id_of[fam.chains[i]] = i;
  return fam;
}

}  // namespace strata
