#pragma once

// Finite posets, monotone maps and open/closed subposets: the ambient
// combinatorics for stratification posets P and exit-path shapes C.
//
// The full <= relation is stored (not just covers) so subposet and comma
// queries are O(1) per pair; covers are derived on demand.  Element ids are
// strings; dense indices are assigned by input order, so every derived basis
// downstream is reproducible.

#include <map>
#include <string>
#include <vector>

#include "strata/field.hpp"

namespace strata {

class FinPoset {
 public:
  FinPoset() = default;

  // `relations` lists pairs (a, b) meaning a <= b; the reflexive-transitive
  // closure is computed here and antisymmetry violations are rejected.
  FinPoset(std::vector<std::string> ids,
           const std::vector<std::pair<std::string, std::string>>& relations);

  int size() const { return int(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int i) const { return ids_.at(i); }
  int index_of(const std::string& id) const;
  bool contains(const std::string& id) const { return index_.count(id) != 0; }

  bool leq(int a, int b) const { return leq_[a][b]; }
  bool lt(int a, int b) const { return a != b && leq_[a][b]; }

  // Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;

  // Indices in an order compatible with <= (stable: by input order among
  // incomparables).
  std::vector<int> linear_extension() const;

  friend bool operator==(const FinPoset& a, const FinPoset& b) {
    return a.ids_ == b.ids_ && a.leq_ == b.leq_;
  }

 private:
  std::vector<std::string> ids_;
  std::map<std::string, int> index_;
  std::vector<std::vector<bool>> leq_;
};

// A subset of a parent poset's elements, kept as sorted parent indices.
struct Subposet {
  std::vector<int> members;

  static Subposet of_ids(const FinPoset& parent, const std::vector<std::string>& ids);
  static Subposet all(const FinPoset& parent);
  static Subposet none() { return Subposet{}; }

  bool contains(int idx) const;
  int size() const { return int(members.size()); }
  bool empty() const { return members.empty(); }

  Subposet complement(const FinPoset& parent) const;

  friend bool operator==(const Subposet& a, const Subposet& b) {
    return a.members == b.members;
  }
};

class MonotoneMap {
 public:
  MonotoneMap() = default;
  // values[i] = target index of source element i; order preservation checked.
  MonotoneMap(FinPoset source, FinPoset target, std::vector<int> values);

  static MonotoneMap identity(const FinPoset& p);
  // Inclusion of the induced subposet on S into `parent`.
  static MonotoneMap inclusion(const FinPoset& parent, const Subposet& s);

  const FinPoset& source() const { return source_; }
  const FinPoset& target() const { return target_; }
  int apply(int i) const { return values_.at(i); }
  const std::vector<int>& values() const { return values_; }

 private:
  FinPoset source_, target_;
  std::vector<int> values_;
};

// closed = downward-closed; open = upward-closed.
bool is_closed(const FinPoset& p, const Subposet& s);
bool is_open(const FinPoset& p, const Subposet& s);

// All elements with nothing strictly below; always a closed subposet.
Subposet minimal_elements(const FinPoset& p);

// Length (strict steps) of the longest chain; -1 for the empty poset.
int krull_dim(const FinPoset& p);

// comma_down(f, d) = {c in source : f(c) <= d};  comma_up dually.
Subposet comma_down(const MonotoneMap& f, int d);
Subposet comma_up(const MonotoneMap& f, int d);

// Full subposet on S, elements in parent input order.
FinPoset induced_poset(const FinPoset& parent, const Subposet& s);

// Restriction of f to the induced poset on S (target unchanged).
MonotoneMap restrict_map(const MonotoneMap& f, const Subposet& s);

// Preimage subposet f^{-1}(T).
Subposet preimage(const MonotoneMap& f, const Subposet& t);

// Restrict the target to the induced subposet on T; the image of f must lie
// inside T.
MonotoneMap corestrict(const MonotoneMap& f, const Subposet& t);

}  // namespace strata
