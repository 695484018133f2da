#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "canext/error.hpp"

namespace canext::order {

/// A subset of a finite poset, one bit per element index.
using ElementSet = boost::dynamic_bitset<>;

inline bool is_subset(const ElementSet& a, const ElementSet& b) { return a.is_subset_of(b); }

inline std::vector<std::size_t> members_of(const ElementSet& s) {
  std::vector<std::size_t> out;
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

/// Finite partial order over labelled elements. Stores the full relation as
/// principal up- and down-sets; validated once at construction.
class FinPoset {
 public:
  FinPoset() = default;

  /// Builds from labels and a relation predicate leq(i, j). The predicate must
  /// already be reflexive, antisymmetric and transitive.
  static FinPoset from_predicate(std::vector<std::string> labels,
                                 const std::function<bool(std::size_t, std::size_t)>& leq) {
    FinPoset p;
    p.labels_ = std::move(labels);
    const std::size_t n = p.labels_.size();
    p.up_.assign(n, ElementSet(n));
    p.down_.assign(n, ElementSet(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq(i, j)) {
          p.up_[i].set(j);
          p.down_[j].set(i);
        }
    p.validate();
    return p;
  }

  /// Builds from labels and the relation listed as (lower, upper) label pairs.
  /// The list must be the full reflexive-transitive relation.
  static FinPoset from_relation(std::vector<std::string> labels,
                                const std::vector<std::pair<std::string, std::string>>& le) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
    const std::size_t n = labels.size();
    std::vector<ElementSet> up(n, ElementSet(n));
    for (const auto& [a, b] : le) {
      auto ia = index.find(a);
      auto ib = index.find(b);
      if (ia == index.end() || ib == index.end())
        throw ValidationError("relation mentions unknown element '" + (ia == index.end() ? a : b) + "'");
      up[ia->second].set(ib->second);
    }
    return from_predicate(std::move(labels), [&](std::size_t i, std::size_t j) { return up[i].test(j); });
  }

  /// Reflexive-transitive closure of a set of covering/generating edges (i below j).
  static FinPoset from_edges(std::vector<std::string> labels,
                             const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    const std::size_t n = labels.size();
    std::vector<ElementSet> up(n, ElementSet(n));
    for (std::size_t i = 0; i < n; ++i) up[i].set(i);
    for (const auto& [a, b] : edges) {
      if (a >= n || b >= n) throw ValidationError("edge endpoint out of range");
      up[a].set(b);
    }
    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (up[i].test(k)) up[i] |= up[k];
    return from_predicate(std::move(labels), [&](std::size_t i, std::size_t j) { return up[i].test(j); });
  }

  static FinPoset chain(std::size_t n, const std::string& prefix = "c") {
    return from_predicate(numbered(n, prefix), [](std::size_t i, std::size_t j) { return i <= j; });
  }

  static FinPoset antichain(std::size_t n, const std::string& prefix = "a") {
    return from_predicate(numbered(n, prefix), [](std::size_t i, std::size_t j) { return i == j; });
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  bool leq(std::size_t i, std::size_t j) const { return up_.at(i).test(j); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

  /// ↑x and ↓x.
  const ElementSet& up(std::size_t i) const { return up_.at(i); }
  const ElementSet& down(std::size_t i) const { return down_.at(i); }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet(size()).set(); }

  /// Subset from explicit indices; out-of-range indices are rejected.
  ElementSet subset(std::initializer_list<std::size_t> indices) const {
    return subset(std::vector<std::size_t>(indices));
  }
  ElementSet subset(const std::vector<std::size_t>& indices) const {
    ElementSet s(size());
    for (auto i : indices) {
      if (i >= size()) throw ValidationError("element index " + std::to_string(i) + " out of range");
      s.set(i);
    }
    return s;
  }

  void require_same_size(const ElementSet& s) const {
    if (s.size() != size())
      throw ValidationError("subset has " + std::to_string(s.size()) + " bits, poset has " +
                            std::to_string(size()) + " elements");
  }

  /// ↑S
  ElementSet up_closure(const ElementSet& s) const {
    require_same_size(s);
    ElementSet out(size());
    for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out |= up_[i];
    return out;
  }

  /// ↓S
  ElementSet down_closure(const ElementSet& s) const {
    require_same_size(s);
    ElementSet out(size());
    for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out |= down_[i];
    return out;
  }

  bool is_upset(const ElementSet& s) const { return up_closure(s) == s; }
  bool is_downset(const ElementSet& s) const { return down_closure(s) == s; }

  ElementSet maximal() const {
    ElementSet out(size());
    for (std::size_t i = 0; i < size(); ++i)
      if (up_[i].count() == 1) out.set(i);
    return out;
  }

  ElementSet minimal() const {
    ElementSet out(size());
    for (std::size_t i = 0; i < size(); ++i)
      if (down_[i].count() == 1) out.set(i);
    return out;
  }

  std::optional<std::size_t> bottom() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (up_[i].count() == size()) return i;
    return std::nullopt;
  }

  std::optional<std::size_t> top() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (down_[i].count() == size()) return i;
    return std::nullopt;
  }

  /// Covering pairs (i, j): i < j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) {
        if (!less(i, j)) continue;
        ElementSet between = up_[i] & down_[j];
        if (between.count() == 2) out.emplace_back(i, j);
      }
    return out;
  }

  /// Greatest lower bound of i and j, if one exists.
  std::optional<std::size_t> meet(std::size_t i, std::size_t j) const {
    ElementSet lower = down_[i] & down_[j];
    for (auto k = lower.find_first(); k != ElementSet::npos; k = lower.find_next(k))
      if (lower.is_subset_of(down_[k])) return k;
    return std::nullopt;
  }

  std::optional<std::size_t> join(std::size_t i, std::size_t j) const {
    ElementSet upper = up_[i] & up_[j];
    for (auto k = upper.find_first(); k != ElementSet::npos; k = upper.find_next(k))
      if (upper.is_subset_of(up_[k])) return k;
    return std::nullopt;
  }

  /// The sub-poset on `keep`, with the induced order. Returns the map
  /// new index -> old index alongside.
  std::pair<FinPoset, std::vector<std::size_t>> restrict_to(const ElementSet& keep) const {
    require_same_size(keep);
    std::vector<std::size_t> old = members_of(keep);
    std::vector<std::string> labels;
    labels.reserve(old.size());
    for (auto i : old) labels.push_back(labels_[i]);
    FinPoset sub = from_predicate(std::move(labels),
                                  [&](std::size_t a, std::size_t b) { return leq(old[a], old[b]); });
    return {std::move(sub), std::move(old)};
  }

  /// The same carrier with the order reversed.
  FinPoset dual() const {
    return from_predicate(labels_, [&](std::size_t a, std::size_t b) { return leq(b, a); });
  }

  friend bool operator==(const FinPoset& a, const FinPoset& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  static std::vector<std::string> numbered(std::size_t n, const std::string& prefix) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
  }

  void validate() const {
    const std::size_t n = size();
    if (n == 0) throw ValidationError("the empty poset is not allowed");
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i)
      if (!seen.emplace(labels_[i], i).second)
        throw ValidationError("duplicate element label '" + labels_[i] + "'");
    for (std::size_t i = 0; i < n; ++i) {
      if (!up_[i].test(i)) throw ValidationError("relation not reflexive at '" + labels_[i] + "'");
      for (auto j = up_[i].find_first(); j != ElementSet::npos; j = up_[i].find_next(j)) {
        if (j != i && up_[j].test(i))
          throw ValidationError("relation not antisymmetric: '" + labels_[i] + "' and '" + labels_[j] + "'");
        if (!up_[j].is_subset_of(up_[i]))
          throw ValidationError("relation not transitive through '" + labels_[j] + "'");
      }
    }
  }

  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

/// Every downset of P, by brute force over all subsets. Test and oracle use only.
inline std::vector<ElementSet> all_downsets(const FinPoset& p, std::size_t cap = 20) {
  if (p.size() > cap) throw CapExceeded("downset enumeration capped at " + std::to_string(cap) + " elements");
  std::vector<ElementSet> out;
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    ElementSet s(p.size(), mask);
    if (p.is_downset(s)) out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<ElementSet> all_upsets(const FinPoset& p, std::size_t cap = 20) {
  if (p.size() > cap) throw CapExceeded("upset enumeration capped at " + std::to_string(cap) + " elements");
  std::vector<ElementSet> out;
  const std::uint64_t total = std::uint64_t{1} << p.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    ElementSet s(p.size(), mask);
    if (p.is_upset(s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace canext::order
