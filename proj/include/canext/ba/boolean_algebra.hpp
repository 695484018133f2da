#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "canext/error.hpp"

namespace canext::ba {

/// An element of a finite boolean algebra: the set of atoms below it.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxAtoms = 20;

/// Finite boolean algebra ℘(atoms). Elements are bit masks over the atom list.
class FinBoolAlg {
 public:
  explicit FinBoolAlg(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.size() > kMaxAtoms)
      throw ValidationError("boolean algebra capped at " + std::to_string(kMaxAtoms) + " atoms");
    std::unordered_set<std::string> seen;
    for (const auto& a : atoms_)
      if (!seen.insert(a).second) throw ValidationError("duplicate atom '" + a + "'");
  }

  static FinBoolAlg with_atoms(std::size_t n) {
    std::vector<std::string> names;
    static constexpr const char* kSmall[] = {"p", "q", "r", "s"};
    for (std::size_t i = 0; i < n; ++i) names.push_back(n <= 4 ? kSmall[i] : "a" + std::to_string(i + 1));
    return FinBoolAlg(std::move(names));
  }

  std::size_t atom_count() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  std::size_t size() const { return std::size_t{1} << atoms_.size(); }

  Mask zero() const { return 0; }
  Mask one() const { return atoms_.size() == 64 ? ~Mask{0} : (Mask{1} << atoms_.size()) - 1; }
  Mask bottom() const { return zero(); }
  Mask top() const { return one(); }
  Mask atom(std::size_t i) const { return Mask{1} << i; }
  Mask meet(Mask a, Mask b) const { return a & b; }
  Mask join(Mask a, Mask b) const { return a | b; }
  Mask complement(Mask a) const { return one() & ~a; }
  bool leq(Mask a, Mask b) const { return (a & ~b) == 0; }
  bool contains(Mask a) const { return (a & ~one()) == 0; }

  /// All elements in mask order 0, 1, ..., 2^n - 1.
  std::vector<Mask> elements() const {
    std::vector<Mask> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
  }

  std::optional<std::size_t> atom_index(const std::string& name) const {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (atoms_[i] == name) return i;
    return std::nullopt;
  }

  /// "{p,q}" style label; "0" for the bottom.
  std::string label(Mask a) const {
    if (a == 0) return "0";
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (a & atom(i)) {
        if (!first) out += ",";
        out += atoms_[i];
        first = false;
      }
    return out + "}";
  }

  friend bool operator==(const FinBoolAlg& a, const FinBoolAlg& b) { return a.atoms_ == b.atoms_; }

 private:
  std::vector<std::string> atoms_;
};

inline std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

}  // namespace canext::ba
