#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "canext/lalg/vec.hpp"
#include "canext/order/poset.hpp"
#include "canext/rational.hpp"

namespace canext {

/// Seeded generator with platform-independent draws. std::mt19937_64 is fully
/// specified; the distributions in <random> are not, so bounding is done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  /// p/q with |p| <= max_num and 1 <= q <= max_den.
  Rational rational(std::int64_t max_num, std::int64_t max_den) {
    std::int64_t p = between(-max_num, max_num);
    std::int64_t q = between(1, max_den);
    return Rational(p, q);
  }

 private:
  std::mt19937_64 engine_;
};

/// Random DAG on n vertices (edge i -> j for i < j with probability
/// num/den), closed reflexively and transitively.
inline order::FinPoset random_poset(std::size_t n, Rng& rng, std::uint64_t num = 1, std::uint64_t den = 3) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(num, den)) edges.emplace_back(i, j);
  return order::FinPoset::from_edges(std::move(labels), edges);
}

/// Vector with roughly a quarter of its coordinates zero and the rest p/q as in Rng::rational.
inline lalg::LVec random_lvec(Rng& rng, std::size_t n, std::int64_t max_num = 9, std::int64_t max_den = 4) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(rng.chance(1, 4) ? Rational(0) : rng.rational(max_num, max_den));
  return lalg::LVec(std::move(c));
}

}  // namespace canext
