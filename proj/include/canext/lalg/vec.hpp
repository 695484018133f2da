#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "canext/error.hpp"
#include "canext/rational.hpp"

namespace canext::lalg {

/// Subset of coordinates {0, ..., n-1}, one bit each. Displayed 1-based.
using CoordMask = std::uint64_t;

inline constexpr std::size_t kMaxDim = 20;

/// An element of A = ℚⁿ. All operations are coordinatewise and exact.
class LVec {
 public:
  explicit LVec(std::vector<Rational> coords) : c_(std::move(coords)) {
    if (c_.empty()) throw ValidationError("dimension must be positive");
    if (c_.size() > kMaxDim) throw ValidationError("dimension capped at " + std::to_string(kMaxDim));
  }
  LVec(std::initializer_list<Rational> coords) : LVec(std::vector<Rational>(coords)) {}

  static LVec constant(std::size_t n, const Rational& r) { return LVec(std::vector<Rational>(n, r)); }
  static LVec zero(std::size_t n) { return constant(n, 0); }
  static LVec one(std::size_t n) { return constant(n, 1); }

  /// Characteristic vector of a coordinate set.
  static LVec indicator(std::size_t n, CoordMask m) {
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = (m >> i & 1) ? 1 : 0;
    return LVec(std::move(c));
  }

  std::size_t dim() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_.at(i); }
  Rational& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<Rational>& coords() const { return c_; }

  /// Coordinates that are nonzero.
  CoordMask support() const {
    CoordMask m = 0;
    for (std::size_t i = 0; i < dim(); ++i)
      if (c_[i] != 0) m |= CoordMask{1} << i;
    return m;
  }

  bool is_zero() const { return support() == 0; }

  friend bool operator==(const LVec& a, const LVec& b) { return a.c_ == b.c_; }

  friend LVec operator+(const LVec& a, const LVec& b) { return zip(a, b, [](auto& x, auto& y) { return x + y; }); }
  friend LVec operator-(const LVec& a, const LVec& b) { return zip(a, b, [](auto& x, auto& y) { return x - y; }); }
  friend LVec operator*(const LVec& a, const LVec& b) { return zip(a, b, [](auto& x, auto& y) { return x * y; }); }
  friend LVec operator-(const LVec& a) { return a.map([](const Rational& x) { return Rational(-x); }); }
  friend LVec operator*(const Rational& r, const LVec& a) { return a.map([&](const Rational& x) { return r * x; }); }

  /// a + r·1 and a - r·1.
  friend LVec operator+(const LVec& a, const Rational& r) { return a.map([&](const Rational& x) { return x + r; }); }
  friend LVec operator-(const LVec& a, const Rational& r) { return a.map([&](const Rational& x) { return x - r; }); }

  template <class F>
  LVec map(F&& f) const {
    std::vector<Rational> out;
    out.reserve(dim());
    for (const auto& x : c_) out.push_back(f(x));
    return LVec(std::move(out));
  }

 private:
  template <class F>
  static LVec zip(const LVec& a, const LVec& b, F&& f) {
    require_same_dim(a, b);
    std::vector<Rational> out;
    out.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(f(a.c_[i], b.c_[i]));
    return LVec(std::move(out));
  }

  std::vector<Rational> c_;

 public:
  static void require_same_dim(const LVec& a, const LVec& b) {
    if (a.dim() != b.dim())
      throw ValidationError("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
};

inline LVec meet(const LVec& a, const LVec& b) {
  LVec::require_same_dim(a, b);
  LVec out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

inline LVec join(const LVec& a, const LVec& b) {
  LVec::require_same_dim(a, b);
  LVec out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

inline LVec meet(const LVec& a, const Rational& r) { return meet(a, LVec::constant(a.dim(), r)); }
inline LVec join(const LVec& a, const Rational& r) { return join(a, LVec::constant(a.dim(), r)); }

/// a⁺ = a ∨ 0
inline LVec pos(const LVec& a) { return join(a, Rational(0)); }
/// a⁻ = (−a) ∨ 0
inline LVec neg(const LVec& a) { return join(-a, Rational(0)); }
/// |a| = a ∨ (−a)
inline LVec abs(const LVec& a) { return join(a, -a); }

/// ‖a‖ = inf{ r | |a| ≤ r·1 }, which in ℚⁿ is the largest |a_i|.
inline Rational norm(const LVec& a) {
  Rational m = 0;
  for (const auto& x : a.coords()) m = std::max(m, abs_of(x));
  return m;
}

inline bool leq(const LVec& a, const LVec& b) {
  LVec::require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool nonnegative(const LVec& a) { return leq(LVec::zero(a.dim()), a); }

struct Decomposition {
  LVec positive;
  LVec negative;
  LVec absolute;
  Rational norm;
};

inline Decomposition decompose(const LVec& a) { return {pos(a), neg(a), abs(a), norm(a)}; }

inline std::string to_string(const LVec& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i) out += ", ";
    out += canext::to_string(a[i]);
  }
  return out + ")";
}

/// "{1,3}" using 1-based coordinates.
inline std::string coord_set_label(CoordMask m, std::size_t n) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i)
    if (m >> i & 1) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
  return out + "}";
}

inline CoordMask full_mask(std::size_t n) { return n >= 64 ? ~CoordMask{0} : (CoordMask{1} << n) - 1; }

}  // namespace canext::lalg
