#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canext/error.hpp"
#include "canext/order/alexandroff.hpp"
#include "canext/order/poset.hpp"
#include "canext/random.hpp"
#include "canext/rational.hpp"
#include "canext/report.hpp"

namespace canext::normal {

using order::ElementSet;
using order::FinPoset;
using Failure = std::optional<std::string>;

/// Rational-valued function on a finite poset viewed as an Alexandroff space
/// (opens are upsets, ↑x is the least neighbourhood of x).
class PosetFn {
 public:
  PosetFn(std::shared_ptr<const FinPoset> poset, std::vector<Rational> values)
      : poset_(std::move(poset)), values_(std::move(values)) {
    if (!poset_) throw ValidationError("function needs a poset");
    if (values_.size() != poset_->size()) throw ValidationError("one value per poset element expected");
  }

  static PosetFn constant(std::shared_ptr<const FinPoset> p, const Rational& r) {
    const std::size_t n = p->size();
    return PosetFn(std::move(p), std::vector<Rational>(n, r));
  }

  static PosetFn indicator(std::shared_ptr<const FinPoset> p, const ElementSet& u) {
    std::vector<Rational> v(p->size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = u.test(i) ? 1 : 0;
    return PosetFn(std::move(p), std::move(v));
  }

  const FinPoset& poset() const { return *poset_; }
  const std::shared_ptr<const FinPoset>& poset_ptr() const { return poset_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_.at(i); }

  bool same_poset(const PosetFn& o) const { return poset_ == o.poset_ || *poset_ == *o.poset_; }
  void require_same_poset(const PosetFn& o) const {
    if (!same_poset(o)) throw ValidationError("functions live on different posets");
  }

  template <class F>
  PosetFn map(F&& f) const {
    std::vector<Rational> out(values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(values_[i]);
    return PosetFn(poset_, std::move(out));
  }

  template <class F>
  PosetFn zip(const PosetFn& o, F&& f) const {
    require_same_poset(o);
    std::vector<Rational> out(values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(values_[i], o.values_[i]);
    return PosetFn(poset_, std::move(out));
  }

  /// Pointwise order.
  bool leq(const PosetFn& o) const {
    require_same_poset(o);
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] > o.values_[i]) return false;
    return true;
  }

  friend bool operator==(const PosetFn& a, const PosetFn& b) { return a.same_poset(b) && a.values_ == b.values_; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s += ", ";
      s += poset_->label(i) + ":" + canext::to_string(values_[i]);
    }
    return s + ")";
  }

 private:
  std::shared_ptr<const FinPoset> poset_;
  std::vector<Rational> values_;
};

// ---------------------------------------------------------------------------
// Envelopes

/// f^*(x) = max f[↑x].
inline PosetFn upper_envelope(const PosetFn& f) {
  const auto& p = f.poset();
  std::vector<Rational> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    const auto& up = p.up(x);
    Rational m = f[x];
    for (auto y = up.find_first(); y != ElementSet::npos; y = up.find_next(y)) m = std::max(m, f[y]);
    out[x] = m;
  }
  return PosetFn(f.poset_ptr(), std::move(out));
}

/// f_*(x) = min f[↑x].
inline PosetFn lower_envelope(const PosetFn& f) {
  const auto& p = f.poset();
  std::vector<Rational> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    const auto& up = p.up(x);
    Rational m = f[x];
    for (auto y = up.find_first(); y != ElementSet::npos; y = up.find_next(y)) m = std::min(m, f[y]);
    out[x] = m;
  }
  return PosetFn(f.poset_ptr(), std::move(out));
}

/// f^# = (f^*)_*.
inline PosetFn normalize(const PosetFn& f) { return lower_envelope(upper_envelope(f)); }

inline bool is_normal(const PosetFn& f) { return normalize(f) == f; }

struct Envelopes {
  PosetFn upper;
  PosetFn lower;
  PosetFn sharp;
};

inline Envelopes envelopes(const PosetFn& f) { return {upper_envelope(f), lower_envelope(f), normalize(f)}; }

inline bool is_order_preserving(const PosetFn& f) {
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = 0; y < f.size(); ++y)
      if (f.poset().leq(x, y) && f[x] > f[y]) return false;
  return true;
}

inline bool is_order_reversing(const PosetFn& f) {
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = 0; y < f.size(); ++y)
      if (f.poset().leq(x, y) && f[x] < f[y]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// N(X)

/// Element of N(X). Construction checks the fixed-point law.
class NormalFn {
 public:
  explicit NormalFn(PosetFn f) : f_(std::move(f)) {
    if (!is_normal(f_)) throw ValidationError("function is not normal: " + f_.to_string());
  }

  static NormalFn normalized(const PosetFn& f) { return NormalFn(normalize(f), Trusted{}); }
  static NormalFn constant(std::shared_ptr<const FinPoset> p, const Rational& r) {
    return NormalFn(PosetFn::constant(std::move(p), r), Trusted{});
  }

  const PosetFn& fn() const { return f_; }
  const FinPoset& poset() const { return f_.poset(); }
  const std::shared_ptr<const FinPoset>& poset_ptr() const { return f_.poset_ptr(); }
  const std::vector<Rational>& values() const { return f_.values(); }
  std::size_t size() const { return f_.size(); }
  const Rational& operator[](std::size_t i) const { return f_[i]; }
  bool leq(const NormalFn& o) const { return f_.leq(o.f_); }
  std::string to_string() const { return f_.to_string(); }

  friend bool operator==(const NormalFn& a, const NormalFn& b) { return a.f_ == b.f_; }

 private:
  struct Trusted {};
  NormalFn(PosetFn f, Trusted) : f_(std::move(f)) {}
  PosetFn f_;
};

enum class NOp { Add, Mul, Join, Meet };

/// Operations of N(X): the pointwise operation followed by normalization.
inline NormalFn n_op(const NormalFn& f, const NormalFn& g, NOp op) {
  const PosetFn& a = f.fn();
  const PosetFn& b = g.fn();
  switch (op) {
    case NOp::Add: return NormalFn::normalized(a.zip(b, [](const Rational& x, const Rational& y) { return Rational(x + y); }));
    case NOp::Mul: return NormalFn::normalized(a.zip(b, [](const Rational& x, const Rational& y) { return Rational(x * y); }));
    case NOp::Join: return NormalFn::normalized(a.zip(b, [](const Rational& x, const Rational& y) { return std::max(x, y); }));
    case NOp::Meet: return NormalFn::normalized(a.zip(b, [](const Rational& x, const Rational& y) { return std::min(x, y); }));
  }
  throw ValidationError("unknown operation");
}

inline NormalFn n_add(const NormalFn& f, const NormalFn& g) { return n_op(f, g, NOp::Add); }
inline NormalFn n_mul(const NormalFn& f, const NormalFn& g) { return n_op(f, g, NOp::Mul); }
inline NormalFn n_join(const NormalFn& f, const NormalFn& g) { return n_op(f, g, NOp::Join); }
inline NormalFn n_meet(const NormalFn& f, const NormalFn& g) { return n_op(f, g, NOp::Meet); }
inline NormalFn n_scale(const Rational& r, const NormalFn& f) {
  return NormalFn::normalized(f.fn().map([&](const Rational& x) { return Rational(r * x); }));
}
inline NormalFn n_neg(const NormalFn& f) { return n_scale(Rational(-1), f); }
inline NormalFn n_sub(const NormalFn& f, const NormalFn& g) { return n_add(f, n_neg(g)); }
inline NormalFn n_zero(const NormalFn& like) { return NormalFn::constant(like.poset_ptr(), 0); }
inline NormalFn n_pos(const NormalFn& f) { return n_join(f, n_zero(f)); }
inline NormalFn n_negpart(const NormalFn& f) { return n_join(n_neg(f), n_zero(f)); }
inline NormalFn n_abs(const NormalFn& f) { return n_join(f, n_neg(f)); }

// ---------------------------------------------------------------------------
// Idempotents

inline constexpr std::size_t kIdempotentCap = 16;

/// All normal 0/1-valued functions on X, as their supports.
inline std::vector<ElementSet> normal_idempotents(const FinPoset& x, std::size_t cap = kIdempotentCap) {
  if (x.size() > cap)
    throw CapExceeded("idempotent enumeration capped at " + std::to_string(cap) +
                      " elements; sample normal functions instead");
  auto p = std::make_shared<const FinPoset>(x);
  std::vector<ElementSet> out;
  const std::uint64_t total = std::uint64_t{1} << x.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    ElementSet u(x.size(), mask);
    if (is_normal(PosetFn::indicator(p, u))) out.push_back(u);
  }
  return out;
}

/// The idempotents of N(X) as a boolean algebra, keyed by support.
inline order::SetBooleanAlgebra idempotents_nx(const FinPoset& x, std::size_t cap = kIdempotentCap) {
  auto p = std::make_shared<const FinPoset>(x);
  auto chi = [p](const ElementSet& u) { return NormalFn::normalized(PosetFn::indicator(p, u)); };
  auto support = [](const NormalFn& f) {
    ElementSet s(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) s[i] = f[i] != 0;
    return s;
  };
  return order::SetBooleanAlgebra(
      normal_idempotents(x, cap), [chi, support](const ElementSet& u) { return support(chi(u)); },
      [chi, support](const ElementSet& u) { return support(n_sub(NormalFn::constant(chi(u).poset_ptr(), 1), chi(u))); },
      x.size());
}

// ---------------------------------------------------------------------------
// Laws

namespace law {

inline Failure envelope_order(const PosetFn& f) {
  const auto e = envelopes(f);
  if (!e.lower.leq(f) || !f.leq(e.upper)) return "f_* <= f <= f^* fails";
  if (normalize(e.sharp) != e.sharp) return "normalization is not idempotent";
  if (!is_order_reversing(e.upper)) return "f^* is not order reversing";
  if (!is_order_preserving(e.lower)) return "f_* is not order preserving";
  return std::nullopt;
}

/// f = f_* iff f is order preserving; f = f^* iff order reversing.
inline Failure semicontinuity(const PosetFn& f) {
  if ((lower_envelope(f) == f) != is_order_preserving(f)) return "f = f_* disagrees with order preservation";
  if ((upper_envelope(f) == f) != is_order_reversing(f)) return "f = f^* disagrees with order reversal";
  return std::nullopt;
}

/// Idempotents of N(X) are exactly the χ_U with U regular open, and the
/// boolean operations agree.
inline Failure idempotents_match(const FinPoset& x) {
  const auto idem = normal_idempotents(x);
  const auto ro = order::regular_opens(x);
  if (idem.size() != ro.size())
    return "N(X) has " + std::to_string(idem.size()) + " idempotents but RO(X) has " + std::to_string(ro.size());
  for (const auto& u : idem)
    if (!ro.contains(u)) return "normal idempotent supported off RO(X)";
  auto p = std::make_shared<const FinPoset>(x);
  auto chi = [&](const ElementSet& u) { return NormalFn::normalized(PosetFn::indicator(p, u)); };
  const NormalFn one = NormalFn::constant(p, 1);
  for (const auto& u : ro.elements()) {
    if (n_sub(one, chi(u)) != chi(ro.complement(u))) return "1 - chi_U differs from chi of the RO complement";
    for (const auto& v : ro.elements()) {
      if (n_meet(chi(u), chi(v)) != chi(ro.meet(u, v))) return "meet of idempotents differs from RO meet";
      if (n_join(chi(u), chi(v)) != chi(ro.join(u, v))) return "join of idempotents differs from RO join";
      if (n_mul(chi(u), chi(v)) != chi(ro.meet(u, v))) return "product of idempotents differs from RO meet";
    }
  }
  return std::nullopt;
}

/// ℓ-algebra identities in N(X) under the normalized operations.
inline Failure n_identities(const NormalFn& f, const NormalFn& g, const NormalFn& h, const Rational& r, const Rational& s) {
  const NormalFn zero = n_zero(f);
  if (n_add(f, n_join(g, h)) != n_join(n_add(f, g), n_add(f, h))) return "f + (g join h) does not distribute";
  if (n_neg(n_join(f, g)) != n_meet(n_neg(f), n_neg(g))) return "-(f join g) != (-f) meet (-g)";
  if (f != n_sub(n_pos(f), n_negpart(f))) return "f != f+ - f-";
  if (n_abs(f) != n_add(n_pos(f), n_negpart(f))) return "|f| != f+ + f-";
  if (!n_pos(n_add(f, g)).leq(n_add(n_pos(f), n_pos(g)))) return "(f + g)+ <= f+ + g+ fails";
  if (n_meet(n_pos(f), n_negpart(f)) != zero || n_mul(n_pos(f), n_negpart(f)) != zero) return "f+ and f- are not disjoint";
  if (n_meet(f, g) == zero && r >= 0 && s >= 0 && n_meet(n_scale(r, f), n_scale(s, g)) != zero)
    return "disjointness is not preserved by nonnegative scalars";
  if (n_add(f, zero) != f) return "f + 0 != f";
  if (r >= 0 && n_scale(r, f).fn() != f.fn().map([&](const Rational& x) { return Rational(r * x); }))
    return "nonnegative scalar multiple is not pointwise";
  if (n_meet(f, g).fn() != f.fn().zip(g.fn(), [](const Rational& a, const Rational& b) { return std::min(a, b); }))
    return "meet is not pointwise";
  return std::nullopt;
}

}  // namespace law

// ---------------------------------------------------------------------------
// Sampling and the poset report

inline PosetFn random_fn(Rng& rng, const std::shared_ptr<const FinPoset>& p, std::int64_t max_num = 6, std::int64_t max_den = 3) {
  std::vector<Rational> v(p->size());
  for (auto& x : v) x = rng.rational(max_num, max_den);
  return PosetFn(p, std::move(v));
}

inline NormalFn random_normal(Rng& rng, const std::shared_ptr<const FinPoset>& p) {
  return NormalFn::normalized(random_fn(rng, p));
}

/// Calls body on every function X → values, in lexicographic order.
inline void for_each_valued(const std::shared_ptr<const FinPoset>& p, const std::vector<Rational>& values,
                            const std::function<bool(const PosetFn&)>& body) {
  const std::size_t n = p->size();
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    std::vector<Rational> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = values[digit[i]];
    if (!body(PosetFn(p, std::move(v)))) return;
    std::size_t k = 0;
    while (k < n && ++digit[k] == values.size()) digit[k++] = 0;
    if (k == n) return;
  }
}

}  // namespace canext::normal
