#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "ostrowski/contfrac.hpp"
#include "ostrowski/qfield.hpp"

namespace ostrowski {

using Digit = std::uint32_t;

class System;
using SystemPtr = std::shared_ptr<const System>;

// An Ostrowski numeration system: the base a, its continued fraction and a
// lazily grown table of convergents p_k/q_k with differences beta_k.
//
// The table only ever grows.  Readers share the lock; growth takes it
// exclusively, and references handed out stay valid because the storage is a
// deque.
class System {
 public:
  static SystemPtr create(const QuadraticNumber& a, std::string name = {});

  // "golden", "sqrt2", "sqrt3" or any quadratic literal such as "(1+sqrt(5))/2".
  static SystemPtr from_spec(std::string_view spec);

  // The system of s*a with 1.5 < s*a < 2.
  static SystemPtr normalized(const QuadraticNumber& a, std::string name = {});

  const QuadraticNumber& alpha() const noexcept { return alpha_; }
  const ContinuedFraction& cf() const noexcept { return cf_; }
  const std::string& name() const noexcept { return name_; }

  // a_k for k >= 1 as a digit bound; a_0 is cf().preperiod[0].
  Digit partial_quotient(std::size_t k) const;
  Digit mu() const noexcept { return mu_; }

  const Convergent& convergent(std::size_t k) const;
  const Integer& q(std::size_t k) const { return convergent(k).q; }
  const Integer& p(std::size_t k) const { return convergent(k).p; }
  const QuadraticNumber& beta(std::size_t k) const { return convergent(k).beta; }
  // beta_k for k >= -1; beta_{-1} = q_{-1} a - p_{-1} = -1.
  QuadraticNumber beta_signed(long k) const;
  const QuadraticNumber& zeta(std::size_t k) const { return cf_.complete_quotient(k); }

  // Largest k >= 0 with q_k <= n (n >= 1).
  std::size_t top_index(const Integer& n) const;

  bool is_golden() const;
  bool is_normalized() const;  // 1.5 < a < 2

  // Index from which partial quotients, complete quotients and hence beta
  // ratios repeat with period nu (digit index n reads a_{n+1}, zeta_{n+1}).
  std::size_t periodic_from() const noexcept { return cf_.xi(); }

  friend bool operator==(const System& x, const System& y) { return x.alpha_ == y.alpha_; }

 private:
  System(QuadraticNumber a, std::string name);
  void grow_to(std::size_t k) const;

  QuadraticNumber alpha_;
  ContinuedFraction cf_;
  std::string name_;
  Digit mu_ = 0;

  mutable std::shared_mutex mutex_;
  mutable std::deque<Convergent> table_;
};

// Throws IncomparableSystems unless both refer to the same base.
void require_same_system(const System& x, const System& y);

}  // namespace ostrowski
