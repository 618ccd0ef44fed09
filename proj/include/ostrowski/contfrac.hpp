#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ostrowski/qfield.hpp"

namespace ostrowski {

// Eventually periodic continued fraction [a_0; a_1, ..., a_xi, (a_{xi+1} ... a_{xi+nu})^w].
//
// The preperiod always holds a_0 and is as short as possible; the period is
// primitive.  complete_quotients holds zeta_0 .. zeta_{xi+nu}; later
// quotients repeat with period nu.
struct ContinuedFraction {
  std::vector<Integer> preperiod;
  std::vector<Integer> period;
  std::vector<QuadraticNumber> complete_quotients;

  std::size_t xi() const { return preperiod.size() - 1; }
  std::size_t nu() const { return period.size(); }

  // Largest partial quotient a_k with k >= 1, which bounds every digit.
  Integer mu() const;

  const Integer& partial_quotient(std::size_t k) const;
  const QuadraticNumber& complete_quotient(std::size_t k) const;

  // Folds index k >= xi+1 back into the stored range [xi+1, xi+nu].
  std::size_t reduce_index(std::size_t k) const;

  // The quadratic irrational this expansion denotes, recovered from the
  // fixed-point equation of the period.
  QuadraticNumber evaluate() const;

  // "[a0; a1, ..., (p1,p2,...)^ω]"
  std::string to_string() const;

  friend bool operator==(const ContinuedFraction& x, const ContinuedFraction& y) {
    return x.preperiod == y.preperiod && x.period == y.period;
  }
};

// Exact expansion of a quadratic irrational; the period is found when a
// complete quotient zeta_k (k >= 1) repeats.  Throws RationalInput.
ContinuedFraction cf_expand(const QuadraticNumber& a);

struct Convergent {
  std::size_t k = 0;
  Integer p;
  Integer q;
  QuadraticNumber beta;  // q * a - p
};

// Result of checking beta_{k+1} = a_{k+1} beta_k + beta_{k-1} and
// beta_{k+1} = -beta_k / zeta_{k+2} for 0 <= k <= k_max.
struct BetaIdentityReport {
  bool ok = true;
  std::optional<std::size_t> first_failure;
  std::string detail;
};

class System;

BetaIdentityReport beta_identities_check(const System& sys, std::size_t k_max);

// Rational s != 0 with 1.5 < s*a < 2, smallest denominator first and then
// smallest |numerator|.
struct NormalizedWindow {
  QuadraticNumber scale;
  QuadraticNumber value;
};
NormalizedWindow normalize_window(const QuadraticNumber& a);

// Best rational approximation of the second kind: |q'a - p'| > |qa - p| for
// every (p', q') != (p, q) with 1 <= q' <= q.
bool is_best_approx(const QuadraticNumber& a, const Integer& p, const Integer& q);

}  // namespace ostrowski
