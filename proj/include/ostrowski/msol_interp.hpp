#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ostrowski/ostrowski_real.hpp"

namespace ostrowski {

// The interpretation works inside I for a system with 1.5 < a < 2, looking
// at convergent indices l <= depth.
struct InterpContext {
  SystemPtr sys;
  std::size_t depth = 20;

  InterpContext(SystemPtr s, std::size_t d);
};

// k with x = q_k a for 0 < k <= depth, by table lookup.  q_1 = 1 for a
// normalized system, so a itself is q_1 a.
std::optional<std::size_t> v_lookup(const QuadraticNumber& x, const InterpContext& ctx);
// x = qa belongs to the projection of U: qa >= a and some p makes p/q a best
// approximation of the second kind.  Quadratic in q; meant for q up to ~10^4.
bool v_by_best_approx(const QuadraticNumber& x, const InterpContext& ctx);

// Interval [g1, g2) that c - f(na) must fall in for h(q_l a, c) = na.  The
// bounds depend on whether n >= q_l, i.e. on whether digit l of n is used.
struct GPair {
  std::size_t l = 0;
  QuadraticNumber g1;
  QuadraticNumber g2;
};
GPair g_pair(std::size_t l, const Integer& n, const InterpContext& ctx);
// The n-independent pair (-(b_l + b_{l+1}), -b_{l+1}) for even l and
// (-b_l, -(b_l + b_{l+1})) for odd l.  For odd l it is inverted (g1 > g2);
// kept for the tests that document this.
GPair g_pair_uniform(std::size_t l, const InterpContext& ctx);

// h(q_l a, c) / a: n = sum_{k <= l} b_{k+1} q_k from the digits of c, checked
// against the interval condition.  Throws OutOfRange if c is not in I or
// l > depth, IdentityViolation if the interval check fails.
Integer h_solve(std::size_t l, const QuadraticNumber& c, const InterpContext& ctx);
// Same, by scanning every n < q_{l+1}; returns all n that satisfy the
// interval condition (exactly one is expected).
std::vector<Integer> h_scan(std::size_t l, const QuadraticNumber& c, const InterpContext& ctx);

enum class EClass { E0, E1, Neither };
std::string to_string(EClass e);
// Classification of (q_l a, c) by the value of h.
EClass e_membership(std::size_t l, const QuadraticNumber& c, const InterpContext& ctx);
// The same classification read off digit l of c.
EClass e_by_digit(std::size_t l, const DigitSeq& c);

// Eventually periodic subset of N: k is a member iff bit k is set, where bits
// past the preamble repeat the cycle.
struct PeriodicSet {
  std::vector<bool> preamble;
  std::vector<bool> cycle;

  bool contains(std::size_t k) const;
  bool is_finite() const;
  // Elements below the given limit.
  std::vector<std::size_t> elements_below(std::size_t limit) const;
  std::string to_string() const;
};

struct MsolStructure {
  std::vector<std::size_t> W;  // odd l in [1, depth]
  DigitSeq d;                  // digits 1 exactly at odd indices
};
MsolStructure msol_structure(const InterpContext& ctx);

std::optional<std::size_t> h1(std::size_t l);
bool in_J(const DigitSeq& c);
bool in_Jprime(const DigitSeq& c);
// Throws OutOfRange unless c is in J'.
PeriodicSet h2(const DigitSeq& c);

struct InterpReport {
  bool ok = true;
  std::vector<std::string> failures;
};
// Checks for c = sum_{k in X} beta_{2k+1}: h2(c) = X, E1 membership matches
// h1 for every odd l <= depth, E0 for even l, and s_W maps to s_N.
InterpReport verify_interp(const InterpContext& ctx, const std::vector<std::size_t>& X);

}  // namespace ostrowski
