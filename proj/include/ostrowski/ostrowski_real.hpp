#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "ostrowski/ostrowski_int.hpp"
#include "ostrowski/system.hpp"

namespace ostrowski {

// A finite or eventually periodic digit sequence b_1 b_2 ... over a system.
//
// Index k holds b_{k+1}, the coefficient of beta_k.  When the cycle is
// non-empty, digits from preamble().size() onward repeat it forever.  The
// cycle starts at or after xi and its length is a multiple of nu, so the
// ratio beta_{k+L} / beta_k is constant along it.
//
// Construction canonicalizes: an all-zero cycle is dropped, the cycle is
// made primitive and rotated back as far as allowed, and a finite sequence
// has no trailing zeros.  Equal sequences are therefore structurally equal.
class DigitSeq {
 public:
  DigitSeq(SystemPtr sys, std::vector<Digit> preamble, std::vector<Digit> cycle = {}, bool approximate = false);

  // Digits start..start+period-1 of fn become the cycle; fn must be periodic
  // from start onward with the given period.
  static DigitSeq from_function(SystemPtr sys, std::size_t start, std::size_t period,
                                const std::function<Digit(std::size_t)>& fn);

  const SystemPtr& system() const noexcept { return sys_; }
  const std::vector<Digit>& preamble() const noexcept { return preamble_; }
  const std::vector<Digit>& cycle() const noexcept { return cycle_; }
  bool is_finite() const noexcept { return cycle_.empty(); }
  bool is_zero() const noexcept { return cycle_.empty() && preamble_.empty(); }
  // Set when real_encode ran out of depth before finding a period; the
  // preamble is then a truncation of the true expansion.
  bool approximate() const noexcept { return approximate_; }

  Digit digit(std::size_t k) const;

  // MSD-first word when finite, otherwise "[b_1 ... b_s](c_1 ... c_L)^ω" in
  // index order.
  std::string to_string() const;

  friend bool operator==(const DigitSeq& x, const DigitSeq& y) {
    return x.preamble_ == y.preamble_ && x.cycle_ == y.cycle_ && x.approximate_ == y.approximate_ &&
           *x.sys_ == *y.sys_;
  }

 private:
  void canonicalize();

  SystemPtr sys_;
  std::vector<Digit> preamble_;
  std::vector<Digit> cycle_;
  bool approximate_ = false;
};

// Digit conditions of a real expansion: b_1 < a_1 (b_1 <= a_1 when !strict),
// b_k <= a_k, b_k = 0 whenever b_{k+1} = a_{k+1}, and on a cycle b_k < a_k
// for some odd k.
bool real_validate(const DigitSeq& x, bool strict = true);

// Exact value sum_k b_{k+1} beta_k; the periodic tail is summed as a
// geometric series.  Accepts the relaxed b_1 <= a_1 bound so that the
// expansion of -beta_1 decodes; throws InvalidDigits otherwise.
QuadraticNumber real_decode(const DigitSeq& x);

// Closed range [lo, hi) of the tails sum_{k >= n} b_{k+1} beta_k.  When
// constrained, the digit at n is capped at a_{n+1} - 1 (because the digit at
// n-1 is non-zero, or n = 0).  lo is attained, hi is not.
struct TailBounds {
  QuadraticNumber lo;
  QuadraticNumber hi;
  bool contains(const QuadraticNumber& x) const { return compare(x, lo) >= 0 && compare(x, hi) < 0; }
};
TailBounds tail_bounds(std::size_t n, const System& sys, bool constrained);
inline TailBounds tail_bounds(std::size_t n, const System& sys) { return tail_bounds(n, sys, n == 0); }

// The representable interval I = [a_0 - a, a_0 + 1 - a).
TailBounds representable_interval(const System& sys);

// Digit-by-digit expansion of c in I.  Stops early with an exact periodic
// result when the normalized remainder state repeats, otherwise returns the
// first depth digits flagged approximate.  Throws OutOfRange.
DigitSeq real_encode(const QuadraticNumber& c, const SystemPtr& sys, std::size_t depth = 64);

// Value order decided from the digits alone (minimal differing index with the
// parity rule).  Throws IncomparableSystems.
std::strong_ordering real_cmp(const DigitSeq& x, const DigitSeq& y);

// Expansion of -beta_n: a_{n+2} beta_{n+1} + a_{n+4} beta_{n+3} + ... for even
// n, beta_{n-1} + (a_{n+1}-1) beta_n + a_{n+3} beta_{n+2} + ... for odd n.
DigitSeq neg_beta_digits(std::size_t n, const SystemPtr& sys);

// f(na) = na - m, the representative of na modulo 1 in I.
struct FMapResult {
  QuadraticNumber value;
  Integer m;
  DigitSeq digits;
};
FMapResult f_map(const Integer& n, const SystemPtr& sys);

}  // namespace ostrowski
