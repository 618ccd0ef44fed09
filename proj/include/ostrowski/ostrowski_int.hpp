#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ostrowski/system.hpp"

namespace ostrowski {

// Ostrowski representation N = sum_k b_{k+1} q_k of a natural number.
//
// digits()[k] holds b_{k+1}, least significant first, with no zero at the
// most significant end; zero is the empty list.
class OstrowskiInt {
 public:
  OstrowskiInt(SystemPtr sys, std::vector<Digit> digits);

  static OstrowskiInt zero(SystemPtr sys) { return OstrowskiInt(std::move(sys), {}); }

  // Parses an MSD-first word; leading zeros are accepted.  Throws
  // InvalidDigits when the digit conditions fail.
  static OstrowskiInt parse(SystemPtr sys, std::string_view word);

  const SystemPtr& system() const noexcept { return sys_; }
  const std::vector<Digit>& digits() const noexcept { return digits_; }
  Digit digit(std::size_t k) const { return k < digits_.size() ? digits_[k] : 0; }
  bool is_zero() const noexcept { return digits_.empty(); }

  // MSD-first word; "0" for zero.
  std::string word() const;

  friend bool operator==(const OstrowskiInt& x, const OstrowskiInt& y) {
    return x.digits_ == y.digits_ && *x.sys_ == *y.sys_;
  }

 private:
  SystemPtr sys_;
  std::vector<Digit> digits_;
};

// True iff digits satisfy b_1 < a_1, b_k <= a_k and b_k = a_k => b_{k-1} = 0.
// Trailing (most significant) zeros are allowed here.
bool ost_validate(const System& sys, const std::vector<Digit>& digits);

// Greedy encoding from the largest q_k <= n downward.
OstrowskiInt ost_encode(const Integer& n, const SystemPtr& sys);
Integer ost_decode(const OstrowskiInt& x);
// Decodes raw digits after validating them; throws InvalidDigits.
Integer ost_decode(const System& sys, const std::vector<Digit>& digits);

// Order by the most significant differing digit.
std::strong_ordering ost_cmp(const OstrowskiInt& x, const OstrowskiInt& y);

enum class AddEngine { Reference, Digit };

// Reference engine: decode, add, re-encode (any system).
// Digit engine: digitwise sum and three bounded-window normalization passes
// (golden system only; throws UnsupportedSystem otherwise).
OstrowskiInt ost_add(const OstrowskiInt& x, const OstrowskiInt& y, AddEngine engine = AddEngine::Reference);
OstrowskiInt ost_succ(const OstrowskiInt& x);

// Carry normalization used by the digit engine: takes golden-system digits in
// {0,1,2} (LSD first, b_1 position included) and returns the canonical
// Zeckendorf digits of the same value.
std::vector<Digit> zeckendorf_normalize(std::vector<Digit> digits);

// Word formatting shared by integers and automata: MSD-first, "." separated
// when the largest digit bound exceeds 9.
std::string format_word(const std::vector<Digit>& lsd_first, Digit mu);
std::vector<Digit> parse_word(std::string_view word, Digit mu);

}  // namespace ostrowski
