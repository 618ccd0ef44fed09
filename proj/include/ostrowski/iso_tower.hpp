#pragma once

#include <compare>
#include <memory>
#include <vector>

#include "ostrowski/ostrowski_real.hpp"

namespace ostrowski {

// An element of A, stored as its digit function b_{k+1}.  Requires a system
// with 1.5 < a < 2 (so b_1 = 0) and finite or eventually periodic digits.
//
// An element produced by an addition whose expansion did not close up within
// the depth is flagged approximate; value-level operations on it throw
// ApproximateResult.
class AElement {
 public:
  explicit AElement(DigitSeq seq);

  static AElement zero(const SystemPtr& sys);
  static AElement one(const SystemPtr& sys);
  // e = (-)1, the minimum of A.
  static AElement e(const SystemPtr& sys);
  // Z^{-1}(n)
  static AElement from_z(const Integer& n, const SystemPtr& sys);
  // O^{-1}(c); c must lie in I.
  static AElement from_value(const QuadraticNumber& c, const SystemPtr& sys, std::size_t depth = 256);

  const DigitSeq& seq() const noexcept { return seq_; }
  const SystemPtr& system() const noexcept { return seq_.system(); }
  bool is_finite() const noexcept { return seq_.is_finite() && !seq_.approximate(); }
  bool approximate() const noexcept { return seq_.approximate(); }
  Digit digit(std::size_t k) const { return seq_.digit(k); }

  friend bool operator==(const AElement& x, const AElement& y) { return x.seq_ == y.seq_; }

 private:
  friend Integer eval_Z(const AElement& x);
  friend QuadraticNumber eval_O(const AElement& x);
  friend int r_value(const AElement& x, const AElement& y);
  friend std::vector<int> b_indices(const AElement& x);

  // Z and O, computed once at construction.  Finite elements get O as
  // aZ - sum b_{k+1} p_k; periodic ones through real_decode.
  struct Values {
    Integer z;
    QuadraticNumber o;
  };

  DigitSeq seq_;
  std::shared_ptr<const Values> values_;
};

// Membership in A: b_1 < a_1, b_k <= a_k, the adjacency rule, and b_k < a_k
// for infinitely many odd k.
bool in_A(const DigitSeq& seq);

Integer eval_Z(const AElement& x);
QuadraticNumber eval_O(const AElement& x);
// O(x) - O(1), plus 1 unless 1 <=_O x.
QuadraticNumber eval_S(const AElement& x);

// Z^{-1}(Z(x) + Z(y)).
AElement add_fin(const AElement& x, const AElement& y);

enum class AOrder { Z, O, One };
std::strong_ordering cmp_A(const AElement& x, const AElement& y, AOrder mode);

enum class CircleMode { Plain, Shifted };
// Plain: O^{-1}(O(x) +_1 O(y)).  Shifted: (x (+) y) (-) 1.
AElement add_circle(const AElement& x, const AElement& y, CircleMode mode = CircleMode::Plain,
                    std::size_t depth = 256);
// Inverse for the plain addition, with x (+) neg(x) = 0.
AElement neg(const AElement& x, std::size_t depth = 256);
// Inverse for the shifted addition, with neg_one(x) (+)_1 x = 1.
AElement neg_one(const AElement& x, std::size_t depth = 256);

// The representative of c modulo 1 in I.
QuadraticNumber wrap_into_I(const QuadraticNumber& c, const System& sys);

// r(X, Y) in {0, 1, 2}.
int r_value(const AElement& x, const AElement& y);

// (X, i) with X finite.
struct BElement {
  AElement x;
  int i = 0;
  friend bool operator==(const BElement& a, const BElement& b) { return a.i == b.i && a.x == b.x; }
};

// The i with (x, i) in B, ascending: {0, 1} when x <=_O 0, else {1}.
std::vector<int> b_indices(const AElement& x);
bool b_member(const AElement& x, int i);
// Throws InvalidDigits when (x, i) is not in B.
BElement make_B(const AElement& x, int i);
Integer eval_R(const BElement& z);
std::strong_ordering cmp_B(const BElement& y, const BElement& z);
BElement succ_B(const BElement& z);
// Throws PredecessorOfZero at (0, 0).
BElement pred_B(const BElement& z);
// s_B^k, with negative k iterating pred_B.
BElement shift_B(BElement z, long k);
// s_B^{i+j-r(X,Y)}((X (+) Y, 1)).
BElement add_B(const BElement& y, const BElement& z);

struct CElement {
  BElement b;
  AElement x;
  friend bool operator==(const CElement& p, const CElement& q) { return p.b == q.b && p.x == q.x; }
};

QuadraticNumber eval_T(const CElement& c);
// S(x) + S(y) >= 1: (-)_1 x precedes y in the 1-order and x is not 1.
bool wraps_one(const AElement& x, const AElement& y, std::size_t depth = 256);
CElement add_C(const CElement& c1, const CElement& c2, std::size_t depth = 256);
std::strong_ordering cmp_C(const CElement& c1, const CElement& c2);
// B' = {(Z, 1)}.
bool in_Bprime(const CElement& c);
// A' = {(p_B^2(X,1), X (+) 1) : X <_O 0} u {(p_B(X,1), X (+) 1) : X >=_O 0}, X finite.
bool in_Aprime(const CElement& c);
// The element of A' with T = a * n.
CElement aprime_of(const Integer& n, const SystemPtr& sys);

}  // namespace ostrowski
