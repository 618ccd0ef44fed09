#include "ostrowski/iso_tower.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace ostrowski {

namespace {

std::strong_ordering cmp_O(const AElement& x, const AElement& y) { return real_cmp(x.seq(), y.seq()); }

// 0 and 1 per system.  Entries are never dropped, so references stay valid.
struct Constants {
  SystemPtr sys;
  AElement zero;
  AElement one;
};

const Constants& constants(const SystemPtr& sys) {
  static std::mutex mutex;
  static std::deque<Constants> cache;
  std::lock_guard lock(mutex);
  for (const auto& c : cache) {
    if (c.sys == sys) return c;
  }
  return cache.emplace_back(Constants{sys, AElement(DigitSeq(sys, {})), AElement(DigitSeq(sys, {0, 1}))});
}

void require_finite(const AElement& x, const char* what) {
  if (!x.is_finite()) throw Error(ErrorCode::OutOfRange, std::string(what) + " needs a finite element");
}

}  // namespace

bool in_A(const DigitSeq& seq) { return real_validate(seq, true); }

AElement::AElement(DigitSeq seq) : seq_(std::move(seq)) {
  if (!seq_.system()->is_normalized()) {
    throw Error(ErrorCode::UnsupportedSystem, "A needs a system with 1.5 < a < 2");
  }
  if (!in_A(seq_)) throw Error(ErrorCode::InvalidDigits, "\"" + seq_.to_string() + "\" is not in A");
  if (seq_.approximate()) return;
  auto v = std::make_shared<Values>();
  if (seq_.is_finite()) {
    const System& sys = *seq_.system();
    Integer p = 0;
    for (std::size_t k = 0; k < seq_.preamble().size(); ++k) {
      const Digit b = seq_.preamble()[k];
      if (b == 0) continue;
      v->z += sys.q(k) * b;
      p += sys.p(k) * b;
    }
    v->o = sys.alpha() * QuadraticNumber(v->z) - QuadraticNumber(p);
  } else {
    v->o = real_decode(seq_);
  }
  values_ = std::move(v);
}

AElement AElement::zero(const SystemPtr& sys) { return constants(sys).zero; }

AElement AElement::one(const SystemPtr& sys) { return constants(sys).one; }

AElement AElement::e(const SystemPtr& sys) { return neg(one(sys)); }

AElement AElement::from_z(const Integer& n, const SystemPtr& sys) {
  return AElement(DigitSeq(sys, ost_encode(n, sys).digits()));
}

AElement AElement::from_value(const QuadraticNumber& c, const SystemPtr& sys, std::size_t depth) {
  return AElement(real_encode(c, sys, depth));
}

Integer eval_Z(const AElement& x) {
  require_finite(x, "Z");
  return x.values_->z;
}

QuadraticNumber eval_O(const AElement& x) {
  if (x.approximate()) throw Error(ErrorCode::ApproximateResult, "element has only a truncated expansion");
  return x.values_->o;
}

QuadraticNumber eval_S(const AElement& x) {
  const AElement& one = constants(x.system()).one;
  QuadraticNumber s = eval_O(x) - eval_O(one);
  if (cmp_O(one, x) > 0) s += QuadraticNumber(1);
  return s;
}

AElement add_fin(const AElement& x, const AElement& y) {
  require_same_system(*x.system(), *y.system());
  return AElement::from_z(eval_Z(x) + eval_Z(y), x.system());
}

std::strong_ordering cmp_A(const AElement& x, const AElement& y, AOrder mode) {
  require_same_system(*x.system(), *y.system());
  switch (mode) {
    case AOrder::Z: {
      require_finite(x, "Z-order");
      require_finite(y, "Z-order");
      const auto& a = x.seq().preamble();
      const auto& b = y.seq().preamble();
      if (a.size() != b.size()) return a.size() <=> b.size();
      for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] != b[k]) return a[k] <=> b[k];
      }
      return std::strong_ordering::equal;
    }
    case AOrder::O:
      return cmp_O(x, y);
    case AOrder::One: {
      // Elements at or above 1 come first, then those below it.
      const AElement& one = constants(x.system()).one;
      const bool x_low = cmp_O(x, one) < 0;
      const bool y_low = cmp_O(y, one) < 0;
      if (x_low != y_low) return x_low ? std::strong_ordering::greater : std::strong_ordering::less;
      return cmp_O(x, y);
    }
  }
  return std::strong_ordering::equal;
}

QuadraticNumber wrap_into_I(const QuadraticNumber& c, const System& sys) {
  const QuadraticNumber lo = QuadraticNumber(sys.cf().preperiod[0]) - sys.alpha();
  return c - QuadraticNumber((c - lo).floor());
}

AElement add_circle(const AElement& x, const AElement& y, CircleMode mode, std::size_t depth) {
  require_same_system(*x.system(), *y.system());
  if (x.is_finite() && y.is_finite()) {
    if (mode == CircleMode::Plain) return add_fin(x, y);
    // O(Z^{-1}(n)) = na mod 1, so the shifted sum is Z^{-1}(Z(x) + Z(y) - 1)
    // once that index is natural.
    const Integer n = eval_Z(x) + eval_Z(y);
    if (n >= 1) return AElement::from_z(n - 1, x.system());
  }
  QuadraticNumber v = eval_O(x) + eval_O(y);
  if (mode == CircleMode::Shifted) v -= eval_O(AElement::one(x.system()));
  return AElement::from_value(wrap_into_I(v, *x.system()), x.system(), depth);
}

AElement neg(const AElement& x, std::size_t depth) {
  return AElement::from_value(wrap_into_I(-eval_O(x), *x.system()), x.system(), depth);
}

AElement neg_one(const AElement& x, std::size_t depth) {
  const QuadraticNumber o1 = eval_O(AElement::one(x.system()));
  return AElement::from_value(wrap_into_I(o1 + o1 - eval_O(x), *x.system()), x.system(), depth);
}

int r_value(const AElement& x, const AElement& y) {
  const System& sys = *x.system();
  require_same_system(sys, *y.system());
  // O-order is value order, so e (-) Y is compared through its exact value
  // rather than re-expanded.
  if (x.approximate() || y.approximate()) {
    throw Error(ErrorCode::ApproximateResult, "element has only a truncated expansion");
  }
  const QuadraticNumber& ox = x.values_->o;
  const QuadraticNumber& oy = y.values_->o;
  const QuadraticNumber o_e = QuadraticNumber(sys.cf().preperiod[0]) - sys.alpha();
  const QuadraticNumber e_minus_y = wrap_into_I(o_e - oy, sys);
  if (oy.sign() <= 0) return compare(ox, e_minus_y) < 0 ? 0 : 1;
  return compare(e_minus_y, ox) <= 0 ? 2 : 1;
}

std::vector<int> b_indices(const AElement& x) {
  require_finite(x, "B");
  // aZ - O(X) is the integer R(X, 0); it lies above aZ exactly when O(X) < 0,
  // and (0, 0) is added for R = 0.
  if (x.values_->o.sign() <= 0) return {0, 1};
  return {1};
}

bool b_member(const AElement& x, int i) {
  if (!x.is_finite()) return false;
  const auto idx = b_indices(x);
  return std::find(idx.begin(), idx.end(), i) != idx.end();
}

BElement make_B(const AElement& x, int i) {
  if (!b_member(x, i)) {
    throw Error(ErrorCode::InvalidDigits, "(" + x.seq().to_string() + ", " + std::to_string(i) + ") is not in B");
  }
  return {x, i};
}

Integer eval_R(const BElement& z) {
  const QuadraticNumber value =
      z.x.system()->alpha() * QuadraticNumber(eval_Z(z.x)) - eval_O(z.x) + QuadraticNumber(static_cast<long>(z.i));
  return value.to_integer();
}

std::strong_ordering cmp_B(const BElement& y, const BElement& z) {
  auto c = cmp_A(y.x, z.x, AOrder::Z);
  if (c != 0) return c;
  return y.i <=> z.i;
}

BElement succ_B(const BElement& z) {
  for (int i : b_indices(z.x)) {
    if (i > z.i) return {z.x, i};
  }
  AElement next = AElement::from_z(eval_Z(z.x) + 1, z.x.system());
  const int i = b_indices(next).front();
  return {std::move(next), i};
}

BElement pred_B(const BElement& z) {
  const auto idx = b_indices(z.x);
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    if (*it < z.i) return {z.x, *it};
  }
  const Integer n = eval_Z(z.x);
  if (n == 0) throw Error(ErrorCode::PredecessorOfZero, "(0, 0) has no predecessor");
  AElement prev = AElement::from_z(n - 1, z.x.system());
  const int i = b_indices(prev).back();
  return {std::move(prev), i};
}

BElement shift_B(BElement z, long k) {
  for (; k > 0; --k) z = succ_B(z);
  for (; k < 0; ++k) z = pred_B(z);
  return z;
}

BElement add_B(const BElement& y, const BElement& z) {
  const int r = r_value(y.x, z.x);
  return shift_B(BElement{add_fin(y.x, z.x), 1}, static_cast<long>(y.i) + z.i - r);
}

QuadraticNumber eval_T(const CElement& c) { return QuadraticNumber(eval_R(c.b)) + eval_S(c.x); }

bool wraps_one(const AElement& x, const AElement& y, std::size_t depth) {
  // S(1) = 0, and nothing wraps past it, though (-)_1 1 = 1 precedes every y.
  if (x == AElement::one(x.system())) return false;
  return cmp_A(neg_one(x, depth), y, AOrder::One) <= 0;
}

CElement add_C(const CElement& c1, const CElement& c2, std::size_t depth) {
  const bool wraps = wraps_one(c1.x, c2.x, depth);
  BElement b = add_B(c1.b, c2.b);
  if (wraps) b = succ_B(b);
  return {std::move(b), add_circle(c1.x, c2.x, CircleMode::Shifted, depth)};
}

std::strong_ordering cmp_C(const CElement& c1, const CElement& c2) {
  auto c = cmp_B(c1.b, c2.b);
  if (c != 0) return c;
  return cmp_A(c1.x, c2.x, AOrder::One);
}

bool in_Bprime(const CElement& c) { return c.x == AElement::one(c.x.system()); }

bool in_Aprime(const CElement& c) {
  if (!c.x.is_finite()) return false;
  const Integer zx = eval_Z(c.x);
  if (zx < 1) return false;
  return aprime_of(zx - 1, c.x.system()) == c;
}

CElement aprime_of(const Integer& n, const SystemPtr& sys) {
  AElement x = AElement::from_z(n, sys);
  const AElement& zero = constants(sys).zero;
  BElement b = pred_B(BElement{x, 1});
  if (cmp_O(x, zero) < 0) b = pred_B(b);
  return {std::move(b), add_circle(x, AElement::one(sys))};
}

}  // namespace ostrowski
