#include "ostrowski/golden_mul.hpp"

namespace ostrowski {

GoldenContext::GoldenContext() : sys_(System::from_spec("golden")) {}

GoldenContext::GoldenContext(SystemPtr golden) : sys_(std::move(golden)) {
  if (!sys_->is_golden()) throw Error(ErrorCode::UnsupportedSystem, "multiplication by shift needs the golden system");
}

Integer L_shift(const Integer& n, const GoldenContext& ctx) {
  const OstrowskiInt rep = ost_encode(n, ctx.system());
  std::vector<Digit> shifted;
  if (rep.digits().size() > 2) {
    shifted.push_back(0);
    shifted.insert(shifted.end(), rep.digits().begin() + 2, rep.digits().end());
  }
  return ost_decode(OstrowskiInt(ctx.system(), std::move(shifted)));
}

Integer L_shift_by_E1(const Integer& n, const GoldenContext& ctx, std::size_t depth) {
  const InterpContext ictx(ctx.system(), depth + 1);
  const QuadraticNumber fn = f_map(n, ctx.system()).value;
  std::vector<bool> want(depth + 1, false);
  for (std::size_t k = 1; k <= depth; ++k) want[k] = e_membership(k + 1, fn, ictx) == EClass::E1;
  Integer found = -1;
  for (Integer m = 0; m <= n; m += 1) {
    const QuadraticNumber fm = f_map(m, ctx.system()).value;
    bool match = true;
    for (std::size_t k = 1; k <= depth && match; ++k) {
      match = (e_membership(k, fm, ictx) == EClass::E1) == want[k];
    }
    if (!match) continue;
    if (found >= 0) throw Error(ErrorCode::IdentityViolation, "L is not unique at " + n.get_str());
    found = m;
  }
  if (found < 0) throw Error(ErrorCode::IdentityViolation, "no L value at " + n.get_str());
  return found;
}

Integer t1_map(const Integer& n, const GoldenContext& ctx) {
  const Integer m = L_shift(n, ctx);
  const Digit b2 = ost_encode(n, ctx.system()).digit(1);
  const QuadraticNumber lphi = QuadraticNumber(m) * ctx.phi();
  const QuadraticNumber value = lphi - f_map(m, ctx.system()).value + QuadraticNumber(static_cast<long>(b2));
  const Integer t = value.to_integer();
  if (t != n) throw Error(ErrorCode::IdentityViolation, "T1(" + n.get_str() + ") = " + t.get_str());
  return t;
}

QuadraticNumber t2_map(const Integer& n, const GoldenContext& ctx) {
  const Integer m = L_shift(n, ctx);
  const Digit b2 = ost_encode(n, ctx.system()).digit(1);
  QuadraticNumber t2 = f_map(m, ctx.system()).value;
  if (b2 != 0) t2 += ctx.phi() - QuadraticNumber(1);
  const QuadraticNumber lhs = ctx.phi() * f_map(n, ctx.system()).value;
  if (!(lhs + t2).is_zero()) {
    throw Error(ErrorCode::IdentityViolation, "phi f(n phi) + T2 != 0 at n = " + n.get_str());
  }
  return t2;
}

QuadraticNumber mul_phi(const Integer& m, const Integer& n, const GoldenContext& ctx) {
  const QuadraticNumber result = QuadraticNumber(m) * ctx.phi() - t2_map(n, ctx);
  const QuadraticNumber x = QuadraticNumber(m) + f_map(n, ctx.system()).value;
  if (!(result == ctx.phi() * x)) {
    throw Error(ErrorCode::IdentityViolation,
                "P(" + m.get_str() + ", " + n.get_str() + ") = " + result.to_string() + " is not phi x");
  }
  return result;
}

}  // namespace ostrowski
