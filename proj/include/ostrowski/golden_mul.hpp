#pragma once

#include "ostrowski/msol_interp.hpp"

namespace ostrowski {

// Multiplication by phi on N + f(N phi) through the Zeckendorf digit shift.
// Every function takes the natural n standing for n * phi.
class GoldenContext {
 public:
  GoldenContext();
  explicit GoldenContext(SystemPtr golden);

  const SystemPtr& system() const noexcept { return sys_; }
  QuadraticNumber phi() const { return sys_->alpha(); }

 private:
  SystemPtr sys_;
};

// m with digits b_{k+1}(m) = b_{k+2}(n) for k >= 1 and b_1(m) = 0, so that
// L(n phi) = m phi.
Integer L_shift(const Integer& n, const GoldenContext& ctx);
// L_shift through the E1 characterization: the unique m < n+1 with
// (q_k phi, f(m phi)) in E1 iff (q_{k+1} phi, f(n phi)) in E1 for all k >= 1.
// Search-based; for cross-checks on small n.
Integer L_shift_by_E1(const Integer& n, const GoldenContext& ctx, std::size_t depth);

// L(n phi) - f(L(n phi)) + b_2(n), evaluated exactly; throws NotAnInteger or
// IdentityViolation unless it is the integer n.
Integer t1_map(const Integer& n, const GoldenContext& ctx);

// f(L(n phi)) + b_2(n) (phi - 1); throws IdentityViolation unless
// phi f(n phi) = -T_2.
QuadraticNumber t2_map(const Integer& n, const GoldenContext& ctx);

// m phi - T_2(n phi), which must equal phi (m + f(n phi)); throws
// IdentityViolation otherwise.
QuadraticNumber mul_phi(const Integer& m, const Integer& n, const GoldenContext& ctx);

}  // namespace ostrowski
