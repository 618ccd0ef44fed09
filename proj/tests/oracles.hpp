#pragma once

// Independent reference computations for the tests.  Nothing here calls the
// library's arithmetic: values go through MPFR at high precision, integer
// recurrences go through plain mpz.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

#include "ostrowski/qfield.hpp"

namespace oracle {

constexpr mpfr_prec_t kPrec = 4096;

class Real {
 public:
  Real() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
  Real(long n) : Real() { mpfr_set_si(v_, n, MPFR_RNDN); }  // NOLINT
  Real(const mpz_class& n) : Real() { mpfr_set_z(v_, n.get_mpz_t(), MPFR_RNDN); }  // NOLINT
  Real(const Real& o) : Real() { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real& operator=(const Real& o) { mpfr_set(v_, o.v_, MPFR_RNDN); return *this; }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  Real operator-() const { Real r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

  mpz_class floor() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
    return z;
  }
  // Sign, or 0 when |x| < 2^-(kPrec/2) (treated as "too close to call").
  int sign() const {
    if (mpfr_zero_p(v_)) return 0;
    if (mpfr_get_exp(v_) < -static_cast<long>(kPrec / 2)) return 0;
    return mpfr_sgn(v_);
  }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

inline Real sqrt_of(const mpz_class& d) {
  Real r(d);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDN);
  return r;
}

// (p + q sqrt d) / r read straight off the stored integers.
inline Real value(const ostrowski::QuadraticNumber& x) {
  return (Real(x.p()) + Real(x.q()) * sqrt_of(x.d())) / Real(x.r());
}

// |x - y| < 2^-bits.
inline bool close(const Real& x, const Real& y, long bits = 300) {
  const Real d = x - y;
  return mpfr_zero_p(d.get()) || mpfr_get_exp(d.get()) < -bits;
}

// Partial quotients a_0 .. a_{n-1} by iterating x -> 1/(x - floor x) in
// floating point.  4096 bits keeps several hundred terms exact for the small
// inputs used here.
inline std::vector<mpz_class> cf_terms(const Real& x0, std::size_t n) {
  std::vector<mpz_class> out;
  Real x = x0;
  for (std::size_t k = 0; k < n; ++k) {
    const mpz_class a = x.floor();
    out.push_back(a);
    x = Real(1) / (x - Real(a));
  }
  return out;
}

struct Conv {
  std::vector<mpz_class> p;
  std::vector<mpz_class> q;
};

// p_k, q_k from p_{-1} = 1, q_{-1} = 0, p_0 = a_0, q_0 = 1.
inline Conv convergents(const std::vector<mpz_class>& a) {
  Conv c;
  mpz_class pm = 1, qm = 0, p = a[0], q = 1;
  c.p.push_back(p);
  c.q.push_back(q);
  for (std::size_t k = 1; k < a.size(); ++k) {
    const mpz_class pn = a[k] * p + pm;
    const mpz_class qn = a[k] * q + qm;
    pm = p; qm = q; p = pn; q = qn;
    c.p.push_back(p);
    c.q.push_back(q);
  }
  return c;
}

// Digit rules straight from the definition, LSD first (index k holds b_{k+1},
// bounded by a_{k+1}).
inline bool valid_digits(const std::vector<unsigned>& b, const std::vector<mpz_class>& a) {
  for (std::size_t k = 0; k < b.size(); ++k) {
    const mpz_class bound = a[k + 1];
    if (k == 0 && b[0] >= bound) return false;
    if (b[k] > bound) return false;
    if (k > 0 && b[k] == bound && b[k - 1] != 0) return false;
  }
  return true;
}

// Greedy representation from the oracle q table, LSD first, trimmed.
inline std::vector<unsigned> greedy(mpz_class n, const std::vector<mpz_class>& q) {
  std::size_t top = 0;
  while (top + 1 < q.size() && q[top + 1] <= n) ++top;
  std::vector<unsigned> b(top + 1, 0);
  for (std::size_t k = top + 1; k-- > 0;) {
    const mpz_class d = n / q[k];
    b[k] = static_cast<unsigned>(d.get_ui());
    n -= d * q[k];
  }
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

inline std::string word(const std::vector<unsigned>& lsd) {
  if (lsd.empty()) return "0";
  std::string s;
  for (auto it = lsd.rbegin(); it != lsd.rend(); ++it) s += static_cast<char>('0' + *it);
  return s;
}

// Fibonacci numbers F_1 = F_2 = 1, F_3 = 2, ...
inline std::vector<mpz_class> fibonacci(std::size_t n) {
  std::vector<mpz_class> f{1, 1};
  while (f.size() < n) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

// sum_k b_{k+1} (q_k x - p_k) with the given digit function, summed over
// enough terms that the truncated tail is below the working precision.
template <class DigitFn>
Real digit_sum(const Real& x, const Conv& c, std::size_t terms, DigitFn digit) {
  Real s;
  for (std::size_t k = 0; k < terms && k < c.q.size(); ++k) {
    const unsigned b = digit(k);
    if (b != 0) s = s + Real(static_cast<long>(b)) * (Real(c.q[k]) * x - Real(c.p[k]));
  }
  return s;
}

}  // namespace oracle
