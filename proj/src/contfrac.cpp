#include "ostrowski/contfrac.hpp"

#include <unordered_map>

#include "ostrowski/system.hpp"

namespace ostrowski {

Integer ContinuedFraction::mu() const {
  Integer best = 0;
  for (std::size_t i = 1; i < preperiod.size(); ++i) best = std::max(best, preperiod[i]);
  for (const auto& v : period) best = std::max(best, v);
  return best;
}

std::size_t ContinuedFraction::reduce_index(std::size_t k) const {
  const std::size_t start = preperiod.size();
  if (k < start) return k;
  return start + (k - start) % period.size();
}

const Integer& ContinuedFraction::partial_quotient(std::size_t k) const {
  const std::size_t j = reduce_index(k);
  return j < preperiod.size() ? preperiod[j] : period[j - preperiod.size()];
}

const QuadraticNumber& ContinuedFraction::complete_quotient(std::size_t k) const {
  return complete_quotients[reduce_index(k)];
}

QuadraticNumber ContinuedFraction::evaluate() const {
  // x = [period; x] gives x = (P x + P') / (Q x + Q') where P/Q and P'/Q' are
  // the last two convergents of the finite period word.
  Integer p_prev = 1, q_prev = 0, p_cur = period[0], q_cur = 1;
  for (std::size_t i = 1; i < period.size(); ++i) {
    Integer p_next = period[i] * p_cur + p_prev;
    Integer q_next = period[i] * q_cur + q_prev;
    p_prev = std::move(p_cur);
    q_prev = std::move(q_cur);
    p_cur = std::move(p_next);
    q_cur = std::move(q_next);
  }
  // q_cur x^2 + (q_prev - p_cur) x - p_prev = 0, positive root.
  Integer b = q_prev - p_cur;
  Integer disc = b * b + 4 * q_cur * p_prev;
  QuadraticNumber x(-b, 1, 2 * q_cur, disc);
  for (std::size_t i = preperiod.size(); i-- > 0;) x = QuadraticNumber(preperiod[i]) + x.inverse();
  return x;
}

std::string ContinuedFraction::to_string() const {
  std::string out = "[" + preperiod[0].get_str() + "; ";
  for (std::size_t i = 1; i < preperiod.size(); ++i) out += preperiod[i].get_str() + ", ";
  out += "(";
  for (std::size_t i = 0; i < period.size(); ++i) {
    if (i > 0) out += ",";
    out += period[i].get_str();
  }
  out += ")^ω]";
  return out;
}

ContinuedFraction cf_expand(const QuadraticNumber& a) {
  if (a.is_rational()) throw Error(ErrorCode::RationalInput, a.to_string() + " has a finite expansion");
  ContinuedFraction cf;
  std::vector<Integer> quotients;
  std::unordered_map<QuadraticNumber, std::size_t, QuadraticNumberHash> seen;
  QuadraticNumber zeta = a;
  for (std::size_t k = 0;; ++k) {
    if (k >= 1) {
      auto [it, inserted] = seen.emplace(zeta, k);
      if (!inserted) {
        const std::size_t start = it->second;
        cf.preperiod.assign(quotients.begin(), quotients.begin() + static_cast<std::ptrdiff_t>(start));
        cf.period.assign(quotients.begin() + static_cast<std::ptrdiff_t>(start), quotients.end());
        cf.complete_quotients.resize(k);
        return cf;
      }
    }
    cf.complete_quotients.push_back(zeta);
    Integer ak = zeta.floor();
    quotients.push_back(ak);
    zeta = (zeta - QuadraticNumber(ak)).inverse();
  }
}

BetaIdentityReport beta_identities_check(const System& sys, std::size_t k_max) {
  BetaIdentityReport report;
  for (std::size_t k = 0; k <= k_max; ++k) {
    const QuadraticNumber& next = sys.beta(k + 1);
    const QuadraticNumber& cur = sys.beta(k);
    QuadraticNumber prev = sys.beta_signed(static_cast<long>(k) - 1);
    QuadraticNumber recurrence = QuadraticNumber(sys.partial_quotient(k + 1)) * cur + prev;
    if (recurrence != next) {
      report.ok = false;
      report.first_failure = k;
      report.detail = "beta_{k+1} != a_{k+1} beta_k + beta_{k-1} at k=" + std::to_string(k);
      return report;
    }
    if (-cur / sys.zeta(k + 2) != next) {
      report.ok = false;
      report.first_failure = k;
      report.detail = "beta_{k+1} != -beta_k / zeta_{k+2} at k=" + std::to_string(k);
      return report;
    }
  }
  return report;
}

NormalizedWindow normalize_window(const QuadraticNumber& a) {
  if (a.is_rational()) throw Error(ErrorCode::RationalInput, "normalize_window needs an irrational");
  const int sign = a.sign();
  const QuadraticNumber mag = a.abs();
  for (Integer den = 1;; den += 1) {
    // smallest numerator with num * mag > 1.5 * den
    Integer num = (QuadraticNumber(3 * den) / (QuadraticNumber(2) * mag)).floor() + 1;
    QuadraticNumber scaled = QuadraticNumber::rational(num, den) * mag;
    if (compare(scaled, QuadraticNumber(2)) < 0) {
      QuadraticNumber scale = QuadraticNumber::rational(sign * num, den);
      return {scale, scale * a};
    }
  }
}

bool is_best_approx(const QuadraticNumber& a, const Integer& p, const Integer& q) {
  if (q < 1) throw Error(ErrorCode::OutOfRange, "best approximation needs q >= 1");
  const QuadraticNumber target = (QuadraticNumber(q) * a - QuadraticNumber(p)).abs();
  for (Integer qq = 1; qq <= q; qq += 1) {
    const QuadraticNumber qa = QuadraticNumber(qq) * a;
    const Integer lo = qa.floor();
    for (const Integer& pp : {lo, Integer(lo + 1)}) {
      if (pp == p && qq == q) continue;
      if (compare((qa - QuadraticNumber(pp)).abs(), target) <= 0) return false;
    }
  }
  return true;
}

}  // namespace ostrowski
