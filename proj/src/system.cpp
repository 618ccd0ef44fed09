#include "ostrowski/system.hpp"

#include <limits>
#include <mutex>

namespace ostrowski {

namespace {

constexpr unsigned long kMaxDigit = std::numeric_limits<std::int32_t>::max();

}  // namespace

System::System(QuadraticNumber a, std::string name)
    : alpha_(std::move(a)), cf_(cf_expand(alpha_)), name_(std::move(name)) {
  Integer mu = cf_.mu();
  if (mu > kMaxDigit) throw Error(ErrorCode::OutOfRange, "partial quotient " + mu.get_str() + " too large for digits");
  mu_ = static_cast<Digit>(mu.get_ui());
  if (name_.empty()) name_ = alpha_.to_string();
  Convergent c0;
  c0.k = 0;
  c0.q = 1;
  c0.p = cf_.preperiod[0];
  c0.beta = alpha_ - QuadraticNumber(c0.p);
  table_.push_back(std::move(c0));
}

SystemPtr System::create(const QuadraticNumber& a, std::string name) {
  return SystemPtr(new System(a, std::move(name)));
}

SystemPtr System::from_spec(std::string_view spec) {
  if (spec == "golden" || spec == "phi") return create(QuadraticNumber::parse("(1+sqrt(5))/2"), "golden");
  if (spec == "sqrt2") return create(QuadraticNumber::sqrt(2), "sqrt2");
  if (spec == "sqrt3") return create(QuadraticNumber::sqrt(3), "sqrt3");
  return create(QuadraticNumber::parse(spec));
}

SystemPtr System::normalized(const QuadraticNumber& a, std::string name) {
  return create(normalize_window(a).value, std::move(name));
}

Digit System::partial_quotient(std::size_t k) const {
  return static_cast<Digit>(cf_.partial_quotient(k).get_ui());
}

void System::grow_to(std::size_t k) const {
  std::unique_lock lock(mutex_);
  while (table_.size() <= k) {
    const std::size_t n = table_.size();
    const Convergent& cur = table_[n - 1];
    const Integer ak = cf_.partial_quotient(n);
    Convergent next;
    next.k = n;
    if (n == 1) {
      next.q = ak * cur.q;
      next.p = ak * cur.p + 1;
    } else {
      const Convergent& prev = table_[n - 2];
      next.q = ak * cur.q + prev.q;
      next.p = ak * cur.p + prev.p;
    }
    next.beta = QuadraticNumber(next.q) * alpha_ - QuadraticNumber(next.p);
    table_.push_back(std::move(next));
  }
}

const Convergent& System::convergent(std::size_t k) const {
  {
    std::shared_lock lock(mutex_);
    if (k < table_.size()) return table_[k];
  }
  grow_to(k);
  std::shared_lock lock(mutex_);
  return table_[k];
}

QuadraticNumber System::beta_signed(long k) const {
  if (k < -1) throw Error(ErrorCode::OutOfRange, "beta index below -1");
  if (k == -1) return QuadraticNumber(-1);
  return beta(static_cast<std::size_t>(k));
}

std::size_t System::top_index(const Integer& n) const {
  std::size_t k = 0;
  while (q(k + 1) <= n) ++k;
  return k;
}

bool System::is_golden() const { return alpha_ == QuadraticNumber::parse("(1+sqrt(5))/2"); }

bool System::is_normalized() const {
  return compare(alpha_, QuadraticNumber::rational(3, 2)) > 0 && compare(alpha_, QuadraticNumber(2)) < 0;
}

void require_same_system(const System& x, const System& y) {
  if (&x != &y && !(x == y)) {
    throw Error(ErrorCode::IncomparableSystems, "systems " + x.name() + " and " + y.name() + " differ");
  }
}

}  // namespace ostrowski
