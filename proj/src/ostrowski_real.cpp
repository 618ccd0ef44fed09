#include "ostrowski/ostrowski_real.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace ostrowski {

namespace {

bool is_periodic_with(const std::vector<Digit>& cycle, std::size_t p) {
  for (std::size_t i = p; i < cycle.size(); ++i) {
    if (cycle[i] != cycle[i - p]) return false;
  }
  return true;
}

std::string join_digits(const std::vector<Digit>& digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(digits[i]);
  }
  return out;
}

}  // namespace

DigitSeq::DigitSeq(SystemPtr sys, std::vector<Digit> preamble, std::vector<Digit> cycle, bool approximate)
    : sys_(std::move(sys)), preamble_(std::move(preamble)), cycle_(std::move(cycle)), approximate_(approximate) {
  if (approximate_ && !cycle_.empty()) {
    throw Error(ErrorCode::InvalidDigits, "an approximate expansion has no cycle");
  }
  canonicalize();
}

void DigitSeq::canonicalize() {
  const std::size_t xi = sys_->periodic_from();
  const std::size_t nu = sys_->cf().nu();
  if (!cycle_.empty()) {
    if (cycle_.size() % nu != 0) {
      throw Error(ErrorCode::InvalidDigits, "cycle length must be a multiple of the period length");
    }
    // Pad the preamble up to xi by unrolling the cycle.
    std::size_t rot = 0;
    while (preamble_.size() < xi) {
      preamble_.push_back(cycle_[rot]);
      rot = (rot + 1) % cycle_.size();
    }
    std::rotate(cycle_.begin(), cycle_.begin() + static_cast<std::ptrdiff_t>(rot), cycle_.end());
  }
  if (std::all_of(cycle_.begin(), cycle_.end(), [](Digit d) { return d == 0; })) cycle_.clear();
  if (!cycle_.empty()) {
    for (std::size_t p = nu; p < cycle_.size(); p += nu) {
      if (cycle_.size() % p == 0 && is_periodic_with(cycle_, p)) {
        cycle_.resize(p);
        break;
      }
    }
    while (preamble_.size() > xi && preamble_.back() == cycle_.back()) {
      std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
      preamble_.pop_back();
    }
  } else if (!approximate_) {
    while (!preamble_.empty() && preamble_.back() == 0) preamble_.pop_back();
  }
}

DigitSeq DigitSeq::from_function(SystemPtr sys, std::size_t start, std::size_t period,
                                 const std::function<Digit(std::size_t)>& fn) {
  std::vector<Digit> pre(start);
  for (std::size_t k = 0; k < start; ++k) pre[k] = fn(k);
  std::vector<Digit> cyc(period);
  for (std::size_t k = 0; k < period; ++k) cyc[k] = fn(start + k);
  return DigitSeq(std::move(sys), std::move(pre), std::move(cyc));
}

Digit DigitSeq::digit(std::size_t k) const {
  if (k < preamble_.size()) return preamble_[k];
  if (cycle_.empty()) return 0;
  return cycle_[(k - preamble_.size()) % cycle_.size()];
}

std::string DigitSeq::to_string() const {
  if (cycle_.empty()) return format_word(preamble_, sys_->mu());
  return "[" + join_digits(preamble_) + "](" + join_digits(cycle_) + ")^ω";
}

bool real_validate(const DigitSeq& x, bool strict) {
  const System& sys = *x.system();
  // Checking through two full cycles covers every adjacency and parity case.
  const std::size_t end = x.preamble().size() + 2 * x.cycle().size() + 1;
  for (std::size_t k = 0; k < end; ++k) {
    const Digit b = x.digit(k);
    const Digit bound = sys.partial_quotient(k + 1);
    if (b > bound) return false;
    if (k == 0 && strict && b == bound) return false;
    if (k > 0 && b == bound && x.digit(k - 1) != 0) return false;
  }
  if (!x.cycle().empty()) {
    bool slack = false;
    for (std::size_t k = x.preamble().size(); k < end && !slack; ++k) {
      // Odd 1-based position k+1 means even index k.
      if (k % 2 == 0 && x.digit(k) < sys.partial_quotient(k + 1)) slack = true;
    }
    if (!slack) return false;
  }
  return true;
}

QuadraticNumber real_decode(const DigitSeq& x) {
  if (!real_validate(x, false)) {
    throw Error(ErrorCode::InvalidDigits, "\"" + x.to_string() + "\" is not a valid expansion");
  }
  const System& sys = *x.system();
  QuadraticNumber total;
  for (std::size_t k = 0; k < x.preamble().size(); ++k) {
    if (x.preamble()[k] != 0) total += QuadraticNumber(static_cast<long>(x.preamble()[k])) * sys.beta(k);
  }
  if (!x.cycle().empty()) {
    const std::size_t s = x.preamble().size();
    const std::size_t len = x.cycle().size();
    QuadraticNumber block;
    for (std::size_t i = 0; i < len; ++i) {
      if (x.cycle()[i] != 0) block += QuadraticNumber(static_cast<long>(x.cycle()[i])) * sys.beta(s + i);
    }
    const QuadraticNumber rho = sys.beta(s + len) / sys.beta(s);
    total += block / (QuadraticNumber(1) - rho);
  }
  return total;
}

TailBounds tail_bounds(std::size_t n, const System& sys, bool constrained) {
  const QuadraticNumber bn = sys.beta(n);
  const QuadraticNumber bp = sys.beta_signed(static_cast<long>(n) - 1);
  if (n % 2 == 0) {
    return {-bn, constrained ? -bp - bn : -bp};
  }
  return {constrained ? -bp - bn : -bp, -bn};
}

TailBounds representable_interval(const System& sys) { return tail_bounds(0, sys, true); }

DigitSeq real_encode(const QuadraticNumber& c, const SystemPtr& sys, std::size_t depth) {
  if (!representable_interval(*sys).contains(c)) {
    throw Error(ErrorCode::OutOfRange, c.to_string() + " lies outside [a_0 - a, a_0 + 1 - a)");
  }
  const std::size_t xi = sys->periodic_from();
  const std::size_t cls = 2 * sys->cf().nu();
  // (index class, constrained, remainder / beta_n) -> first index seen
  std::map<std::tuple<std::size_t, bool, QuadraticNumber>, std::size_t> seen;
  std::vector<Digit> digits;
  QuadraticNumber r = c;
  bool constrained = true;
  for (std::size_t n = 0; n < depth; ++n) {
    if (r.is_zero()) return DigitSeq(sys, std::move(digits));
    const QuadraticNumber& bn = sys->beta(n);
    if (n >= xi) {
      auto key = std::make_tuple((n - xi) % cls, constrained, r / bn);
      auto [it, fresh] = seen.emplace(std::move(key), n);
      if (!fresh) {
        const std::size_t start = it->second;
        std::vector<Digit> cycle(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
        digits.resize(start);
        return DigitSeq(sys, std::move(digits), std::move(cycle));
      }
    }
    const Digit bound = sys->partial_quotient(n + 1) - (constrained ? 1 : 0);
    bool placed = false;
    QuadraticNumber rest = r;
    for (Digit b = 0; b <= bound; ++b) {
      if (b > 0) rest -= bn;
      if (tail_bounds(n + 1, *sys, b > 0).contains(rest)) {
        digits.push_back(b);
        r = std::move(rest);
        constrained = b > 0;
        placed = true;
        break;
      }
    }
    if (!placed) throw Error(ErrorCode::OutOfRange, "no admissible digit at index " + std::to_string(n));
  }
  if (r.is_zero()) return DigitSeq(sys, std::move(digits));
  return DigitSeq(sys, std::move(digits), {}, true);
}

std::strong_ordering real_cmp(const DigitSeq& x, const DigitSeq& y) {
  require_same_system(*x.system(), *y.system());
  std::size_t end = std::max(x.preamble().size(), y.preamble().size());
  const std::size_t lx = std::max<std::size_t>(x.cycle().size(), 1);
  const std::size_t ly = std::max<std::size_t>(y.cycle().size(), 1);
  end += std::lcm(lx, ly);
  for (std::size_t n = 0; n < end; ++n) {
    const Digit b = x.digit(n);
    const Digit c = y.digit(n);
    if (b == c) continue;
    const bool x_less = (n % 2 == 1) ? b > c : c > b;
    return x_less ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

DigitSeq neg_beta_digits(std::size_t n, const SystemPtr& sys) {
  const std::size_t xi = sys->periodic_from();
  const std::size_t period = std::lcm<std::size_t>(2, sys->cf().nu());
  const std::size_t start = std::max(n + 2, xi);
  if (n % 2 == 0) {
    return DigitSeq::from_function(sys, start, period, [&](std::size_t j) -> Digit {
      return (j > n && (j - n) % 2 == 1) ? sys->partial_quotient(j + 1) : 0;
    });
  }
  return DigitSeq::from_function(sys, start, period, [&](std::size_t j) -> Digit {
    if (j == n - 1) return 1;
    if (j == n) return sys->partial_quotient(n + 1) - 1;
    return (j > n && (j - n) % 2 == 0) ? sys->partial_quotient(j + 1) : 0;
  });
}

FMapResult f_map(const Integer& n, const SystemPtr& sys) {
  OstrowskiInt rep = ost_encode(n, sys);
  Integer m = 0;
  QuadraticNumber value;
  for (std::size_t k = 0; k < rep.digits().size(); ++k) {
    const Digit b = rep.digits()[k];
    if (b == 0) continue;
    m += sys->p(k) * b;
    value += QuadraticNumber(static_cast<long>(b)) * sys->beta(k);
  }
  return {std::move(value), std::move(m), DigitSeq(sys, rep.digits())};
}

}  // namespace ostrowski
