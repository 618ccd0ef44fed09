#include "ostrowski/ostrowski_int.hpp"

#include <algorithm>
#include <cctype>

namespace ostrowski {

namespace {

void trim(std::vector<Digit>& digits) {
  while (!digits.empty() && digits.back() == 0) digits.pop_back();
}

Digit parse_digit(std::string_view token, std::string_view word) {
  if (token.empty()) throw Error(ErrorCode::ParseError, "empty digit in word \"" + std::string(word) + "\"");
  unsigned long value = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::ParseError, "bad digit in word \"" + std::string(word) + "\"");
    }
    value = value * 10 + static_cast<unsigned long>(c - '0');
    if (value > 0x7fffffffUL) throw Error(ErrorCode::ParseError, "digit overflow");
  }
  return static_cast<Digit>(value);
}

}  // namespace

OstrowskiInt::OstrowskiInt(SystemPtr sys, std::vector<Digit> digits) : sys_(std::move(sys)), digits_(std::move(digits)) {
  trim(digits_);
  if (!ost_validate(*sys_, digits_)) {
    throw Error(ErrorCode::InvalidDigits, "\"" + format_word(digits_, sys_->mu()) + "\" is not an Ostrowski word");
  }
}

OstrowskiInt OstrowskiInt::parse(SystemPtr sys, std::string_view word) {
  std::vector<Digit> digits = parse_word(word, sys->mu());
  return OstrowskiInt(std::move(sys), std::move(digits));
}

std::string OstrowskiInt::word() const { return format_word(digits_, sys_->mu()); }

bool ost_validate(const System& sys, const std::vector<Digit>& digits) {
  for (std::size_t k = 0; k < digits.size(); ++k) {
    const Digit bound = sys.partial_quotient(k + 1);
    if (k == 0 ? digits[k] >= bound : digits[k] > bound) return false;
    if (k > 0 && digits[k] == bound && digits[k - 1] != 0) return false;
  }
  return true;
}

OstrowskiInt ost_encode(const Integer& n, const SystemPtr& sys) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative integers have no Ostrowski representation");
  if (n == 0) return OstrowskiInt::zero(sys);
  std::size_t k = sys->top_index(n);
  std::vector<Digit> digits(k + 1, 0);
  Integer rest = n;
  Integer quot;
  for (std::size_t i = k + 1; i-- > 0 && rest != 0;) {
    const Integer& qi = sys->q(i);
    if (qi > rest) continue;
    mpz_fdiv_qr(quot.get_mpz_t(), rest.get_mpz_t(), rest.get_mpz_t(), qi.get_mpz_t());
    digits[i] = static_cast<Digit>(quot.get_ui());
  }
  return OstrowskiInt(sys, std::move(digits));
}

Integer ost_decode(const System& sys, const std::vector<Digit>& digits) {
  if (!ost_validate(sys, digits)) {
    throw Error(ErrorCode::InvalidDigits, "\"" + format_word(digits, sys.mu()) + "\" is not an Ostrowski word");
  }
  Integer total = 0;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (digits[k] != 0) total += sys.q(k) * digits[k];
  }
  return total;
}

Integer ost_decode(const OstrowskiInt& x) {
  Integer total = 0;
  const auto& digits = x.digits();
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (digits[k] != 0) total += x.system()->q(k) * digits[k];
  }
  return total;
}

std::strong_ordering ost_cmp(const OstrowskiInt& x, const OstrowskiInt& y) {
  require_same_system(*x.system(), *y.system());
  const auto& a = x.digits();
  const auto& b = y.digits();
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] <=> b[k];
  }
  return std::strong_ordering::equal;
}

std::vector<Digit> zeckendorf_normalize(std::vector<Digit> z) {
  // Local rewrites until none applies, with q_0 = q_1 = 1 and q_{-1} = 0:
  // 2q_i = q_{i+1} + q_{i-2} and q_i + q_{i+1} = q_{i+2}.
  z.resize(z.size() + 4, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    if (z[0] != 0) {
      z[1] += z[0];
      z[0] = 0;
    }
    for (std::size_t i = 1; i + 2 < z.size(); ++i) {
      if (z[i] >= 2) {
        z[i] -= 2;
        z[i + 1] += 1;
        if (i >= 2) z[i == 2 ? 1 : i - 2] += 1;
        changed = true;
      }
      if (z[i] != 0 && z[i + 1] != 0) {
        z[i] -= 1;
        z[i + 1] -= 1;
        z[i + 2] += 1;
        changed = true;
      }
    }
    if (z[z.size() - 1] != 0 || z[z.size() - 2] != 0) z.resize(z.size() + 2, 0);
  }
  trim(z);
  return z;
}

OstrowskiInt ost_add(const OstrowskiInt& x, const OstrowskiInt& y, AddEngine engine) {
  require_same_system(*x.system(), *y.system());
  if (engine == AddEngine::Reference) return ost_encode(ost_decode(x) + ost_decode(y), x.system());
  if (!x.system()->is_golden()) {
    throw Error(ErrorCode::UnsupportedSystem, "the digit adder only handles the golden system");
  }
  std::vector<Digit> sum(std::max(x.digits().size(), y.digits().size()), 0);
  for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = x.digit(k) + y.digit(k);
  return OstrowskiInt(x.system(), zeckendorf_normalize(std::move(sum)));
}

OstrowskiInt ost_succ(const OstrowskiInt& x) { return ost_add(x, ost_encode(1, x.system())); }

std::string format_word(const std::vector<Digit>& lsd_first, Digit mu) {
  std::vector<Digit> digits = lsd_first;
  trim(digits);
  if (digits.empty()) return "0";
  std::string out;
  const bool dotted = mu > 9;
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (dotted && k + 1 != digits.size()) out += '.';
    out += std::to_string(digits[k]);
  }
  return out;
}

std::vector<Digit> parse_word(std::string_view word, Digit mu) {
  std::vector<Digit> msd_first;
  if (mu > 9) {
    std::size_t start = 0;
    while (true) {
      std::size_t dot = word.find('.', start);
      msd_first.push_back(parse_digit(word.substr(start, dot - start), word));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  } else {
    if (word.empty()) throw Error(ErrorCode::ParseError, "empty word");
    for (char c : word) msd_first.push_back(parse_digit(std::string_view(&c, 1), word));
  }
  std::reverse(msd_first.begin(), msd_first.end());
  trim(msd_first);
  return msd_first;
}

}  // namespace ostrowski
