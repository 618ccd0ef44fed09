#include "ostrowski/qfield.hpp"

#include <cctype>
#include <cmath>
#include <functional>

namespace ostrowski {

namespace {

constexpr unsigned long kTrialDivisionLimit = 1'000'000;

Integer gcd3(const Integer& a, const Integer& b, const Integer& c) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::size_t limb_hash(const Integer& n) {
  const auto size = mpz_size(n.get_mpz_t());
  std::size_t h = std::hash<long>{}(static_cast<long>(size) * mpz_sgn(n.get_mpz_t()));
  for (std::size_t i = 0; i < size && i < 4; ++i) {
    h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(n.get_mpz_t(), static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  QuadraticNumber parse() {
    skip_space();
    int outer_sign = 1;
    if (peek() == '-' || peek() == '+') {
      // A sign directly before "(" applies to the whole literal.
      std::size_t save = pos_;
      char c = get();
      skip_space();
      if (peek() == '(') {
        outer_sign = c == '-' ? -1 : 1;
      } else {
        pos_ = save;
      }
    }
    QuadraticNumber value;
    int terms = 0;
    if (peek() == '(') {
      get();
      value = parse_sum(terms);
      expect(')');
      terms = 1;
    } else {
      value = parse_sum(terms);
    }
    skip_space();
    if (peek() == '/') {
      if (terms > 1) fail("ambiguous division; wrap the numerator in parentheses");
      get();
      skip_space();
      Integer den = parse_integer();
      if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in literal");
      value /= QuadraticNumber(den);
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing characters");
    return outer_sign < 0 ? -value : value;
  }

 private:
  QuadraticNumber parse_sum(int& terms) {
    skip_space();
    QuadraticNumber total;
    bool first = true;
    while (true) {
      skip_space();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_space();
      } else if (!first) {
        break;
      }
      QuadraticNumber term = parse_term();
      total += sign < 0 ? -term : term;
      ++terms;
      first = false;
      skip_space();
      if (peek() != '+' && peek() != '-') break;
    }
    return total;
  }

  QuadraticNumber parse_term() {
    if (starts_with("sqrt")) return parse_sqrt();
    Integer coeff = parse_integer();
    skip_space();
    if (peek() == '*') {
      get();
      skip_space();
      return QuadraticNumber(coeff) * parse_sqrt();
    }
    return QuadraticNumber(coeff);
  }

  QuadraticNumber parse_sqrt() {
    if (!starts_with("sqrt")) fail("expected sqrt(...)");
    pos_ += 4;
    skip_space();
    expect('(');
    skip_space();
    Integer radicand = parse_integer();
    skip_space();
    expect(')');
    if (radicand < 0) fail("negative radicand");
    return QuadraticNumber::sqrt(radicand);
  }

  Integer parse_integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Integer square_free_part(const Integer& n, Integer* square_root_of_rest) {
  Integer rest = n;
  Integer root = 1;
  Integer free = 1;
  for (unsigned long f = 2; f <= kTrialDivisionLimit; ++f) {
    if (Integer(f) * f > rest) break;
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), f)) continue;
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), f)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), f);
      ++exponent;
    }
    for (unsigned i = 0; i < exponent / 2; ++i) root *= f;
    if (exponent % 2 == 1) free *= f;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Integer s;
      mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
      root *= s;
    } else {
      free *= rest;
    }
  }
  if (square_root_of_rest != nullptr) *square_root_of_rest = root;
  return free;
}

QuadraticNumber::QuadraticNumber(Integer p, Integer q, Integer r, Integer radicand)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(1) {
  if (r_ == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (radicand < 0) throw Error(ErrorCode::ParseError, "negative radicand");
  if (radicand == 0) {
    q_ = 0;
  } else {
    Integer root;
    d_ = square_free_part(radicand, &root);
    q_ *= root;
    if (d_ == 1) {
      p_ += q_;
      q_ = 0;
    }
  }
  canonicalize();
}

QuadraticNumber QuadraticNumber::rational(const Integer& num, const Integer& den) {
  return QuadraticNumber(num, 0, den, 1);
}

QuadraticNumber QuadraticNumber::sqrt(const Integer& radicand) { return QuadraticNumber(0, 1, 1, radicand); }

QuadraticNumber QuadraticNumber::parse(std::string_view text) { return LiteralParser(text).parse(); }

void QuadraticNumber::canonicalize() {
  if (r_ < 0) {
    r_ = -r_;
    p_ = -p_;
    q_ = -q_;
  }
  if (r_ == 1) return;
  Integer g = gcd3(p_, q_, r_);
  if (g != 1) {
    mpz_divexact(p_.get_mpz_t(), p_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(q_.get_mpz_t(), q_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(r_.get_mpz_t(), r_.get_mpz_t(), g.get_mpz_t());
  }
}

const Integer& QuadraticNumber::common_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.q_ != 0 && y.q_ != 0) {
    if (x.d_ != y.d_) {
      throw Error(ErrorCode::MixedRadicand,
                  "sqrt(" + x.d_.get_str() + ") and sqrt(" + y.d_.get_str() + ") in one operation");
    }
    return x.d_;
  }
  if (x.q_ != 0) return x.d_;
  if (y.q_ != 0) return y.d_;
  return x.d_ != 1 ? x.d_ : y.d_;
}

int QuadraticNumber::sign() const {
  const int sp = sgn(p_);
  const int sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: the larger of p^2 and q^2*d wins.
  Integer pp = p_ * p_;
  Integer qq = q_ * q_ * d_;
  const int c = cmp(pp, qq);
  return c > 0 ? sp : sq;
}

Integer QuadraticNumber::floor() const {
  Integer estimate;
  if (q_ == 0) {
    mpz_fdiv_q(estimate.get_mpz_t(), p_.get_mpz_t(), r_.get_mpz_t());
    return estimate;
  }
  Integer t;
  Integer qq = q_ * q_ * d_;
  mpz_sqrt(t.get_mpz_t(), qq.get_mpz_t());
  // t = floor(|q| sqrt d); q sqrt d is irrational, so its floor is t or -t-1.
  // p + q sqrt d then lies strictly between num and num + 1, and no multiple
  // of r does, so floor(num / r) is already exact.
  Integer num = p_ + (q_ > 0 ? t : -t - 1);
  mpz_fdiv_q(estimate.get_mpz_t(), num.get_mpz_t(), r_.get_mpz_t());
  return estimate;
}

Integer QuadraticNumber::to_integer() const {
  if (!is_integer()) throw Error(ErrorCode::NotAnInteger, to_string() + " is not an integer");
  return p_;
}

QuadraticNumber QuadraticNumber::conjugate() const {
  QuadraticNumber c = *this;
  c.q_ = -c.q_;
  return c;
}

QuadraticNumber QuadraticNumber::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  // r / (p + q sqrt d) = r (p - q sqrt d) / (p^2 - q^2 d)
  QuadraticNumber out;
  out.d_ = d_;
  Integer norm = p_ * p_ - q_ * q_ * d_;
  out.p_ = r_ * p_;
  out.q_ = -r_ * q_;
  out.r_ = norm;
  out.canonicalize();
  return out;
}

double QuadraticNumber::approx() const {
  return (p_.get_d() + q_.get_d() * std::sqrt(d_.get_d())) / r_.get_d();
}

std::string QuadraticNumber::to_string() const {
  if (q_ == 0) {
    if (r_ == 1) return p_.get_str();
    return p_.get_str() + "/" + r_.get_str();
  }
  std::string body;
  if (p_ != 0) {
    body = p_.get_str();
    body += q_ > 0 ? "+" : "-";
  } else if (q_ < 0) {
    body = "-";
  }
  Integer mag = ::abs(q_);
  if (mag != 1) body += mag.get_str() + "*";
  body += "sqrt(" + d_.get_str() + ")";
  if (r_ == 1) return body;
  return "(" + body + ")/" + r_.get_str();
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber n = *this;
  n.p_ = -n.p_;
  n.q_ = -n.q_;
  return n;
}

QuadraticNumber& QuadraticNumber::add_scaled(const QuadraticNumber& rhs, int sign) {
  const Integer& d = common_radicand(*this, rhs);
  if (&d != &d_) d_ = d;
  if (r_ == rhs.r_) {
    if (sign > 0) {
      p_ += rhs.p_;
      q_ += rhs.q_;
    } else {
      p_ -= rhs.p_;
      q_ -= rhs.q_;
    }
  } else {
    p_ *= rhs.r_;
    q_ *= rhs.r_;
    if (sign > 0) {
      mpz_addmul(p_.get_mpz_t(), rhs.p_.get_mpz_t(), r_.get_mpz_t());
      mpz_addmul(q_.get_mpz_t(), rhs.q_.get_mpz_t(), r_.get_mpz_t());
    } else {
      mpz_submul(p_.get_mpz_t(), rhs.p_.get_mpz_t(), r_.get_mpz_t());
      mpz_submul(q_.get_mpz_t(), rhs.q_.get_mpz_t(), r_.get_mpz_t());
    }
    r_ *= rhs.r_;
  }
  canonicalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& rhs) { return add_scaled(rhs, 1); }

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& rhs) { return add_scaled(rhs, -1); }

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& rhs) {
  const Integer d = common_radicand(*this, rhs);
  Integer p = p_ * rhs.p_ + q_ * rhs.q_ * d;
  Integer q = p_ * rhs.q_ + q_ * rhs.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  r_ *= rhs.r_;
  d_ = std::move(d);
  canonicalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return *this *= rhs.inverse();
}

bool operator==(const QuadraticNumber& lhs, const QuadraticNumber& rhs) {
  if (lhs.p_ != rhs.p_ || lhs.q_ != rhs.q_ || lhs.r_ != rhs.r_) return false;
  return lhs.q_ == 0 || lhs.d_ == rhs.d_;
}

std::strong_ordering operator<=>(const QuadraticNumber& lhs, const QuadraticNumber& rhs) {
  const int s = (lhs - rhs).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t QuadraticNumber::hash() const {
  std::size_t h = limb_hash(p_);
  h ^= limb_hash(q_) * 31 + (h << 7);
  h ^= limb_hash(r_) * 131 + (h >> 3);
  if (q_ != 0) h ^= limb_hash(d_) * 1031;
  return h;
}

}  // namespace ostrowski
