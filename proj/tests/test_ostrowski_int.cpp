#include <doctest.h>

#include <functional>
#include <set>

#include "oracles.hpp"
#include "ostrowski/error.hpp"
#include "ostrowski/ostrowski_int.hpp"
#include "ostrowski/system.hpp"

using namespace ostrowski;

namespace {

struct Table {
  std::vector<mpz_class> a;
  oracle::Conv c;
};

Table table_for(const SystemPtr& sys) {
  Table t;
  t.a = oracle::cf_terms(oracle::value(sys->alpha()), 80);
  t.c = oracle::convergents(t.a);
  return t;
}

std::vector<unsigned> as_unsigned(const std::vector<Digit>& d) { return {d.begin(), d.end()}; }

OstrowskiInt word(const char* sys, const char* w) { return OstrowskiInt::parse(System::from_spec(sys), w); }

}  // namespace

TEST_CASE("encode examples") {
  const auto phi = System::from_spec("golden");
  const auto s3 = System::from_spec("sqrt3");
  CHECK(ost_encode(7, phi).word() == "10100");
  CHECK(ost_encode(7, s3).word() == "1100");
  CHECK(ost_encode(1, phi).word() == "10");
  CHECK(ost_encode(1, s3).word() == "10");
  CHECK(ost_encode(1, System::normalized(QuadraticNumber::sqrt(2))).word() == "10");
  CHECK(ost_encode(0, phi).word() == "0");
}

TEST_CASE("decode examples") {
  CHECK(ost_decode(word("golden", "10100")) == 7);
  CHECK(ost_decode(word("sqrt3", "1100")) == 7);
  CHECK(ost_decode(OstrowskiInt::zero(System::from_spec("golden"))) == 0);
  CHECK(ost_decode(word("golden", "0010100")) == 7);
}

TEST_CASE("compare examples") {
  CHECK(ost_cmp(word("golden", "10100"), word("golden", "10010")) > 0);
  CHECK(ost_cmp(word("golden", "10"), word("golden", "100")) < 0);
  CHECK(ost_cmp(word("golden", "1010"), word("golden", "1010")) == 0);
}

TEST_CASE("add and successor examples") {
  const auto phi = System::from_spec("golden");
  const auto s3 = System::from_spec("sqrt3");
  CHECK(ost_add(word("golden", "10100"), word("golden", "10")).word() == "100000");
  CHECK(ost_add(word("golden", "10100"), word("golden", "10"), AddEngine::Digit).word() == "100000");
  CHECK(ost_add(word("golden", "1010"), OstrowskiInt::zero(phi)) == word("golden", "1010"));
  // 14 = q_4 + q_2 with q = 1, 1, 3, 4, 11.
  const auto t = oracle::greedy(14, table_for(s3).c.q);
  CHECK(oracle::word(t) == "10100");
  CHECK(ost_add(word("sqrt3", "1100"), word("sqrt3", "1100")).word() == oracle::word(t));
  CHECK(ost_succ(OstrowskiInt::zero(phi)).word() == "10");
  CHECK(ost_succ(word("golden", "10100")).word() == "100000");
  CHECK(ost_succ(word("sqrt3", "1100")).word() == oracle::word(oracle::greedy(8, table_for(s3).c.q)));
  CHECK(ost_succ(word("sqrt3", "1100")).word() == "2000");
}

TEST_CASE("encode against the oracle greedy expansion") {
  for (const char* name : {"golden", "sqrt2", "sqrt3"}) {
    const auto sys = System::from_spec(name);
    const Table t = table_for(sys);
    for (long n = 0; n < 20000; ++n) {
      const auto got = ost_encode(n, sys);
      const auto want = oracle::greedy(n, t.c.q);
      REQUIRE(as_unsigned(got.digits()) == want);
      REQUIRE(oracle::valid_digits(want, t.a));
    }
  }
}

TEST_CASE("valid strings are exactly the oracle-valid ones") {
  for (const char* name : {"golden", "sqrt2", "sqrt3"}) {
    const auto sys = System::from_spec(name);
    const Table t = table_for(sys);
    const std::size_t len = sys->mu() > 2 ? 6 : 10;
    std::set<mpz_class> seen;
    std::vector<unsigned> b(len, 0);
    std::function<void(std::size_t)> walk = [&](std::size_t k) {
      if (k == len) {
        const std::vector<Digit> d(b.begin(), b.end());
        const bool ok = oracle::valid_digits(b, t.a);
        REQUIRE(ost_validate(*sys, d) == ok);
        if (ok) {
          mpz_class v = 0;
          for (std::size_t i = 0; i < len; ++i) v += t.c.q[i] * b[i];
          REQUIRE(ost_decode(*sys, d) == v);
          REQUIRE(seen.insert(v).second);
        }
        return;
      }
      const unsigned top = static_cast<unsigned>(t.a[k + 1].get_ui());
      for (unsigned x = 0; x <= top; ++x) {
        b[k] = x;
        walk(k + 1);
      }
    };
    walk(0);
    // Onto {0, ..., q_len - 1}.
    CHECK(seen.size() == t.c.q[len].get_ui());
    CHECK(*seen.rbegin() == t.c.q[len] - 1);
  }
}

TEST_CASE("digit adder against Zeckendorf sums") {
  const auto phi = System::from_spec("golden");
  const auto fib = oracle::fibonacci(40);
  for (long x = 0; x < 300; ++x) {
    for (long y = 0; y < 300; y += 7) {
      const auto s = ost_add(ost_encode(x, phi), ost_encode(y, phi), AddEngine::Digit);
      // q_k = F_{k+1} in the golden system.
      mpz_class v = 0;
      for (std::size_t k = 0; k < s.digits().size(); ++k) v += fib[k] * s.digits()[k];
      REQUIRE(v == x + y);
      REQUIRE(ost_validate(*phi, s.digits()));
    }
  }
}

TEST_CASE("zeckendorf normalization") {
  const auto fib = oracle::fibonacci(40);
  // Every {0,1,2} string of length 10 with b_1 = 0.
  for (unsigned code = 0; code < 19683; ++code) {
    std::vector<Digit> d(10, 0);
    unsigned c = code;
    for (std::size_t k = 1; k < 10; ++k, c /= 3) d[k] = c % 3;
    mpz_class v = 0;
    for (std::size_t k = 0; k < 10; ++k) v += fib[k] * d[k];
    const auto z = zeckendorf_normalize(d);
    mpz_class w = 0;
    for (std::size_t k = 0; k < z.size(); ++k) w += fib[k] * z[k];
    REQUIRE(w == v);
    REQUIRE(ost_validate(*System::from_spec("golden"), z));
  }
}

TEST_CASE("digit engine is golden only") {
  const auto s3 = System::from_spec("sqrt3");
  try {
    (void)ost_add(ost_encode(1, s3), ost_encode(2, s3), AddEngine::Digit);
    FAIL("expected UnsupportedSystem");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedSystem);
  }
}

TEST_CASE("invalid words") {
  for (const char* w : {"11", "1", "2", "1001", "x"}) {
    try {
      (void)word("golden", w);
      FAIL("expected an error for ", w);
    } catch (const Error& e) {
      CHECK((e.code() == ErrorCode::InvalidDigits || e.code() == ErrorCode::ParseError));
    }
  }
}

TEST_CASE("mixed systems") {
  try {
    (void)ost_cmp(word("golden", "10"), word("sqrt3", "10"));
    FAIL("expected IncomparableSystems");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncomparableSystems);
  }
}

TEST_CASE("wide digits use separators") {
  const auto s2 = System::from_spec("(4*sqrt(2))/3");
  CHECK(s2->mu() == 7);
  const auto x = ost_encode(1000, System::normalized(QuadraticNumber::sqrt(13)));
  CHECK(OstrowskiInt::parse(x.system(), x.word()) == x);
  CHECK(format_word({0, 3, 1}, 12) == "1.3.0");
  CHECK(parse_word("1.3.0", 12) == std::vector<Digit>{0, 3, 1});
}
