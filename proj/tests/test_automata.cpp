#include <doctest.h>

#include <functional>
#include <map>
#include <random>

#include "oracles.hpp"
#include "ostrowski/automata.hpp"
#include "ostrowski/error.hpp"
#include "ostrowski/ostrowski_int.hpp"

using namespace ostrowski;

namespace {

std::vector<std::vector<Digit>> all_words(Digit base, std::size_t max_len) {
  std::vector<std::vector<Digit>> out{{}};
  std::vector<std::vector<Digit>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Digit>> next;
    for (const auto& w : layer) {
      for (Digit d = 0; d < base; ++d) {
        auto v = w;
        v.push_back(d);
        next.push_back(v);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// MSD-first digits valid for the oracle rules.
bool oracle_valid(const std::vector<Digit>& msd, const std::vector<mpz_class>& a) {
  std::vector<unsigned> lsd(msd.rbegin(), msd.rend());
  return oracle::valid_digits(lsd, a);
}

Word letters(const std::vector<Digit>& msd) { return Word(msd.begin(), msd.end()); }

}  // namespace

TEST_CASE("convolution") {
  const auto w = convolve({{1, 0, 1}, {1}}, 2);
  const Alphabet ab{2, 2};
  REQUIRE(w.size() == 3);
  CHECK(ab.decode(w[0]) == std::vector<Digit>{1, 0});
  CHECK(ab.decode(w[1]) == std::vector<Digit>{0, 0});
  CHECK(ab.decode(w[2]) == std::vector<Digit>{1, 1});
  CHECK(convolve({{}, {}}, 2).empty());
  const auto t = convolve({{1, 0}, {1, 0}, {1, 0, 0}}, 2);
  const Alphabet ab3{2, 3};
  CHECK(ab3.decode(t[0]) == std::vector<Digit>{0, 0, 1});
  CHECK(ab3.decode(t[1]) == std::vector<Digit>{1, 1, 0});
  CHECK(ab3.decode(t[2]) == std::vector<Digit>{0, 0, 0});
}

TEST_CASE("validity automaton against the oracle rules") {
  for (const char* name : {"golden", "sqrt3", "sqrt2"}) {
    const auto sys = System::from_spec(name);
    const auto a = oracle::cf_terms(oracle::value(sys->alpha()), 40);
    const Dfa d = build_validity_dfa(sys);
    const std::size_t len = sys->mu() > 2 ? 6 : 11;
    for (const auto& w : all_words(sys->mu() + 1, len)) REQUIRE(d.accepts(letters(w)) == oracle_valid(w, a));
  }
}

TEST_CASE("minimal golden validity automaton") {
  const auto phi = System::from_spec("golden");
  const Dfa d = minimize(build_validity_dfa(phi));
  CHECK(d.num_states() <= 4);
  // Myhill-Nerode classes of {0,1}* words with no 11 and no final 1, by
  // distinguishing suffixes up to length 8.
  const auto a = oracle::cf_terms(oracle::value(phi->alpha()), 40);
  std::map<std::vector<bool>, int> classes;
  const auto suffixes = all_words(2, 8);
  for (const auto& u : all_words(2, 8)) {
    std::vector<bool> sig;
    for (const auto& v : suffixes) {
      auto w = u;
      w.insert(w.end(), v.begin(), v.end());
      sig.push_back(oracle_valid(w, a));
    }
    classes.emplace(sig, 0);
  }
  CHECK(d.num_states() == classes.size());
  CHECK(brute_force_state_count(phi, 8) == classes.size());
  CHECK(minimize_table_filling(build_validity_dfa(phi)).num_states() == classes.size());
}

TEST_CASE("comparison automaton") {
  const auto phi = System::from_spec("golden");
  const Dfa d = build_cmp_dfa(phi);
  auto accepts = [&](long m, long n) { return d.accepts(convolve({rho(m, phi), rho(n, phi)}, 2)); };
  CHECK(accepts(1, 2));
  CHECK_FALSE(accepts(5, 5));
  CHECK_FALSE(accepts(2, 1));
  for (long m = 0; m < 150; ++m) {
    for (long n = 0; n < 150; ++n) REQUIRE(accepts(m, n) == (m < n));
  }
}

TEST_CASE("golden adder") {
  const auto phi = System::from_spec("golden");
  const Dfa d = build_golden_adder(phi).dfa;
  auto accepts = [&](long x, long y, long z) {
    return d.accepts(convolve({rho(x, phi), rho(y, phi), rho(z, phi)}, 2));
  };
  CHECK(accepts(7, 1, 8));
  CHECK(accepts(0, 0, 0));
  CHECK_FALSE(accepts(7, 1, 7));
  for (long x = 0; x < 120; ++x) {
    for (long y = 0; y < 120; ++y) {
      REQUIRE(accepts(x, y, x + y));
      REQUIRE_FALSE(accepts(x, y, x + y + 1));
    }
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> pick(0, 5000);
  for (int i = 0; i < 2000; ++i) {
    const long x = pick(rng), y = pick(rng), z = pick(rng);
    CHECK(accepts(x, y, z) == (x + y == z));
  }
  try {
    (void)build_golden_adder(System::from_spec("sqrt3"));
    FAIL("expected UnsupportedSystem");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedSystem);
  }
}

TEST_CASE("boolean operations and minimizers agree") {
  const auto phi = System::from_spec("golden");
  const Dfa v = build_validity_dfa(phi);
  const Alphabet ab = v.alphabet;
  const Dfa len5 = max_length(ab, 5);
  const Dfa both = product(v, len5, BoolOp::And);
  const auto words = all_words(2, 7);
  for (const auto& w : words) {
    const Word l = letters(w);
    CHECK(both.accepts(l) == (v.accepts(l) && w.size() <= 5));
    CHECK(complement(v).accepts(l) == !v.accepts(l));
    CHECK(product(v, len5, BoolOp::Xor).accepts(l) == (v.accepts(l) != len5.accepts(l)));
    CHECK(product(v, len5, BoolOp::Minus).accepts(l) == (v.accepts(l) && !len5.accepts(l)));
  }
  const Dfa m1 = minimize(both), m2 = minimize_table_filling(both), m3 = minimize_brzozowski(both);
  CHECK(m1.num_states() == m2.num_states());
  CHECK(m1.num_states() == m3.num_states());
  CHECK(equivalent(m1, both));
  CHECK(equivalent(m2, m3));
  CHECK(trim(m1).delta == trim(m2).delta);
  CHECK(is_empty(product(v, complement(v))));
  CHECK(equivalent(product(v, complement(v), BoolOp::Or), universal(ab)));
  // from_words accepts exactly its list.
  std::vector<Word> list{{1, 0}, {0}, {1, 0, 0}};
  const Dfa fw = from_words(ab, list);
  for (const auto& w : words) {
    const Word l = letters(w);
    CHECK(fw.accepts(l) == (l == list[0] || l == list[1] || l == list[2]));
  }
}

TEST_CASE("export") {
  const auto phi = System::from_spec("golden");
  const Dfa v = minimize(build_validity_dfa(phi));
  const std::string dot = to_dot(v, "validity");
  CHECK(dot.find("digraph") != std::string::npos);
  std::size_t nodes = 0;
  for (std::uint32_t s = 0; s < v.num_states(); ++s) {
    if (dot.find("  " + std::to_string(s) + " [") != std::string::npos) ++nodes;
  }
  CHECK(nodes == v.num_states());
  CHECK(nodes <= 4);
  const Dfa empty = minimize(product(v, complement(v)));
  CHECK(empty.num_states() == 1);
  CHECK_FALSE(empty.accepting[0]);
  CHECK(to_dot(minimize(build_cmp_dfa(phi)), "cmp").find("digraph") != std::string::npos);
  CHECK(to_text(v).rfind("dfa base=2", 0) == 0);
}
