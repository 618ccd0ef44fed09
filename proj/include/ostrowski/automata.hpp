#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ostrowski/ostrowski_int.hpp"

namespace ostrowski {

using Letter = std::uint32_t;
// Letters in reading order, most significant first.
using Word = std::vector<Letter>;

// Sigma^arity with Sigma = {0, ..., base-1}.  A tuple (t_0, ..., t_{n-1})
// is the letter sum_i t_i base^i.
struct Alphabet {
  std::uint32_t base = 2;
  std::uint32_t arity = 1;

  std::uint32_t size() const;
  Letter encode(const std::vector<Digit>& tuple) const;
  std::vector<Digit> decode(Letter letter) const;
  Digit track(Letter letter, std::uint32_t i) const;
  std::string format(Letter letter) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

// Complete deterministic automaton; delta is row-major (state * size + letter).
struct Dfa {
  Alphabet alphabet;
  std::uint32_t start = 0;
  std::vector<std::uint32_t> delta;
  std::vector<bool> accepting;

  std::uint32_t num_states() const { return static_cast<std::uint32_t>(accepting.size()); }
  std::uint32_t next(std::uint32_t state, Letter letter) const { return delta[state * alphabet.size() + letter]; }
  bool accepts(const Word& word) const;
};

struct Nfa {
  Alphabet alphabet;
  std::vector<std::uint32_t> starts;
  // edges[state][letter] lists targets.
  std::vector<std::vector<std::vector<std::uint32_t>>> edges;
  std::vector<bool> accepting;
};

// Left-pads every word with 0 to the longest length and reads them letterwise.
Word convolve(const std::vector<std::vector<Digit>>& msd_words, std::uint32_t base);
// rho_a(n) read most significant first; empty for 0.
std::vector<Digit> rho(const Integer& n, const SystemPtr& sys);

// Keeps reachable states, numbered breadth first from the start in letter
// order.  Two minimal automata for the same language come out identical.
Dfa trim(const Dfa& d);
Dfa complement(const Dfa& d);
enum class BoolOp { And, Or, Xor, Minus };
Dfa product(const Dfa& x, const Dfa& y, BoolOp op = BoolOp::And);
Nfa reverse(const Dfa& d);
Dfa determinize(const Nfa& n);
Dfa minimize(const Dfa& d);                 // Hopcroft partition refinement
Dfa minimize_table_filling(const Dfa& d);   // pairwise distinguishability table
Dfa minimize_brzozowski(const Dfa& d);      // determinize(reverse(determinize(reverse(d))))
bool is_empty(const Dfa& d);
bool equivalent(const Dfa& x, const Dfa& y);

Dfa universal(const Alphabet& alphabet);
// Words of length at most n.
Dfa max_length(const Alphabet& alphabet, std::size_t n);
// Accepts exactly the given words.
Dfa from_words(const Alphabet& alphabet, const std::vector<Word>& words);
// The automaton over Sigma^arity that runs d on track i.
Dfa lift_track(const Dfa& d, std::uint32_t arity, std::uint32_t track);

// 0* rho_a(N): valid digit strings, most significant first.  Built as a
// least-significant-first automaton over (position class, previous digit is
// zero), then reversed, determinized and minimized.
Dfa build_validity_dfa(const SystemPtr& sys);
// Pairs (0* rho(M), 0* rho(N)) with M < N.
Dfa build_cmp_dfa(const SystemPtr& sys);

struct AdderBuild {
  Dfa dfa;
  int carry_bound = 0;  // cap on the carry registers at which the language stabilized
};
// Triples with x + y = z over the golden system.  Reading most significant
// first, the pending value c q_k + d q_{k-1} evolves as (c, d) -> (c + d + e, c)
// with e = x + y - z; a word is accepted iff c = 0 at the end and all three
// tracks are valid.  Throws UnsupportedSystem for other systems.
AdderBuild build_golden_adder(const SystemPtr& sys);

// Number of Myhill-Nerode classes of the valid-word language seen on
// prefixes and suffixes of length <= n, computed from ost_validate alone.
std::size_t brute_force_state_count(const SystemPtr& sys, std::size_t n);

// DOT digraph with states in index order.
std::string to_dot(const Dfa& d, const std::string& name = "dfa");
// Line-oriented dump: header, accepting states, one line per transition.
std::string to_text(const Dfa& d);

}  // namespace ostrowski
