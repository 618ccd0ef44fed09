#include "ostrowski/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace ostrowski {

namespace {

constexpr std::uint32_t kNone = 0xffffffffU;

void require_alphabet(const Alphabet& x, const Alphabet& y) {
  if (!(x == y)) throw Error(ErrorCode::AlphabetMismatch, "automata read different alphabets");
}

// Builds a complete automaton by exploring from the start state; key maps a
// state descriptor to its index.
template <typename State, typename Step, typename Accept>
Dfa explore(const Alphabet& alphabet, State start, Step step, Accept accept) {
  Dfa d;
  d.alphabet = alphabet;
  std::map<State, std::uint32_t> index;
  std::deque<State> queue;
  index.emplace(start, 0);
  queue.push_back(start);
  d.accepting.push_back(accept(start));
  const std::uint32_t sigma = alphabet.size();
  std::vector<State> order{start};
  for (std::size_t at = 0; at < order.size(); ++at) {
    const State cur = order[at];
    for (Letter c = 0; c < sigma; ++c) {
      State nxt = step(cur, c);
      auto [it, fresh] = index.emplace(nxt, static_cast<std::uint32_t>(order.size()));
      if (fresh) {
        order.push_back(nxt);
        d.accepting.push_back(accept(nxt));
      }
      d.delta.push_back(it->second);
    }
  }
  return d;
}

}  // namespace

std::uint32_t Alphabet::size() const {
  std::uint32_t n = 1;
  for (std::uint32_t i = 0; i < arity; ++i) n *= base;
  return n;
}

Letter Alphabet::encode(const std::vector<Digit>& tuple) const {
  if (tuple.size() != arity) throw Error(ErrorCode::AlphabetMismatch, "tuple arity mismatch");
  Letter letter = 0;
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (tuple[i] >= base) throw Error(ErrorCode::AlphabetMismatch, "digit outside the alphabet");
    letter = letter * base + tuple[i];
  }
  return letter;
}

std::vector<Digit> Alphabet::decode(Letter letter) const {
  std::vector<Digit> tuple(arity);
  for (std::uint32_t i = 0; i < arity; ++i) {
    tuple[i] = letter % base;
    letter /= base;
  }
  return tuple;
}

Digit Alphabet::track(Letter letter, std::uint32_t i) const {
  for (std::uint32_t k = 0; k < i; ++k) letter /= base;
  return letter % base;
}

std::string Alphabet::format(Letter letter) const {
  if (arity == 1) return std::to_string(letter);
  std::string out = "(";
  const auto tuple = decode(letter);
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(tuple[i]);
  }
  return out + ")";
}

bool Dfa::accepts(const Word& word) const {
  std::uint32_t s = start;
  const std::uint32_t sigma = alphabet.size();
  for (Letter c : word) {
    if (c >= sigma) throw Error(ErrorCode::AlphabetMismatch, "letter outside the alphabet");
    s = next(s, c);
  }
  return accepting[s];
}

Word convolve(const std::vector<std::vector<Digit>>& msd_words, std::uint32_t base) {
  if (msd_words.empty()) throw Error(ErrorCode::AlphabetMismatch, "nothing to convolve");
  const Alphabet alphabet{base, static_cast<std::uint32_t>(msd_words.size())};
  std::size_t len = 0;
  for (const auto& w : msd_words) len = std::max(len, w.size());
  Word out(len);
  std::vector<Digit> tuple(msd_words.size());
  for (std::size_t pos = 0; pos < len; ++pos) {
    for (std::size_t t = 0; t < msd_words.size(); ++t) {
      const auto& w = msd_words[t];
      const std::size_t pad = len - w.size();
      tuple[t] = pos < pad ? 0 : w[pos - pad];
    }
    out[pos] = alphabet.encode(tuple);
  }
  return out;
}

std::vector<Digit> rho(const Integer& n, const SystemPtr& sys) {
  std::vector<Digit> digits = ost_encode(n, sys).digits();
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Dfa trim(const Dfa& d) {
  const std::uint32_t sigma = d.alphabet.size();
  std::vector<std::uint32_t> index(d.num_states(), kNone);
  std::vector<std::uint32_t> order{d.start};
  index[d.start] = 0;
  for (std::size_t at = 0; at < order.size(); ++at) {
    for (Letter c = 0; c < sigma; ++c) {
      const std::uint32_t t = d.next(order[at], c);
      if (index[t] == kNone) {
        index[t] = static_cast<std::uint32_t>(order.size());
        order.push_back(t);
      }
    }
  }
  Dfa out;
  out.alphabet = d.alphabet;
  out.start = 0;
  out.delta.reserve(order.size() * sigma);
  for (std::uint32_t s : order) {
    out.accepting.push_back(d.accepting[s]);
    for (Letter c = 0; c < sigma; ++c) out.delta.push_back(index[d.next(s, c)]);
  }
  return out;
}

Dfa complement(const Dfa& d) {
  Dfa out = d;
  out.accepting.flip();
  return out;
}

Dfa product(const Dfa& x, const Dfa& y, BoolOp op) {
  require_alphabet(x.alphabet, y.alphabet);
  using Pair = std::pair<std::uint32_t, std::uint32_t>;
  return explore(
      x.alphabet, Pair{x.start, y.start}, [&](const Pair& p, Letter c) { return Pair{x.next(p.first, c), y.next(p.second, c)}; },
      [&](const Pair& p) {
        const bool a = x.accepting[p.first];
        const bool b = y.accepting[p.second];
        switch (op) {
          case BoolOp::And:
            return a && b;
          case BoolOp::Or:
            return a || b;
          case BoolOp::Xor:
            return a != b;
          case BoolOp::Minus:
            return a && !b;
        }
        return false;
      });
}

Nfa reverse(const Dfa& d) {
  Nfa n;
  n.alphabet = d.alphabet;
  const std::uint32_t sigma = d.alphabet.size();
  n.edges.assign(d.num_states(), std::vector<std::vector<std::uint32_t>>(sigma));
  for (std::uint32_t s = 0; s < d.num_states(); ++s) {
    for (Letter c = 0; c < sigma; ++c) n.edges[d.next(s, c)][c].push_back(s);
    if (d.accepting[s]) n.starts.push_back(s);
  }
  n.accepting.assign(d.num_states(), false);
  n.accepting[d.start] = true;
  return n;
}

Dfa determinize(const Nfa& n) {
  using Subset = std::vector<std::uint32_t>;
  Subset start = n.starts;
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());
  std::vector<bool> seen(n.accepting.size());
  return explore(
      n.alphabet, start,
      [&](const Subset& s, Letter c) {
        Subset out;
        for (std::uint32_t q : s) {
          for (std::uint32_t t : n.edges[q][c]) {
            if (!seen[t]) {
              seen[t] = true;
              out.push_back(t);
            }
          }
        }
        for (std::uint32_t t : out) seen[t] = false;
        std::sort(out.begin(), out.end());
        return out;
      },
      [&](const Subset& s) { return std::any_of(s.begin(), s.end(), [&](std::uint32_t q) { return n.accepting[q]; }); });
}

namespace {

// Quotient of d by a block assignment, then trimmed (renumbered).
Dfa quotient(const Dfa& d, const std::vector<std::uint32_t>& block, std::uint32_t blocks) {
  const std::uint32_t sigma = d.alphabet.size();
  Dfa out;
  out.alphabet = d.alphabet;
  out.start = block[d.start];
  out.delta.assign(static_cast<std::size_t>(blocks) * sigma, 0);
  out.accepting.assign(blocks, false);
  for (std::uint32_t s = 0; s < d.num_states(); ++s) {
    out.accepting[block[s]] = d.accepting[s];
    for (Letter c = 0; c < sigma; ++c) out.delta[block[s] * sigma + c] = block[d.next(s, c)];
  }
  return trim(out);
}

}  // namespace

Dfa minimize(const Dfa& input) {
  const Dfa d = trim(input);
  const std::uint32_t n = d.num_states();
  const std::uint32_t sigma = d.alphabet.size();
  // Predecessor lists per letter.
  std::vector<std::vector<std::uint32_t>> pred(static_cast<std::size_t>(n) * sigma);
  for (std::uint32_t s = 0; s < n; ++s) {
    for (Letter c = 0; c < sigma; ++c) pred[d.next(s, c) * sigma + c].push_back(s);
  }
  std::vector<std::uint32_t> block(n);
  std::vector<std::vector<std::uint32_t>> members;
  {
    std::vector<std::uint32_t> acc, rej;
    for (std::uint32_t s = 0; s < n; ++s) (d.accepting[s] ? acc : rej).push_back(s);
    for (auto* part : {&acc, &rej}) {
      if (part->empty()) continue;
      for (std::uint32_t s : *part) block[s] = static_cast<std::uint32_t>(members.size());
      members.push_back(std::move(*part));
    }
  }
  std::deque<std::uint32_t> work;
  std::vector<bool> in_work(members.size(), false);
  for (std::uint32_t b = 0; b < members.size(); ++b) {
    work.push_back(b);
    in_work[b] = true;
  }
  std::vector<std::uint32_t> marks(n, 0);
  std::vector<bool> marked(n, false);
  while (!work.empty()) {
    const std::uint32_t splitter = work.front();
    work.pop_front();
    in_work[splitter] = false;
    const std::vector<std::uint32_t> targets = members[splitter];
    for (Letter c = 0; c < sigma; ++c) {
      std::vector<std::uint32_t> hit;
      for (std::uint32_t t : targets) {
        for (std::uint32_t s : pred[t * sigma + c]) {
          if (!marked[s]) {
            marked[s] = true;
            hit.push_back(s);
          }
        }
      }
      std::vector<std::uint32_t> touched;
      for (std::uint32_t s : hit) {
        if (marks[block[s]]++ == 0) touched.push_back(block[s]);
      }
      for (std::uint32_t b : touched) {
        if (marks[b] < members[b].size()) {
          std::vector<std::uint32_t> in, out;
          for (std::uint32_t s : members[b]) (marked[s] ? in : out).push_back(s);
          const std::uint32_t fresh = static_cast<std::uint32_t>(members.size());
          members[b] = std::move(out);
          for (std::uint32_t s : in) block[s] = fresh;
          members.push_back(std::move(in));
          in_work.push_back(false);
          marks.resize(std::max<std::size_t>(marks.size(), members.size()), 0);
          if (in_work[b]) {
            work.push_back(fresh);
            in_work[fresh] = true;
          } else {
            const std::uint32_t smaller = members[b].size() <= members[fresh].size() ? b : fresh;
            work.push_back(smaller);
            in_work[smaller] = true;
          }
        }
        marks[b] = 0;
      }
      for (std::uint32_t s : hit) marked[s] = false;
    }
  }
  return quotient(d, block, static_cast<std::uint32_t>(members.size()));
}

Dfa minimize_table_filling(const Dfa& input) {
  const Dfa d = trim(input);
  const std::uint32_t n = d.num_states();
  const std::uint32_t sigma = d.alphabet.size();
  std::vector<std::vector<bool>> distinct(n, std::vector<bool>(n, false));
  for (std::uint32_t p = 0; p < n; ++p) {
    for (std::uint32_t q = 0; q < p; ++q) distinct[p][q] = d.accepting[p] != d.accepting[q];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t p = 0; p < n; ++p) {
      for (std::uint32_t q = 0; q < p; ++q) {
        if (distinct[p][q]) continue;
        for (Letter c = 0; c < sigma; ++c) {
          std::uint32_t a = d.next(p, c);
          std::uint32_t b = d.next(q, c);
          if (a < b) std::swap(a, b);
          if (a != b && distinct[a][b]) {
            distinct[p][q] = true;
            changed = true;
            break;
          }
        }
      }
    }
  }
  std::vector<std::uint32_t> block(n, kNone);
  std::uint32_t blocks = 0;
  for (std::uint32_t p = 0; p < n; ++p) {
    for (std::uint32_t q = 0; q < p && block[p] == kNone; ++q) {
      if (!distinct[p][q]) block[p] = block[q];
    }
    if (block[p] == kNone) block[p] = blocks++;
  }
  return quotient(d, block, blocks);
}

Dfa minimize_brzozowski(const Dfa& d) { return trim(determinize(reverse(determinize(reverse(d))))); }

bool is_empty(const Dfa& d) {
  const Dfa t = trim(d);
  return std::none_of(t.accepting.begin(), t.accepting.end(), [](bool b) { return b; });
}

bool equivalent(const Dfa& x, const Dfa& y) { return is_empty(product(x, y, BoolOp::Xor)); }

Dfa universal(const Alphabet& alphabet) {
  Dfa d;
  d.alphabet = alphabet;
  d.delta.assign(alphabet.size(), 0);
  d.accepting = {true};
  return d;
}

Dfa max_length(const Alphabet& alphabet, std::size_t n) {
  return explore(
      alphabet, std::size_t{0}, [&](std::size_t len, Letter) { return std::min(len + 1, n + 1); },
      [&](std::size_t len) { return len <= n; });
}

Dfa from_words(const Alphabet& alphabet, const std::vector<Word>& words) {
  // Trie with an explicit sink at index 1.
  const std::uint32_t sigma = alphabet.size();
  Dfa d;
  d.alphabet = alphabet;
  d.delta.assign(2 * static_cast<std::size_t>(sigma), 1);
  d.accepting = {false, false};
  for (const Word& w : words) {
    std::uint32_t s = 0;
    for (Letter c : w) {
      if (c >= sigma) throw Error(ErrorCode::AlphabetMismatch, "letter outside the alphabet");
      std::uint32_t t = d.delta[s * sigma + c];
      if (t == 1) {
        t = d.num_states();
        d.accepting.push_back(false);
        d.delta.insert(d.delta.end(), sigma, 1);
        d.delta[s * sigma + c] = t;
      }
      s = t;
    }
    d.accepting[s] = true;
  }
  return trim(d);
}

Dfa lift_track(const Dfa& d, std::uint32_t arity, std::uint32_t track) {
  if (d.alphabet.arity != 1 || track >= arity) throw Error(ErrorCode::AlphabetMismatch, "bad track lift");
  Dfa out;
  out.alphabet = Alphabet{d.alphabet.base, arity};
  out.start = d.start;
  out.accepting = d.accepting;
  const std::uint32_t sigma = out.alphabet.size();
  for (std::uint32_t s = 0; s < d.num_states(); ++s) {
    for (Letter c = 0; c < sigma; ++c) out.delta.push_back(d.next(s, out.alphabet.track(c, track)));
  }
  return out;
}

Dfa build_validity_dfa(const SystemPtr& sys) {
  const std::size_t xi = sys->periodic_from();
  const std::size_t nu = sys->cf().nu();
  const std::size_t classes = xi + 1 + nu;
  const auto class_of = [&](std::size_t k) { return k <= xi ? k : xi + 1 + (k - xi - 1) % nu; };
  // Representative digit index of each class.
  std::vector<std::size_t> index_of(classes);
  for (std::size_t k = 0; k < classes; ++k) index_of[class_of(k)] = k;
  const Alphabet alphabet{sys->mu() + 1, 1};
  const std::uint32_t sigma = alphabet.size();
  // Least significant first: state 2*cls + prev_zero, plus a dead state.
  const std::uint32_t dead = static_cast<std::uint32_t>(2 * classes);
  Dfa lsd;
  lsd.alphabet = alphabet;
  lsd.start = 1;  // class 0, no previous digit
  lsd.accepting.assign(dead + 1, true);
  lsd.accepting[dead] = false;
  lsd.delta.assign(static_cast<std::size_t>(dead + 1) * sigma, dead);
  for (std::size_t cls = 0; cls < classes; ++cls) {
    const std::size_t k = index_of[cls];
    const Digit bound = sys->partial_quotient(k + 1);
    const std::uint32_t next_cls = static_cast<std::uint32_t>(class_of(k + 1));
    for (int prev_zero = 0; prev_zero < 2; ++prev_zero) {
      const std::uint32_t s = static_cast<std::uint32_t>(2 * cls + prev_zero);
      for (Digit b = 0; b < sigma; ++b) {
        bool ok = k == 0 ? b < bound : b <= bound && (b < bound || prev_zero);
        if (ok) lsd.delta[s * sigma + b] = 2 * next_cls + (b == 0 ? 1 : 0);
      }
    }
  }
  return minimize(determinize(reverse(lsd)));
}

Dfa build_cmp_dfa(const SystemPtr& sys) {
  const Dfa valid = build_validity_dfa(sys);
  const Alphabet alphabet{valid.alphabet.base, 2};
  // 0: equal so far, 1: less, 2: greater.
  Dfa order = explore(
      alphabet, 0,
      [&](int s, Letter c) {
        if (s != 0) return s;
        const Digit x = alphabet.track(c, 0);
        const Digit y = alphabet.track(c, 1);
        return x == y ? 0 : (x < y ? 1 : 2);
      },
      [](int s) { return s == 1; });
  Dfa both = product(lift_track(valid, 2, 0), lift_track(valid, 2, 1));
  return minimize(product(order, both));
}

namespace {

Dfa golden_zero_automaton(int cap) {
  const Alphabet alphabet{2, 3};
  using State = std::pair<int, int>;
  const State dead{cap + 1, cap + 1};
  return explore(
      alphabet, State{0, 0},
      [&](const State& s, Letter c) {
        if (s == dead) return dead;
        const int e = static_cast<int>(alphabet.track(c, 0)) + static_cast<int>(alphabet.track(c, 1)) -
                      static_cast<int>(alphabet.track(c, 2));
        const State t{s.first + s.second + e, s.first};
        if (std::abs(t.first) > cap || std::abs(t.second) > cap) return dead;
        return t;
      },
      [&](const State& s) { return s != dead && s.first == 0; });
}

}  // namespace

AdderBuild build_golden_adder(const SystemPtr& sys) {
  if (!sys->is_golden()) throw Error(ErrorCode::UnsupportedSystem, "the adder automaton is built for the golden system only");
  const Dfa valid = build_validity_dfa(sys);
  Dfa tracks = product(product(lift_track(valid, 3, 0), lift_track(valid, 3, 1)), lift_track(valid, 3, 2));
  tracks = minimize(tracks);
  Dfa prev = minimize(product(golden_zero_automaton(2), tracks));
  for (int cap = 4; cap <= 64; cap *= 2) {
    Dfa cur = minimize(product(golden_zero_automaton(cap), tracks));
    if (cur.delta == prev.delta && cur.accepting == prev.accepting) return {std::move(cur), cap / 2};
    prev = std::move(cur);
  }
  throw Error(ErrorCode::IdentityViolation, "adder automaton did not stabilize");
}

std::size_t brute_force_state_count(const SystemPtr& sys, std::size_t n) {
  const std::uint32_t base = sys->mu() + 1;
  std::vector<std::vector<Digit>> words{{}};
  for (std::size_t len = 1; len <= n; ++len) {
    const std::size_t before = words.size();
    for (std::size_t i = 0; i < before; ++i) {
      if (words[i].size() != len - 1) continue;
      for (Digit b = 0; b < base; ++b) {
        auto w = words[i];
        w.push_back(b);
        words.push_back(std::move(w));
      }
    }
  }
  const auto valid = [&](const std::vector<Digit>& u, const std::vector<Digit>& v) {
    std::vector<Digit> lsd(u.rbegin(), u.rend());
    lsd.insert(lsd.begin(), v.rbegin(), v.rend());
    return ost_validate(*sys, lsd);
  };
  std::set<std::vector<bool>> classes;
  for (const auto& u : words) {
    std::vector<bool> sig;
    sig.reserve(words.size());
    for (const auto& v : words) sig.push_back(valid(u, v));
    classes.insert(std::move(sig));
  }
  return classes.size();
}

std::string to_dot(const Dfa& d, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=LR;\n  init [shape=point];\n";
  for (std::uint32_t s = 0; s < d.num_states(); ++s) {
    out << "  " << s << " [shape=" << (d.accepting[s] ? "doublecircle" : "circle") << "];\n";
  }
  out << "  init -> " << d.start << ";\n";
  const std::uint32_t sigma = d.alphabet.size();
  for (std::uint32_t s = 0; s < d.num_states(); ++s) {
    std::map<std::uint32_t, std::string> labels;
    for (Letter c = 0; c < sigma; ++c) {
      std::string& l = labels[d.next(s, c)];
      if (!l.empty()) l += ' ';
      l += d.alphabet.format(c);
    }
    for (const auto& [t, label] : labels) out << "  " << s << " -> " << t << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_text(const Dfa& d) {
  std::ostringstream out;
  out << "dfa base=" << d.alphabet.base << " arity=" << d.alphabet.arity << " states=" << d.num_states()
      << " start=" << d.start << "\naccepting";
  for (std::uint32_t s = 0; s < d.num_states(); ++s) {
    if (d.accepting[s]) out << ' ' << s;
  }
  out << '\n';
  const std::uint32_t sigma = d.alphabet.size();
  for (std::uint32_t s = 0; s < d.num_states(); ++s) {
    for (Letter c = 0; c < sigma; ++c) out << s << ' ' << d.alphabet.format(c) << ' ' << d.next(s, c) << '\n';
  }
  return out.str();
}

}  // namespace ostrowski
