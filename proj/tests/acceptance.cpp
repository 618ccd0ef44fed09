// Acceptance run: one PASS/FAIL line per criterion.
//
// Each criterion combines the library's verify checks (golden through two CLI
// runs, the others in process) with independent oracle sweeps from
// oracles.hpp.  Usage: acceptance <path to ostrowski-cli>

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ostrowski/automata.hpp"
#include "ostrowski/golden_mul.hpp"
#include "ostrowski/iso_tower.hpp"
#include "ostrowski/msol_interp.hpp"
#include "ostrowski/verify.hpp"

using namespace ostrowski;

namespace {

// Check name -> (ok, detail), per system label.
using Results = std::map<std::string, std::pair<bool, std::string>>;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    ok = false;
    if (notes.size() < 8) notes.push_back(why);
  }
};

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run_command(const std::string& cmd) {
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  r.status = pclose(p);
  return r;
}

// "PASS name (N cases): detail" lines of format_reports.
Results parse_text(const std::string& text) {
  Results res;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const bool pass = line.rfind("PASS ", 0) == 0;
    if (!pass && line.rfind("FAIL ", 0) != 0) continue;
    const std::string rest = line.substr(5);
    res[rest.substr(0, rest.find(' '))] = {pass, line};
  }
  return res;
}

Results collect(const std::vector<Report>& reports) {
  Results res;
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      res[c.name] = {c.ok, (c.ok ? "PASS " : "FAIL ") + c.name + ": " + c.detail};
    }
  }
  return res;
}

void require_checks(Outcome& o, const std::map<std::string, Results>& all, const std::vector<std::string>& names,
                    const std::vector<std::string>& systems) {
  for (const auto& sys : systems) {
    const Results& res = all.at(sys);
    for (const auto& name : names) {
      auto it = res.find(name);
      if (it == res.end()) {
        o.fail(sys + ": check " + name + " missing");
      } else if (!it->second.first) {
        o.fail(sys + ": " + it->second.second);
      }
    }
  }
}

const std::vector<std::string> kSystems{"golden", "sqrt3", "sqrt2"};

SystemPtr sys_of(const std::string& name) { return System::from_spec(name); }
SystemPtr norm_of(const std::string& name) {
  const auto s = sys_of(name);
  return s->is_normalized() ? s : System::normalized(s->alpha());
}

struct Table {
  oracle::Real a;
  std::vector<mpz_class> terms;
  oracle::Conv c;
};

Table table_for(const SystemPtr& sys, std::size_t n = 700) {
  Table t;
  t.a = oracle::value(sys->alpha());
  t.terms = oracle::cf_terms(t.a, n);
  t.c = oracle::convergents(t.terms);
  return t;
}

oracle::Real series(const DigitSeq& x, const Table& t) {
  return oracle::digit_sum(t.a, t.c, t.c.q.size(), [&](std::size_t k) { return x.digit(k); });
}

std::string str(const mpz_class& z) { return z.get_str(); }

// ---------------------------------------------------------------- oracles

void oracle_cf(Outcome& o) {
  const long ds[] = {2, 3, 5, 6, 7, 13};
  std::size_t count = 0;
  for (long d : ds) {
    for (const auto& [p, q, r] : std::vector<std::array<long, 3>>{{0, 1, 1}, {1, 1, 2}, {2, 1, 3}, {-1, 2, 5}, {3, -2, 7}}) {
      const QuadraticNumber x(p, q, r, d);
      if (x.is_rational()) continue;
      ++count;
      const auto cf = cf_expand(x);
      const auto want = oracle::cf_terms(oracle::value(x), 80);
      for (std::size_t k = 0; k < 80; ++k) {
        const Integer got = k == 0 ? cf.preperiod[0] : cf.partial_quotient(k);
        if (got != want[k]) {
          o.fail("cf of " + x.to_string() + " differs at term " + std::to_string(k));
          break;
        }
      }
    }
  }
  if (count < 25) o.fail("only " + std::to_string(count) + " inputs");
  if (cf_expand(QuadraticNumber::parse("(1+sqrt(5))/2")).to_string() != "[1; (1)^ω]") o.fail("golden cf text");
  if (cf_expand(QuadraticNumber::sqrt(3)).to_string() != "[1; (1,2)^ω]") o.fail("sqrt3 cf text");
  if (cf_expand(QuadraticNumber::sqrt(2)).to_string() != "[1; (2)^ω]") o.fail("sqrt2 cf text");
}

void oracle_beta(Outcome& o) {
  for (const auto& name : kSystems) {
    const auto sys = sys_of(name);
    const Table t = table_for(sys, 300);
    for (std::size_t k = 0; k <= 52; ++k) {
      if (sys->p(k) != t.c.p[k] || sys->q(k) != t.c.q[k]) {
        o.fail(name + ": convergent " + std::to_string(k));
        break;
      }
    }
    // The identities on beta built from the oracle convergents.
    auto beta = [&](std::size_t k) { return QuadraticNumber(t.c.q[k]) * sys->alpha() - QuadraticNumber(t.c.p[k]); };
    for (std::size_t k = 1; k <= 50; ++k) {
      if (beta(k + 1) != QuadraticNumber(t.terms[k + 1]) * beta(k) + beta(k - 1)) o.fail(name + ": recurrence at " + std::to_string(k));
      const QuadraticNumber zeta = sys->zeta(k + 2);
      if (beta(k + 1) != -beta(k) / zeta) o.fail(name + ": ratio at " + std::to_string(k));
      // zeta_{k+2} against the floating point tail of the expansion.
      oracle::Real tail(t.terms[k + 2 + 200]);
      for (std::size_t j = k + 2 + 200; j-- > k + 2;) tail = oracle::Real(t.terms[j]) + oracle::Real(1) / tail;
      if (!oracle::close(oracle::value(zeta), tail, 200)) o.fail(name + ": zeta at " + std::to_string(k + 2));
    }
    if (beta(1) != QuadraticNumber(t.terms[1]) * beta(0) + QuadraticNumber(-1)) o.fail(name + ": recurrence at 0");
  }
}

void oracle_bijection(Outcome& o) {
  for (const auto& name : kSystems) {
    const auto sys = sys_of(name);
    const Table t = table_for(sys, 60);
    for (long n = 0; n < 100000; ++n) {
      const auto got = ost_encode(n, sys);
      const std::vector<unsigned> want = oracle::greedy(n, t.c.q);
      if (std::vector<unsigned>(got.digits().begin(), got.digits().end()) != want) {
        o.fail(name + ": encode(" + std::to_string(n) + ")");
        break;
      }
    }
    // Strings of length 12 (shorter ones padded with zeros).
    const std::size_t len = 12;
    std::vector<char> seen(t.c.q[len].get_ui(), 0);
    std::vector<unsigned> b(len, 0);
    std::size_t valid = 0;
    bool bad = false;
    std::function<void(std::size_t)> walk = [&](std::size_t k) {
      if (bad) return;
      if (k == len) {
        const bool ok = oracle::valid_digits(b, t.terms);
        const std::vector<Digit> d(b.begin(), b.end());
        if (ost_validate(*sys, d) != ok) {
          bad = true;
          o.fail(name + ": validity of " + oracle::word(b));
          return;
        }
        if (!ok) return;
        ++valid;
        mpz_class v = 0;
        for (std::size_t i = 0; i < len; ++i) v += t.c.q[i] * b[i];
        if (ost_decode(*sys, d) != v || v >= t.c.q[len] || seen[v.get_ui()]) {
          bad = true;
          o.fail(name + ": decode of " + oracle::word(b));
          return;
        }
        seen[v.get_ui()] = 1;
        return;
      }
      for (unsigned x = 0; x <= t.terms[k + 1].get_ui(); ++x) {
        b[k] = x;
        walk(k + 1);
      }
    };
    walk(0);
    if (!bad && valid != seen.size()) o.fail(name + ": valid strings do not cover [0, q_12)");
  }
}

void oracle_order(Outcome& o) {
  for (const auto& name : kSystems) {
    const auto sys = sys_of(name);
    std::vector<OstrowskiInt> xs;
    for (long n = 0; n < 10000; ++n) xs.push_back(ost_encode(n, sys));
    for (long m = 0; m < 2000 && o.ok; ++m) {
      for (long n = 0; n < 2000; ++n) {
        const auto c = ost_cmp(xs[m], xs[n]);
        if ((c < 0) != (m < n) || (c > 0) != (m > n)) {
          o.fail(name + ": cmp(" + std::to_string(m) + ", " + std::to_string(n) + ")");
          break;
        }
      }
    }
    // Sorting a shuffled copy by digits restores numeric order.
    std::vector<long> idx(xs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<long>(i);
    std::shuffle(idx.begin(), idx.end(), std::mt19937_64(5));
    std::sort(idx.begin(), idx.end(), [&](long x, long y) { return ost_cmp(xs[x], xs[y]) < 0; });
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] != static_cast<long>(i)) {
        o.fail(name + ": digit order misplaces " + std::to_string(idx[i]));
        break;
      }
    }
    const Table t = table_for(sys);
    std::vector<DigitSeq> rs;
    for (long n = 0; n < 300; ++n) rs.push_back(f_map(n, sys).digits);
    for (std::size_t n = 0; n <= 10; ++n) rs.push_back(neg_beta_digits(n, sys));
    std::vector<oracle::Real> vs;
    for (const auto& r : rs) vs.push_back(series(r, t));
    for (std::size_t i = 0; i < rs.size(); ++i) {
      for (std::size_t j = 0; j < rs.size(); ++j) {
        const auto c = real_cmp(rs[i], rs[j]);
        const int s = (vs[i] - vs[j]).sign();
        if ((c < 0) != (s < 0) || (c > 0) != (s > 0)) {
          o.fail(name + ": real_cmp(" + rs[i].to_string() + ", " + rs[j].to_string() + ")");
          i = rs.size();
          break;
        }
      }
    }
  }
}

void oracle_neg_beta(Outcome& o) {
  for (const auto& name : kSystems) {
    const auto sys = sys_of(name);
    const Table t = table_for(sys);
    for (std::size_t n = 0; n <= 20; ++n) {
      const DigitSeq x = neg_beta_digits(n, sys);
      const oracle::Real want = -(oracle::Real(t.c.q[n]) * t.a - oracle::Real(t.c.p[n]));
      if (real_decode(x) != -sys->beta(n)) o.fail(name + ": exact value at n = " + std::to_string(n));
      if (!oracle::close(series(x, t), want)) o.fail(name + ": series at n = " + std::to_string(n));
    }
  }
}

void oracle_iso(Outcome& o) {
  for (const auto& name : kSystems) {
    const auto sys = norm_of(name);
    const oracle::Real a = oracle::value(sys->alpha());
    const Table t = table_for(sys, 60);
    // aZ - O is natural, and B over X is the set of naturals in (aZ, a(Z+1)) (plus 0 at Z = 0).
    for (long n = 0; n < 10000; ++n) {
      const AElement x = AElement::from_z(n, sys);
      std::vector<unsigned> b = oracle::greedy(n, t.c.q);
      const oracle::Real o_val =
          oracle::digit_sum(a, t.c, b.size(), [&](std::size_t k) { return k < b.size() ? b[k] : 0u; });
      const oracle::Real base = oracle::Real(n) * a - o_val;
      const mpz_class near = (base + oracle::Real(1) / oracle::Real(2)).floor();
      if (!oracle::close(base, oracle::Real(near))) {
        o.fail(name + ": aZ - O not an integer at Z = " + std::to_string(n));
        break;
      }
      std::set<mpz_class> want;
      for (mpz_class k = (oracle::Real(n) * a).floor() + 1; (oracle::Real(k) - oracle::Real(n + 1) * a).sign() < 0; k += 1) {
        want.insert(k);
      }
      if (n == 0) want.insert(0);
      std::set<mpz_class> got;
      for (int i : b_indices(x)) got.insert(eval_R(BElement{x, i}));
      if (got != want) {
        o.fail(name + ": B window at Z = " + std::to_string(n));
        break;
      }
    }
    // Mod-1 additivity and the S wrap rule in floating point, Z < 120.
    const oracle::Real o1 = oracle::value(eval_O(AElement::one(sys)));
    std::vector<AElement> xs;
    std::vector<oracle::Real> os;
    for (long n = 0; n < 120; ++n) {
      xs.push_back(AElement::from_z(n, sys));
      os.push_back(oracle::value(eval_O(xs.back())));
    }
    auto frac_s = [&](const oracle::Real& v) {
      oracle::Real s = v - o1;
      if (s.sign() < 0) s = s + oracle::Real(1);
      return s;
    };
    for (std::size_t i = 0; i < xs.size() && o.ok; ++i) {
      for (std::size_t j = 0; j < xs.size(); ++j) {
        const oracle::Real sum = oracle::value(eval_O(add_circle(xs[i], xs[j])));
        const oracle::Real diff = sum - os[i] - os[j];
        const mpz_class k = (diff + oracle::Real(1) / oracle::Real(2)).floor();
        if (!oracle::close(diff, oracle::Real(k))) {
          o.fail(name + ": O(x (+) y) at " + std::to_string(i) + ", " + std::to_string(j));
          break;
        }
        const bool wraps = (frac_s(os[i]) + frac_s(os[j]) - oracle::Real(1)).sign() >= 0;
        if (wraps != wraps_one(xs[i], xs[j])) {
          o.fail(name + ": wrap at " + std::to_string(i) + ", " + std::to_string(j));
          break;
        }
      }
    }
    // T order and additivity on a small grid of C.
    std::vector<CElement> grid;
    BElement z{AElement::zero(sys), 0};
    for (long r = 0; r < 8; ++r, z = succ_B(z)) {
      for (long n = 0; n < 8; ++n) grid.push_back(CElement{z, AElement::from_z(n, sys)});
    }
    for (const auto& p : grid) {
      const oracle::Real tp = oracle::Real(eval_R(p.b)) + frac_s(oracle::value(eval_O(p.x)));
      for (const auto& q : grid) {
        const oracle::Real tq = oracle::Real(eval_R(q.b)) + frac_s(oracle::value(eval_O(q.x)));
        const CElement s = add_C(p, q);
        const oracle::Real ts = oracle::Real(eval_R(s.b)) + frac_s(oracle::value(eval_O(s.x)));
        if (!oracle::close(ts, tp + tq)) o.fail(name + ": T additivity");
        if ((cmp_C(p, q) < 0) != ((tp - tq).sign() < 0)) o.fail(name + ": T order");
      }
    }
  }
}

void oracle_interp(Outcome& o) {
  for (const auto& name : kSystems) {
    const auto sys = norm_of(name);
    const InterpContext ctx(sys, 20);
    const Table t = table_for(sys, 60);
    for (std::size_t l = 1; l <= 8 && o.ok; ++l) {
      for (long m = 0; m < 200; ++m) {
        // h is the truncation of m's oracle digits at index l.
        const std::vector<unsigned> b = oracle::greedy(m, t.c.q);
        mpz_class want = 0;
        for (std::size_t k = 0; k <= l && k < b.size(); ++k) want += t.c.q[k] * b[k];
        const QuadraticNumber c = f_map(m, sys).value;
        if (h_solve(l, c, ctx) != want) {
          o.fail(name + ": h(" + std::to_string(l) + ", f(" + std::to_string(m) + "a))");
          break;
        }
        const Digit digit = l < b.size() ? b[l] : 0;
        const EClass e = digit == 0 ? EClass::E0 : (digit == 1 ? EClass::E1 : EClass::Neither);
        if (e_membership(l, c, ctx) != e) {
          o.fail(name + ": E class at l = " + std::to_string(l) + ", m = " + std::to_string(m));
          break;
        }
      }
    }
    for (unsigned mask = 0; mask < 64; ++mask) {
      std::vector<std::size_t> xs;
      QuadraticNumber c;
      for (std::size_t k = 0; k < 6; ++k) {
        if ((mask >> k) & 1U) {
          xs.push_back(k);
          c += QuadraticNumber(t.c.q[2 * k + 1]) * sys->alpha() - QuadraticNumber(t.c.p[2 * k + 1]);
        }
      }
      if (h2(real_encode(c, sys, 200)).elements_below(64) != xs) o.fail(name + ": h2 at mask " + std::to_string(mask));
    }
    const MsolStructure s = msol_structure(ctx);
    for (std::size_t i = 0; i < s.W.size(); ++i) {
      if (s.W[i] != 2 * i + 1 || h1(s.W[i]) != i) o.fail(name + ": W at " + std::to_string(i));
    }
  }
}

void oracle_golden(Outcome& o) {
  const GoldenContext g;
  const auto fib = oracle::fibonacci(80);
  const oracle::Real p = oracle::value(g.phi());
  std::vector<oracle::Real> fs;
  for (long n = 0; n < 10000; ++n) {
    // Zeckendorf over F_2, F_3, ...; L drops the lowest digit.
    mpz_class rest = n, m = 0;
    for (std::size_t k = 78; k >= 1; --k) {
      if (fib[k] <= rest) {
        rest -= fib[k];
        if (k >= 2) m += fib[k - 1];
      }
    }
    if (L_shift(n, g) != m) {
      o.fail("L(" + std::to_string(n) + ")");
      break;
    }
    if (t1_map(n, g) != n) o.fail("T1 at " + std::to_string(n));
    const oracle::Real f = oracle::Real(n) * p - oracle::Real((oracle::Real(n) * p - oracle::value(representable_interval(*g.system()).lo)).floor());
    const oracle::Real t = oracle::value(t2_map(n, g));
    if (!oracle::close(p * f + t, oracle::Real(0))) {
      o.fail("phi f + T2 at " + std::to_string(n));
      break;
    }
    if (n < 1000) fs.push_back(f);
  }
  for (long m : {0L, 1L, 17L, 500L, 999L}) {
    for (long n = 0; n < 1000; ++n) {
      if (!oracle::close(oracle::value(mul_phi(m, n, g)), p * (oracle::Real(m) + fs[n]))) {
        o.fail("mul_phi(" + std::to_string(m) + ", " + std::to_string(n) + ")");
        break;
      }
    }
  }
}

void oracle_automata(Outcome& o) {
  for (const auto& name : kSystems) {
    const auto sys = sys_of(name);
    const Table t = table_for(sys, 40);
    const Dfa v = build_validity_dfa(sys);
    const Digit base = sys->mu() + 1;
    std::vector<unsigned> lsd;
    Word w;
    bool bad = false;
    std::function<void(std::size_t)> walk = [&](std::size_t left) {
      if (bad) return;
      lsd.assign(w.rbegin(), w.rend());
      if (v.accepts(w) != oracle::valid_digits(lsd, t.terms)) {
        bad = true;
        o.fail(name + ": validity of " + oracle::word(lsd));
        return;
      }
      if (left == 0) return;
      for (Digit d = 0; d < base; ++d) {
        w.push_back(d);
        walk(left - 1);
        w.pop_back();
      }
    };
    walk(base > 3 ? 8 : 14);
  }
  const auto phi = sys_of("golden");
  const Dfa cmp = build_cmp_dfa(phi);
  std::vector<std::vector<Digit>> rhos;
  for (long n = 0; n < 2000; ++n) rhos.push_back(rho(n, phi));
  for (long m = 0; m < 2000 && o.ok; ++m) {
    for (long n = 0; n < 2000; ++n) {
      if (cmp.accepts(convolve({rhos[m], rhos[n]}, 2)) != (m < n)) {
        o.fail("cmp automaton at " + std::to_string(m) + ", " + std::to_string(n));
        break;
      }
    }
  }
  const Dfa add = build_golden_adder(phi).dfa;
  for (long x = 0; x < 2000 && o.ok; ++x) {
    for (long y = 0; y < 2000; ++y) {
      if (!add.accepts(convolve({rhos[x], rhos[y], rho(x + y, phi)}, 2))) {
        o.fail("adder rejects " + std::to_string(x) + " + " + std::to_string(y));
        break;
      }
    }
  }
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> pick(0, 1999), delta(1, 50);
  for (int i = 0; i < 10000; ++i) {
    const long x = pick(rng), y = pick(rng);
    const long z = x + y + (i % 2 == 0 ? delta(rng) : -std::min(delta(rng), x + y));
    if (z == x + y) continue;
    if (add.accepts(convolve({rhos[x], rhos[y], rho(z, phi)}, 2))) o.fail("adder accepts " + std::to_string(x) + " + " + std::to_string(y) + " = " + std::to_string(z));
  }
  // Myhill-Nerode classes of the golden valid words from the oracle rules.
  const Table t = table_for(phi, 40);
  std::vector<std::vector<Digit>> words{{}};
  for (std::size_t len = 1, from = 0; len <= 8; ++len) {
    const std::size_t to = words.size();
    for (std::size_t i = from; i < to; ++i) {
      for (Digit d = 0; d < 2; ++d) {
        auto x = words[i];
        x.push_back(d);
        words.push_back(x);
      }
    }
    from = to;
  }
  std::set<std::vector<bool>> classes;
  for (const auto& u : words) {
    std::vector<bool> sig;
    for (const auto& s : words) {
      std::vector<unsigned> all(u.begin(), u.end());
      all.insert(all.end(), s.begin(), s.end());
      sig.push_back(oracle::valid_digits(std::vector<unsigned>(all.rbegin(), all.rend()), t.terms));
    }
    classes.insert(sig);
  }
  const Dfa m = minimize(build_validity_dfa(phi));
  if (m.num_states() != classes.size()) {
    o.fail("minimal validity automaton has " + std::to_string(m.num_states()) + " states, oracle " +
           std::to_string(classes.size()));
  }
  if (minimize_table_filling(build_validity_dfa(phi)).num_states() != classes.size()) o.fail("table filling state count");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <ostrowski-cli>\n";
    return 2;
  }
  const std::string cmd = "'" + std::string(argv[1]) + "' verify-all --system golden --bound 2000";

  std::map<std::string, Results> checks;
  const CliRun first = run_command(cmd);
  const CliRun second = run_command(cmd);
  checks["golden"] = parse_text(first.out);
  VerifyOptions opt;
  checks["sqrt3"] = collect(verify_all(sys_of("sqrt3"), opt));
  checks["sqrt2"] = collect(verify_all(sys_of("sqrt2"), opt));

  struct Criterion {
    int id;
    std::string title;
    std::vector<std::string> names;
    std::vector<std::string> systems;
    std::function<void(Outcome&)> oracle;
  };
  const std::vector<std::string> golden_only{"golden"};
  const std::vector<Criterion> criteria{
      {1, "continued fraction periodicity", {"cf.periodicity"}, kSystems, oracle_cf},
      {2, "beta identities", {"cf.beta-identities", "cf.beta-sign"}, kSystems, oracle_beta},
      {3, "integer bijection", {"int.bijection", "int.valid-strings"}, kSystems, oracle_bijection},
      {4, "digit order equals value order", {"int.order", "real.order"}, kSystems, oracle_order},
      {5, "-beta_n expansions", {"real.neg-beta"}, kSystems, oracle_neg_beta},
      {6, "A, B and C structures",
       {"iso.fzo", "iso.z-order", "iso.o-order", "iso.oplus", "iso.s-iso", "iso.splus", "iso.nat", "iso.lminus",
        "iso.or", "iso.r-bijection", "iso.r-additive", "iso.t-iso", "iso.density"},
       kSystems, oracle_iso},
      {7, "interpretation", {"interp.smallo", "interp.h-unique", "interp.e-digit", "interp.h2", "interp.w-alternation"},
       kSystems, oracle_interp},
      {8, "multiplication by phi", {"gold.shift", "gold.t1", "gold.t2", "gold.mul"}, golden_only, oracle_golden},
      {9, "automata",
       {"auto.validity", "auto.min-states", "auto.cmp", "auto.adder", "auto.adder-brute", "auto.minimizers"},
       golden_only, oracle_automata},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    require_checks(o, checks, c.names, c.systems);
    try {
      c.oracle(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (c.id == 9) {
      require_checks(o, checks, {"auto.validity"}, kSystems);
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << "\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    if (!o.ok) ++failures;
  }

  Outcome det;
  if (first.status != 0) det.fail("first run exited with status " + std::to_string(first.status));
  if (second.status != 0) det.fail("second run exited with status " + std::to_string(second.status));
  if (first.out.empty()) det.fail("no output");
  if (first.out != second.out) det.fail("outputs differ");
  std::cout << (det.ok ? "PASS" : "FAIL") << " criterion 10: verify-all output is byte-identical across runs\n";
  for (const auto& n : det.notes) std::cout << "    " << n << "\n";
  if (!det.ok) ++failures;

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
