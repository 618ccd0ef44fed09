#include "ostrowski/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "ostrowski/automata.hpp"
#include "ostrowski/golden_mul.hpp"
#include "ostrowski/iso_tower.hpp"
#include "ostrowski/msol_interp.hpp"

namespace ostrowski {

namespace {

using Body = std::function<void(Check&)>;

Check run(std::string name, const Body& body) {
  Check c;
  c.name = std::move(name);
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  return c;
}

// Records the first counterexample; returns false so callers can stop.
bool fail(Check& c, const std::string& detail) {
  c.ok = false;
  if (c.detail.empty()) c.detail = detail;
  return false;
}

std::string str(const Integer& n) { return n.get_str(); }
std::string str(const QuadraticNumber& x) { return x.to_string(); }

int sgn(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

QuadraticNumber wrap(const QuadraticNumber& c, const System& sys) {
  const QuadraticNumber lo = representable_interval(sys).lo;
  return c - QuadraticNumber((c - lo).floor());
}

bool same_dfa(const Dfa& x, const Dfa& y) {
  return x.alphabet == y.alphabet && x.start == y.start && x.delta == y.delta && x.accepting == y.accepting;
}

// Same language, twice the states: a parity bit flipped by odd letters.
Dfa inflate(const Dfa& d) {
  Dfa out;
  out.alphabet = d.alphabet;
  const std::uint32_t n = d.num_states();
  const std::uint32_t size = d.alphabet.size();
  out.start = d.start;
  out.accepting.resize(2 * n);
  out.delta.resize(std::size_t{2} * n * size);
  for (std::uint32_t s = 0; s < 2 * n; ++s) {
    out.accepting[s] = d.accepting[s % n];
    for (Letter l = 0; l < size; ++l) {
      const std::uint32_t flip = (s / n) ^ (l & 1U);
      out.delta[std::size_t{s} * size + l] = d.next(s % n, l) + flip * n;
    }
  }
  return out;
}

// Quadratic irrationals over d in {2, 3, 5, 6, 7, 13}: 25 in all.
std::vector<QuadraticNumber> cf_inputs() {
  std::vector<QuadraticNumber> out;
  for (long d : {2, 3, 5, 6, 7, 13}) {
    out.push_back(QuadraticNumber::sqrt(d));
    out.emplace_back(1, 1, 2, d);
    out.emplace_back(2, 1, 3, d);
    out.emplace_back(-1, 2, 5, d);
  }
  out.emplace_back(3, 5, 7, 13);
  return out;
}

// ---------------------------------------------------------------- contfrac

Check cf_periodicity() {
  return run("cf.periodicity", [](Check& c) {
    for (const auto& x : cf_inputs()) {
      ++c.cases;
      const ContinuedFraction cf = cf_expand(x);
      if (cf.period.empty()) return (void)fail(c, x.to_string() + " has an empty period");
      if (!(cf.evaluate() == x)) return (void)fail(c, x.to_string() + " evaluates back to " + cf.evaluate().to_string());
    }
    const std::pair<const char*, const char*> presets[] = {
        {"golden", "[1; (1)^ω]"}, {"sqrt3", "[1; (1,2)^ω]"}, {"sqrt2", "[1; (2)^ω]"}};
    for (const auto& [name, text] : presets) {
      ++c.cases;
      const std::string got = System::from_spec(name)->cf().to_string();
      if (got != text) return (void)fail(c, std::string(name) + " expands to " + got);
    }
  });
}

Check cf_beta(const SystemPtr& sys) {
  return run("cf.beta-identities", [&](Check& c) {
    c.cases = 51;
    const auto rep = beta_identities_check(*sys, 50);
    if (!rep.ok) fail(c, rep.detail);
  });
}

Check cf_beta_sign(const SystemPtr& sys) {
  return run("cf.beta-sign", [&](Check& c) {
    for (std::size_t k = 0; k <= 50; ++k) {
      ++c.cases;
      const int expect = k % 2 == 0 ? 1 : -1;
      if (sys->beta(k).sign() != expect) return (void)fail(c, "sign of beta_" + std::to_string(k));
      if (compare(sys->beta(k + 1).abs(), sys->beta(k).abs()) >= 0) {
        return (void)fail(c, "|beta_" + std::to_string(k + 1) + "| >= |beta_" + std::to_string(k) + "|");
      }
    }
  });
}

// Denominators of best approximations up to q_K are exactly q_1..q_K.
Check cf_best_approx(const SystemPtr& sys) {
  return run("cf.best-approx", [&](Check& c) {
    std::size_t top = 1;
    while (top < 10 && sys->q(top + 1) <= 2000) ++top;
    std::set<Integer> expect;
    for (std::size_t k = 0; k <= top; ++k) expect.insert(sys->q(k));
    std::set<Integer> got;
    const QuadraticNumber& a = sys->alpha();
    for (Integer q = 1; q <= sys->q(top); q += 1) {
      ++c.cases;
      const Integer lo = (a * QuadraticNumber(q)).floor();
      if (is_best_approx(a, lo, q) || is_best_approx(a, lo + 1, q)) got.insert(q);
    }
    if (got != expect) {
      std::string detail = "best approximation denominators:";
      for (const auto& q : got) detail += " " + str(q);
      fail(c, detail);
    }
  });
}

// ---------------------------------------------------------------- integers

Check int_bijection(const SystemPtr& sys, std::size_t bound) {
  return run("int.bijection", [&, bound](Check& c) {
    for (std::size_t n = 0; n < bound; ++n) {
      ++c.cases;
      const Integer N(static_cast<unsigned long>(n));
      const OstrowskiInt x = ost_encode(N, sys);
      if (!ost_validate(*sys, x.digits())) return (void)fail(c, "encode(" + str(N) + ") is invalid");
      if (ost_decode(x) != N) return (void)fail(c, "decode(encode(" + str(N) + ")) = " + str(ost_decode(x)));
      if (n > 0 && x.digits().size() - 1 != sys->top_index(N)) {
        return (void)fail(c, "encode(" + str(N) + ") is not greedy");
      }
    }
  });
}

// Every valid string of the given length (shorter ones are the zero-padded
// ones) decodes to a distinct value, and the values are 0..M.
Check int_valid_strings(const SystemPtr& sys, std::size_t length) {
  return run("int.valid-strings", [&, length](Check& c) {
    const std::size_t top = sys->q(length).get_ui();
    std::vector<char> seen(top, 0);
    std::vector<Digit> digits(length, 0);
    std::function<bool(std::size_t)> walk = [&](std::size_t k) -> bool {
      // k counts filled positions from the top; position length-1-k is next.
      if (k == length) {
        if (!ost_validate(*sys, digits)) return true;
        ++c.cases;
        const Integer v = ost_decode(*sys, digits);
        if (v >= top) return fail(c, format_word(digits, sys->mu()) + " decodes to " + str(v));
        if (seen[v.get_ui()]) return fail(c, "value " + str(v) + " decoded twice");
        seen[v.get_ui()] = 1;
        return true;
      }
      const std::size_t pos = length - 1 - k;
      const Digit bound = sys->partial_quotient(pos + 1);
      for (Digit b = 0; b <= bound; ++b) {
        digits[pos] = b;
        // Prune prefixes already invalid with zeros below.
        std::vector<Digit> probe(digits);
        std::fill(probe.begin(), probe.begin() + static_cast<long>(pos), 0);
        if (!ost_validate(*sys, probe)) continue;
        if (!walk(k + 1)) return false;
      }
      digits[pos] = 0;
      return true;
    };
    if (!walk(0)) return;
    const auto missing = std::find(seen.begin(), seen.end(), 0);
    if (missing != seen.end()) fail(c, "value " + std::to_string(missing - seen.begin()) + " has no string");
  });
}

Check int_order(const SystemPtr& sys, std::size_t bound) {
  return run("int.order", [&, bound](Check& c) {
    std::vector<OstrowskiInt> enc;
    enc.reserve(bound);
    for (std::size_t n = 0; n < bound; ++n) enc.push_back(ost_encode(Integer(static_cast<unsigned long>(n)), sys));
    for (std::size_t m = 0; m < bound; ++m) {
      for (std::size_t n = 0; n < bound; ++n) {
        const int got = sgn(ost_cmp(enc[m], enc[n]));
        const int expect = m < n ? -1 : (m > n ? 1 : 0);
        if (got != expect) return (void)fail(c, "cmp(" + std::to_string(m) + ", " + std::to_string(n) + ")");
      }
      c.cases += bound;
    }
  });
}

Check int_digit_adder(const SystemPtr& sys, std::size_t bound) {
  return run("int.digit-adder", [&, bound](Check& c) {
    std::vector<OstrowskiInt> enc;
    for (std::size_t n = 0; n < 2 * bound; ++n) enc.push_back(ost_encode(Integer(static_cast<unsigned long>(n)), sys));
    for (std::size_t x = 0; x < bound; ++x) {
      for (std::size_t y = 0; y < bound; ++y) {
        ++c.cases;
        if (!(ost_add(enc[x], enc[y], AddEngine::Digit) == enc[x + y])) {
          return (void)fail(c, std::to_string(x) + " + " + std::to_string(y));
        }
      }
    }
  });
}

// ---------------------------------------------------------------- reals

Check real_neg_beta(const SystemPtr& sys) {
  return run("real.neg-beta", [&](Check& c) {
    for (std::size_t n = 0; n <= 20; ++n) {
      ++c.cases;
      const QuadraticNumber v = real_decode(neg_beta_digits(n, sys));
      if (!(v == -sys->beta(n))) return (void)fail(c, "n = " + std::to_string(n) + ": " + str(v));
    }
  });
}

Check real_order(const SystemPtr& sys) {
  return run("real.order", [&](Check& c) {
    std::vector<DigitSeq> seqs;
    std::vector<QuadraticNumber> vals;
    for (long n = 0; n < 500; ++n) {
      auto f = f_map(n, sys);
      seqs.push_back(std::move(f.digits));
      vals.push_back(std::move(f.value));
    }
    for (std::size_t n = 0; n <= 10; ++n) {
      seqs.push_back(neg_beta_digits(n, sys));
      vals.push_back(-sys->beta(n));
    }
    for (std::size_t i = 0; i < seqs.size(); ++i) {
      for (std::size_t j = 0; j < seqs.size(); ++j) {
        ++c.cases;
        if (sgn(real_cmp(seqs[i], seqs[j])) != compare(vals[i], vals[j])) {
          return (void)fail(c, seqs[i].to_string() + " vs " + seqs[j].to_string());
        }
      }
    }
  });
}

// Points (u + v a) / w folded into I.
std::vector<QuadraticNumber> real_points(const SystemPtr& sys, std::size_t count) {
  std::vector<QuadraticNumber> out;
  const QuadraticNumber& a = sys->alpha();
  for (std::size_t i = 0; out.size() < count; ++i) {
    const long u = static_cast<long>(i % 17) - 8;
    const long v = static_cast<long>((i / 17) % 13) - 6;
    const long w = 1 + static_cast<long>(i % 7);
    out.push_back(wrap((QuadraticNumber(u) + QuadraticNumber(v) * a) / QuadraticNumber(w), *sys));
  }
  return out;
}

Check real_roundtrip(const SystemPtr& sys, std::size_t count, std::size_t depth) {
  return run("real.roundtrip", [&, count, depth](Check& c) {
    std::size_t exact = 0;
    for (const auto& x : real_points(sys, count)) {
      ++c.cases;
      const DigitSeq seq = real_encode(x, sys, depth);
      const QuadraticNumber back = real_decode(seq);
      if (!seq.approximate()) {
        ++exact;
        if (!(back == x)) return (void)fail(c, str(x) + " decodes to " + str(back));
      } else if (compare((back - x).abs(), sys->beta(depth).abs()) >= 0) {
        return (void)fail(c, str(x) + " truncation error too large");
      }
    }
    c.detail = std::to_string(exact) + " exact, " + std::to_string(c.cases - exact) + " truncated";
  });
}

Check real_fmap_digits(const SystemPtr& sys, std::size_t bound, std::size_t depth) {
  return run("real.fmap-digits", [&, bound, depth](Check& c) {
    const TailBounds range = representable_interval(*sys);
    for (std::size_t n = 0; n < bound; ++n) {
      ++c.cases;
      const Integer N(static_cast<unsigned long>(n));
      const QuadraticNumber value = sys->alpha() * QuadraticNumber(N);
      const QuadraticNumber f = wrap(value, *sys);
      if (!range.contains(f) || !(value - f).is_integer()) return (void)fail(c, "f(" + str(N) + "a) not in I");
      const DigitSeq seq = real_encode(f, sys, depth);
      if (!(seq == DigitSeq(sys, ost_encode(N, sys).digits()))) {
        return (void)fail(c, "digits of f(" + str(N) + "a) are " + seq.to_string());
      }
      const FMapResult r = f_map(N, sys);
      if (!(r.value == f) || !(r.digits == seq)) return (void)fail(c, "f_map(" + str(N) + ")");
    }
  });
}

Check real_odd_sign(const SystemPtr& sys) {
  return run("real.odd-sign", [&](Check& c) {
    for (std::size_t k = 1; k <= 20; ++k) {
      ++c.cases;
      const bool negative = f_map(sys->q(k), sys).value.sign() < 0;
      if (negative != (k % 2 == 1)) return (void)fail(c, "k = " + std::to_string(k));
    }
  });
}

Check real_boundary(const SystemPtr& sys) {
  return run("real.boundary", [&](Check& c) {
    const TailBounds range = representable_interval(*sys);
    c.cases = 2;
    if (!(real_decode(real_encode(range.lo, sys)) == range.lo)) return (void)fail(c, "left end");
    try {
      real_encode(range.hi, sys);
      fail(c, "right end accepted");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OutOfRange) throw;
    }
  });
}

Check real_tail_bounds(const SystemPtr& sys) {
  return run("real.tail-bounds", [&](Check& c) {
    // The attained lower end of an unconstrained tail is an extremal sum.
    for (std::size_t n = 2; n <= 12; ++n) {
      ++c.cases;
      const std::size_t m = n % 2 == 0 ? n : n - 1;
      const QuadraticNumber lo = tail_bounds(n, *sys, false).lo;
      if (!(lo == real_decode(neg_beta_digits(m, sys)))) return (void)fail(c, "n = " + std::to_string(n));
    }
  });
}

// ---------------------------------------------------------------- iso

struct IsoData {
  SystemPtr sys;
  std::vector<AElement> fin;        // Z^{-1}(n)
  std::vector<AElement> infinite;   // periodic sample
};

IsoData iso_data(const SystemPtr& sys, std::size_t count) {
  IsoData d{sys, {}, {}};
  d.fin.reserve(count);
  for (std::size_t n = 0; n < count; ++n) d.fin.push_back(AElement::from_z(Integer(static_cast<unsigned long>(n)), sys));
  for (std::size_t n = 0; n <= 10; ++n) {
    if (n == 1) continue;  // value 2 - a lies outside I
    d.infinite.emplace_back(neg_beta_digits(n, sys));
  }
  for (std::size_t n = 1; n <= 12; ++n) d.infinite.push_back(neg(d.fin[n]));
  return d;
}

std::string show(const AElement& x) { return x.seq().to_string(); }

Check iso_fzo(const IsoData& d, std::size_t bound) {
  return run("iso.fzo", [&, bound](Check& c) {
    for (std::size_t n = 0; n < bound; ++n) {
      ++c.cases;
      const AElement& x = d.fin[n];
      if (eval_Z(x) != n) return (void)fail(c, "Z(" + show(x) + ")");
      const QuadraticNumber o = real_decode(x.seq());
      if (!(eval_O(x) == o)) return (void)fail(c, "O(" + show(x) + ")");
      const QuadraticNumber m = d.sys->alpha() * QuadraticNumber(eval_Z(x)) - o;
      if (!m.is_integer() || m.sign() < 0) return (void)fail(c, "aZ - O = " + str(m) + " at Z = " + std::to_string(n));
    }
  });
}

Check iso_z_order(const IsoData& d, std::size_t bound) {
  return run("iso.z-order", [&, bound](Check& c) {
    for (std::size_t m = 0; m < bound; ++m) {
      for (std::size_t n = 0; n < bound; ++n) {
        ++c.cases;
        const int expect = m < n ? -1 : (m > n ? 1 : 0);
        if (sgn(cmp_A(d.fin[m], d.fin[n], AOrder::Z)) != expect) {
          return (void)fail(c, std::to_string(m) + " vs " + std::to_string(n));
        }
      }
    }
  });
}

std::vector<AElement> o_sample(const IsoData& d, std::size_t bound) {
  std::vector<AElement> out(d.fin.begin(), d.fin.begin() + static_cast<long>(bound));
  out.insert(out.end(), d.infinite.begin(), d.infinite.end());
  return out;
}

Check iso_o_order(const IsoData& d, std::size_t bound) {
  return run("iso.o-order", [&, bound](Check& c) {
    const auto sample = o_sample(d, bound);
    std::vector<QuadraticNumber> vals;
    for (const auto& x : sample) vals.push_back(real_decode(x.seq()));
    for (std::size_t i = 0; i < sample.size(); ++i) {
      for (std::size_t j = 0; j < sample.size(); ++j) {
        ++c.cases;
        if (sgn(cmp_A(sample[i], sample[j], AOrder::O)) != compare(vals[i], vals[j])) {
          return (void)fail(c, show(sample[i]) + " vs " + show(sample[j]));
        }
      }
    }
  });
}

// O(x (+) y) = O(x) + O(y) mod 1, and Z(x (+) y) = Z(x) + Z(y) on finite pairs.
Check iso_oplus(const IsoData& d, std::size_t bound) {
  return run("iso.oplus", [&, bound](Check& c) {
    const TailBounds range = representable_interval(*d.sys);
    auto check = [&](const AElement& x, const AElement& y) {
      ++c.cases;
      const AElement s = add_circle(x, y);
      const QuadraticNumber o = real_decode(s.seq());
      if (!range.contains(o) || !(o - real_decode(x.seq()) - real_decode(y.seq())).is_integer()) {
        return fail(c, show(x) + " (+) " + show(y) + " = " + show(s));
      }
      if (x.is_finite() && y.is_finite() && eval_Z(s) != eval_Z(x) + eval_Z(y)) {
        return fail(c, "Z of " + show(x) + " (+) " + show(y));
      }
      return true;
    };
    for (std::size_t m = 0; m < bound; ++m) {
      for (std::size_t n = m; n < bound; ++n) {
        if (!check(d.fin[m], d.fin[n])) return;
      }
    }
    for (const auto& x : d.infinite) {
      for (std::size_t n = 0; n < 20; ++n) {
        if (!check(x, d.fin[n]) || !check(d.fin[n], x)) return;
      }
      for (const auto& y : d.infinite) {
        if (!check(x, y)) return;
      }
      ++c.cases;
      if (!(add_circle(x, neg(x)) == AElement::zero(d.sys))) return (void)fail(c, "x (+) (-)x at " + show(x));
    }
  });
}

// S maps onto [0,1), is monotone from the 1-order and adds mod 1; the wrap
// happens iff (-)_1 x <=_1 y.
Check iso_s(const IsoData& d, std::size_t bound) {
  return run("iso.s-iso", [&, bound](Check& c) {
    const auto sample = o_sample(d, bound);
    std::vector<QuadraticNumber> s;
    const QuadraticNumber o1 = d.sys->alpha() - QuadraticNumber(2);
    for (const auto& x : sample) {
      ++c.cases;
      QuadraticNumber v = eval_S(x);
      if (v.sign() < 0 || compare(v, QuadraticNumber(1)) >= 0) return (void)fail(c, "S(" + show(x) + ") = " + str(v));
      if (!(wrap(v + o1, *d.sys) == real_decode(x.seq()))) return (void)fail(c, "S(" + show(x) + ") off by O");
      s.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < sample.size(); ++i) {
      for (std::size_t j = 0; j < sample.size(); ++j) {
        ++c.cases;
        if (sgn(cmp_A(sample[i], sample[j], AOrder::One)) != compare(s[i], s[j])) {
          return (void)fail(c, show(sample[i]) + " vs " + show(sample[j]) + " in the 1-order");
        }
      }
    }
  });
}

Check iso_splus(const IsoData& d, std::size_t bound) {
  return run("iso.splus", [&, bound](Check& c) {
    std::vector<QuadraticNumber> s;
    std::vector<AElement> inv;
    for (std::size_t n = 0; n < bound; ++n) {
      s.push_back(eval_S(d.fin[n]));
      inv.push_back(neg_one(d.fin[n]));
    }
    const AElement one = AElement::one(d.sys);
    for (std::size_t m = 0; m < bound; ++m) {
      ++c.cases;
      if (!(add_circle(inv[m], d.fin[m], CircleMode::Shifted) == one)) {
        return (void)fail(c, "(-)_1 x (+)_1 x != 1 at Z = " + std::to_string(m));
      }
      for (std::size_t n = 0; n < bound; ++n) {
        ++c.cases;
        const QuadraticNumber sum = s[m] + s[n];
        const bool wraps = compare(sum, QuadraticNumber(1)) >= 0;
        const AElement r = add_circle(d.fin[m], d.fin[n], CircleMode::Shifted);
        const QuadraticNumber expect = wraps ? sum - QuadraticNumber(1) : sum;
        if (!(eval_S(r) == expect)) {
          return (void)fail(c, "S(x (+)_1 y) at Z = " + std::to_string(m) + ", " + std::to_string(n));
        }
        const bool predicted = !(d.fin[m] == one) && cmp_A(inv[m], d.fin[n], AOrder::One) <= 0;
        if (wraps != predicted || (n < 40 && wraps != wraps_one(d.fin[m], d.fin[n]))) {
          return (void)fail(c, "wrap criterion at Z = " + std::to_string(m) + ", " + std::to_string(n));
        }
      }
    }
  });
}

// N ∩ (aZ, (Z+1)a) against the two cases read off the sign of O, and the
// R-values of B above X.
Check iso_nat(const IsoData& d, std::size_t bound) {
  return run("iso.nat", [&, bound](Check& c) {
    const QuadraticNumber& a = d.sys->alpha();
    for (std::size_t n = 0; n < bound; ++n) {
      ++c.cases;
      const AElement& x = d.fin[n];
      const QuadraticNumber lo = a * QuadraticNumber(Integer(static_cast<unsigned long>(n)));
      std::vector<Integer> inside;
      for (Integer k = lo.floor() + 1; k <= (lo + a).floor(); k += 1) inside.push_back(k);
      const QuadraticNumber o = real_decode(x.seq());
      const Integer m = (lo - o).to_integer();
      std::vector<Integer> expect;
      if (o.sign() < 0) expect.push_back(m);
      expect.push_back(m + 1);
      if (inside != expect) return (void)fail(c, "interval at Z = " + std::to_string(n));
      std::vector<Integer> rs;
      for (int i : b_indices(x)) rs.push_back(eval_R(make_B(x, i)));
      if (n == 0) expect.insert(expect.begin(), Integer(0));
      if (rs != expect) return (void)fail(c, "R over B at Z = " + std::to_string(n));
      for (int i = 0; i <= 2; ++i) {
        const bool member = std::find(rs.begin(), rs.end(), m + i) != rs.end();
        if (b_member(x, i) != member) return (void)fail(c, "membership (" + show(x) + ", " + std::to_string(i) + ")");
      }
    }
  });
}

Check iso_lminus(const IsoData& d, std::size_t bound) {
  return run("iso.lminus", [&, bound](Check& c) {
    const AElement e = AElement::e(d.sys);
    const QuadraticNumber oe = real_decode(e.seq());
    if (!(oe == representable_interval(*d.sys).lo)) return (void)fail(c, "O(e) is not the left end of I");
    auto check = [&](const AElement& x) {
      ++c.cases;
      const QuadraticNumber ox = real_decode(x.seq());
      QuadraticNumber expect = oe - ox;
      if (ox.sign() > 0) expect += QuadraticNumber(1);
      const AElement r = add_circle(e, neg(x));
      if (!(real_decode(r.seq()) == expect)) return fail(c, "e (-) " + show(x));
      return true;
    };
    for (std::size_t n = 0; n < bound; ++n) {
      if (!check(d.fin[n])) return;
    }
    for (const auto& x : d.infinite) {
      if (!check(x)) return;
    }
  });
}

Check iso_or(const IsoData& d, std::size_t bound) {
  return run("iso.or", [&, bound](Check& c) {
    auto check = [&](const AElement& x, const AElement& y) {
      ++c.cases;
      const int r = r_value(x, y);
      const AElement s = add_circle(x, y);
      const QuadraticNumber lhs = real_decode(x.seq()) + real_decode(y.seq());
      const QuadraticNumber rhs = real_decode(s.seq()) + QuadraticNumber(r - 1);
      if (!(lhs == rhs)) return fail(c, "r(" + show(x) + ", " + show(y) + ") = " + std::to_string(r));
      return true;
    };
    for (std::size_t m = 0; m < bound; ++m) {
      for (std::size_t n = 0; n < bound; ++n) {
        if (!check(d.fin[m], d.fin[n])) return;
      }
    }
    for (const auto& x : d.infinite) {
      for (const auto& y : d.infinite) {
        if (!check(x, y)) return;
      }
      for (std::size_t n = 0; n < 20; ++n) {
        if (!check(x, d.fin[n]) || !check(d.fin[n], x)) return;
      }
    }
  });
}

// Enumerates B upward from (0, 0): R hits 0, 1, 2, ... in order.
std::vector<BElement> b_prefix(const SystemPtr& sys, std::size_t count) {
  std::vector<BElement> out;
  out.reserve(count);
  BElement z{AElement::zero(sys), 0};
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(z);
    if (k + 1 < count) z = succ_B(z);
  }
  return out;
}

Check iso_r_bijection(const std::vector<BElement>& bs) {
  return run("iso.r-bijection", [&](Check& c) {
    for (std::size_t k = 0; k < bs.size(); ++k) {
      ++c.cases;
      if (eval_R(bs[k]) != k) return (void)fail(c, "R of the " + std::to_string(k) + "-th element is " + str(eval_R(bs[k])));
      if (!b_member(bs[k].x, bs[k].i)) return (void)fail(c, "succ_B left B at " + std::to_string(k));
      if (k == 0) continue;
      if (cmp_B(bs[k - 1], bs[k]) >= 0) return (void)fail(c, "order at " + std::to_string(k));
      if (!(pred_B(bs[k]) == bs[k - 1])) return (void)fail(c, "pred_B at " + std::to_string(k));
    }
  });
}

// R(y (+)_B z) = R(y) + R(z) for R(y) + R(z) < bound, and order agreement.
Check iso_r_add(const std::vector<BElement>& bs, std::size_t bound) {
  return run("iso.r-additive", [&, bound](Check& c) {
    for (std::size_t m = 0; m < bound; ++m) {
      for (std::size_t n = 0; m + n < bound; ++n) {
        ++c.cases;
        const BElement s = add_B(bs[m], bs[n]);
        if (!(s == bs[m + n])) {
          return (void)fail(c, "R " + std::to_string(m) + " (+)_B R " + std::to_string(n) + " gives R " + str(eval_R(s)));
        }
      }
    }
    const std::size_t span = std::min<std::size_t>(bound, 600);
    for (std::size_t m = 0; m < span; ++m) {
      for (std::size_t n = 0; n < span; ++n) {
        ++c.cases;
        const int expect = m < n ? -1 : (m > n ? 1 : 0);
        if (sgn(cmp_B(bs[m], bs[n])) != expect) return (void)fail(c, "cmp_B at R " + std::to_string(m) + ", " + std::to_string(n));
      }
    }
  });
}

// T(c1 (+)_C c2) = T(c1) + T(c2) and cmp_C = value order over a grid, plus
// the N and Na parts.
Check iso_t(const IsoData& d, const std::vector<BElement>& bs, std::size_t grid) {
  return run("iso.t-iso", [&, grid](Check& c) {
    std::vector<CElement> cs;
    for (std::size_t k = 0; k < grid; ++k) {
      const AElement& x = k % 4 == 3 ? d.infinite[(k / 4) % d.infinite.size()] : d.fin[(7 * k) % std::min<std::size_t>(d.fin.size(), 400)];
      cs.push_back(CElement{bs[(k * 37) % std::min(bs.size(), grid * 2)], x});
    }
    std::vector<QuadraticNumber> t;
    for (const auto& e : cs) {
      const QuadraticNumber v = QuadraticNumber(eval_R(e.b)) + eval_S(e.x);
      if (!(eval_T(e) == v)) return (void)fail(c, "T at R " + str(eval_R(e.b)));
      t.push_back(v);
    }
    for (std::size_t i = 0; i < grid; ++i) {
      for (std::size_t j = 0; j < grid; ++j) {
        ++c.cases;
        if (sgn(cmp_C(cs[i], cs[j])) != compare(t[i], t[j])) {
          return (void)fail(c, "cmp_C at grid " + std::to_string(i) + ", " + std::to_string(j));
        }
        const CElement s = add_C(cs[i], cs[j]);
        if (!(eval_T(s) == t[i] + t[j])) return (void)fail(c, "T additivity at grid " + std::to_string(i) + ", " + std::to_string(j));
      }
    }
    const AElement one = AElement::one(d.sys);
    for (std::size_t k = 0; k < grid; ++k) {
      c.cases += 3;
      const CElement nat{bs[k], one};
      if (!in_Bprime(nat) || !(eval_T(nat) == QuadraticNumber(eval_R(bs[k])))) return (void)fail(c, "B' at " + std::to_string(k));
      const Integer n(static_cast<unsigned long>(k));
      const CElement mult = aprime_of(n, d.sys);
      if (!in_Aprime(mult) || !(eval_T(mult) == d.sys->alpha() * QuadraticNumber(n))) {
        return (void)fail(c, "A' at " + std::to_string(k));
      }
      // Members of the grid lie in A' exactly when T is in Na.
      const bool in_na = (t[k] / d.sys->alpha()).is_integer();
      if (in_Aprime(cs[k]) != in_na) return (void)fail(c, "A' membership at grid " + std::to_string(k));
    }
  });
}

// Between X <_O Y sits a truncation of any element strictly between them.
Check iso_density(const IsoData& d) {
  return run("iso.density", [&](Check& c) {
    const auto sample = o_sample(d, 24);
    for (const auto& x : sample) {
      for (const auto& y : sample) {
        if (cmp_A(x, y, AOrder::O) >= 0) continue;
        ++c.cases;
        const QuadraticNumber mid = (real_decode(x.seq()) + real_decode(y.seq())) / QuadraticNumber(2);
        const DigitSeq z0 = real_encode(mid, d.sys, 96);
        const std::size_t len = z0.approximate() ? z0.preamble().size() : 256;
        bool found = false;
        for (std::size_t n = 0; n <= len && !found; ++n) {
          std::vector<Digit> head(n);
          for (std::size_t k = 0; k < n; ++k) head[k] = z0.digit(k);
          const AElement z(DigitSeq(d.sys, head));
          found = cmp_A(x, z, AOrder::O) < 0 && cmp_A(z, y, AOrder::O) < 0;
        }
        if (!found) return (void)fail(c, "no finite element between " + show(x) + " and " + show(y));
      }
    }
  });
}

// ---------------------------------------------------------------- interp

Check interp_v(const InterpContext& ctx) {
  return run("interp.v", [&](Check& c) {
    const SystemPtr& sys = ctx.sys;
    std::set<Integer> qs;
    for (std::size_t k = 1; k <= ctx.depth; ++k) {
      ++c.cases;
      qs.insert(sys->q(k));
      const QuadraticNumber x = sys->alpha() * QuadraticNumber(sys->q(k));
      const auto got = v_lookup(x, ctx);
      // q_0 = q_1 for these systems, so the lookup reports the smaller index.
      if (!got || sys->q(*got) != sys->q(k)) return (void)fail(c, "q_" + std::to_string(k) + " a not found");
      if (sys->q(k) <= 10000 && !v_by_best_approx(x, ctx)) return (void)fail(c, "q_" + std::to_string(k) + " a not a best approximation");
    }
    for (long n = 1; n < 300; ++n) {
      if (qs.count(n)) continue;
      ++c.cases;
      const QuadraticNumber x = sys->alpha() * QuadraticNumber(n);
      if (v_lookup(x, ctx) || v_by_best_approx(x, ctx)) return (void)fail(c, std::to_string(n) + "a reported in V");
    }
  });
}

Check interp_smallo(const InterpContext& ctx) {
  return run("interp.smallo", [&](Check& c) {
    const SystemPtr& sys = ctx.sys;
    for (std::size_t n = 0; n <= 10; ++n) {
      const QuadraticNumber lo = -sys->beta(n);
      const QuadraticNumber step = -sys->beta(n + 1) / QuadraticNumber(21);
      for (long t = 1; t <= 20; ++t) {
        ++c.cases;
        const QuadraticNumber x = lo + step * QuadraticNumber(t);
        const DigitSeq seq = real_encode(x, sys, n + 2);
        for (std::size_t k = 0; k <= n; ++k) {
          if (seq.digit(k) != 0) return (void)fail(c, "n = " + std::to_string(n) + ", sample " + std::to_string(t));
        }
      }
    }
  });
}

Check interp_h(const InterpContext& ctx) {
  return run("interp.h-unique", [&](Check& c) {
    for (std::size_t l = 0; l <= 8; ++l) {
      for (long m = 0; m < 200; ++m) {
        ++c.cases;
        const QuadraticNumber x = f_map(m, ctx.sys).value;
        const auto hits = h_scan(l, x, ctx);
        if (hits.size() != 1) return (void)fail(c, std::to_string(hits.size()) + " solutions at l = " + std::to_string(l) + ", m = " + std::to_string(m));
        if (h_solve(l, x, ctx) != hits.front()) return (void)fail(c, "digit h at l = " + std::to_string(l) + ", m = " + std::to_string(m));
      }
    }
  });
}

Check interp_e(const InterpContext& ctx) {
  return run("interp.e-digit", [&](Check& c) {
    for (std::size_t l = 0; l <= 8; ++l) {
      for (long m = 0; m < 200; ++m) {
        ++c.cases;
        const FMapResult f = f_map(m, ctx.sys);
        if (e_membership(l, f.value, ctx) != e_by_digit(l, f.digits)) {
          return (void)fail(c, "l = " + std::to_string(l) + ", m = " + std::to_string(m));
        }
      }
    }
    // Digits above 1 fall in neither class.
    for (std::size_t l = 1; l <= 8; ++l) {
      const Digit top = ctx.sys->partial_quotient(l + 1);
      if (top < 2) continue;
      ++c.cases;
      std::vector<Digit> digits(l + 1, 0);
      digits[l] = top;
      const DigitSeq seq(ctx.sys, digits);
      if (e_membership(l, real_decode(seq), ctx) != EClass::Neither || e_by_digit(l, seq) != EClass::Neither) {
        return (void)fail(c, "digit " + std::to_string(top) + " at l = " + std::to_string(l));
      }
    }
  });
}

Check interp_h2(const InterpContext& ctx) {
  return run("interp.h2", [&](Check& c) {
    for (unsigned mask = 0; mask < 64; ++mask) {
      ++c.cases;
      std::vector<std::size_t> X;
      for (std::size_t k = 0; k < 6; ++k) {
        if (mask & (1U << k)) X.push_back(k);
      }
      const InterpReport rep = verify_interp(ctx, X);
      if (!rep.ok) return (void)fail(c, rep.failures.front());
    }
  });
}

Check interp_w(const InterpContext& ctx) {
  return run("interp.w-alternation", [&](Check& c) {
    const MsolStructure st = msol_structure(ctx);
    const QuadraticNumber dv = real_decode(st.d);
    for (std::size_t l = 1; l <= ctx.depth; ++l) {
      ++c.cases;
      const bool e1 = e_membership(l, dv, ctx) == EClass::E1;
      const bool in_w = std::find(st.W.begin(), st.W.end(), l) != st.W.end();
      if (e1 != (l % 2 == 1) || in_w != e1) return (void)fail(c, "l = " + std::to_string(l));
    }
  });
}

// ---------------------------------------------------------------- golden

Check gold_shift(const GoldenContext& g, std::size_t bound) {
  return run("gold.shift", [&, bound](Check& c) {
    for (std::size_t n = 0; n < bound; ++n) {
      ++c.cases;
      const Integer N(static_cast<unsigned long>(n));
      std::vector<Digit> expect = ost_encode(N, g.system()).digits();
      if (!expect.empty()) {
        expect.erase(expect.begin() + 1);
        expect[0] = 0;
      }
      while (!expect.empty() && expect.back() == 0) expect.pop_back();
      if (ost_encode(L_shift(N, g), g.system()).digits() != expect) return (void)fail(c, "n = " + std::to_string(n));
    }
    for (long n = 0; n < 60; ++n) {
      ++c.cases;
      if (L_shift_by_E1(n, g, 14) != L_shift(n, g)) return (void)fail(c, "E1 form at n = " + std::to_string(n));
    }
  });
}

Check gold_t1(const GoldenContext& g, std::size_t bound) {
  return run("gold.t1", [&, bound](Check& c) {
    for (std::size_t n = 0; n < bound; ++n) {
      ++c.cases;
      const Integer N(static_cast<unsigned long>(n));
      if (t1_map(N, g) != N) return (void)fail(c, "n = " + std::to_string(n));
    }
  });
}

Check gold_t2(const GoldenContext& g, std::size_t bound) {
  return run("gold.t2", [&, bound](Check& c) {
    for (std::size_t n = 0; n < bound; ++n) {
      ++c.cases;
      const Integer N(static_cast<unsigned long>(n));
      const QuadraticNumber t2 = t2_map(N, g);
      if (!(g.phi() * f_map(N, g.system()).value + t2).is_zero()) return (void)fail(c, "n = " + std::to_string(n));
    }
  });
}

Check gold_mul(const GoldenContext& g, std::size_t bound) {
  return run("gold.mul", [&, bound](Check& c) {
    const QuadraticNumber phi = g.phi();
    std::unordered_set<QuadraticNumber, QuadraticNumberHash> fs;
    for (std::size_t n = 0; n < bound; ++n) {
      const Integer N(static_cast<unsigned long>(n));
      const QuadraticNumber f = f_map(N, g.system()).value;
      if (!fs.insert(f).second) return (void)fail(c, "f collides at n = " + std::to_string(n));
      const QuadraticNumber t2 = t2_map(N, g);
      for (std::size_t m = 0; m < bound; ++m) {
        ++c.cases;
        const QuadraticNumber M(Integer(static_cast<unsigned long>(m)));
        if (!(M * phi - t2 == phi * (M + f))) return (void)fail(c, "m = " + std::to_string(m) + ", n = " + std::to_string(n));
      }
      ++c.cases;
      const Integer m = (N * 7) % static_cast<unsigned long>(bound);
      if (!(mul_phi(m, N, g) == phi * (QuadraticNumber(m) + f))) return (void)fail(c, "mul_phi at n = " + std::to_string(n));
    }
  });
}

// ---------------------------------------------------------------- automata

// All strings up to the given length, by prefixes: once a prefix padded with
// zeros is invalid every completion is, and the DFA must reject them all.
Check auto_validity(const SystemPtr& sys, const Dfa& dfa, std::size_t max_len) {
  return run("auto.validity", [&, max_len](Check& c) {
    const std::uint32_t base = dfa.alphabet.base;
    const std::uint32_t ns = dfa.num_states();
    // live[r][s]: some word of length r leads s to acceptance.
    std::vector<std::vector<char>> live(max_len + 1, std::vector<char>(ns, 0));
    for (std::uint32_t s = 0; s < ns; ++s) live[0][s] = dfa.accepting[s];
    for (std::size_t r = 1; r <= max_len; ++r) {
      for (std::uint32_t s = 0; s < ns; ++s) {
        for (Letter l = 0; l < base && !live[r][s]; ++l) live[r][s] = live[r - 1][dfa.next(s, l)];
      }
    }
    std::vector<std::uint64_t> power(max_len + 1, 1);
    for (std::size_t r = 1; r <= max_len; ++r) power[r] = power[r - 1] * base;
    for (std::size_t len = 0; len <= max_len; ++len) {
      std::vector<Digit> digits(len, 0);  // LSD first
      std::function<bool(std::size_t, std::uint32_t)> walk = [&](std::size_t k, std::uint32_t state) -> bool {
        if (k == len) {
          ++c.cases;
          if (dfa.accepting[state] != ost_validate(*sys, digits)) return fail(c, "\"" + format_word(digits, sys->mu()) + "\"");
          return true;
        }
        const std::size_t pos = len - 1 - k;
        for (Letter l = 0; l < base; ++l) {
          digits[pos] = l;
          const std::uint32_t next = dfa.next(state, l);
          std::vector<Digit> probe(digits);
          std::fill(probe.begin(), probe.begin() + static_cast<long>(pos), 0);
          if (!ost_validate(*sys, probe)) {
            c.cases += power[pos];
            if (live[pos][next]) return fail(c, "accepts a completion of invalid prefix at length " + std::to_string(len));
            continue;
          }
          if (!walk(k + 1, next)) return false;
        }
        digits[pos] = 0;
        return true;
      };
      if (!walk(0, dfa.start)) return;
    }
  });
}

Check auto_minimal(const SystemPtr& sys, const Dfa& dfa) {
  return run("auto.min-states", [&](Check& c) {
    c.cases = 1;
    const std::size_t brute = brute_force_state_count(sys, 10);
    if (dfa.num_states() != brute) {
      fail(c, std::to_string(dfa.num_states()) + " states, brute force finds " + std::to_string(brute));
    }
  });
}

Check auto_cmp(const SystemPtr& sys, const Dfa& dfa, std::size_t bound) {
  return run("auto.cmp", [&, bound](Check& c) {
    std::vector<std::vector<Digit>> words;
    std::vector<OstrowskiInt> enc;
    for (std::size_t n = 0; n < bound; ++n) {
      const Integer N(static_cast<unsigned long>(n));
      words.push_back(rho(N, sys));
      enc.push_back(ost_encode(N, sys));
    }
    for (std::size_t m = 0; m < bound; ++m) {
      for (std::size_t n = 0; n < bound; ++n) {
        ++c.cases;
        const bool got = dfa.accepts(convolve({words[m], words[n]}, dfa.alphabet.base));
        if (got != (ost_cmp(enc[m], enc[n]) < 0)) return (void)fail(c, std::to_string(m) + " < " + std::to_string(n));
      }
    }
  });
}

Check auto_adder(const SystemPtr& sys, const Dfa& dfa, std::size_t bound, std::size_t perturbed) {
  return run("auto.adder", [&, bound, perturbed](Check& c) {
    std::vector<std::vector<Digit>> words;
    std::vector<OstrowskiInt> enc;
    for (std::size_t n = 0; n < 2 * bound + 8; ++n) {
      const Integer N(static_cast<unsigned long>(n));
      words.push_back(rho(N, sys));
      enc.push_back(ost_encode(N, sys));
    }
    const std::uint32_t base = dfa.alphabet.base;
    for (std::size_t x = 0; x < bound; ++x) {
      for (std::size_t y = 0; y < bound; ++y) {
        ++c.cases;
        const std::vector<Digit> z = rho(ost_decode(ost_add(enc[x], enc[y])), sys);
        if (!dfa.accepts(convolve({words[x], words[y], z}, base))) {
          return (void)fail(c, "rejects " + std::to_string(x) + " + " + std::to_string(y));
        }
      }
    }
    // Wrong sums, and single-letter changes on the z track.
    std::mt19937_64 gen(20240601);
    std::uniform_int_distribution<std::size_t> pick(0, bound - 1);
    std::uniform_int_distribution<long> delta(-3, 3);
    for (std::size_t k = 0; k < perturbed; ++k) {
      ++c.cases;
      const std::size_t x = pick(gen);
      const std::size_t y = pick(gen);
      if (k % 2 == 0) {
        long dz = 0;
        while (dz == 0 || static_cast<long>(x + y) + dz < 0) dz = delta(gen);
        const std::size_t z = static_cast<std::size_t>(static_cast<long>(x + y) + dz);
        if (dfa.accepts(convolve({words[x], words[y], words[z]}, base))) {
          return (void)fail(c, "accepts " + std::to_string(x) + " + " + std::to_string(y) + " = " + std::to_string(z));
        }
      } else {
        Word w = convolve({words[x], words[y], words[x + y]}, base);
        w.insert(w.begin(), 0);
        const std::size_t at = std::uniform_int_distribution<std::size_t>(0, w.size() - 1)(gen);
        auto t = dfa.alphabet.decode(w[at]);
        t[2] = 1 - t[2];
        w[at] = dfa.alphabet.encode(t);
        if (dfa.accepts(w)) return (void)fail(c, "accepts a changed z track for " + std::to_string(x) + " + " + std::to_string(y));
      }
    }
  });
}

// The adder restricted to length <= 12 against the automaton of the listed
// triples.
Check auto_adder_brute(const SystemPtr& sys, const Dfa& dfa) {
  return run("auto.adder-brute", [&](Check& c) {
    const std::size_t len = 12;
    const std::size_t top = sys->q(len).get_ui();
    std::vector<Word> words;
    for (std::size_t x = 0; x < top; ++x) {
      for (std::size_t y = 0; x + y < top; ++y) {
        std::vector<std::vector<Digit>> tracks = {rho(Integer(static_cast<unsigned long>(x)), sys),
                                                  rho(Integer(static_cast<unsigned long>(y)), sys),
                                                  rho(Integer(static_cast<unsigned long>(x + y)), sys)};
        Word w = convolve(tracks, dfa.alphabet.base);
        while (w.size() <= len) {
          words.push_back(w);
          w.insert(w.begin(), 0);
        }
      }
    }
    c.cases = words.size();
    const Dfa brute = minimize(from_words(dfa.alphabet, words));
    const Dfa cut = minimize(product(dfa, max_length(dfa.alphabet, len)));
    if (!equivalent(brute, cut) || !same_dfa(brute, cut)) fail(c, "languages differ");
  });
}

Check auto_algebra(const std::vector<std::pair<std::string, Dfa>>& dfas) {
  return run("auto.minimizers", [&](Check& c) {
    for (const auto& [name, d] : dfas) {
      ++c.cases;
      const Dfa big = inflate(d);
      const Dfa h = minimize(big);
      if (!same_dfa(h, trim(minimize(d)))) return (void)fail(c, name + ": Hopcroft");
      if (!same_dfa(minimize_table_filling(big), h)) return (void)fail(c, name + ": table filling");
      if (!same_dfa(minimize_brzozowski(big), h)) return (void)fail(c, name + ": Brzozowski");
      if (!equivalent(complement(complement(d)), d)) return (void)fail(c, name + ": double complement");
      if (!is_empty(product(d, complement(d)))) return (void)fail(c, name + ": d and not d");
      if (!equivalent(product(d, universal(d.alphabet), BoolOp::Or), universal(d.alphabet))) {
        return (void)fail(c, name + ": union with everything");
      }
    }
  });
}

}  // namespace

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Report verify_contfrac(const SystemPtr& sys, const VerifyOptions&) {
  Report r{"contfrac " + sys->alpha().to_string(), {}};
  r.checks.push_back(cf_periodicity());
  r.checks.push_back(cf_beta(sys));
  r.checks.push_back(cf_beta_sign(sys));
  r.checks.push_back(cf_best_approx(sys));
  return r;
}

Report verify_integers(const SystemPtr& sys, const VerifyOptions& opt) {
  Report r{"integers " + sys->alpha().to_string(), {}};
  r.checks.push_back(int_bijection(sys, opt.int_bijection));
  r.checks.push_back(int_valid_strings(sys, opt.valid_length));
  r.checks.push_back(int_order(sys, opt.int_order));
  if (sys->is_golden()) r.checks.push_back(int_digit_adder(sys, opt.bound));
  return r;
}

Report verify_reals(const SystemPtr& sys, const VerifyOptions& opt) {
  Report r{"reals " + sys->alpha().to_string(), {}};
  r.checks.push_back(real_neg_beta(sys));
  r.checks.push_back(real_order(sys));
  r.checks.push_back(real_roundtrip(sys, opt.real_points, opt.depth));
  r.checks.push_back(real_fmap_digits(sys, opt.real_fmap, opt.depth));
  r.checks.push_back(real_odd_sign(sys));
  r.checks.push_back(real_boundary(sys));
  r.checks.push_back(real_tail_bounds(sys));
  return r;
}

Report verify_iso(const SystemPtr& sys, const VerifyOptions& opt) {
  Report r{"iso " + sys->alpha().to_string(), {}};
  const IsoData d = iso_data(sys, std::max(opt.iso_single, opt.iso_pairs));
  r.checks.push_back(iso_fzo(d, opt.iso_single));
  r.checks.push_back(iso_z_order(d, std::min<std::size_t>(1000, d.fin.size())));
  r.checks.push_back(iso_o_order(d, std::min<std::size_t>(1000, d.fin.size())));
  r.checks.push_back(iso_oplus(d, opt.iso_pairs));
  r.checks.push_back(iso_s(d, opt.iso_pairs));
  r.checks.push_back(iso_splus(d, opt.iso_pairs));
  r.checks.push_back(iso_nat(d, opt.iso_single));
  r.checks.push_back(iso_lminus(d, std::min<std::size_t>(1000, d.fin.size())));
  r.checks.push_back(iso_or(d, std::min<std::size_t>(150, d.fin.size())));
  const std::vector<BElement> bs = b_prefix(sys, std::max(opt.bound, 2 * opt.iso_grid) + 1);
  r.checks.push_back(iso_r_bijection(bs));
  r.checks.push_back(iso_r_add(bs, opt.bound));
  r.checks.push_back(iso_t(d, bs, opt.iso_grid));
  r.checks.push_back(iso_density(d));
  return r;
}

Report verify_interp_suite(const SystemPtr& sys, const VerifyOptions& opt) {
  Report r{"interp " + sys->alpha().to_string(), {}};
  const InterpContext ctx(sys, opt.interp_depth);
  r.checks.push_back(interp_v(ctx));
  r.checks.push_back(interp_smallo(ctx));
  r.checks.push_back(interp_h(ctx));
  r.checks.push_back(interp_e(ctx));
  r.checks.push_back(interp_h2(ctx));
  r.checks.push_back(interp_w(ctx));
  return r;
}

Report verify_golden_mul(const VerifyOptions& opt) {
  const GoldenContext g;
  Report r{"goldmul " + g.phi().to_string(), {}};
  r.checks.push_back(gold_shift(g, opt.gold_single));
  r.checks.push_back(gold_t1(g, opt.gold_single));
  r.checks.push_back(gold_t2(g, opt.gold_single));
  r.checks.push_back(gold_mul(g, opt.gold_pairs));
  return r;
}

Report verify_automata(const SystemPtr& sys, const VerifyOptions& opt) {
  Report r{"automata " + sys->alpha().to_string(), {}};
  std::vector<std::pair<std::string, Dfa>> built;
  const Dfa validity = build_validity_dfa(sys);
  built.emplace_back("validity", validity);
  r.checks.push_back(auto_validity(sys, validity, opt.automata_length));
  if (sys->is_golden()) r.checks.push_back(auto_minimal(sys, validity));
  const Dfa cmp = build_cmp_dfa(sys);
  built.emplace_back("cmp", cmp);
  r.checks.push_back(auto_cmp(sys, cmp, opt.bound));
  if (sys->is_golden()) {
    const AdderBuild adder = build_golden_adder(sys);
    built.emplace_back("adder", adder.dfa);
    r.checks.push_back(auto_adder(sys, adder.dfa, opt.bound, opt.adder_perturbed));
    r.checks.push_back(auto_adder_brute(sys, adder.dfa));
  }
  r.checks.push_back(auto_algebra(built));
  return r;
}

std::vector<Report> verify_all(const SystemPtr& sys, const VerifyOptions& opt) {
  std::vector<Report> out;
  out.push_back(verify_contfrac(sys, opt));
  out.push_back(verify_integers(sys, opt));
  out.push_back(verify_reals(sys, opt));
  const SystemPtr norm = sys->is_normalized() ? sys : System::normalized(sys->alpha());
  out.push_back(verify_iso(norm, opt));
  out.push_back(verify_interp_suite(norm, opt));
  if (sys->is_golden()) out.push_back(verify_golden_mul(opt));
  out.push_back(verify_automata(sys, opt));
  return out;
}

bool all_ok(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.ok(); });
}

std::string format_reports(const std::vector<Report>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << "== " << r.title << "\n";
    for (const auto& c : r.checks) {
      out << (c.ok ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
  }
  out << (all_ok(reports) ? "ALL PASS" : "FAILURES") << "\n";
  return out.str();
}

Json reports_json(const std::vector<Report>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) {
    Json jr;
    jr["title"] = r.title;
    jr["ok"] = r.ok();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json jc;
      jc["name"] = c.name;
      jc["ok"] = c.ok;
      jc["cases"] = c.cases;
      jc["detail"] = c.detail;
      checks.push_back(std::move(jc));
    }
    jr["checks"] = std::move(checks);
    out.push_back(std::move(jr));
  }
  return out;
}

}  // namespace ostrowski
