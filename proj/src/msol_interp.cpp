#include "ostrowski/msol_interp.hpp"

#include <algorithm>
#include <numeric>

namespace ostrowski {

namespace {

bool in_interval(const QuadraticNumber& c, const QuadraticNumber& base, const GPair& g) {
  return compare(base + g.g1, c) <= 0 && compare(c, base + g.g2) < 0;
}

DigitSeq digits_of(const QuadraticNumber& c, std::size_t l, const InterpContext& ctx) {
  if (!representable_interval(*ctx.sys).contains(c)) {
    throw Error(ErrorCode::OutOfRange, c.to_string() + " is not in I");
  }
  if (l > ctx.depth) throw Error(ErrorCode::OutOfRange, "index " + std::to_string(l) + " beyond depth");
  return real_encode(c, ctx.sys, l + 66);
}

// Digits 0..l of an expansion with no more than l+1 of them unknown.
void check_known(const DigitSeq& seq, std::size_t l) {
  if (seq.approximate() && seq.preamble().size() <= l) {
    throw Error(ErrorCode::ApproximateResult, "expansion too short for index " + std::to_string(l));
  }
}

}  // namespace

InterpContext::InterpContext(SystemPtr s, std::size_t d) : sys(std::move(s)), depth(d) {
  if (!sys->is_normalized()) throw Error(ErrorCode::UnsupportedSystem, "the interpretation needs 1.5 < a < 2");
  if (depth < 2) throw Error(ErrorCode::OutOfRange, "depth must be at least 2");
}

std::optional<std::size_t> v_lookup(const QuadraticNumber& x, const InterpContext& ctx) {
  const QuadraticNumber n = x / ctx.sys->alpha();
  if (!n.is_integer()) return std::nullopt;
  const Integer q = n.to_integer();
  for (std::size_t k = 1; k <= ctx.depth; ++k) {
    if (ctx.sys->q(k) == q) return k;
    if (ctx.sys->q(k) > q) break;
  }
  return std::nullopt;
}

bool v_by_best_approx(const QuadraticNumber& x, const InterpContext& ctx) {
  const QuadraticNumber n = x / ctx.sys->alpha();
  if (!n.is_integer()) return false;
  const Integer q = n.to_integer();
  if (q < 1) return false;
  const Integer lo = x.floor();
  return is_best_approx(ctx.sys->alpha(), lo, q) || is_best_approx(ctx.sys->alpha(), lo + 1, q);
}

GPair g_pair(std::size_t l, const Integer& n, const InterpContext& ctx) {
  const bool used = ost_encode(n, ctx.sys).digit(l) > 0;
  TailBounds t = tail_bounds(l + 1, *ctx.sys, used);
  return {l, std::move(t.lo), std::move(t.hi)};
}

GPair g_pair_uniform(std::size_t l, const InterpContext& ctx) {
  const QuadraticNumber& bl = ctx.sys->beta(l);
  const QuadraticNumber& bl1 = ctx.sys->beta(l + 1);
  if (l % 2 == 0) return {l, -(bl + bl1), -bl1};
  return {l, -bl, -(bl + bl1)};
}

Integer h_solve(std::size_t l, const QuadraticNumber& c, const InterpContext& ctx) {
  const DigitSeq seq = digits_of(c, l, ctx);
  check_known(seq, l);
  Integer n = 0;
  for (std::size_t k = 0; k <= l; ++k) {
    if (seq.digit(k) != 0) n += ctx.sys->q(k) * seq.digit(k);
  }
  if (!in_interval(c, f_map(n, ctx.sys).value, g_pair(l, n, ctx))) {
    throw Error(ErrorCode::IdentityViolation, "h(" + std::to_string(l) + ", " + c.to_string() +
                                                  ") = " + n.get_str() + " fails the interval condition");
  }
  return n;
}

std::vector<Integer> h_scan(std::size_t l, const QuadraticNumber& c, const InterpContext& ctx) {
  if (!representable_interval(*ctx.sys).contains(c)) {
    throw Error(ErrorCode::OutOfRange, c.to_string() + " is not in I");
  }
  std::vector<Integer> hits;
  const Integer& top = ctx.sys->q(l + 1);
  for (Integer n = 0; n < top; n += 1) {
    if (in_interval(c, f_map(n, ctx.sys).value, g_pair(l, n, ctx))) hits.push_back(n);
  }
  return hits;
}

std::string to_string(EClass e) {
  switch (e) {
    case EClass::E0:
      return "E0";
    case EClass::E1:
      return "E1";
    case EClass::Neither:
      return "neither";
  }
  return "?";
}

EClass e_membership(std::size_t l, const QuadraticNumber& c, const InterpContext& ctx) {
  const Integer h = h_solve(l, c, ctx);
  const Integer& ql = ctx.sys->q(l);
  if (h < ql) return EClass::E0;
  const Integer twice = ql * 2;
  if (h < std::min(ctx.sys->q(l + 1), twice)) return EClass::E1;
  return EClass::Neither;
}

EClass e_by_digit(std::size_t l, const DigitSeq& c) {
  check_known(c, l);
  switch (c.digit(l)) {
    case 0:
      return EClass::E0;
    case 1:
      return EClass::E1;
    default:
      return EClass::Neither;
  }
}

bool PeriodicSet::contains(std::size_t k) const {
  if (k < preamble.size()) return preamble[k];
  if (cycle.empty()) return false;
  return cycle[(k - preamble.size()) % cycle.size()];
}

bool PeriodicSet::is_finite() const {
  return std::none_of(cycle.begin(), cycle.end(), [](bool b) { return b; });
}

std::vector<std::size_t> PeriodicSet::elements_below(std::size_t limit) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < limit; ++k) {
    if (contains(k)) out.push_back(k);
  }
  return out;
}

std::string PeriodicSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t k = 0; k < preamble.size(); ++k) {
    if (!preamble[k]) continue;
    if (!first) out += ", ";
    out += std::to_string(k);
    first = false;
  }
  if (!is_finite()) {
    out += first ? "" : ", ";
    out += "k >= " + std::to_string(preamble.size()) + " with (k - " + std::to_string(preamble.size()) +
           ") mod " + std::to_string(cycle.size()) + " in {";
    bool inner_first = true;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (!cycle[i]) continue;
      if (!inner_first) out += ", ";
      out += std::to_string(i);
      inner_first = false;
    }
    out += "}";
  }
  return out + "}";
}

MsolStructure msol_structure(const InterpContext& ctx) {
  MsolStructure s{{}, DigitSeq::from_function(ctx.sys, std::max<std::size_t>(ctx.sys->periodic_from(), 1),
                                               std::lcm<std::size_t>(2, ctx.sys->cf().nu()),
                                               [](std::size_t j) -> Digit { return j % 2 == 1 ? 1 : 0; })};
  for (std::size_t l = 1; l <= ctx.depth; l += 2) s.W.push_back(l);
  return s;
}

std::optional<std::size_t> h1(std::size_t l) {
  if (l % 2 == 0) return std::nullopt;
  return (l - 1) / 2;
}

bool in_J(const DigitSeq& c) {
  const auto small = [](Digit b) { return b <= 1; };
  return std::all_of(c.preamble().begin(), c.preamble().end(), small) &&
         std::all_of(c.cycle().begin(), c.cycle().end(), small);
}

bool in_Jprime(const DigitSeq& c) {
  if (!in_J(c)) return false;
  const std::size_t end = c.preamble().size() + 2 * c.cycle().size();
  for (std::size_t k = 0; k < end; k += 2) {
    if (c.digit(k) != 0) return false;
  }
  return true;
}

PeriodicSet h2(const DigitSeq& c) {
  if (!in_Jprime(c)) throw Error(ErrorCode::OutOfRange, "\"" + c.to_string() + "\" is not in J'");
  PeriodicSet out;
  // k is a member iff digit 2k+1 is 1.
  const std::size_t k0 = c.preamble().size() / 2;
  for (std::size_t k = 0; k < k0; ++k) out.preamble.push_back(c.digit(2 * k + 1) == 1);
  for (std::size_t k = k0; k < k0 + c.cycle().size(); ++k) out.cycle.push_back(c.digit(2 * k + 1) == 1);
  if (out.is_finite()) {
    out.cycle.clear();
    for (std::size_t k = k0; 2 * k + 1 < c.preamble().size(); ++k) out.preamble.push_back(c.digit(2 * k + 1) == 1);
    while (!out.preamble.empty() && !out.preamble.back()) out.preamble.pop_back();
  }
  return out;
}

InterpReport verify_interp(const InterpContext& ctx, const std::vector<std::size_t>& X) {
  InterpReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.failures.push_back(std::move(msg));
  };
  std::vector<std::size_t> xs = X;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  QuadraticNumber c;
  for (std::size_t k : xs) {
    if (2 * k + 1 > ctx.depth) throw Error(ErrorCode::OutOfRange, "set element beyond depth");
    c += ctx.sys->beta(2 * k + 1);
  }
  const DigitSeq seq = real_encode(c, ctx.sys, ctx.depth + 66);
  if (!in_Jprime(seq)) {
    fail("c = " + c.to_string() + " is not in J'");
    return report;
  }
  const PeriodicSet image = h2(seq);
  if (!image.is_finite() || image.elements_below(ctx.depth + 1) != xs) {
    fail("h2(c) = " + image.to_string() + " differs from X");
  }
  for (std::size_t l = 1; l <= ctx.depth; ++l) {
    const EClass got = e_membership(l, c, ctx);
    EClass want = EClass::E0;
    if (auto k = h1(l); k && std::binary_search(xs.begin(), xs.end(), *k)) want = EClass::E1;
    if (got != want) {
      fail("(q_" + std::to_string(l) + " a, c) in " + to_string(got) + ", expected " + to_string(want));
    }
  }
  const MsolStructure s = msol_structure(ctx);
  for (std::size_t i = 0; i < s.W.size(); ++i) {
    if (h1(s.W[i]) != i) fail("h1 does not send the successor in W to the successor in N at " + std::to_string(i));
  }
  return report;
}

}  // namespace ostrowski
