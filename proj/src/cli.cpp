#include "ostrowski/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ostrowski/automata.hpp"
#include "ostrowski/golden_mul.hpp"
#include "ostrowski/iso_tower.hpp"
#include "ostrowski/msol_interp.hpp"
#include "ostrowski/serialize.hpp"
#include "ostrowski/verify.hpp"

namespace ostrowski {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SystemPtr normalized(const SystemPtr& sys) {
  return sys->is_normalized() ? sys : System::normalized(sys->alpha());
}

Integer parse_natural(const std::string& text) {
  Integer n;
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isdigit(ch); }) ||
      n.set_str(text, 10) != 0) {
    throw Usage("expected a natural number, got \"" + text + "\"");
  }
  return n;
}

std::vector<Digit> digit_group(const std::string& text) {
  std::vector<Digit> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(static_cast<Digit>(parse_natural(tok).get_ui()));
  return out;
}

// An MSD-first word, or "[b_1 ... b_s](c_1 ... c_L)" with an optional "^ω".
DigitSeq parse_digit_seq(const std::string& text, const SystemPtr& sys) {
  if (text.empty() || text.front() != '[') return DigitSeq(sys, parse_word(text, sys->mu()));
  const auto close = text.find(']');
  if (close == std::string::npos) throw Usage("unbalanced [ in \"" + text + "\"");
  std::vector<Digit> pre = digit_group(text.substr(1, close - 1));
  std::vector<Digit> cycle;
  const auto open = text.find('(', close);
  if (open != std::string::npos) {
    const auto end = text.find(')', open);
    if (end == std::string::npos) throw Usage("unbalanced ( in \"" + text + "\"");
    cycle = digit_group(text.substr(open + 1, end - open - 1));
  }
  return DigitSeq(sys, std::move(pre), std::move(cycle));
}

void emit(std::ostream& out, bool json, const Json& j, const std::string& text) {
  if (json) {
    out << j.dump(2) << "\n";
  } else {
    out << text << "\n";
  }
}

int emit_reports(std::ostream& out, bool json, const std::vector<Report>& reports) {
  if (json) {
    out << reports_json(reports).dump(2) << "\n";
  } else {
    out << format_reports(reports);
  }
  return all_ok(reports) ? 0 : 1;
}

Dfa build_named(const std::string& kind, const SystemPtr& sys) {
  if (kind == "validity") return build_validity_dfa(sys);
  if (kind == "cmp") return build_cmp_dfa(sys);
  if (kind == "adder") return build_golden_adder(sys).dfa;
  throw Usage("unknown automaton \"" + kind + "\"");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Usage("cannot write " + path);
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ostrowski numeration for quadratic irrationals"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string system_spec = "golden";
  bool json = false;
  std::size_t depth = 64;
  std::size_t bound = 2000;
  std::string dot_path;
  app.add_option("--system", system_spec, "golden, sqrt2, sqrt3 or a literal (p+q*sqrt(d))/r")->capture_default_str();
  app.add_flag("--json", json, "JSON output");
  app.add_option("--depth", depth, "digits extracted from real expansions")->capture_default_str();
  app.add_option("--bound", bound, "bound for exhaustive sweeps")->capture_default_str();
  app.add_option("--dot", dot_path, "write the automaton as DOT to this path");

  std::vector<std::string> operands;
  auto* cf = app.add_subcommand("cf", "continued fraction of the base");
  auto* encode = app.add_subcommand("encode", "Ostrowski word of N");
  encode->add_option("n", operands)->required()->expected(1);
  auto* decode = app.add_subcommand("decode", "value of a word");
  decode->add_option("word", operands)->required()->expected(1);
  auto* add = app.add_subcommand("add", "sum of two words");
  std::string engine = "reference";
  add->add_option("words", operands)->required()->expected(2);
  add->add_option("--engine", engine, "reference or digit")->capture_default_str();
  auto* cmp = app.add_subcommand("cmp", "order of two words");
  cmp->add_option("words", operands)->required()->expected(2);
  auto* real_enc = app.add_subcommand("real-encode", "expansion of c in I");
  real_enc->add_option("c", operands)->required()->expected(1);
  auto* real_dec = app.add_subcommand("real-decode", "value of an expansion");
  real_dec->add_option("digits", operands)->required()->expected(1);
  auto* fmap = app.add_subcommand("fmap", "f(na), the representative of na in I");
  fmap->add_option("n", operands)->required()->expected(1);

  auto* iso = app.add_subcommand("iso", "the A, B and C structures");
  iso->require_subcommand(1);
  auto* iso_verify = iso->add_subcommand("verify", "run the structure checks");
  auto* interp = app.add_subcommand("interp", "the interpretation in R_a");
  interp->require_subcommand(1);
  std::size_t interp_depth = 20;
  auto* interp_verify = interp->add_subcommand("verify", "run the interpretation checks");
  interp_verify->add_option("--depth", interp_depth, "largest convergent index")->capture_default_str();

  auto* gold = app.add_subcommand("goldmul", "multiplication by phi");
  std::size_t check_bound = 0;
  gold->add_option("--check", check_bound, "verify the identities below this bound");
  auto* gold_eval = gold->add_subcommand("eval", "phi * (m + f(n phi))");
  gold_eval->add_option("operands", operands, "m n")->required()->expected(2);

  auto* autom = app.add_subcommand("automata", "automata for the system");
  autom->require_subcommand(1);
  std::string kind = "validity";
  auto* a_build = autom->add_subcommand("build", "build and print an automaton");
  a_build->add_option("kind", kind, "validity, cmp or adder")->capture_default_str();
  auto* a_check = autom->add_subcommand("check", "check the automata against the validator");
  auto* a_export = autom->add_subcommand("export", "DOT text of an automaton");
  a_export->add_option("kind", kind, "validity, cmp or adder")->capture_default_str();

  auto* verify_all_cmd = app.add_subcommand("verify-all", "every check for the system");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const SystemPtr sys = System::from_spec(system_spec);
    VerifyOptions opt;
    opt.bound = bound;
    opt.depth = depth;

    if (*cf) {
      emit(out, json, to_json(sys->cf()), sys->cf().to_string());
    } else if (*encode) {
      const OstrowskiInt x = ost_encode(parse_natural(operands[0]), sys);
      emit(out, json, to_json(x), x.word());
    } else if (*decode) {
      const OstrowskiInt x = OstrowskiInt::parse(sys, operands[0]);
      emit(out, json, to_json(x), ost_decode(x).get_str());
    } else if (*add) {
      if (engine != "reference" && engine != "digit") throw Usage("unknown engine \"" + engine + "\"");
      const OstrowskiInt s = ost_add(OstrowskiInt::parse(sys, operands[0]), OstrowskiInt::parse(sys, operands[1]),
                                     engine == "digit" ? AddEngine::Digit : AddEngine::Reference);
      emit(out, json, to_json(s), s.word());
    } else if (*cmp) {
      const auto c = ost_cmp(OstrowskiInt::parse(sys, operands[0]), OstrowskiInt::parse(sys, operands[1]));
      const std::string sym = c < 0 ? "<" : (c > 0 ? ">" : "=");
      emit(out, json, Json{{"cmp", sym}}, sym);
    } else if (*real_enc) {
      const DigitSeq seq = real_encode(QuadraticNumber::parse(operands[0]), sys, depth);
      emit(out, json, to_json(seq), seq.to_string());
    } else if (*real_dec) {
      const QuadraticNumber v = real_decode(parse_digit_seq(operands[0], sys));
      emit(out, json, Json{{"value", v.to_string()}}, v.to_string());
    } else if (*fmap) {
      const FMapResult f = f_map(parse_natural(operands[0]), sys);
      Json j;
      j["value"] = f.value.to_string();
      j["m"] = f.m.get_str();
      j["digits"] = to_json(f.digits);
      emit(out, json, j, f.value.to_string() + "\nm = " + f.m.get_str() + "\ndigits " + f.digits.to_string());
    } else if (*iso_verify) {
      return emit_reports(out, json, {verify_iso(normalized(sys), opt)});
    } else if (*interp_verify) {
      opt.interp_depth = interp_depth;
      return emit_reports(out, json, {verify_interp_suite(normalized(sys), opt)});
    } else if (*gold_eval) {
      const GoldenContext g;
      const Integer m = parse_natural(operands[0]);
      const Integer n = parse_natural(operands[1]);
      const QuadraticNumber x = QuadraticNumber(m) + f_map(n, g.system()).value;
      const QuadraticNumber p = mul_phi(m, n, g);
      Json j;
      j["x"] = x.to_string();
      j["phi_x"] = (g.phi() * x).to_string();
      j["P"] = p.to_string();
      emit(out, json, j,
           "x = " + x.to_string() + "\nphi*x = " + (g.phi() * x).to_string() + "\nP = " + p.to_string());
    } else if (*gold) {
      if (check_bound == 0) throw Usage("goldmul needs --check <bound> or eval m n");
      opt.gold_single = check_bound;
      opt.gold_pairs = std::min<std::size_t>(check_bound, 1000);
      return emit_reports(out, json, {verify_golden_mul(opt)});
    } else if (*a_build || *a_export) {
      const Dfa d = build_named(kind, sys);
      if (!dot_path.empty()) write_file(dot_path, to_dot(d, kind));
      if (*a_export) {
        out << to_dot(d, kind);
      } else if (json) {
        Json j;
        j["kind"] = kind;
        j["states"] = d.num_states();
        j["base"] = d.alphabet.base;
        j["arity"] = d.alphabet.arity;
        j["start"] = d.start;
        j["accepting"] = d.accepting;
        j["delta"] = d.delta;
        out << j.dump(2) << "\n";
      } else {
        out << to_text(d);
      }
    } else if (*a_check) {
      return emit_reports(out, json, {verify_automata(sys, opt)});
    } else if (*verify_all_cmd) {
      return emit_reports(out, json, verify_all(sys, opt));
    }
    return 0;
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ostrowski
