// Command-line front end: normalize, extract, check-laws, realize-check, learn.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ireal/checker.hpp"
#include "ireal/extractor.hpp"
#include "ireal/laws.hpp"
#include "ireal/learner.hpp"
#include "ireal/reduce.hpp"
#include "ireal/sexpr.hpp"
#include "ireal/syntax.hpp"

using namespace ireal;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct Config {
  std::string signature;
  std::uint64_t seed = 1;
  std::uint64_t fuel = kDefaultFuel;
  std::string out;
  std::string monad = "ir";
  Nat bound = 8;
  std::size_t budget = 50;
  std::size_t max_iters = 1000;
  std::size_t samples = 200;
  std::size_t states = 0;
  std::string input;
  std::string formula;
  std::string state;
  bool trace = false;
};

Signature load_signature(const Config& c) {
  if (c.signature.empty()) return Signature::standard();
  return parse_signature(read_file(c.signature));
}

// Text given on the command line, or the contents of the file it names.
std::string text_or_file(const std::string& arg) {
  if (!arg.empty() && arg.front() != '(' && std::filesystem::is_regular_file(arg)) return read_file(arg);
  return arg;
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error("cannot write " + c.out);
  f << text;
}

int cmd_normalize(const Config& c) {
  Signature sig = load_signature(c);
  Term t = parse_term(read_file(c.input), sig);
  Type ty = type_of(t);
  std::ostringstream out;
  if (c.trace) {
    std::uint64_t n = 0;
    Term cur = t;
    out << to_string(cur) << "\n";
    while (auto next = step(cur)) {
      if (++n > c.fuel) throw FuelExhausted("normalization needed more than " + std::to_string(c.fuel) + " steps");
      cur = *next;
      out << to_string(cur) << "\n";
    }
  } else {
    out << to_string(normalize(t, c.fuel)) << "\n";
  }
  (void)ty;
  emit(c, out.str());
  return kOk;
}

std::string extract_text(const SyntacticMonad& m, const DecoratedSequent& ds, std::uint64_t seed) {
  std::ostringstream out;
  out << "; extract monad=" << m.name << " seed=" << seed << "\n";
  out << to_string(ds.context) << "\n";
  out << "(conclusion " << to_string(ds.conclusion) << ")\n";
  out << "(realizer " << to_string(ds.realizer) << ")\n";
  out << "(type " << to_string(monadic_type(m, ds.conclusion)) << ")\n";
  return out.str();
}

int cmd_extract(const Config& c) {
  Signature sig = load_signature(c);
  SyntacticMonad m = monad_by_name(c.monad);
  Derivation d = parse_derivation(read_file(c.input), sig);
  DecoratedSequent ds = extract(m, d, sig);
  emit(c, extract_text(m, ds, c.seed));
  return kOk;
}

int cmd_check_laws(const Config& c) {
  std::vector<SyntacticMonad> monads;
  if (c.monad == "all") {
    monads = {identity_monad(), exception_monad(), ir_monad()};
  } else if (c.monad == "mutants") {
    monads = mutant_monads();
  } else {
    bool found = false;
    for (auto& m : mutant_monads())
      if (m.name == c.monad) {
        monads.push_back(m);
        found = true;
      }
    if (!found) monads.push_back(monad_by_name(c.monad));
  }
  Signature sig = c.signature.empty() ? law_universe() : load_signature(c);
  LawOptions opts;
  opts.seed = c.seed;
  opts.samples_per_law = c.samples;
  opts.obs.fuel = c.fuel;
  std::string text;
  bool ok = true;
  for (const auto& m : monads) {
    LawReport r = check_monad_laws(m, sig, opts);
    ok = ok && r.passed();
    text += r.to_text();
  }
  emit(c, text);
  return ok ? kOk : kFail;
}

// A realizer file is either a bare term or the output of `extract`.
struct RealizerFile {
  Context context;
  std::optional<Formula> conclusion;
  Term realizer = c_unit();
};

RealizerFile load_realizer(const std::string& text, const Signature& sig, const SyntacticMonad& m) {
  auto forms = read_sexprs(text);
  RealizerFile rf;
  const SExpr* term = nullptr;
  for (const auto& f : forms) {
    if (f.tagged("context")) {
      for (std::size_t i = 1; i < f.size(); ++i) {
        if (!f[i].is_list() || f[i].size() != 2 || !f[i][0].is_atom)
          throw ParseError(f[i].pos, "expected (label formula)");
        rf.context.push_back(Assumption{f[i][0].atom, parse_formula(f[i][1], sig)});
      }
    } else if (f.tagged("conclusion") && f.size() == 2) {
      rf.conclusion = parse_formula(f[1], sig);
    } else if (f.tagged("realizer") && f.size() == 2) {
      term = &f[1];
    } else if (f.tagged("type")) {
      continue;
    } else if (!term && forms.size() == 1) {
      term = &f;
    } else {
      throw ParseError(f.pos, "unexpected form in realizer file");
    }
  }
  if (!term) throw ParseError({}, "no realizer term found");
  TypeContext free;
  if (rf.conclusion) free = realizer_context(m, rf.context, *rf.conclusion);
  rf.realizer = parse_term(*term, sig, free);
  return rf;
}

Formula chosen_formula(const Config& c, const RealizerFile& rf, const Signature& sig) {
  if (!c.formula.empty()) return parse_formula(text_or_file(c.formula), sig);
  if (rf.conclusion) return *rf.conclusion;
  throw Error("no formula given (use --formula)");
}

int cmd_realize_check(const Config& c) {
  Signature sig = load_signature(c);
  SyntacticMonad m = monad_by_name(c.monad);
  RealizerFile rf = load_realizer(read_file(c.input), sig, m);
  Formula a = chosen_formula(c, rf, sig);
  RealizabilityChecker checker(sig, m, CheckBounds{c.bound, c.budget, c.fuel});
  std::vector<KnowledgeState> states;
  if (!c.state.empty()) states.push_back(parse_state(text_or_file(c.state), sig));
  if (c.states > 0) {
    RuntimeSampler rs(sig, c.seed);
    for (std::size_t i = 0; i < c.states; ++i) states.push_back(rs.state());
  }
  if (states.empty()) states.emplace_back();

  DecoratedSequent ds{rf.context, rf.realizer, a};
  std::ostringstream out;
  out << "; realize-check monad=" << m.name << " bound=" << c.bound << " budget=" << c.budget
      << " seed=" << c.seed << "\n";
  bool ok = true;
  for (std::size_t i = 0; i < states.size(); ++i) {
    TestVerdict v = checker.sequent_valid(ds, states[i], {}, c.seed + i);
    ok = ok && v.passed();
    out << "(verdict " << to_string(states[i]) << " \"" << to_string(v) << "\")\n";
  }
  out << "(result " << (ok ? "pass" : "fail") << ")\n";
  emit(c, out.str());
  return ok ? kOk : kFail;
}

int cmd_learn(const Config& c) {
  Signature sig = load_signature(c);
  SyntacticMonad m = ir_monad();
  RealizerFile rf = load_realizer(read_file(c.input), sig, m);
  if (!rf.realizer.closed()) throw Error("the learner needs a closed realizer");
  KnowledgeState s0 = c.state.empty() ? KnowledgeState{} : parse_state(text_or_file(c.state), sig);
  LearnTrace trace = learn(rf.realizer, s0, c.max_iters, c.fuel, c.seed);
  std::string text = to_text(trace);
  std::ostringstream report;
  bool ok = trace.terminal == Terminal::FixedPoint;
  std::optional<Formula> a;
  if (!c.formula.empty() || rf.conclusion) a = chosen_formula(c, rf, sig);
  if (ok && a) {
    RealizabilityChecker checker(sig, m, CheckBounds{c.bound, c.budget, c.fuel});
    TestVerdict v = checker.inner_realizes(*trace.result(), *a, trace.final_state());
    report << "; verified " << to_string(v) << "\n";
    if (v.passed()) {
      std::istringstream lines(extract_witness(*trace.result(), *a, checker, trace.final_state()));
      for (std::string line; std::getline(lines, line);) report << "; " << line << "\n";
    } else {
      ok = false;
    }
  }
  if (c.out.empty()) {
    std::cout << text << report.str();
  } else {
    emit(c, text);
    std::cout << report.str();
  }
  return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monadic realizers for HA + EM1: normalize, extract, check"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--signature", c.signature, "Signature file (default: LT, LE, EQ)");
  app.add_option("--seed", c.seed, "Seed for every sampler");
  app.add_option("--fuel", c.fuel, "Normalization step budget");
  app.add_option("--out", c.out, "Write the main output to this file");

  auto* norm = app.add_subcommand("normalize", "Normalize a term");
  norm->add_option("file", c.input, "Term file")->required();
  norm->add_flag("--trace", c.trace, "Print every leftmost-outermost step");

  auto* ext = app.add_subcommand("extract", "Extract the realizer of a derivation");
  ext->add_option("file", c.input, "Derivation file")->required();
  ext->add_option("--monad", c.monad, "identity, exception or ir");

  auto* laws = app.add_subcommand("check-laws", "Test M1-M3 observationally");
  laws->add_option("--monad", c.monad, "identity, exception, ir, all, mutants or a mutant name");
  laws->add_option("--samples", c.samples, "Samples per law");

  auto* rc = app.add_subcommand("realize-check", "Check a realizer against a formula");
  rc->add_option("file", c.input, "Realizer file (a term, or the output of extract)")->required();
  rc->add_option("--formula", c.formula, "Formula (text or file); defaults to the file's conclusion");
  rc->add_option("--state", c.state, "Knowledge state (text or file)");
  rc->add_option("--states", c.states, "Also check at this many sampled states");
  rc->add_option("--monad", c.monad, "identity, exception or ir");
  rc->add_option("--bound", c.bound, "Universal bound N")->check(CLI::PositiveNumber);
  rc->add_option("--budget", c.budget, "Realizers tried per antecedent or assumption");

  auto* ln = app.add_subcommand("learn", "Run the learning loop from a state");
  ln->add_option("file", c.input, "Closed realizer file")->required();
  ln->add_option("--formula", c.formula, "Formula realized, for witness extraction");
  ln->add_option("--state", c.state, "Initial state (default empty)");
  ln->add_option("--max-iters", c.max_iters, "Iteration budget");
  ln->add_option("--bound", c.bound, "Universal bound N for the final check")->check(CLI::PositiveNumber);
  ln->add_option("--budget", c.budget, "Realizer budget for the final check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*norm) return cmd_normalize(c);
    if (*ext) return cmd_extract(c);
    if (*laws) return cmd_check_laws(c);
    if (*rc) return cmd_realize_check(c);
    if (*ln) return cmd_learn(c);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const FuelExhausted& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
