// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "../unit/ir_chains.hpp"
#include "ireal/checker.hpp"
#include "ireal/extractor.hpp"
#include "ireal/laws.hpp"
#include "ireal/learner.hpp"
#include "ireal/sampler.hpp"
#include "ireal/syntax.hpp"

using namespace ireal;

namespace {

std::string corpus(const std::string& name) { return std::string(IREAL_CORPUS_DIR) + "/" + name; }

const Signature& corpus_sig() {
  static const Signature s = parse_signature(read_file(corpus("signature.sexp")));
  return s;
}

Derivation corpus_derivation(const std::string& name) {
  return parse_derivation(read_file(corpus(name + ".sexp")), corpus_sig());
}

const std::vector<std::string> kHa{"id", "atm", "and", "or", "imp", "forall-i", "forall-e", "exists-i", "exists-e",
                                   "ind"};
const std::vector<std::string> kIrOnly{"em", "em-loop"};

struct Result {
  bool ok = true;
  std::string summary;
  std::vector<std::string> problems;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (problems.size() < 5) problems.push_back(what);
    }
  }
};

// ---------------------------------------------------------------------------
// 1. Monad laws

Result monad_laws() {
  Result o;
  LawOptions opts;
  opts.samples_per_law = 200;
  opts.seed = 1;
  std::size_t samples = 0;
  for (const auto& m : {identity_monad(), exception_monad(), ir_monad()}) {
    LawReport r = check_monad_laws(m, opts);
    for (const auto& l : r.laws) {
      samples += l.samples;
      o.require(l.passed && l.samples >= 200, m.name + " " + l.law + " " + l.counterexample);
    }
  }
  std::size_t refuted = 0;
  auto mutants = mutant_monads();
  for (const auto& m : mutants) {
    LawReport r = check_monad_laws(m, opts);
    if (!r.passed()) ++refuted;
    else o.require(false, m.name + " was not refuted");
  }
  o.require(mutants.size() == 6, "expected 6 mutants");
  o.summary = "M1-M3 on 3 monads, " + std::to_string(samples) + " samples; " + std::to_string(refuted) + "/" +
              std::to_string(mutants.size()) + " mutants refuted";
  return o;
}

// ---------------------------------------------------------------------------
// 2. Kernel

bool ground_normal_form(const Term& n, const Type& ty) {
  switch (ty.kind()) {
    case Type::Kind::Nat:
      return as_numeral(n).has_value();
    case Type::Kind::Unit:
      return n.is_const(ConstId::Unit);
    case Type::Kind::Sum:
      return n.is(Term::Kind::App) && (n.fun().is_const(ConstId::InjL) || n.fun().is_const(ConstId::InjR));
    default:
      return true;
  }
}

Result kernel() {
  Result o;
  Signature sig = law_universe();
  std::vector<Type> menu{Type::nat(),
                         Type::nat(),
                         Type::unit(),
                         Type::sum(Type::nat(), Type::unit()),
                         Type::product(Type::nat(), Type::sum(Type::unit(), Type::nat())),
                         Type::arrow(Type::state(), Type::sum(Type::nat(), Type::ex())),
                         Type::arrow(Type::nat(), Type::nat()),
                         Type::ex()};
  SyntacticMonad ir = ir_monad();
  TermSampler::Options so;
  so.max_depth = 5;
  so.redex_weight = 60;
  TermSampler sampler(sig, 2024, so, &ir);
  std::size_t terms = 0, steps = 0, numerals = 0;
  for (std::size_t i = 0; i < 10000; ++i) {
    const Type& ty = menu[i % menu.size()];
    // every fifth term is a monadic value run at a sampled state
    Term t = i % 5 == 4 ? Term::app(sampler.monadic(Type::nat()), Term::state_lit(sampler.runtime().state()))
                        : sampler.closed(ty);
    Type t_ty = type_of(t);
    Term cur = t;
    std::uint64_t n = 0;
    bool reduced_ok = true;
    while (auto next = step(cur)) {
      if (++n > kDefaultFuel) {
        reduced_ok = false;
        o.require(false, "fuel exhausted on " + to_string(t));
        break;
      }
      if (type_of(*next) != t_ty) {
        reduced_ok = false;
        o.require(false, "subject reduction fails on " + to_string(cur));
        break;
      }
      cur = *next;
    }
    steps += n;
    ++terms;
    if (!reduced_ok) continue;
    o.require(ground_normal_form(cur, t_ty), "normal form " + to_string(cur) + " at " + to_string(t_ty));
    if (t_ty == Type::nat() && as_numeral(cur)) ++numerals;
  }
  std::size_t chains = 0;
  for (const auto& c : test::ir_chains()) {
    auto chain = test::chain_terms(c.start);
    o.require(chain.size() - 1 == c.steps, c.law + " chain length " + std::to_string(chain.size() - 1));
    o.require(alpha_eq(chain.back(), c.last), c.law + " chain ends at " + to_string(chain.back()));
    o.require(test::matches_golden(test::golden_path(c.law), test::chain_text(chain)), c.law + " golden trace");
    TermSampler obs_sampler(sig, 77, {}, &ir);
    o.require(obs_equal(c.closed_lhs, c.closed_rhs, c.type, obs_sampler).equal, c.law + " eta/pairing tail");
    ++chains;
  }
  o.summary = std::to_string(terms) + " terms, " + std::to_string(steps) + " steps, " + std::to_string(numerals) +
              " Nat normal forms all numerals; " + std::to_string(chains) + " ir chains match golden traces";
  return o;
}

// ---------------------------------------------------------------------------
// 3. Extraction type-correctness

Result extraction_types() {
  Result o;
  std::size_t checked = 0;
  for (const auto& m : {identity_monad(), exception_monad(), ir_monad()}) {
    std::vector<std::string> names = kHa;
    if (m.interactive) names.insert(names.end(), kIrOnly.begin(), kIrOnly.end());
    for (const auto& name : names) {
      try {
        Derivation d = corpus_derivation(name);
        DecoratedSequent ds = extract(m, d, corpus_sig());
        Type got = type_of(realizer_context(m, d.context(), d.conclusion()), ds.realizer);
        o.require(got == monadic_type(m, d.conclusion()), name + " under " + m.name + ": " + to_string(got));
      } catch (const Error& e) {
        o.require(false, name + " under " + m.name + ": " + e.what());
      }
      ++checked;
    }
  }
  o.require(checked == 32, "expected 32 extractions");
  o.summary = std::to_string(checked) + " extractions (12 derivations, EM only under ir)";
  return o;
}

// ---------------------------------------------------------------------------
// 4. MR properties

Result mr_properties() {
  Result o;
  RealizabilityChecker checker(corpus_sig(), ir_monad(), CheckBounds{8, 50, kDefaultFuel});
  MrOptions opts;
  opts.samples = 500;
  opts.max_depth = 3;
  opts.seed = 1;
  MrReport r = check_mr_properties(checker, opts);
  for (const auto& f : r.failures) o.require(false, f);
  for (std::size_t i = 0; i < 3; ++i)
    o.require(r.samples[i] >= 500, "MR" + std::to_string(i + 1) + " samples " + std::to_string(r.samples[i]));
  for (std::size_t c = 0; c < 4; ++c)
    o.require(r.mr3_cases[c] >= 25, "MR3 case " + std::to_string(c + 1) + " hit " + std::to_string(r.mr3_cases[c]));
  std::ostringstream s;
  s << "MR1/MR2/MR3 samples " << r.samples[0] << "/" << r.samples[1] << "/" << r.samples[2] << ", MR3 cases "
    << r.mr3_cases[0] << "/" << r.mr3_cases[1] << "/" << r.mr3_cases[2] << "/" << r.mr3_cases[3] << ", N=8";
  o.summary = s.str();
  return o;
}

// ---------------------------------------------------------------------------
// 5. EM lemma

Result em_lemma() {
  Result o;
  struct Case {
    std::string label;
    std::string sig_text;
    std::string predicate;
  };
  std::vector<Case> cases{
      {"mixed", "(signature (standard) (predicate P 2 (<= (arg 1) (arg 0))))", "P"},
      {"always-true", "(signature (standard) (predicate T 1 (<= 0 (arg 0))))", "T"},
      {"always-false", "(signature (standard) (predicate F 1 (< (arg 0) 0)))", "F"},
  };
  std::size_t total = 0;
  for (const auto& c : cases) {
    Signature sig = parse_signature(c.sig_text);
    auto p = sig.predicate(c.predicate);
    RealizabilityChecker checker(sig, ir_monad());
    RuntimeSampler rs(sig, 99, RuntimeSampler::Limits{4, 6, 12});
    std::size_t states = 0;
    for (std::size_t i = 0; i < 60; ++i) {
      KnowledgeState s = rs.state();
      o.require(s.sound(sig), c.label + ": unsound sampled state");
      std::vector<ArithTerm> params;
      for (std::size_t k = 0; k + 1 < p->arity; ++k) params.push_back(ArithTerm::numeral(rs.uniform(0, 6)));
      DecoratedSequent ds{{}, em_realizer(sig, c.predicate, params), em_formula(c.predicate, params)};
      TestVerdict v = checker.sequent_valid(ds, s, {}, i);
      o.require(v.passed(), c.label + " at " + to_string(s) + ": " + to_string(v));
      ++states;
    }
    // states holding a witness for the instance take the other branch
    if (p->arity == 2) {
      KnowledgeState s(WitnessMap{{WitnessKey{c.predicate, {2}}, 7}}, sig);
      DecoratedSequent ds{{}, em_realizer(sig, c.predicate, {ArithTerm::numeral(2)}),
                          em_formula(c.predicate, {ArithTerm::numeral(2)})};
      o.require(checker.sequent_valid(ds, s).passed(), c.label + " with a stored witness");
    }
    total += states;
  }
  o.summary = std::to_string(total) + " sampled states over 3 signatures (mixed, always-true, always-false)";
  return o;
}

// ---------------------------------------------------------------------------
// 6. Runtime properties

Result runtime_properties() {
  Result o;
  Signature sig = law_universe();
  RuntimeSampler rs(sig, 6, RuntimeSampler::Limits{5, 4, 10});
  std::vector<PredicateRef> preds;
  for (const auto& [n, p] : sig.predicates())
    if (p->arity >= 1) preds.push_back(p);

  auto drop_claims = [](const ExceptionValue& e1, const ExceptionValue& e2) {
    WitnessMap kept;
    for (const auto& [k, m] : e1.claims())
      if (e2.claims().count(k)) kept.emplace(k, m);
    return ExceptionValue::trusted(kept);
  };

  std::size_t ex = 0, ir1 = 0, ir2 = 0, ir3 = 0, mutant_refuted = 0;
  for (std::size_t guard = 0; guard < 200000 && (ex < 1000 || ir1 < 1000 || ir2 < 1000 || ir3 < 1000); ++guard) {
    KnowledgeState s = rs.state();
    if (auto e1 = rs.exception_extending(s)) {
      if (auto e2 = rs.exception_extending(s)) {
        ++ex;
        o.require(properly_extends(merge_exceptions(*e1, *e2), s), "EX at " + to_string(s));
        if (!properly_extends(drop_claims(*e1, *e2), s)) ++mutant_refuted;
      }
    }
    const auto& p = preds[rs.uniform(0, preds.size() - 1)];
    std::vector<Nat> params;
    // half of the time aim at a key the state knows
    bool aimed = false;
    if (!s.empty() && rs.uniform(0, 1) == 0) {
      auto it = s.entries().begin();
      std::advance(it, rs.uniform(0, s.size() - 1));
      if (it->first.predicate == p->name) {
        params = it->first.params;
        aimed = true;
      }
    }
    if (!aimed)
      for (std::size_t k = 0; k + 1 < p->arity; ++k) params.push_back(rs.uniform(0, 4));
    Nat c = rs.uniform(0, 10);
    auto q = query(*p, s, params);
    if (q) {
      ++ir1;
      o.require(witness_condition(*p, params, *q), "IR1");
    }
    auto ev = eval_pred(*p, params, c);
    if (!ev) {
      ++ir2;
      o.require(!witness_condition(*p, params, c), "IR2");
    }
    if (!q && ev) {
      ++ir3;
      o.require(properly_extends(*ev, s), "IR3 at " + to_string(s));
    }
  }
  for (auto [name, n] : {std::pair{"EX", ex}, {"IR1", ir1}, {"IR2", ir2}, {"IR3", ir3}})
    o.require(n >= 1000, std::string(name) + " only " + std::to_string(n) + " samples");
  o.require(mutant_refuted > 0, "claim-dropping merge not refuted");
  o.summary = "EX " + std::to_string(ex) + ", IR1 " + std::to_string(ir1) + ", IR2 " + std::to_string(ir2) +
              ", IR3 " + std::to_string(ir3) + " samples; claim-dropping merge refuted " +
              std::to_string(mutant_refuted) + " times";
  return o;
}

// ---------------------------------------------------------------------------
// 7. EM-LOOP

Result em_loop() {
  Result o;
  const Signature& sig = corpus_sig();
  DecoratedSequent ds = extract(ir_monad(), corpus_derivation("em-loop"), sig);
  // P(y) holds for y <= 4; the derivation uses the universal disjunct at 5.
  const std::string expected =
      "(trace (seed 1))\n"
      "(step 1 (before (state)) (exceptional (ex (P () 5))) (after (state (P () 5))))\n"
      "(step 2 (before (state (P () 5))) (regular (inl (pair (num 5) (lam (_ Unit) (_ State) (inl unit Ex))) Unit))"
      " (after (state (P () 5))))\n"
      "(terminal fixed-point)\n";
  LearnTrace t = learn(ds.realizer, {}, 1000, kDefaultFuel, 1);
  std::string text = to_text(t);
  o.require(text == expected, "trace:\n" + text);
  for (int i = 0; i < 3; ++i) o.require(to_text(learn(ds.realizer, {}, 1000, kDefaultFuel, 1)) == text, "rerun differs");
  o.require(test::matches_golden(corpus("golden/em-loop.trace"), text), "golden trace differs");
  RealizabilityChecker checker(sig, ir_monad());
  std::string report;
  if (t.result()) {
    TestVerdict v = checker.inner_realizes(*t.result(), ds.conclusion, t.final_state());
    o.require(v.passed(), "final realizer: " + to_string(v));
    if (v.passed()) report = extract_witness(*t.result(), ds.conclusion, checker, t.final_state());
  }
  o.require(report.find("witness y=5") != std::string::npos, "witness report: " + report);
  o.summary = "2-step trace (exception {P -> 5}, then regular), witness y=5, verified, reruns byte-identical";
  return o;
}

// ---------------------------------------------------------------------------
// 8. Identity-monad degeneracy: a plain modified-realizability extraction.

Type mr_type(const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Atomic:
    case Formula::Kind::False:
      return Type::unit();
    case Formula::Kind::And:
      return Type::product(mr_type(a.left()), mr_type(a.right()));
    case Formula::Kind::Or:
      return Type::sum(mr_type(a.left()), mr_type(a.right()));
    case Formula::Kind::Implies:
      return Type::arrow(mr_type(a.left()), mr_type(a.right()));
    case Formula::Kind::Forall:
      return Type::arrow(Type::nat(), mr_type(a.body()));
    case Formula::Kind::Exists:
      return Type::product(Type::nat(), mr_type(a.body()));
  }
  return Type::unit();
}

Term mr_arith(const ArithTerm& t, const Signature& sig) {
  if (t.closed()) return mk_numeral(eval_arith(t, sig));
  switch (t.kind()) {
    case ArithTerm::Kind::Var:
      return Term::var(t.name(), Type::nat());
    case ArithTerm::Kind::Succ:
      return mk_succ(mr_arith(t.pred(), sig));
    default:
      throw Error("open function term");
  }
}

Type label_type(const Context& ctx, const std::string& label) {
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
    if (it->label == label) return mr_type(it->formula);
  throw Error("unknown label " + label);
}

Term mr_extract(const Derivation& d, const Signature& sig) {
  auto sub = [&](std::size_t i) { return mr_extract(d.premises.at(i), sig); };
  const Formula& c = d.conclusion();
  switch (d.rule) {
    case Rule::Id:
      return Term::var(d.label, label_type(d.context(), d.label));
    case Rule::Atm:
      return c_unit();
    case Rule::AndI:
      return mk_pair(sub(0), sub(1));
    case Rule::AndEL:
      return mk_projl(sub(0));
    case Rule::AndER:
      return mk_projr(sub(0));
    case Rule::OrIL:
      return mk_inl(sub(0), mr_type(c.right()));
    case Rule::OrIR:
      return mk_inr(mr_type(c.left()), sub(0));
    case Rule::OrE: {
      const Formula& major = d.premises[0].conclusion();
      return mk_case(sub(0), Term::abs(d.label, mr_type(major.left()), sub(1)),
                     Term::abs(d.label2, mr_type(major.right()), sub(2)));
    }
    case Rule::ImpI:
      return Term::abs(d.label, mr_type(c.left()), sub(0));
    case Rule::ImpE:
      return Term::app(sub(0), sub(1));
    case Rule::ForallI:
      return Term::abs(d.var, Type::nat(), sub(0));
    case Rule::ForallE:
      return Term::app(sub(0), mr_arith(*d.term, sig));
    case Rule::ExistsI:
      return mk_pair(mr_arith(*d.term, sig), sub(0));
    case Rule::ExistsE: {
      Term major = sub(0);
      return subst(subst(sub(1), d.var, mk_projl(major)), d.label, mk_projr(major));
    }
    case Rule::Ind: {
      Type body = mr_type(c.body());
      Type beta_t = Type::arrow(Type::nat(), body);
      Term beta = Term::var("$b", beta_t);
      Term ih = Term::abs("$z", Type::nat(),
                          Term::abs("_", Type::unit(), Term::app(beta, Term::var("$z", Type::nat()))));
      Term step = subst(sub(0), d.label, ih);
      Term f = Term::abs(d.var, Type::nat(), Term::abs("$b", beta_t, step));
      return Term::app(c_rec(std::nullopt, body), f);
    }
    case Rule::EM:
      break;
  }
  throw Error("no plain extraction for this rule");
}

// Closes a decorated term over the labels and free variables of its sequent.
Term close_over(Term t, const Derivation& d) {
  for (const auto& x : free_vars(d.sequent)) t = Term::abs(x, Type::nat(), t);
  for (auto it = d.context().rbegin(); it != d.context().rend(); ++it)
    t = Term::abs(it->label, mr_type(it->formula), t);
  return t;
}

Result identity_degeneracy() {
  Result o;
  const Signature& sig = corpus_sig();
  SyntacticMonad id = identity_monad();
  std::size_t equal = 0;
  for (const auto& name : kHa) {
    try {
      Derivation d = corpus_derivation(name);
      Term plain = close_over(mr_extract(d, sig), d);
      Term extracted = close_over(extract(id, d, sig).realizer, d);
      Type ty = type_of(plain);
      o.require(type_of(extracted) == ty, name + ": types differ");
      TermSampler sampler(sig, 5, {}, &id);
      ObsResult r = obs_equal(plain, extracted, ty, sampler, ObsOptions{16, kDefaultFuel});
      o.require(r.equal, name + ": " + r.witness);
      if (r.equal) ++equal;
    } catch (const Error& e) {
      o.require(false, name + ": " + e.what());
    }
  }
  o.summary = std::to_string(equal) + "/" + std::to_string(kHa.size()) +
              " HA derivations observationally equal to the plain extraction";
  return o;
}

// ---------------------------------------------------------------------------
// 9. Checker against a brute-force evaluator of the ir relation.

class BruteForce {
 public:
  BruteForce(const Signature& sig, Nat n) : sig_(sig), n_(n) {}

  bool inner(const Term& r, const Formula& a, const KnowledgeState& s) const {
    switch (a.kind()) {
      case Formula::Kind::False:
        return false;
      case Formula::Kind::Atomic:
        return normalize(r).is_const(ConstId::Unit) && atomic_truth(a, sig_);
      case Formula::Kind::And: {
        Term n = normalize(r);
        auto [head, args] = spine(n);
        if (!head.is_const(ConstId::Pair) || args.size() != 2) return false;
        return inner(args[0], a.left(), s) && inner(args[1], a.right(), s);
      }
      case Formula::Kind::Or: {
        Term n = normalize(r);
        if (!n.is(Term::Kind::App)) return false;
        if (n.fun().is_const(ConstId::InjL)) return inner(n.arg(), a.left(), s);
        if (n.fun().is_const(ConstId::InjR)) return inner(n.arg(), a.right(), s);
        return false;
      }
      case Formula::Kind::Implies:
        for (const auto& x : all_realizers(a.left()))
          if (!monadic(Term::app(r, x), a.right(), s)) return false;
        return true;
      case Formula::Kind::Forall:
        for (Nat k = 0; k <= n_; ++k)
          if (!monadic(Term::app(r, mk_numeral(k)), subst_formula(a.body(), a.var(), ArithTerm::numeral(k)), s))
            return false;
        return true;
      case Formula::Kind::Exists: {
        Term n = normalize(r);
        auto [head, args] = spine(n);
        if (!head.is_const(ConstId::Pair) || args.size() != 2) return false;
        auto k = as_numeral(args[0]);
        if (!k) return false;
        return inner(args[1], subst_formula(a.body(), a.var(), ArithTerm::numeral(*k)), s);
      }
    }
    return false;
  }

  bool monadic(const Term& r, const Formula& a, const KnowledgeState& s) const {
    Term n = normalize(Term::app(r, Term::state_lit(s)));
    if (!n.is(Term::Kind::App)) return false;
    if (n.fun().is_const(ConstId::InjL)) return inner(n.arg(), a, s);
    if (n.fun().is_const(ConstId::InjR) && n.arg().is(Term::Kind::ExLit)) {
      auto next = apply_exception(n.arg().exception(), s);
      return next && next->size() > s.size();
    }
    return false;
  }

 private:
  // Every inner realizer of a quantifier-free, implication-free formula.
  std::vector<Term> all_realizers(const Formula& a) const {
    switch (a.kind()) {
      case Formula::Kind::False:
        return {};
      case Formula::Kind::Atomic:
        if (atomic_truth(a, sig_)) return {c_unit()};
        return {};
      case Formula::Kind::And: {
        std::vector<Term> out;
        for (const auto& l : all_realizers(a.left()))
          for (const auto& r : all_realizers(a.right())) out.push_back(mk_pair(l, r));
        return out;
      }
      case Formula::Kind::Or: {
        SyntacticMonad ir = ir_monad();
        std::vector<Term> out;
        for (const auto& l : all_realizers(a.left())) out.push_back(mk_inl(l, inner_type(ir, a.right())));
        for (const auto& r : all_realizers(a.right())) out.push_back(mk_inr(inner_type(ir, a.left()), r));
        return out;
      }
      default:
        throw Error("antecedent outside the enumerable fragment: " + to_string(a));
    }
  }

  const Signature& sig_;
  Nat n_;
};

Result checker_vs_oracle() {
  Result o;
  const Signature& sig = corpus_sig();
  SyntacticMonad ir = ir_monad();
  RealizabilityChecker checker(sig, ir, CheckBounds{8, 50, kDefaultFuel});
  BruteForce oracle(sig, 8);
  FormulaSampler::Options fo;
  fo.max_depth = 3;
  fo.max_quantifier_depth = 2;
  FormulaSampler formulas(sig, 12, fo);
  TermSampler terms(sig, 13, {}, &ir);
  RuntimeSampler states(sig, 14);
  std::size_t pairs = 0, agree = 0, passes = 0;
  while (pairs < 200) {
    Formula a = formulas.closed();
    if (a.quantifier_depth() > 2) continue;
    KnowledgeState s = pairs % 2 ? states.state() : KnowledgeState{};
    Term r = terms.closed(inner_type(ir, a));
    if (pairs % 2 == 0) {
      auto good = checker.realizers(a, s, 20);
      if (!good.empty()) r = good[terms.uniform(0, good.size() - 1)];
    }
    TestVerdict v = checker.inner_realizes(r, a, s);
    bool expected = oracle.inner(r, a, s);
    bool same = v.outcome != ireal::Outcome::Inconclusive && v.passed() == expected;
    o.require(same, to_string(r) + " for " + to_string(a) + " at " + to_string(s) + ": checker " + to_string(v) +
                        ", oracle " + (expected ? "pass" : "fail"));
    agree += same;
    passes += expected;
    ++pairs;
  }
  o.require(passes > 20 && pairs - passes > 20, "sample does not exercise both verdicts");
  o.summary = std::to_string(agree) + "/" + std::to_string(pairs) + " agree (" + std::to_string(passes) +
              " realize, " + std::to_string(pairs - passes) + " do not), quantifier depth <= 2, N=8";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Result()> run;
    double budget_s;
  };
  std::vector<Criterion> criteria{
      {1, "monad laws", monad_laws, 120},
      {2, "kernel", kernel, 180},
      {3, "extraction type-correctness", extraction_types, 0},
      {4, "MR properties", mr_properties, 300},
      {5, "EM lemma", em_lemma, 0},
      {6, "runtime properties", runtime_properties, 0},
      {7, "EM-LOOP scenario", em_loop, 0},
      {8, "identity-monad degeneracy", identity_degeneracy, 0},
      {9, "checker vs brute force", checker_vs_oracle, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Result o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) o.require(false, "runtime over budget");
    char time[32];
    std::snprintf(time, sizeof time, "%.1fs", secs);
    std::cout << "criterion " << c.id << " " << (o.ok ? "PASS" : "FAIL") << " " << c.name << ": " << o.summary
              << " [" << time << "]\n";
    for (const auto& p : o.problems) std::cout << "    " << p << "\n";
    std::cout.flush();
    failed += !o.ok;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
