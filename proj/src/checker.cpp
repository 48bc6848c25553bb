#include "ireal/checker.hpp"

#include <set>
#include <sstream>

#include "ireal/syntax.hpp"

namespace ireal {

std::string to_string(const TestVerdict& v) {
  switch (v.outcome) {
    case Outcome::Pass:
      return v.vacuous ? "pass (vacuous)" : "pass";
    case Outcome::Fail:
      return "fail: " + v.detail;
    case Outcome::Inconclusive:
      return "inconclusive: " + v.detail;
  }
  return "?";
}

namespace {

enum class Relation { Identity, Exception, Interactive };

Relation relation_of(const SyntacticMonad& m) {
  std::string base = m.name.substr(0, m.name.find('/'));
  if (base == "identity") return Relation::Identity;
  if (base == "exception") return Relation::Exception;
  if (base == "ir") return Relation::Interactive;
  throw Error("no realizability relation for monad " + m.name);
}

struct Injection {
  bool left;
  Term payload;
};

std::optional<Injection> injection(const Term& n) {
  if (!n.is(Term::Kind::App)) return std::nullopt;
  if (n.fun().is_const(ConstId::InjL)) return Injection{true, n.arg()};
  if (n.fun().is_const(ConstId::InjR)) return Injection{false, n.arg()};
  return std::nullopt;
}

// Accumulates verdicts of a conjunction of checks.
class Fold {
 public:
  /// True once a failure has been seen.
  bool add(TestVerdict v) {
    if (v.failed()) {
      fail_ = std::move(v);
      return true;
    }
    if (v.outcome == Outcome::Inconclusive && !inconclusive_) inconclusive_ = std::move(v);
    vacuous_ = vacuous_ || v.vacuous;
    return false;
  }
  TestVerdict result() const {
    if (fail_) return *fail_;
    if (inconclusive_) return *inconclusive_;
    return TestVerdict::pass(vacuous_);
  }

 private:
  std::optional<TestVerdict> fail_;
  std::optional<TestVerdict> inconclusive_;
  bool vacuous_ = false;
};

std::string join(const std::string& path, const std::string& step) {
  return path.empty() ? step : path + " / " + step;
}

// x <= j as a closed Unit + Unit test: rec_{j+1} returns its body exactly
// when x <= j and the dummy inl otherwise.
Term le_test(const Term& x, Nat j) {
  Type uu = Type::sum(Type::unit(), Type::unit());
  Term h = Term::abs("$k", Type::nat(),
                     Term::abs("$r", Type::arrow(Type::nat(), uu), mk_inr(Type::unit(), c_unit())));
  return mk_rec(j + 1, h, x);
}

}  // namespace

RealizabilityChecker::RealizabilityChecker(const Signature& sig, SyntacticMonad monad, CheckBounds bounds)
    : sig_(&sig), monad_(std::move(monad)), bounds_(bounds) {
  if (bounds_.N < 1) throw Error("CheckBounds: N must be at least 1");
  relation_of(monad_);
}

TestVerdict RealizabilityChecker::inner_realizes(const Term& r, const Formula& a,
                                                 const KnowledgeState& s) const {
  if (!a.closed()) throw Error("inner_realizes: formula " + to_string(a) + " is not closed");
  Type want = inner_type(monad_, a);
  Type got = type_of(r);
  if (got != want)
    throw TypeError("realizer has type " + to_string(got) + ", expected " + to_string(want));
  return inner(r, a, s, "");
}

TestVerdict RealizabilityChecker::monadic_realizes(const Term& r, const Formula& a,
                                                   const KnowledgeState& s) const {
  if (!a.closed()) throw Error("monadic_realizes: formula " + to_string(a) + " is not closed");
  Type want = monadic_type(monad_, a);
  Type got = type_of(r);
  if (got != want)
    throw TypeError("realizer has type " + to_string(got) + ", expected " + to_string(want));
  return monadic(r, a, s, "");
}

TestVerdict RealizabilityChecker::inner(const Term& r, const Formula& a, const KnowledgeState& s,
                                        const std::string& path) const {
  try {
    switch (a.kind()) {
      case Formula::Kind::False:
        return TestVerdict::fail(join(path, "false has no realizer"));
      case Formula::Kind::Atomic: {
        Term n = normal(r);
        if (!n.is_const(ConstId::Unit))
          throw InvariantViolation("closed normal term of type Unit is " + to_string(n));
        if (atomic_truth(a, *sig_)) return TestVerdict::pass();
        return TestVerdict::fail(join(path, "atomic " + to_string(a) + " is false"));
      }
      case Formula::Kind::And: {
        Fold fold;
        if (fold.add(inner(mk_projl(r), a.left(), s, join(path, "left")))) return fold.result();
        fold.add(inner(mk_projr(r), a.right(), s, join(path, "right")));
        return fold.result();
      }
      case Formula::Kind::Or: {
        Term n = normal(r);
        auto inj = injection(n);
        if (!inj) throw InvariantViolation("closed normal term of sum type is " + to_string(n));
        return inj->left ? inner(inj->payload, a.left(), s, join(path, "inl"))
                         : inner(inj->payload, a.right(), s, join(path, "inr"));
      }
      case Formula::Kind::Implies: {
        auto ants = realizers(a.left(), s, bounds_.budget);
        if (ants.empty()) return TestVerdict::pass(true);
        Fold fold;
        for (const auto& x : ants)
          if (fold.add(monadic(Term::app(r, x), a.right(), s, join(path, "given " + to_string(x)))))
            break;
        return fold.result();
      }
      case Formula::Kind::Forall: {
        Fold fold;
        for (Nat n = 0; n <= bounds_.N; ++n) {
          Formula inst = subst_formula(a.body(), a.var(), ArithTerm::numeral(n));
          if (fold.add(monadic(Term::app(r, mk_numeral(n)), inst, s,
                               join(path, a.var() + "=" + std::to_string(n)))))
            break;
        }
        return fold.result();
      }
      case Formula::Kind::Exists: {
        Term w = normal(mk_projl(r));
        auto k = as_numeral(w);
        if (!k) throw InvariantViolation("closed normal term of type Nat is " + to_string(w));
        Formula inst = subst_formula(a.body(), a.var(), ArithTerm::numeral(*k));
        return inner(mk_projr(r), inst, s, join(path, "witness " + a.var() + "=" + std::to_string(*k)));
      }
    }
  } catch (const FuelExhausted&) {
    return TestVerdict::inconclusive(join(path, "fuel exhausted"));
  }
  throw Error("inner_realizes: unknown formula kind");
}

TestVerdict RealizabilityChecker::monadic(const Term& r, const Formula& a, const KnowledgeState& s,
                                          const std::string& path) const {
  Relation rel = relation_of(monad_);
  if (rel == Relation::Identity) return inner(r, a, s, path);
  try {
    Term n = normal(rel == Relation::Interactive ? Term::app(r, Term::state_lit(s)) : r);
    auto inj = injection(n);
    if (!inj) throw InvariantViolation("closed normal term of sum type is " + to_string(n));
    if (inj->left) return inner(inj->payload, a, s, path);
    if (rel == Relation::Exception)
      return TestVerdict::fail(join(path, "exceptional value " + to_string(inj->payload)));
    if (!inj->payload.is(Term::Kind::ExLit))
      throw InvariantViolation("closed normal term of type Ex is " + to_string(inj->payload));
    const ExceptionValue& e = inj->payload.exception();
    if (properly_extends(e, s)) return TestVerdict::pass();
    return TestVerdict::fail(join(path, "exception " + to_string(e) + " does not properly extend " +
                                            to_string(s)));
  } catch (const FuelExhausted&) {
    return TestVerdict::inconclusive(join(path, "fuel exhausted"));
  }
}

std::vector<Term> RealizabilityChecker::search(const Formula& a, const KnowledgeState& s,
                                               std::size_t budget) const {
  std::vector<Term> out;
  if (budget == 0) return out;
  switch (a.kind()) {
    case Formula::Kind::False:
      return out;
    case Formula::Kind::Atomic:
      if (atomic_truth(a, *sig_)) out.push_back(c_unit());
      return out;
    case Formula::Kind::And: {
      auto ls = search(a.left(), s, budget);
      if (ls.empty()) return out;
      auto rs = search(a.right(), s, budget);
      for (const auto& l : ls)
        for (const auto& r : rs) {
          if (out.size() >= budget) return out;
          out.push_back(mk_pair(l, r));
        }
      return out;
    }
    case Formula::Kind::Or: {
      Type lt = inner_type(monad_, a.left());
      Type rt = inner_type(monad_, a.right());
      for (const auto& l : search(a.left(), s, budget)) out.push_back(mk_inl(l, rt));
      for (const auto& r : search(a.right(), s, budget - out.size())) out.push_back(mk_inr(lt, r));
      return out;
    }
    case Formula::Kind::Exists:
      for (Nat k = 0; k <= bounds_.N && out.size() < budget; ++k) {
        Formula inst = subst_formula(a.body(), a.var(), ArithTerm::numeral(k));
        for (const auto& t : search(inst, s, budget - out.size())) out.push_back(mk_pair(mk_numeral(k), t));
      }
      return out;
    case Formula::Kind::Forall: {
      Type b = inner_type(monad_, a.body());
      std::vector<Term> cs;
      for (Nat n = 0; n <= bounds_.N; ++n) {
        auto c = search(subst_formula(a.body(), a.var(), ArithTerm::numeral(n)), s, 1);
        if (c.empty()) return out;
        cs.push_back(Term::app(monad_.unit_at(b), c.front()));
      }
      Term x = Term::var("$x", Type::nat());
      bool uniform = true;
      for (const auto& c : cs) uniform = uniform && alpha_eq(c, cs.front());
      Term body = cs.back();
      if (!uniform) {
        const Type thunk = Type::unit();
        for (std::size_t j = cs.size() - 1; j-- > 0;)
          body = mk_case(le_test(x, j), Term::abs("_", thunk, body), Term::abs("_", thunk, cs[j]));
      }
      out.push_back(Term::abs("$x", Type::nat(), body));
      return out;
    }
    case Formula::Kind::Implies: {
      Type ant = inner_type(monad_, a.left());
      Type b = inner_type(monad_, a.right());
      auto cs = search(a.right(), s, 1);
      if (!cs.empty()) {
        out.push_back(Term::abs("$a", ant, Term::app(monad_.unit_at(b), cs.front())));
      } else if (search(a.left(), s, 1).empty()) {
        out.push_back(Term::abs("$a", ant, Term::app(monad_.unit_at(b), dummy(b))));
      }
      return out;
    }
  }
  return out;
}

std::vector<Term> RealizabilityChecker::realizers(const Formula& a, const KnowledgeState& s,
                                                  std::size_t budget) const {
  std::vector<Term> out;
  for (auto& t : search(a, s, budget))
    if (inner(t, a, s, "").passed()) out.push_back(std::move(t));
  return out;
}

std::optional<Term> RealizabilityChecker::canonical(const Formula& a, const KnowledgeState& s) const {
  auto rs = realizers(a, s, 1);
  if (rs.empty()) return std::nullopt;
  return rs.front();
}

TestVerdict RealizabilityChecker::sequent_valid(const DecoratedSequent& ds, const KnowledgeState& s,
                                                const std::map<std::string, std::vector<Term>>& extra,
                                                std::uint64_t seed) const {
  std::set<std::string> var_set = ds.conclusion.free_vars();
  for (const auto& as : ds.context)
    for (const auto& x : as.formula.free_vars()) var_set.insert(x);
  std::vector<std::string> vars(var_set.begin(), var_set.end());
  {
    TypeContext ctx = realizer_context(monad_, ds.context, ds.conclusion);
    Type got = type_of(ctx, ds.realizer);
    Type want = monadic_type(monad_, ds.conclusion);
    if (got != want)
      throw TypeError("sequent realizer has type " + to_string(got) + ", expected " + to_string(want));
  }

  std::mt19937_64 rng(seed);
  Fold fold;
  std::vector<Nat> omega(vars.size(), 0);
  while (true) {
    Term r = ds.realizer;
    Formula concl = ds.conclusion;
    std::vector<Formula> hyps;
    for (const auto& as : ds.context) hyps.push_back(as.formula);
    std::string where;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      ArithTerm n = ArithTerm::numeral(omega[i]);
      r = substitute(r, vars[i], mk_numeral(omega[i]));
      concl = subst_formula(concl, vars[i], n);
      for (auto& h : hyps) h = subst_formula(h, vars[i], n);
      where += (where.empty() ? "" : " ") + vars[i] + "=" + std::to_string(omega[i]);
    }

    std::vector<std::vector<Term>> choices;
    bool empty = false;
    for (std::size_t i = 0; i < hyps.size(); ++i) {
      auto rs = realizers(hyps[i], s, bounds_.budget);
      if (auto it = extra.find(ds.context[i].label); it != extra.end())
        for (const auto& t : it->second)
          if (inner(t, hyps[i], s, "").passed()) rs.push_back(t);
      if (rs.empty()) empty = true;
      choices.push_back(std::move(rs));
    }

    if (empty) {
      fold.add(TestVerdict::pass(true));
    } else {
      std::size_t total = 1;
      for (const auto& c : choices) total = total > bounds_.budget ? total : total * c.size();
      bool exhaustive = total <= bounds_.budget;
      std::size_t rounds = exhaustive ? total : bounds_.budget;
      std::vector<std::size_t> pick(choices.size(), 0);
      for (std::size_t k = 0; k < rounds; ++k) {
        if (!exhaustive)
          for (std::size_t i = 0; i < choices.size(); ++i)
            pick[i] = std::uniform_int_distribution<std::size_t>(0, choices[i].size() - 1)(rng);
        Term inst = r;
        std::string sigma;
        for (std::size_t i = 0; i < choices.size(); ++i) {
          const Term& a = choices[i][pick[i]];
          inst = substitute(inst, ds.context[i].label, a);
          sigma += (sigma.empty() ? "" : " ") + ds.context[i].label + "=" + to_string(a);
        }
        std::string label = "[" + where + (where.empty() || sigma.empty() ? "" : "; ") + sigma + "]";
        if (fold.add(monadic(inst, concl, s, label))) return fold.result();
        if (exhaustive)
          for (std::size_t i = 0; i < pick.size(); ++i) {
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
          }
      }
    }

    std::size_t i = 0;
    for (; i < omega.size(); ++i) {
      if (++omega[i] <= bounds_.N) break;
      omega[i] = 0;
    }
    if (i == omega.size()) break;
  }
  return fold.result();
}

// ---------------------------------------------------------------------------

FormulaSampler::FormulaSampler(const Signature& sig, std::uint64_t seed)
    : FormulaSampler(sig, seed, Options{}) {}

FormulaSampler::FormulaSampler(const Signature& sig, std::uint64_t seed, Options opts)
    : sig_(&sig), rng_(seed), opts_(opts) {
  for (const auto& [name, p] : sig.predicates()) preds_.push_back(p);
  if (preds_.empty()) throw Error("FormulaSampler: signature has no predicates");
}

Nat FormulaSampler::uniform(Nat lo, Nat hi) { return std::uniform_int_distribution<Nat>(lo, hi)(rng_); }

Formula FormulaSampler::atom(const std::vector<std::string>& scope) {
  const auto& p = preds_[uniform(0, preds_.size() - 1)];
  std::vector<ArithTerm> args;
  for (std::size_t i = 0; i < p->arity; ++i) {
    if (!scope.empty() && uniform(0, 1) == 0)
      args.push_back(ArithTerm::var(scope[uniform(0, scope.size() - 1)]));
    else
      args.push_back(ArithTerm::numeral(uniform(0, opts_.max_numeral)));
  }
  return Formula::atomic(p->name, std::move(args));
}

Formula FormulaSampler::closed() {
  std::vector<std::string> scope;
  return gen(opts_.max_depth, opts_.max_quantifier_depth, scope);
}

Formula FormulaSampler::positive(std::size_t depth) {
  if (depth == 0 || uniform(0, 2) == 0) return uniform(0, 11) == 0 ? Formula::falsum() : atom({});
  Formula l = positive(depth - 1);
  Formula r = positive(depth - 1);
  return uniform(0, 1) ? Formula::conj(std::move(l), std::move(r)) : Formula::disj(std::move(l), std::move(r));
}

Formula FormulaSampler::gen(std::size_t depth, std::size_t qdepth, std::vector<std::string>& scope) {
  if (depth == 0) return uniform(0, 15) == 0 ? Formula::falsum() : atom(scope);
  int roll = static_cast<int>(uniform(0, 99));
  if (roll < 15) return atom(scope);
  if (roll < 30) return Formula::conj(gen(depth - 1, qdepth, scope), gen(depth - 1, qdepth, scope));
  if (roll < 45) return Formula::disj(gen(depth - 1, qdepth, scope), gen(depth - 1, qdepth, scope));
  if (roll < 65) {
    Formula ant = static_cast<int>(uniform(0, 99)) < opts_.simple_antecedent
                      ? [&] {
                          // Quantifier- and implication-free, open in the scope.
                          std::vector<std::string> sc = scope;
                          Formula f = atom(sc);
                          if (depth > 1 && uniform(0, 1))
                            f = uniform(0, 1) ? Formula::conj(f, atom(sc)) : Formula::disj(f, atom(sc));
                          return f;
                        }()
                      : gen(depth - 1, qdepth, scope);
    return Formula::implies(std::move(ant), gen(depth - 1, qdepth, scope));
  }
  if (qdepth == 0) return atom(scope);
  std::string x = "x" + std::to_string(counter_++);
  scope.push_back(x);
  Formula body = gen(depth - 1, qdepth - 1, scope);
  scope.pop_back();
  return roll < 83 ? Formula::forall(x, std::move(body)) : Formula::exists(x, std::move(body));
}

// ---------------------------------------------------------------------------

std::string MrReport::to_text() const {
  std::ostringstream out;
  out << "MR1 samples " << samples[0] << "\n";
  out << "MR2 samples " << samples[1] << "\n";
  out << "MR3 samples " << samples[2] << " cases regular/regular " << mr3_cases[0]
      << " exceptional/regular " << mr3_cases[1] << " regular/exceptional " << mr3_cases[2]
      << " exceptional/exceptional " << mr3_cases[3] << "\n";
  out << "inconclusive " << inconclusive << "\n";
  for (const auto& f : failures) out << "failure " << f << "\n";
  out << "result " << (passed() ? "pass" : "fail") << "\n";
  return out.str();
}

MrReport check_mr_properties(const RealizabilityChecker& checker, const MrOptions& opts) {
  const Signature& sig = checker.signature();
  const SyntacticMonad& m = checker.monad();
  const bool interactive = relation_of(m) == Relation::Interactive;
  RuntimeSampler states(sig, opts.seed);
  FormulaSampler::Options fo;
  fo.max_depth = opts.max_depth;
  fo.max_quantifier_depth = opts.max_depth;
  FormulaSampler formulas(sig, opts.seed ^ 0x5bd1e995ULL, fo);
  MrReport report;

  auto pick = [&](const std::vector<Term>& v) -> const Term& { return v[states.uniform(0, v.size() - 1)]; };
  // A monadic realizer of A at s, regular or exceptional as requested.
  auto monadic_sample = [&](const Formula& a, const KnowledgeState& s, bool exceptional) -> std::optional<Term> {
    Type ma = inner_type(m, a);
    if (exceptional) {
      auto e = states.exception_extending(s);
      if (!e) return std::nullopt;
      return Term::abs("_", Type::state(), mk_inr(ma, Term::ex_lit(*e)));
    }
    auto rs = checker.realizers(a, s, 4);
    if (rs.empty()) return std::nullopt;
    return Term::app(m.unit_at(ma), pick(rs));
  };
  auto record = [&](const char* law, const TestVerdict& v, const std::string& what) {
    if (v.failed()) report.failures.push_back(std::string(law) + " " + what + ": " + v.detail);
    if (v.outcome == Outcome::Inconclusive) ++report.inconclusive;
  };

  for (std::size_t attempt = 0; report.samples[0] < opts.samples && attempt < opts.max_attempts; ++attempt) {
    Formula a = formulas.closed();
    KnowledgeState s = states.state();
    auto rs = checker.realizers(a, s, 4);
    if (rs.empty()) continue;
    const Term& r = pick(rs);
    ++report.samples[0];
    record("MR1", checker.monadic_realizes(Term::app(m.unit_at(inner_type(m, a)), r), a, s),
           "A=" + to_string(a) + " s=" + to_string(s) + " r=" + to_string(r));
  }

  for (std::size_t attempt = 0; report.samples[1] < opts.samples && attempt < opts.max_attempts; ++attempt) {
    Formula a = formulas.closed();
    Formula b = formulas.closed();
    KnowledgeState s = states.state();
    auto rs = checker.realizers(Formula::implies(a, b), s, 4);
    if (rs.empty()) continue;
    const Term& r = pick(rs);
    auto ahat = monadic_sample(a, s, interactive && states.uniform(0, 1) == 1);
    if (!ahat || !checker.monadic_realizes(*ahat, a, s).passed()) continue;
    ++report.samples[1];
    Term applied = Term::app(m.star_at(inner_type(m, a), inner_type(m, b)), {r, *ahat});
    record("MR2", checker.monadic_realizes(applied, b, s),
           "A=" + to_string(a) + " B=" + to_string(b) + " s=" + to_string(s) + " r=" + to_string(r) +
               " a=" + to_string(*ahat));
  }

  for (std::size_t attempt = 0; report.samples[2] < opts.samples && attempt < opts.max_attempts; ++attempt) {
    Formula a = formulas.closed();
    Formula b = formulas.closed();
    KnowledgeState s = states.state();
    std::size_t kase = interactive ? states.uniform(0, 3) : 0;
    auto ahat = monadic_sample(a, s, kase == 1 || kase == 3);
    auto bhat = monadic_sample(b, s, kase == 2 || kase == 3);
    if (!ahat || !bhat) continue;
    if (!checker.monadic_realizes(*ahat, a, s).passed() || !checker.monadic_realizes(*bhat, b, s).passed())
      continue;
    ++report.samples[2];
    ++report.mr3_cases[kase];
    Term merged = Term::app(m.merge_at(inner_type(m, a), inner_type(m, b)), {*ahat, *bhat});
    record("MR3", checker.monadic_realizes(merged, Formula::conj(a, b), s),
           "A=" + to_string(a) + " B=" + to_string(b) + " s=" + to_string(s) + " a=" + to_string(*ahat) +
               " b=" + to_string(*bhat));
  }
  return report;
}

}  // namespace ireal
