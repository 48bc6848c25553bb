#include "ireal/extractor.hpp"

#include "ireal/syntax.hpp"

namespace ireal {

Type inner_type(const SyntacticMonad& m, const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Atomic:
    case Formula::Kind::False:
      return Type::unit();
    case Formula::Kind::And:
      return Type::product(inner_type(m, a.left()), inner_type(m, a.right()));
    case Formula::Kind::Or:
      return Type::sum(inner_type(m, a.left()), inner_type(m, a.right()));
    case Formula::Kind::Implies:
      return Type::arrow(inner_type(m, a.left()), monadic_type(m, a.right()));
    case Formula::Kind::Forall:
      return Type::arrow(Type::nat(), monadic_type(m, a.body()));
    case Formula::Kind::Exists:
      return Type::product(Type::nat(), inner_type(m, a.body()));
  }
  throw Error("inner_type: unknown formula kind");
}

Type monadic_type(const SyntacticMonad& m, const Formula& a) { return m.T(inner_type(m, a)); }

TypeContext realizer_context(const SyntacticMonad& m, const Context& ctx, const Formula& conclusion) {
  TypeContext out;
  for (const auto& as : ctx) {
    for (const auto& x : as.formula.free_vars()) out.emplace(x, Type::nat());
  }
  for (const auto& x : conclusion.free_vars()) out.emplace(x, Type::nat());
  for (const auto& as : ctx) out.insert_or_assign(as.label, inner_type(m, as.formula));
  return out;
}

Term arith_to_term(const ArithTerm& t, const Signature& sig) {
  switch (t.kind()) {
    case ArithTerm::Kind::Var:
      return Term::var(t.name(), Type::nat());
    case ArithTerm::Kind::Zero:
      return c_zero();
    case ArithTerm::Kind::Succ:
      return mk_succ(arith_to_term(t.pred(), sig));
    case ArithTerm::Kind::Fn:
      if (!t.closed())
        throw ExtractionError("function symbol " + t.name() +
                              " applied to open arguments has no T' counterpart");
      return mk_numeral(eval_arith(t, sig));
  }
  throw Error("arith_to_term: unknown term kind");
}

Term em_realizer(const Signature& sig, const std::string& predicate,
                 const std::vector<ArithTerm>& params) {
  PredicateRef p = sig.predicate(predicate);
  if (p->arity != params.size() + 1)
    throw ArityError("EM over " + predicate + " needs " + std::to_string(p->arity - 1) +
                     " parameters, got " + std::to_string(params.size()));
  SyntacticMonad m = ir_monad();
  Formula em = em_formula(predicate, params);
  const Formula& universal = em.left();
  const Formula& existential = em.right();
  Type univ_t = inner_type(m, universal);
  Type exist_t = inner_type(m, existential);
  Type inner = Type::sum(univ_t, exist_t);

  std::vector<Term> ts;
  for (const auto& t : params) ts.push_back(arith_to_term(t, sig));
  // Binders use reserved names so they cannot capture variables of the params.
  Term s = Term::var("$s", Type::state());
  Term y = Term::var("$y", Type::nat());
  Term forall_side =
      Term::abs("$y", Type::nat(), Term::abs("_", Type::state(), mk_eval(p, ts, y)));
  // Second component of the existential realizer: realizes ~P(t, y), which is
  // never interrogated since P(t, y) fails for a stored witness y.
  Term w = dummy(inner_type(m, existential.body()));
  Term on_miss = Term::abs("_", Type::unit(), mk_inl(forall_side, exist_t));
  Term on_hit = Term::abs("$y", Type::nat(), mk_inr(univ_t, mk_pair(y, w)));
  Term body = mk_case(mk_query(p, s, ts), on_miss, on_hit);
  return Term::abs("$s", Type::state(), mk_inl(body, Type::ex()));
}

namespace {

class Extractor {
 public:
  Extractor(const SyntacticMonad& m, const Signature& sig) : m_(m), sig_(sig) {}

  Term run(const Derivation& d) {
    switch (d.rule) {
      case Rule::Id: {
        const Formula& a = d.conclusion();
        return raise({}, inner(a), Term::var(d.label, inner(a)));
      }
      case Rule::Atm: {
        std::vector<Type> units(d.premises.size(), Type::unit());
        Term f = c_unit();
        for (std::size_t i = d.premises.size(); i-- > 0;)
          f = Term::abs("$g" + std::to_string(i + 1), Type::unit(), std::move(f));
        return raise(units, Type::unit(), f, sub(d));
      }
      case Rule::AndI: {
        Type a = inner(d.premises[0].conclusion());
        Type b = inner(d.premises[1].conclusion());
        return raise({a, b}, Type::product(a, b), c_pair(a, b), sub(d));
      }
      case Rule::AndEL:
      case Rule::AndER: {
        const Formula& ab = d.premises[0].conclusion();
        Type a = inner(ab.left());
        Type b = inner(ab.right());
        Type p = Type::product(a, b);
        bool left = d.rule == Rule::AndEL;
        return raise({p}, left ? a : b, left ? c_projl(a, b) : c_projr(a, b), sub(d));
      }
      case Rule::OrIL:
      case Rule::OrIR: {
        const Formula& ab = d.conclusion();
        Type a = inner(ab.left());
        Type b = inner(ab.right());
        bool left = d.rule == Rule::OrIL;
        return raise({left ? a : b}, Type::sum(a, b), left ? c_inl(a, b) : c_inr(a, b), sub(d));
      }
      case Rule::OrE: {
        const Formula& ab = d.premises[0].conclusion();
        Type a = inner(ab.left());
        Type b = inner(ab.right());
        Type c = inner(d.conclusion());
        Type sum = Type::sum(a, b);
        Term g = Term::var("$g", sum);
        Term body = mk_case(g, Term::abs(d.label, a, run(d.premises[1])),
                            Term::abs(d.label2, b, run(d.premises[2])));
        Term f = Term::abs("$g", sum, std::move(body));
        return Term::app(star_n(m_, {sum}, c), {f, run(d.premises[0])});
      }
      case Rule::ImpI: {
        const Formula& ab = d.conclusion();
        Type a = inner(ab.left());
        Term f = Term::abs(d.label, a, run(d.premises[0]));
        return raise({}, Type::arrow(a, m_.T(inner(ab.right()))), f);
      }
      case Rule::ImpE: {
        const Formula& ab = d.premises[0].conclusion();
        Type a = inner(ab.left());
        Type b = inner(ab.right());
        Type fn = Type::arrow(a, m_.T(b));
        Term g1 = Term::var("$g1", fn);
        Term g2 = Term::var("$g2", a);
        Term f = Term::abs("$g1", fn, Term::abs("$g2", a, Term::app(g1, g2)));
        return Term::app(star_n(m_, {fn, a}, b), {f, run(d.premises[0]), run(d.premises[1])});
      }
      case Rule::ForallI: {
        const Formula& a = d.conclusion();
        Term f = Term::abs(d.var, Type::nat(), run(d.premises[0]));
        return raise({}, inner(a), f);
      }
      case Rule::ForallE: {
        const Formula& all = d.premises[0].conclusion();
        Type fn = inner(all);
        Type b = inner(d.conclusion());
        Term g = Term::var("$g", fn);
        Term f = Term::abs("$g", fn, Term::app(g, arith_to_term(*d.term, sig_)));
        return Term::app(star_n(m_, {fn}, b), {f, run(d.premises[0])});
      }
      case Rule::ExistsI: {
        const Formula& ex = d.conclusion();
        Type a = inner(ex.body());
        Term g = Term::var("$g", a);
        Term f = Term::abs("$g", a, mk_pair(arith_to_term(*d.term, sig_), g));
        return raise({a}, Type::product(Type::nat(), a), f, sub(d));
      }
      case Rule::ExistsE: {
        const Formula& ex = d.premises[0].conclusion();
        Type a = inner(ex.body());
        Type p = Type::product(Type::nat(), a);
        Type c = inner(d.conclusion());
        Term g = Term::var("$g", p);
        Term split = Term::abs(d.var, Type::nat(), Term::abs(d.label, a, run(d.premises[1])));
        Term f = Term::abs("$g", p, Term::app(split, {mk_projl(g), mk_projr(g)}));
        return Term::app(star_n(m_, {p}, c), {f, run(d.premises[0])});
      }
      case Rule::Ind: {
        // f = lam y. lam beta. (lam alpha. r) (lam z. raise_0 (lam _. beta z))
        const Formula& all = d.conclusion();
        Type ta = m_.T(inner(all.body()));
        Type beta_t = Type::arrow(Type::nat(), ta);
        Formula hyp = induction_hypothesis(all, d.var, d.var2, sig_);
        Type alpha_t = inner(hyp);
        Term beta = Term::var("$beta", beta_t);
        Term z = Term::var("$z", Type::nat());
        Type thunk = Type::arrow(Type::unit(), ta);
        Term ih = Term::abs("$z", Type::nat(),
                            raise({}, thunk, Term::abs("_", Type::unit(), Term::app(beta, z))));
        Term f = Term::abs(
            d.var, Type::nat(),
            Term::abs("$beta", beta_t, Term::app(Term::abs(d.label, alpha_t, run(d.premises[0])), ih)));
        return raise({}, beta_t, Term::app(c_rec(std::nullopt, ta), f));
      }
      case Rule::EM:
        if (!m_.interactive)
          throw ExtractionError("EM is realized only under the ir monad, not " + m_.name);
        return em_realizer(sig_, d.predicate, d.terms);
    }
    throw Error("extract: unknown rule");
  }

 private:
  Type inner(const Formula& a) const { return inner_type(m_, a); }

  std::vector<Term> sub(const Derivation& d) {
    std::vector<Term> out;
    for (const auto& p : d.premises) out.push_back(run(p));
    return out;
  }

  Term raise(const std::vector<Type>& args, const Type& result, const Term& f,
             const std::vector<Term>& realizers = {}) {
    std::vector<Term> all{f};
    all.insert(all.end(), realizers.begin(), realizers.end());
    return Term::app(raise_n(m_, args, result), all);
  }

  const SyntacticMonad& m_;
  const Signature& sig_;
};

}  // namespace

DecoratedSequent extract(const SyntacticMonad& m, const Derivation& d, const Signature& sig) {
  auto diags = check_derivation(d, sig);
  if (!diags.empty()) {
    std::string msg = "ill-formed derivation:";
    for (const auto& dg : diags) msg += "\n  " + to_string(dg);
    throw ExtractionError(msg);
  }
  Extractor ex(m, sig);
  DecoratedSequent ds{d.context(), ex.run(d), d.conclusion()};
  TypeContext ctx = realizer_context(m, ds.context, ds.conclusion);
  Type got = type_of(ctx, ds.realizer);
  Type want = monadic_type(m, ds.conclusion);
  if (got != want)
    throw InvariantViolation("extracted realizer has type " + to_string(got) + ", expected " +
                             to_string(want));
  return ds;
}

}  // namespace ireal
