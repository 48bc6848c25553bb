#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ireal/extractor.hpp"
#include "ireal/sampler.hpp"
#include "support.hpp"

using namespace ireal;
using test::formula;
using test::type;

namespace {

const Signature& sig() {
  static const Signature s = test::corpus_signature();
  return s;
}

Derivation corpus(const std::string& name) { return parse_derivation(read_file(test::corpus(name + ".sexp")), sig()); }

const std::vector<std::string> kNames{"id", "atm", "and", "or", "imp", "forall-i", "forall-e", "exists-i",
                                      "exists-e", "ind", "em", "em-loop"};

bool uses_em(const std::string& name) { return name.rfind("em", 0) == 0; }

}  // namespace

TEST_CASE("inner types") {
  SyntacticMonad m = ir_monad();
  CHECK(inner_type(m, formula("(LT x 1)")) == Type::unit());
  CHECK(inner_type(m, formula("(exists y (LT 1 y))")) == type("(* Nat Unit)"));
  CHECK(inner_type(m, formula("(forall y (LT 1 y))")) == type("(-> Nat State (+ Unit Ex))"));
  CHECK(inner_type(identity_monad(), formula("(forall y (LT 1 y))")) == type("(-> Nat Unit)"));
  CHECK(inner_type(m, formula("(imp (LT 1 2) (or false (LE 1 1)))")) == type("(-> Unit State (+ (+ Unit Unit) Ex))"));
}

TEST_CASE("monadic types") {
  Formula a = formula("(and (LT 0 1) (exists y (LE y 2)))");
  CHECK(monadic_type(identity_monad(), a) == inner_type(identity_monad(), a));
  CHECK(monadic_type(exception_monad(), a) == Type::sum(inner_type(exception_monad(), a), Type::ex()));
  CHECK(monadic_type(ir_monad(), formula("(LT 0 1)")) == type("(-> State (+ Unit Ex))"));
  // EM(P) with no parameters, unfolded by hand
  Type t = type(
      "(-> State (+ (+ (-> Nat State (+ Unit Ex))"
      "               (* Nat (-> Unit State (+ Unit Ex))))"
      "            Ex))");
  CHECK(monadic_type(ir_monad(), em_formula("P", {})) == t);
  CHECK(type_of(em_realizer(sig(), "P", {})) == t);
}

TEST_CASE("the em realizer") {
  Term r = em_realizer(sig(), "LT", {ArithTerm::numeral(3)});
  CHECK(type_of(r) == monadic_type(ir_monad(), em_formula("LT", {ArithTerm::numeral(3)})));
  CHECK_THROWS_AS(em_realizer(sig(), "LT", {}), ArityError);

  Term at_empty = normalize(Term::app(r, Term::state_lit({})));
  REQUIRE(at_empty.is(Term::Kind::App));
  CHECK(at_empty.fun().is_const(ConstId::InjL));
  CHECK(at_empty.arg().fun().is_const(ConstId::InjL));

  KnowledgeState s(WitnessMap{{WitnessKey{"LT", {3}}, 2}}, sig());
  Term at_s = normalize(Term::app(r, Term::state_lit(s)));
  REQUIRE(at_s.fun().is_const(ConstId::InjL));
  Term branch = at_s.arg();
  REQUIRE(branch.fun().is_const(ConstId::InjR));
  Term pair = branch.arg();
  CHECK(alpha_eq(normalize(mk_projl(pair)), mk_numeral(2)));
  CHECK(alpha_eq(normalize(mk_projr(pair)), dummy(type("(-> Unit State (+ Unit Ex))"))));
}

TEST_CASE("extracted realizers have the monadic type of the conclusion") {
  for (const auto& m : {identity_monad(), exception_monad(), ir_monad()}) {
    for (const auto& name : kNames) {
      if (uses_em(name) && !m.interactive) continue;
      CAPTURE(m.name);
      CAPTURE(name);
      Derivation d = corpus(name);
      DecoratedSequent ds = extract(m, d, sig());
      TypeContext ctx = realizer_context(m, d.context(), d.conclusion());
      CHECK(type_of(ctx, ds.realizer) == monadic_type(m, d.conclusion()));
      CHECK(alpha_eq(extract(m, d, sig()).realizer, ds.realizer));
    }
  }
}

TEST_CASE("EM is only decorated under ir") {
  CHECK_THROWS_AS(extract(identity_monad(), corpus("em"), sig()), ExtractionError);
  CHECK_THROWS_AS(extract(exception_monad(), corpus("em-loop"), sig()), ExtractionError);
}

TEST_CASE("ill-formed derivations are not decorated") {
  Derivation d = corpus("id");
  d.sequent.conclusion = formula("(LT 2 1)");
  CHECK_THROWS_AS(extract(ir_monad(), d, sig()), ExtractionError);
}

TEST_CASE("identity rule under the identity monad is the assumption") {
  SyntacticMonad m = identity_monad();
  Term r = extract(m, corpus("id"), sig()).realizer;
  CHECK(alpha_eq(normalize(r), Term::var("a", Type::unit())));
}

TEST_CASE("conjunction introduction is raise_2 pair") {
  Context ctx{{"a", formula("(LT 1 2)")}, {"b", formula("(exists y (LT 0 y))")}};
  Derivation d = build::and_i(build::id(ctx, "a"), build::id(ctx, "b"));
  for (const auto& m : {identity_monad(), exception_monad(), ir_monad()}) {
    Term r = extract(m, d, sig()).realizer;
    auto [head, args] = spine(r);
    REQUIRE(args.size() == 3);
    Type u = Type::unit();
    Type e = type("(* Nat Unit)");
    CHECK(alpha_eq(r.fun().fun().fun(), raise_n(m, {u, e}, Type::product(u, e))));
    CHECK(alpha_eq(args[0], c_pair(u, e)));
    CHECK(alpha_eq(args[1], Term::app(raise_n(m, {}, u), Term::var("a", u))));
    CHECK(alpha_eq(args[2], Term::app(raise_n(m, {}, e), Term::var("b", e))));
  }
}

TEST_CASE("induction is raise_0 of an unguarded recursor") {
  SyntacticMonad m = ir_monad();
  Derivation d = corpus("ind");
  Term r = extract(m, d, sig()).realizer;
  REQUIRE(r.is(Term::Kind::App));
  Type inner = inner_type(m, d.conclusion());
  CHECK(alpha_eq(r.fun(), raise_n(m, {}, inner)));
  auto [head, args] = spine(r.arg());
  CHECK(head.is_const(ConstId::Rec));
  CHECK_FALSE(head.constant().guard.has_value());
  CHECK(args.size() == 1);
}

TEST_CASE("an atomic rule over an exceptional premise throws under ir") {
  SyntacticMonad m = ir_monad();
  Derivation d = corpus("atm");
  DecoratedSequent ds = extract(m, d, sig());
  // raise_2 (lam g1 g2. unit) r1 r2, with r1 replaced by a throwing premise
  auto [head, args] = spine(ds.realizer);
  REQUIRE(args.size() == 3);
  ExceptionValue e(WitnessMap{{WitnessKey{"P", {}}, 6}}, sig());
  Term thrown = Term::abs("_", Type::state(), mk_inr(Type::unit(), Term::ex_lit(e)));
  Term ok = Term::app(m.unit_at(Type::unit()), c_unit());
  for (const auto& [first, second] : {std::pair{thrown, ok}, std::pair{ok, thrown}}) {
    Term r = Term::app(head, {args[0], first, second});
    Term out = normalize(Term::app(r, Term::state_lit({})));
    CHECK(alpha_eq(out, mk_inr(Type::unit(), Term::ex_lit(e))));
    CHECK(properly_extends(e, {}));
  }
}

TEST_CASE("closed function symbols are evaluated, open ones rejected") {
  Signature s = parse_signature("(signature (standard) (function add 2 (+ (arg 0) (arg 1))))");
  CHECK(alpha_eq(arith_to_term(parse_arith(read_sexpr("(add 2 3)"), s), s), mk_numeral(5)));
  CHECK(alpha_eq(arith_to_term(ArithTerm::succ(ArithTerm::var("x")), s), mk_succ(Term::var("x", Type::nat()))));
  CHECK_THROWS(arith_to_term(parse_arith(read_sexpr("(add x 3)"), s), s));
}
