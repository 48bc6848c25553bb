#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "ireal/derivation.hpp"
#include "ireal/extractor.hpp"
#include "ireal/monad.hpp"
#include "support.hpp"

using namespace ireal;
using test::formula;

namespace {

const Signature& sig() {
  static const Signature s = test::corpus_signature();
  return s;
}

Derivation parse(const std::string& text) { return parse_derivation(text, sig()); }

Derivation corpus(const std::string& name) { return parse(read_file(test::corpus(name + ".sexp"))); }

ArithTerm num(Nat n) { return ArithTerm::numeral(n); }
ArithTerm var(const std::string& x) { return ArithTerm::var(x); }

}  // namespace

TEST_CASE("arithmetic evaluation") {
  CHECK(eval_arith(ArithTerm::succ(ArithTerm::succ(ArithTerm::zero())), {}, sig()) == 2);
  CHECK(eval_arith(var("x"), {{"x", 7}}, sig()) == 7);
  CHECK_THROWS_AS(eval_arith(var("y"), {}, sig()), UnboundVariable);
  CHECK(num(3).as_numeral() == 3u);
  CHECK_FALSE(var("x").as_numeral().has_value());
}

TEST_CASE("function symbols from a signature file") {
  Signature s = parse_signature("(signature (standard) (function add 2 (+ (arg 0) (arg 1))))");
  ArithTerm t = parse_arith(read_sexpr("(add 2 (succ x))"), s);
  CHECK(eval_arith(t, {{"x", 4}}, s) == 7);
  CHECK(atomic_truth(parse_formula("(EQ (add 1 1) 2)", s), s));
}

TEST_CASE("atomic truth") {
  CHECK_FALSE(atomic_truth(Formula::falsum(), sig()));
  CHECK(atomic_truth(formula("(LT 2 5)"), sig()));
  CHECK_FALSE(atomic_truth(formula("(LT 5 2)"), sig()));
  CHECK(atomic_truth(formula("(P 4)", sig()), sig()));
  CHECK_FALSE(atomic_truth(formula("(P 5)", sig()), sig()));
  CHECK_THROWS(parse_formula("(LT 1)", sig()));
  CHECK_THROWS(parse_formula("(NOPE 1)", sig()));
}

TEST_CASE("formula substitution") {
  Formula a = formula("(exists y (LT x y))");
  CHECK(subst_formula(a, "x", num(2)) == formula("(exists y (LT 2 y))"));
  Formula b = formula("(forall x (LT x 3))");
  CHECK(subst_formula(b, "x", var("t")) == b);
  Formula c = formula("(forall y (LT x y))");
  Formula out = subst_formula(c, "x", ArithTerm::succ(var("y")));
  REQUIRE(out.kind() == Formula::Kind::Forall);
  CHECK(out.var() != "y");
  CHECK(alpha_eq(out, formula("(forall w (LT (succ y) w))")));
  CHECK(out.free_vars() == std::set<std::string>{"y"});
}

TEST_CASE("substitution commutes with connectives") {
  Formula a = formula("(LT x 3)");
  Formula b = formula("(exists y (LE x y))");
  for (auto mk : {Formula::conj, Formula::disj, Formula::implies}) {
    Formula whole = subst_formula(mk(a, b), "x", num(4));
    CHECK(whole == mk(subst_formula(a, "x", num(4)), subst_formula(b, "x", num(4))));
  }
}

TEST_CASE("inner type is stable under substitution") {
  SyntacticMonad m = ir_monad();
  for (const char* text : {"(forall y (imp (LT x y) (exists z (LT y z))))", "(or (LT x 1) (and (LE 0 x) false))"}) {
    Formula a = formula(text);
    CHECK(inner_type(m, subst_formula(a, "x", num(6))) == inner_type(m, a));
  }
}

TEST_CASE("quantifier depth and notation") {
  CHECK(formula("(forall x (exists y (LT x y)))").quantifier_depth() == 2);
  CHECK(formula("(not (LT 1 2))") == Formula::implies(formula("(LT 1 2)"), Formula::falsum()));
  CHECK(to_string(formula("(imp (LT 1 2) false)")) == "(not (LT 1 2))");
  Formula em = em_formula("P", {}, "y");
  CHECK(em == formula("(or (forall y (P y)) (exists y (not (P y))))", sig()));
}

TEST_CASE("atomic rules are checked for soundness") {
  std::string cex;
  AtomicRule bad{"lt-sym", {formula("(LT x y)")}, formula("(LT y x)")};
  CHECK_FALSE(rule_sound(bad, sig(), 10, &cex));
  CHECK_FALSE(cex.empty());
  Signature s = Signature::standard();
  CHECK_THROWS(s.add_rule(bad));
  CHECK(rule_sound(sig().rule("lt-trans"), sig(), 20));
}

TEST_CASE("every corpus derivation is well formed") {
  for (const char* name : {"id", "atm", "and", "or", "imp", "forall-i", "forall-e", "exists-i", "exists-e", "ind",
                           "em", "em-loop"}) {
    CAPTURE(name);
    auto diags = check_derivation(corpus(name), sig());
    CHECK(diags.empty());
  }
}

TEST_CASE("the one-node EM derivation is well formed") {
  Derivation d = build::em({}, "P", {});
  CHECK(check_derivation(d, sig()).empty());
  CHECK(d.conclusion() == em_formula("P", {}));
}

TEST_CASE("builders agree with the parser") {
  Context ctx{{"a", formula("(LT 1 2)")}, {"b", formula("(LE 0 1)")}};
  Derivation d = build::and_i(build::id(ctx, "a"), build::id(ctx, "b"));
  CHECK(check_derivation(d, sig()).empty());
  CHECK(d.conclusion() == formula("(and (LT 1 2) (LE 0 1))"));
  Context swapped{ctx[1], ctx[0]};
  Derivation e = build::imp_i("a", formula("(LT 1 2)"), build::id(swapped, "a"));
  CHECK(check_derivation(e, sig()).empty());
  CHECK(e.context().size() == 1);
  Derivation f = build::forall_e(build::forall_i("x", build::atm({}, "zero-le", formula("(LE 0 x)"), {})), num(3));
  CHECK(check_derivation(f, sig()).empty());
  CHECK(f.conclusion() == formula("(LE 0 3)"));
}

TEST_CASE("broken derivations are rejected") {
  struct Mutant {
    const char* name;
    std::function<Derivation()> make;
  };
  std::vector<Mutant> mutants{
      {"imp-e minor premise does not match the antecedent",
       [] {
         Derivation d = corpus("imp");
         d.premises[1] = parse("(derivation (atm lt-succ (LT 2 3)))");
         return d;
       }},
      {"forall-i eigenvariable free in an open assumption",
       [] { return parse("(derivation (context (a (LT x 3))) (forall-i x (id a)))"); }},
      {"exists-e eigenvariable escapes into the conclusion",
       [] { return parse("(derivation (context (h (exists y (LT 0 y)))) (exists-e (id h) (w a) (id a)))"); }},
      {"id label not in context", [] {
         Derivation d = corpus("id");
         d.label = "nope";
         return d;
       }},
      {"id conclusion differs from the assumption", [] {
         Derivation d = corpus("id");
         d.sequent.conclusion = formula("(LT 2 1)");
         return d;
       }},
      {"atm premises do not instantiate the rule",
       [] { return parse("(derivation (context (a (LT 1 2)) (b (LT 5 3))) (atm lt-trans (LT 1 3) (id a) (id b)))"); }},
      {"atm with an unknown rule", [] {
         Derivation d = corpus("atm");
         d.atomic_rule = "lt-magic";
         return d;
       }},
      {"or-e branches conclude different formulas", [] {
         Derivation d = corpus("or");
         d.premises[2].sequent.conclusion = formula("(or (LE 3 x) (LT x 4))");
         return d;
       }},
      {"forall-e conclusion is not the instance", [] {
         Derivation d = corpus("forall-e");
         d.term = num(8);
         return d;
       }},
      {"ind step proves the wrong instance", [] {
         Derivation d = corpus("ind");
         d.var = "x";
         return d;
       }},
      {"em with the wrong number of parameters", [] {
         Derivation d = corpus("em");
         d.terms.clear();
         return d;
       }},
      {"and-i with a premise missing", [] {
         Derivation d = corpus("and");
         d.premises.pop_back();
         return d;
       }},
  };
  CHECK(mutants.size() >= 10);
  for (const auto& m : mutants) {
    CAPTURE(m.name);
    std::vector<Diagnostic> diags;
    bool rejected = false;
    try {
      diags = check_derivation(m.make(), sig());
      rejected = !diags.empty();
    } catch (const Error&) {
      rejected = true;
    }
    CHECK(rejected);
  }
}

TEST_CASE("diagnostics carry the path and rule") {
  Derivation d = corpus("imp");
  d.premises[1] = parse("(derivation (atm lt-succ (LT 2 3)))");
  auto diags = check_derivation(d, sig());
  REQUIRE_FALSE(diags.empty());
  CHECK(diags.front().path == "root");
  CHECK(diags.front().rule == Rule::ImpE);
  CHECK(to_string(diags.front()).find("imp-e") != std::string::npos);
}

TEST_CASE("induction hypothesis shape") {
  Formula a = formula("(forall x (LE 0 x))");
  CHECK(induction_hypothesis(a, "y", "z", sig()) == formula("(forall z (imp (LT z y) (LE 0 z)))"));
}
