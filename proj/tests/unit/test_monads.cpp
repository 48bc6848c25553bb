#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ir_chains.hpp"
#include "ireal/laws.hpp"
#include "ireal/sampler.hpp"
#include "support.hpp"

using namespace ireal;
using test::type;

namespace {

std::vector<SyntacticMonad> monads() { return {identity_monad(), exception_monad(), ir_monad()}; }

const Signature& sig() {
  static const Signature s = law_universe();
  return s;
}

Term nf(const Term& t) { return normalize(t); }

ObsResult obs(const Term& a, const Term& b, const Type& ty, std::uint64_t seed = 1,
              const SyntacticMonad* m = nullptr) {
  TermSampler sampler(sig(), seed, {}, m);
  return obs_equal(a, b, ty, sampler);
}

}  // namespace

TEST_CASE("identity monad") {
  SyntacticMonad m = identity_monad();
  CHECK(alpha_eq(nf(Term::app(m.unit_at(Type::nat()), mk_numeral(3))), mk_numeral(3)));
  Type ff = type("(-> Nat Nat)");
  Term f = Term::var("f", ff);
  Term x = Term::var("x", Type::nat());
  CHECK(alpha_eq(nf(Term::app(m.star_at(Type::nat(), Type::nat()), {f, x})), Term::app(f, x)));
  CHECK(alpha_eq(nf(Term::app(m.merge_at(Type::nat(), Type::unit()), {mk_numeral(3), c_unit()})),
                 mk_pair(mk_numeral(3), c_unit())));
}

TEST_CASE("exception monad") {
  SyntacticMonad m = exception_monad();
  Type tb = m.T(Type::nat());
  Term f = Term::abs("n", Type::nat(), mk_inl(mk_succ(Term::var("n", Type::nat())), Type::ex()));
  Term star = m.star_at(Type::nat(), Type::nat());
  CHECK(alpha_eq(nf(Term::app(star, {f, mk_inl(mk_numeral(2), Type::ex())})), nf(Term::app(f, mk_numeral(2)))));
  ExceptionValue e1(WitnessMap{{WitnessKey{"P", {}}, 5}}, sig());
  ExceptionValue e2(WitnessMap{{WitnessKey{"P", {}}, 9}, {WitnessKey{"Q", {1}}, 0}}, sig());
  Term thrown = mk_inr(Type::nat(), Term::ex_lit(e1));
  CHECK(alpha_eq(nf(Term::app(star, {f, thrown})), thrown));
  Term merged = nf(Term::app(m.merge_at(Type::nat(), Type::nat()),
                             {mk_inr(Type::nat(), Term::ex_lit(e1)), mk_inr(Type::nat(), Term::ex_lit(e2))}));
  CHECK(alpha_eq(merged, mk_inr(type("(* Nat Nat)"), Term::ex_lit(merge_exceptions(e1, e2)))));
  (void)tb;
}

TEST_CASE("ir monad") {
  SyntacticMonad m = ir_monad();
  RuntimeSampler rs(sig(), 2);
  Term a = mk_numeral(4);
  Term b = c_unit();
  for (int i = 0; i < 20; ++i) {
    Term s = Term::state_lit(rs.state());
    CHECK(alpha_eq(nf(Term::app(m.unit_at(Type::nat()), {a, s})), mk_inl(a, Type::ex())));
    Term f = Term::abs("n", Type::nat(),
                       Term::abs("t", Type::state(),
                                 mk_case(mk_query(sig().predicate("P"), Term::var("t", Type::state()), {}),
                                         Term::abs("_", Type::unit(), mk_inl(Term::var("n", Type::nat()), Type::ex())),
                                         Term::abs("w", Type::nat(), mk_inl(Term::var("w", Type::nat()), Type::ex())))));
    Term lhs = Term::app(m.star_at(Type::nat(), Type::nat()), {f, Term::app(m.unit_at(Type::nat()), a), s});
    CHECK(alpha_eq(nf(lhs), nf(Term::app(f, {a, s}))));
    Term merged = Term::app(m.merge_at(Type::nat(), Type::unit()),
                            {Term::app(m.unit_at(Type::nat()), a), Term::app(m.unit_at(Type::unit()), b), s});
    CHECK(alpha_eq(nf(merged), mk_inl(mk_pair(a, b), Type::ex())));
  }
}

TEST_CASE("unit, star and merge have their stated types") {
  std::vector<Type> menu{type("Nat"), type("Unit"), type("(* Nat Unit)"), type("(-> Nat (+ Unit Nat))")};
  for (const auto& m : monads()) {
    for (const auto& a : menu) {
      CHECK(type_of(m.unit_at(a)) == Type::arrow(a, m.T(a)));
      for (const auto& b : menu) {
        CHECK(type_of(m.star_at(a, b)) == Type::arrows({Type::arrow(a, m.T(b)), m.T(a)}, m.T(b)));
        CHECK(type_of(m.merge_at(a, b)) == Type::arrows({m.T(a), m.T(b)}, m.T(Type::product(a, b))));
      }
    }
  }
}

TEST_CASE("star_k and raise_k typing for k <= 4") {
  std::vector<Type> args{type("Nat"), type("Unit"), type("(* Nat Nat)"), type("(+ Unit Nat)")};
  Type b = type("(* Unit Nat)");
  for (const auto& m : monads()) {
    for (std::size_t k = 0; k <= 4; ++k) {
      std::vector<Type> as(args.begin(), args.begin() + k);
      std::vector<Type> tas;
      for (const auto& a : as) tas.push_back(m.T(a));
      CHECK(type_of(star_n(m, as, b)) == Type::arrow(Type::arrows(as, m.T(b)), Type::arrows(tas, m.T(b))));
      CHECK(type_of(raise_n(m, as, b)) == Type::arrow(Type::arrows(as, b), Type::arrows(tas, m.T(b))));
    }
  }
}

TEST_CASE("star_k small cases") {
  for (const auto& m : monads()) {
    Type tb = m.T(Type::unit());
    CHECK(alpha_eq(star_n(m, {}, Type::unit()), Term::abs("f", tb, Term::var("f", tb))));
    CHECK(alpha_eq(star_n(m, {Type::nat()}, Type::unit()), m.star_at(Type::nat(), Type::unit())));
  }
}

TEST_CASE("raise_0 is unit and raise_2 pair is merge, observationally") {
  for (const auto& m : monads()) {
    CAPTURE(m.name);
    Type a = type("(* Nat Unit)");
    Term raise0 = Term::abs("v", a, Term::app(raise_n(m, {}, a), Term::var("v", a)));
    CHECK(obs(raise0, m.unit_at(a), Type::arrow(a, m.T(a)), 3, &m).equal);
    Type n = Type::nat();
    Type u = Type::unit();
    Term raise2 = Term::app(raise_n(m, {n, u}, Type::product(n, u)), c_pair(n, u));
    CHECK(obs(raise2, m.merge_at(n, u), Type::arrows({m.T(n), m.T(u)}, m.T(Type::product(n, u))), 4, &m).equal);
  }
}

TEST_CASE("raise_1 of the identity is star of unit") {
  for (const auto& m : monads()) {
    CAPTURE(m.name);
    Type n = Type::nat();
    TermSampler sampler(sig(), 9, {}, &m);
    for (int i = 0; i < 20; ++i) {
      Term a = sampler.monadic(n);
      Term lhs = Term::app(raise_n(m, {n}, n), {Term::abs("x", n, Term::var("x", n)), a});
      Term rhs = Term::app(m.star_at(n, n), {m.unit_at(n), a});
      CHECK(obs_equal(lhs, rhs, m.T(n), sampler).equal);
    }
  }
}

TEST_CASE("bind") {
  for (const auto& m : monads()) {
    CAPTURE(m.name);
    Type n = Type::nat();
    Type u = Type::unit();
    CHECK(type_of(bind_of(m, n, u)) == Type::arrows({m.T(n), Type::arrow(n, m.T(u))}, m.T(u)));
    TermSampler sampler(sig(), 21, {}, &m);
    for (int i = 0; i < 20; ++i) {
      Term f = sampler.kleisli(n, u);
      Term a = sampler.closed(n);
      Term mv = sampler.monadic(n);
      CHECK(obs_equal(Term::app(bind_of(m, n, u), {Term::app(m.unit_at(n), a), f}), Term::app(f, a), m.T(u), sampler)
                .equal);
      CHECK(obs_equal(Term::app(bind_of(m, n, n), {mv, m.unit_at(n)}), mv, m.T(n), sampler).equal);
    }
  }
}

TEST_CASE("observational equality") {
  Type nn = type("(-> Nat Nat)");
  CHECK(obs(test::term("(lam (x Nat) x)"), test::term("(lam (y Nat) y)"), nn).equal);
  auto r = obs(test::term("(lam (n Nat) (succ n))"), test::term("(lam (n Nat) n)"), nn);
  CHECK_FALSE(r.equal);
  CHECK(r.witness == "at (num 0): (num 1) vs (num 0)");
  SyntacticMonad id = identity_monad();
  Type n = Type::nat();
  Term composite = Term::abs("v", n, Term::app(id.unit_at(n), mk_projl(mk_pair(Term::var("v", n), c_unit()))));
  CHECK(obs(composite, id.unit_at(n), Type::arrow(n, n)).equal);
  CHECK_THROWS(obs(Term::var("x", n), c_zero(), n));
}

TEST_CASE("observational equality is reflexive, symmetric and stable") {
  SyntacticMonad m = ir_monad();
  TermSampler gen(sig(), 33, {}, &m);
  Type ty = m.T(type("(* Nat Unit)"));
  for (int i = 0; i < 30; ++i) {
    Term a = gen.monadic(type("(* Nat Unit)"));
    Term b = gen.monadic(type("(* Nat Unit)"));
    CHECK(obs(a, a, ty, i).equal);
    auto ab = obs(a, b, ty, i);
    auto ba = obs(b, a, ty, i);
    CHECK(ab.equal == ba.equal);
    CHECK(obs(a, b, ty, i).witness == ab.witness);
  }
}

TEST_CASE("laws hold for the shipped monads") {
  LawOptions opts;
  opts.samples_per_law = 40;
  opts.seed = 17;
  for (const auto& m : monads()) {
    CAPTURE(m.name);
    LawReport r = check_monad_laws(m, opts);
    CHECK(r.passed());
    CHECK(r.laws.size() == 3);
  }
}

TEST_CASE("laws catch a unit that forgets its argument") {
  auto mutants = mutant_monads();
  CHECK(mutants.size() == 6);
  LawOptions opts;
  opts.samples_per_law = 200;
  LawReport r = check_monad_laws(mutants.front(), opts);
  CHECK_FALSE(r.passed());
  bool m2_failed = false;
  for (const auto& l : r.laws)
    if (l.law == "M2" && !l.passed) {
      m2_failed = true;
      CHECK_FALSE(l.counterexample.empty());
      // the recorded sample reproduces the failure
      std::size_t index = 0;
      while (law_sample_seed(opts.seed, "M2", index) != l.failing_seed) ++index;
      CHECK_FALSE(check_law_sample(mutants.front(), "M2", sig(), opts, index).empty());
    }
  CHECK(m2_failed);
}

TEST_CASE("ir reduction chains for M1-M3") {
  for (const auto& c : test::ir_chains()) {
    CAPTURE(c.law);
    auto terms = test::chain_terms(c.start);
    CHECK(terms.size() - 1 == c.steps);
    CHECK(alpha_eq(terms.back(), c.last));
    for (const auto& t : terms) CHECK(infer_type(t) == infer_type(c.start));
    CHECK(test::matches_golden(test::golden_path(c.law), test::chain_text(terms)));
    SyntacticMonad m = ir_monad();
    CHECK(obs(c.closed_lhs, c.closed_rhs, c.type, 5, &m).equal);
  }
}
