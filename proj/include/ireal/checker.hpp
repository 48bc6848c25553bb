#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ireal/extractor.hpp"
#include "ireal/reduce.hpp"
#include "ireal/runtime.hpp"

namespace ireal {

enum class Outcome { Pass, Fail, Inconclusive };

struct TestVerdict {
  Outcome outcome = Outcome::Pass;
  /// For fail: the violated clause and the instantiation reaching it. For
  /// inconclusive: the clause path at which a bound ran out.
  std::string detail;
  /// Some implication was passed only because no antecedent realizer exists.
  bool vacuous = false;

  static TestVerdict pass(bool vacuous = false) { return {Outcome::Pass, {}, vacuous}; }
  static TestVerdict fail(std::string detail) { return {Outcome::Fail, std::move(detail), false}; }
  static TestVerdict inconclusive(std::string detail) {
    return {Outcome::Inconclusive, std::move(detail), false};
  }
  bool passed() const { return outcome == Outcome::Pass; }
  bool failed() const { return outcome == Outcome::Fail; }
};

std::string to_string(const TestVerdict& v);

struct CheckBounds {
  /// Universal quantifiers are tested at 0..N, existential witnesses searched in 0..N.
  Nat N = 8;
  /// Antecedent realizers tried per implication, assumption realizers per sequent.
  std::size_t budget = 50;
  std::uint64_t fuel = kDefaultFuel;
};

/// Bounded versions of the inner and monadic realizability relations of a
/// monad. Under ir the relations are indexed by a state; under identity the
/// monadic relation is the inner one; under exception a thrown value never
/// realizes anything.
class RealizabilityChecker {
 public:
  RealizabilityChecker(const Signature& sig, SyntacticMonad monad, CheckBounds bounds = {});

  /// Throws TypeError when r does not have type M(A), Error when A is open.
  TestVerdict inner_realizes(const Term& r, const Formula& a, const KnowledgeState& s = {}) const;
  /// Throws TypeError when r does not have type MM(A), Error when A is open.
  TestVerdict monadic_realizes(const Term& r, const Formula& a, const KnowledgeState& s = {}) const;

  /// Inner realizers of the closed formula A, each verified with
  /// inner_realizes before it is returned, at most `budget` of them. For
  /// formulas built from atoms with /\ and \/ the list is exhaustive;
  /// existentials contribute one entry per witness in 0..N.
  std::vector<Term> realizers(const Formula& a, const KnowledgeState& s, std::size_t budget) const;
  /// First realizer found by the bounded search, if any.
  std::optional<Term> canonical(const Formula& a, const KnowledgeState& s = {}) const;

  /// Validity of Gamma |- r : C at state s: every numeral substitution of the
  /// free variables in 0..N, then every assumption realizer combination
  /// (sampled with `seed` past the budget, `extra` realizers always included).
  TestVerdict sequent_valid(const DecoratedSequent& ds, const KnowledgeState& s,
                            const std::map<std::string, std::vector<Term>>& extra = {},
                            std::uint64_t seed = 0) const;

  const SyntacticMonad& monad() const { return monad_; }
  const Signature& signature() const { return *sig_; }
  const CheckBounds& bounds() const { return bounds_; }

 private:
  TestVerdict inner(const Term& r, const Formula& a, const KnowledgeState& s, const std::string& path) const;
  TestVerdict monadic(const Term& r, const Formula& a, const KnowledgeState& s, const std::string& path) const;
  std::vector<Term> search(const Formula& a, const KnowledgeState& s, std::size_t budget) const;
  Term normal(const Term& t) const { return normalize(t, bounds_.fuel); }

  const Signature* sig_;
  SyntacticMonad monad_;
  CheckBounds bounds_;
};

/// Random closed formulas over the predicates of a signature.
class FormulaSampler {
 public:
  struct Options {
    std::size_t max_depth = 3;
    std::size_t max_quantifier_depth = 3;
    Nat max_numeral = 6;
    /// Percent chance that an implication's antecedent is kept free of
    /// quantifiers and implications.
    int simple_antecedent = 100;
  };

  FormulaSampler(const Signature& sig, std::uint64_t seed);
  FormulaSampler(const Signature& sig, std::uint64_t seed, Options opts);

  Formula closed();
  /// A formula built only from atoms, False, /\ and \/.
  Formula positive(std::size_t depth);
  std::mt19937_64& rng() { return rng_; }

 private:
  Formula gen(std::size_t depth, std::size_t qdepth, std::vector<std::string>& scope);
  Formula atom(const std::vector<std::string>& scope);
  Nat uniform(Nat lo, Nat hi);

  const Signature* sig_;
  std::mt19937_64 rng_;
  Options opts_;
  std::vector<PredicateRef> preds_;
  std::size_t counter_ = 0;
};

struct MrOptions {
  std::size_t samples = 500;
  std::size_t max_depth = 3;
  std::uint64_t seed = 1;
  /// Upper bound on draws per property before giving up on reaching `samples`.
  std::size_t max_attempts = 20000;
};

struct MrReport {
  std::array<std::size_t, 3> samples{};
  /// MR3 cases: both regular, left exceptional, right exceptional, both exceptional.
  std::array<std::size_t, 4> mr3_cases{};
  std::size_t inconclusive = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  std::string to_text() const;
};

/// Property tests of MR1-MR3 over sampled formulas, states and realizers.
MrReport check_mr_properties(const RealizabilityChecker& checker, const MrOptions& opts = {});

}  // namespace ireal
