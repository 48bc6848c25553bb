#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ireal/monad.hpp"
#include "ireal/reduce.hpp"
#include "ireal/runtime.hpp"
#include "ireal/term.hpp"

namespace ireal {

/// Type-directed generator of well-typed terms. Besides constructors it
/// emits beta redexes, guarded recursion, and (when a state variable is in
/// scope) query/eval case splits, so generated monadic values depend on the
/// state and throw exceptions.
class TermSampler {
 public:
  struct Options {
    Nat max_numeral = 10;
    /// Parameters handed to query/eval stay small so that sampled states hit.
    Nat max_param = 3;
    int max_depth = 3;
    /// Probability weight of redex-producing forms, 0..100.
    int redex_weight = 15;
    RuntimeSampler::Limits runtime{4, 3, 8};
  };

  TermSampler(const Signature& sig, std::uint64_t seed);
  TermSampler(const Signature& sig, std::uint64_t seed, Options opts,
              const SyntacticMonad* monad = nullptr);

  /// Closed term of type `ty`.
  Term closed(const Type& ty);
  /// Closed term of type T a, built through unit/star/merge when a monad is
  /// attached, otherwise structurally.
  Term monadic(const Type& a);
  /// Closed f : a -> T b whose body is monadic in the bound variable.
  Term kleisli(const Type& a, const Type& b);
  /// Closed arguments for observing a function with domain `ty`. The first
  /// one is always dummy(ty).
  std::vector<Term> arguments(const Type& ty, std::size_t n);

  RuntimeSampler& runtime() { return runtime_; }
  std::mt19937_64& rng() { return runtime_.rng(); }
  Nat uniform(Nat lo, Nat hi) { return runtime_.uniform(lo, hi); }
  bool chance(int percent) { return uniform(0, 99) < static_cast<Nat>(percent); }
  const Signature& signature() const { return *sig_; }

 private:
  struct Slot {
    Term var;
    int uses;  // < 0 means unlimited
  };
  using Env = std::vector<Slot>;

  Term gen(const Type& ty, Env& env, int depth);
  Term gen_monadic(const Type& a, Env& env, int depth);
  std::optional<Term> from_env(const Type& ty, Env& env, int depth);
  Term small_nat(Env& env);
  Term with_binder(const Type& bound, const Type& ty, Env& env, int depth, const std::string& base,
                   std::string* name_out = nullptr);
  std::string fresh(const std::string& base);

  const Signature* sig_;
  RuntimeSampler runtime_;
  Options opts_;
  const SyntacticMonad* monad_;
  std::vector<PredicateRef> effect_preds_;
  std::size_t counter_ = 0;
};

struct ObsResult {
  bool equal = true;
  /// Empty when equal; otherwise the observation that told them apart.
  std::string witness;
};

struct ObsOptions {
  /// Arguments tried at the outermost arrow; halves at each nested arrow.
  std::size_t budget = 8;
  std::uint64_t fuel = kDefaultFuel;
};

/// Observational equality of closed terms of type `ty`: normal forms at
/// ground type, componentwise on products and sums, pointwise on sampled
/// arguments at arrow types.
ObsResult obs_equal(const Term& t1, const Term& t2, const Type& ty, TermSampler& sampler,
                    ObsOptions opts = {});

}  // namespace ireal
