#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ireal/monad.hpp"
#include "ireal/sampler.hpp"

namespace ireal {

struct LawResult {
  std::string law;  // "M1", "M2" or "M3"
  bool passed = true;
  std::size_t samples = 0;
  /// Seed of the first failing sample; rerunning that sample reproduces it.
  std::uint64_t failing_seed = 0;
  std::string counterexample;
};

struct LawReport {
  std::string monad;
  std::uint64_t seed = 0;
  std::vector<LawResult> laws;

  bool passed() const;
  /// Human-readable lines followed by one `law NAME pass|fail ...` line per law.
  std::string to_text() const;
};

struct LawOptions {
  /// Types A (and B) to instantiate the laws at; empty selects default_menu.
  std::vector<Type> menu;
  std::size_t samples_per_law = 200;
  std::uint64_t seed = 1;
  ObsOptions obs;
  TermSampler::Options sampler;
};

/// Nat, Unit, Nat * Unit, Nat -> T Nat.
std::vector<Type> default_menu(const SyntacticMonad& m);

/// Signature the law checker samples states and query/eval calls over:
/// the standard one plus P/1 true iff y <= 4 and Q/2 true iff x < y.
Signature law_universe();

/// Seed used for sample `index` of `law` under base seed `seed`.
std::uint64_t law_sample_seed(std::uint64_t seed, const std::string& law, std::size_t index);

/// Checks one sample of one law; empty string when it holds, otherwise the
/// counterexample.
std::string check_law_sample(const SyntacticMonad& m, const std::string& law, const Signature& sig,
                             const LawOptions& opts, std::size_t index);

LawReport check_monad_laws(const SyntacticMonad& m, const LawOptions& opts = {});
LawReport check_monad_laws(const SyntacticMonad& m, const Signature& sig, const LawOptions& opts);

}  // namespace ireal
