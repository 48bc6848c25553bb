#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ireal/checker.hpp"
#include "ireal/runtime.hpp"
#include "ireal/term.hpp"

namespace ireal {

enum class StepKind { Regular, Exceptional, Conflict };

/// One application of the learning function to a state.
struct LearnStep {
  KnowledgeState before;
  StepKind kind = StepKind::Regular;
  /// Regular value, when kind is Regular.
  std::optional<Term> value;
  /// Thrown exception, when kind is Exceptional or Conflict.
  std::optional<ExceptionValue> exception;
  KnowledgeState after;
};

enum class Terminal { FixedPoint, BudgetExhausted, Conflict };

const char* terminal_name(Terminal t);

struct LearnTrace {
  std::uint64_t seed = 0;
  std::vector<LearnStep> steps;
  Terminal terminal = Terminal::BudgetExhausted;

  /// The regular value of the last step, on a fixed point.
  std::optional<Term> result() const;
  const KnowledgeState& final_state() const;
};

/// Evaluates r at s. A regular value leaves s unchanged; an exception is
/// applied to s. An exception that does not properly extend s (conflicting or
/// already known) yields a Conflict step with `after` equal to s.
/// Throws TypeError unless r has type State -> (A + Ex).
LearnStep learn_step(const Term& r, const KnowledgeState& s, std::uint64_t fuel = kDefaultFuel);

/// Iterates learn_step from s0 until a regular value, a conflict, or
/// `max_iters` steps.
LearnTrace learn(const Term& r, const KnowledgeState& s0, std::size_t max_iters = 1000,
                 std::uint64_t fuel = kDefaultFuel, std::uint64_t seed = 0);

/// One S-expression per line: a (trace (seed N)) header, one (step ...) per
/// step, then (terminal NAME).
std::string to_text(const LearnTrace& t);
LearnTrace parse_trace(std::string_view text, const Signature& sig);

/// Readable account of what the inner realizer t of A provides: numerals for
/// existentials, the branch for disjunctions. Throws Error unless the checker
/// accepts t as an inner realizer of A at s.
std::string extract_witness(const Term& t, const Formula& a, const RealizabilityChecker& checker,
                            const KnowledgeState& s = {});

}  // namespace ireal
