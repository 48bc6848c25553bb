#pragma once

#include <compare>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ireal/common.hpp"
#include "ireal/signature.hpp"

namespace ireal {

/// (P, params): the existential statement "exists x. P(params, x)" whose
/// witness a state may record.
struct WitnessKey {
  std::string predicate;
  std::vector<Nat> params;

  auto operator<=>(const WitnessKey&) const = default;
};

using WitnessMap = std::map<WitnessKey, Nat>;

/// The witness condition for (P, params, m): the universal-disjunct instance
/// P(params, m) is false, i.e. m refutes "forall y. P(params, y)".
bool witness_condition(const Predicate& p, const std::vector<Nat>& params, Nat m);
bool witness_condition(const Signature& sig, const WitnessKey& key, Nat m);

/// Finite map of stored witnesses.
class KnowledgeState {
 public:
  KnowledgeState() = default;
  /// Validates every entry against `sig`; throws InvariantViolation.
  KnowledgeState(WitnessMap entries, const Signature& sig);

  /// No validation. For values built from already-validated parts.
  static KnowledgeState trusted(WitnessMap entries);

  const WitnessMap& entries() const { return entries_; }
  std::optional<Nat> find(const WitnessKey& key) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool sound(const Signature& sig) const;

  friend bool operator==(const KnowledgeState&, const KnowledgeState&) = default;
  friend auto operator<=>(const KnowledgeState&, const KnowledgeState&) = default;

 private:
  WitnessMap entries_;
};

/// Finite record of discovered witnesses. The empty record only arises as the
/// dummy inhabitant of Ex; everything produced by eval is nonempty.
class ExceptionValue {
 public:
  ExceptionValue() = default;
  ExceptionValue(WitnessMap claims, const Signature& sig);
  static ExceptionValue trusted(WitnessMap claims);

  const WitnessMap& claims() const { return claims_; }
  std::size_t size() const { return claims_.size(); }
  bool empty() const { return claims_.empty(); }
  bool sound(const Signature& sig) const;

  friend bool operator==(const ExceptionValue&, const ExceptionValue&) = default;
  friend auto operator<=>(const ExceptionValue&, const ExceptionValue&) = default;

 private:
  WitnessMap claims_;
};

bool state_leq(const KnowledgeState& s1, const KnowledgeState& s2);

/// e(s): union of s and the claims of e, absent when a claim conflicts with
/// a witness already stored in s.
std::optional<KnowledgeState> apply_exception(const ExceptionValue& e, const KnowledgeState& s);

/// e(s) is defined and strictly larger than s.
bool properly_extends(const ExceptionValue& e, const KnowledgeState& s);

enum class MergeStrategy { Leftmost, Minimum };

/// Union of claims; on a key conflict keeps the left (or the smaller) witness.
ExceptionValue merge_exceptions(const ExceptionValue& e1, const ExceptionValue& e2,
                                MergeStrategy strategy = MergeStrategy::Leftmost);

/// Stored witness for (P, params), if any.
std::optional<Nat> query(const Predicate& p, const KnowledgeState& s, const std::vector<Nat>& params);

/// nullopt when P(params, candidate) holds, otherwise the exception
/// {(P, params) -> candidate}.
std::optional<ExceptionValue> eval_pred(const Predicate& p, const std::vector<Nat>& params,
                                        Nat candidate);

/// Seeded generator of sound states and exceptions.
class RuntimeSampler {
 public:
  struct Limits {
    std::size_t max_entries = 4;
    Nat max_param = 6;
    Nat max_witness = 12;
  };

  RuntimeSampler(const Signature& sig, std::uint64_t seed);
  RuntimeSampler(const Signature& sig, std::uint64_t seed, Limits limits);

  KnowledgeState state();
  /// A nonempty sound exception, not necessarily compatible with any state.
  std::optional<ExceptionValue> exception();
  /// A sound exception that properly extends `s`, if one can be found.
  std::optional<ExceptionValue> exception_extending(const KnowledgeState& s);
  /// Sound claim for a random key of a predicate with arity >= 1.
  std::optional<std::pair<WitnessKey, Nat>> claim();

  std::mt19937_64& rng() { return rng_; }
  Nat uniform(Nat lo, Nat hi);

 private:
  const Signature* sig_;
  std::mt19937_64 rng_;
  Limits limits_;
  std::vector<PredicateRef> preds_;
};

}  // namespace ireal
