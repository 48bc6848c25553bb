#pragma once

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ireal/common.hpp"
#include "ireal/formula.hpp"

namespace ireal {

/// A predicate symbol together with its decidable interpretation.
struct Predicate {
  std::string name;
  std::size_t arity = 0;
  std::function<bool(std::span<const Nat>)> holds;

  bool operator()(std::span<const Nat> args) const;
};

using PredicateRef = std::shared_ptr<const Predicate>;

struct FunctionSymbol {
  std::string name;
  std::size_t arity = 0;
  std::function<Nat(std::span<const Nat>)> apply;
};

/// Atomic inference rule schema: premises and conclusion are atomic formulas
/// whose variables are implicitly universally quantified.
struct AtomicRule {
  std::string name;
  std::vector<Formula> premises;
  Formula conclusion;
};

/// Predicates, function symbols, atomic rules and base types of a theory.
class Signature {
 public:
  /// Contains only the base types State and Ex.
  Signature();

  /// LT, LE, EQ with their usual meaning plus a few atomic rules over them.
  static Signature standard();

  void add_predicate(std::string name, std::size_t arity,
                     std::function<bool(std::span<const Nat>)> holds);
  void add_function(std::string name, std::size_t arity,
                    std::function<Nat(std::span<const Nat>)> apply);
  /// Adds a rule after checking it is sound on every instance with
  /// arguments up to `soundness_bound`. Throws Error otherwise.
  void add_rule(AtomicRule rule, Nat soundness_bound = 50);
  void add_base_type(std::string name);
  void set_order_predicate(std::string name);

  bool has_predicate(const std::string& name) const { return predicates_.count(name) > 0; }
  PredicateRef predicate(const std::string& name) const;
  bool has_function(const std::string& name) const { return functions_.count(name) > 0; }
  const FunctionSymbol& function(const std::string& name) const;
  const AtomicRule& rule(const std::string& name) const;
  bool has_rule(const std::string& name) const { return rules_.count(name) > 0; }

  const std::map<std::string, PredicateRef>& predicates() const { return predicates_; }
  const std::map<std::string, AtomicRule>& rules() const { return rules_; }
  const std::set<std::string>& base_types() const { return base_types_; }
  /// Binary predicate used for the hypothesis of complete induction.
  const std::string& order_predicate() const { return order_; }

  /// Checks predicate names and arities in `a`. Throws ArityError or Error.
  void check_formula(const Formula& a) const;

 private:
  std::map<std::string, PredicateRef> predicates_;
  std::map<std::string, FunctionSymbol> functions_;
  std::map<std::string, AtomicRule> rules_;
  std::set<std::string> base_types_;
  std::string order_ = "LT";
};

/// Value of an arithmetic term under `env`. Throws UnboundVariable.
Nat eval_arith(const ArithTerm& t, const std::map<std::string, Nat>& env, const Signature& sig);
Nat eval_arith(const ArithTerm& t, const Signature& sig);

/// Truth of a closed atomic formula; False is never true.
bool atomic_truth(const Formula& a, const Signature& sig);

/// Whether the rule is sound on all instances with arguments in 0..bound.
/// On failure `counterexample` (if given) receives a description.
bool rule_sound(const AtomicRule& rule, const Signature& sig, Nat bound,
                std::string* counterexample = nullptr);

/// Instantiates the variables of `schema` so that it equals `target`
/// (numerals are compared by value). Extends `binding`; false on mismatch.
bool match_schema(const Formula& schema, const Formula& target, const Signature& sig,
                  std::map<std::string, ArithTerm>& binding);

}  // namespace ireal
