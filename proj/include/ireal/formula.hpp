#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ireal/common.hpp"

namespace ireal {

/// First-order arithmetic term: variables, zero, successor and configured
/// function symbols.
class ArithTerm {
 public:
  enum class Kind : std::uint8_t { Var, Zero, Succ, Fn };

  /// Zero.
  ArithTerm();

  static ArithTerm var(std::string name);
  static ArithTerm zero();
  static ArithTerm succ(ArithTerm t);
  static ArithTerm numeral(Nat n);
  static ArithTerm fn(std::string name, std::vector<ArithTerm> args);

  Kind kind() const;
  /// Variable or function-symbol name.
  const std::string& name() const;
  /// Successor argument.
  const ArithTerm& pred() const;
  const std::vector<ArithTerm>& args() const;

  /// Value of `succ^n zero`, or nullopt when the term is not a numeral.
  std::optional<Nat> as_numeral() const;
  std::set<std::string> free_vars() const;
  bool closed() const { return free_vars().empty(); }

  friend bool operator==(const ArithTerm& a, const ArithTerm& b);
  friend bool operator<(const ArithTerm& a, const ArithTerm& b);

 private:
  struct Node;
  explicit ArithTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

ArithTerm subst_arith(const ArithTerm& t, const std::string& x, const ArithTerm& s);

/// Formulas of arithmetic. `Not(A)` is notation for `A -> False`.
class Formula {
 public:
  enum class Kind : std::uint8_t { Atomic, False, And, Or, Implies, Forall, Exists };

  /// False.
  Formula();

  static Formula atomic(std::string predicate, std::vector<ArithTerm> args);
  static Formula falsum();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula negation(Formula a) { return implies(std::move(a), falsum()); }
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  Kind kind() const;
  bool is_atomic() const { return kind() == Kind::Atomic || kind() == Kind::False; }
  bool is_quantifier() const { return kind() == Kind::Forall || kind() == Kind::Exists; }

  const std::string& predicate() const;
  const std::vector<ArithTerm>& args() const;
  const Formula& left() const;
  const Formula& right() const;
  const std::string& var() const;
  const Formula& body() const;

  std::set<std::string> free_vars() const;
  bool closed() const { return free_vars().empty(); }
  /// Number of nested quantifiers along the deepest path.
  std::size_t quantifier_depth() const;
  /// Connective/quantifier nesting depth; atomic formulas have depth 0.
  std::size_t depth() const;

  /// Structural equality, bound variable names included.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Capture-avoiding substitution A[x := t].
Formula subst_formula(const Formula& a, const std::string& x, const ArithTerm& t);

/// Equality up to renaming of bound variables.
bool alpha_eq(const Formula& a, const Formula& b);

/// Fresh variable name based on `base` that avoids every name in `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

/// The excluded-middle instance (forall y. P(t..., y)) \/ (exists y. ~P(t..., y)).
/// `bound` names the quantified variable; it is renamed if it clashes with a
/// variable of `params`.
Formula em_formula(const std::string& predicate, const std::vector<ArithTerm>& params,
                   const std::string& bound = "y");

}  // namespace ireal
