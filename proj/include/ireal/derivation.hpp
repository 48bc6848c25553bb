#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ireal/formula.hpp"
#include "ireal/signature.hpp"

namespace ireal {

enum class Rule : std::uint8_t {
  Id,
  Atm,
  AndI,
  AndEL,
  AndER,
  OrIL,
  OrIR,
  OrE,
  ImpI,
  ImpE,
  ForallI,
  ForallE,
  ExistsI,
  ExistsE,
  Ind,
  EM
};

const char* rule_name(Rule r);

struct Assumption {
  std::string label;
  Formula formula;
};

using Context = std::vector<Assumption>;

struct Sequent {
  Context context;
  Formula conclusion;
};

/// Natural-deduction proof tree. Every node records its full sequent.
///
/// Payload by rule:
///   Id       label: the assumption used
///   Atm      atomic_rule: the rule name
///   OrE      label, label2: assumptions discharged in the left/right branch
///   ImpI     label
///   ForallI  var: the eigenvariable, equal to the quantified variable
///   ForallE  term: the instance
///   ExistsI  term: the witness
///   ExistsE  var: the eigenvariable, label: the assumption on it
///   Ind      var: y, var2: z, label: the induction hypothesis
///   EM       predicate, terms: the parameters of the instance
struct Derivation {
  Rule rule = Rule::Id;
  Sequent sequent;
  std::vector<Derivation> premises;

  std::string label;
  std::string label2;
  std::string var;
  std::string var2;
  std::optional<ArithTerm> term;
  std::string atomic_rule;
  std::string predicate;
  std::vector<ArithTerm> terms;

  const Formula& conclusion() const { return sequent.conclusion; }
  const Context& context() const { return sequent.context; }
};

/// The hypothesis forall z (z < y -> A[x := z]) of complete induction.
Formula induction_hypothesis(const Formula& forall_a, const std::string& y, const std::string& z,
                             const Signature& sig);

/// Free arithmetic variables of the sequent (context and conclusion).
std::set<std::string> free_vars(const Sequent& s);

/// Builders. Each computes the conclusion from the premises and the payload
/// and throws Error on shapes that determine no conclusion. They do not
/// perform the full side-condition checks of check_derivation.
namespace build {

Derivation id(const Context& ctx, const std::string& label);
Derivation atm(const Context& ctx, const std::string& rule, Formula conclusion,
               std::vector<Derivation> premises);
Derivation and_i(Derivation a, Derivation b);
Derivation and_el(Derivation p);
Derivation and_er(Derivation p);
Derivation or_il(Derivation p, Formula right);
Derivation or_ir(Formula left, Derivation p);
Derivation or_e(Derivation major, std::string left_label, Derivation left, std::string right_label,
                Derivation right);
/// `body` must have been derived in a context ending with (label : antecedent).
Derivation imp_i(std::string label, Formula antecedent, Derivation body);
Derivation imp_e(Derivation major, Derivation minor);
Derivation forall_i(std::string var, Derivation body);
Derivation forall_e(Derivation p, ArithTerm t);
Derivation exists_i(Formula exists_formula, ArithTerm witness, Derivation p);
Derivation exists_e(Derivation major, std::string y, std::string label, Derivation body);
Derivation ind(const Context& ctx, Formula forall_a, std::string y, std::string z,
               std::string label, Derivation step);
Derivation em(const Context& ctx, std::string predicate, std::vector<ArithTerm> params);

}  // namespace build

struct Diagnostic {
  std::string path;  // e.g. "0.1": premise indices from the root
  Rule rule;
  std::string message;
};

/// Checks every node of `d` against the rule shapes, the context discipline
/// and the eigenvariable conditions. Empty result means well-formed.
std::vector<Diagnostic> check_derivation(const Derivation& d, const Signature& sig);

std::string to_string(const Diagnostic& d);

}  // namespace ireal
