#pragma once

#include <string>
#include <vector>

#include "ireal/derivation.hpp"
#include "ireal/monad.hpp"
#include "ireal/term.hpp"

namespace ireal {

/// Raised when a derivation cannot be decorated: it is ill-formed, uses EM
/// under a monad other than ir, or instantiates a quantifier with an open
/// term built from function symbols.
class ExtractionError : public Error {
 public:
  using Error::Error;
};

/// Gamma |- r : A with r of type MM(A).
struct DecoratedSequent {
  Context context;
  Term realizer;
  Formula conclusion;
};

/// M(A): Unit for atomic formulas, products for /\ and exists, sums for \/,
/// and arrows into T for -> and forall.
Type inner_type(const SyntacticMonad& m, const Formula& a);
/// MM(A) = T(M(A)).
Type monadic_type(const SyntacticMonad& m, const Formula& a);

/// Typing context of a decorated sequent: each label at M(A_i) and each free
/// arithmetic variable at Nat.
TypeContext realizer_context(const SyntacticMonad& m, const Context& ctx, const Formula& conclusion);

/// The T' numeral term for an arithmetic term. Variables become Nat
/// variables; closed subterms headed by a function symbol are evaluated.
Term arith_to_term(const ArithTerm& t, const Signature& sig);

/// Realizer of EM(P, t1..tk) in the ir monad. Throws ArityError.
Term em_realizer(const Signature& sig, const std::string& predicate,
                 const std::vector<ArithTerm>& params);

/// Decorates `d`. The result is type-checked against MM(conclusion) before
/// it is returned.
DecoratedSequent extract(const SyntacticMonad& m, const Derivation& d, const Signature& sig);

}  // namespace ireal
