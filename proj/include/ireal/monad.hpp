#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ireal/term.hpp"

namespace ireal {

/// A type constructor T with closed terms
///   unit[A]    : A -> T A
///   star[A,B]  : (A -> T B) -> T A -> T B
///   merge[A,B] : T A -> T B -> T (A * B)
struct SyntacticMonad {
  std::string name;
  std::function<Type(const Type&)> T;
  std::function<Term(const Type&)> unit_at;
  std::function<Term(const Type&, const Type&)> star_at;
  std::function<Term(const Type&, const Type&)> merge_at;
  /// Whether T A is State -> (A + Ex); the EM realizer needs exactly this.
  bool interactive = false;
};

/// T A = A, unit = lam x. x, star = lam f. f, merge = pair.
SyntacticMonad identity_monad();
/// T A = A + Ex.
SyntacticMonad exception_monad();
/// T A = State -> (A + Ex).
SyntacticMonad ir_monad();
/// "identity", "exception" or "ir". Throws Error otherwise.
SyntacticMonad monad_by_name(const std::string& name);

/// star_k : (A1 -> ... -> Ak -> T B) -> T A1 -> ... -> T Ak -> T B.
Term star_n(const SyntacticMonad& m, const std::vector<Type>& args, const Type& result);
/// raise_k : (A1 -> ... -> Ak -> B) -> T A1 -> ... -> T Ak -> T B.
Term raise_n(const SyntacticMonad& m, const std::vector<Type>& args, const Type& result);
/// bind : T A -> (A -> T B) -> T B, defined from star.
Term bind_of(const SyntacticMonad& m, const Type& a, const Type& b);

/// Deliberately broken monads, each violating at least one law.
std::vector<SyntacticMonad> mutant_monads();

}  // namespace ireal
