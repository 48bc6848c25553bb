#pragma once

// Concrete S-expression syntax for every value the tools read or write.
//
// Types     Unit | Nat | State | Ex | NAME | (-> A B ...) | (* A B) | (+ A B)
// Terms     x | unit | zero | N | (num N) | (lam (x A) ... body) | (app f a ...)
//           (succ t) | (pair a b) | (projl p) | (projr p) | (inl a B) | (inr A b)
//           (case s l r) | (rec inf|N h m) | (exmerge e1 e2)
//           (query P s n ...) | (eval P n ... m)
//           (const unit|zero|succ|exmerge) | (const pair|projl|projr|inl|inr A B)
//           (const case A B C) | (const rec inf|N C) | (const query|eval P)
//           (state (P (n ...) m) ...) | (ex (P (n ...) m) ...)
//           (f a ...) for any other head is application.
// Arith     N | x | (succ t) | (f t ...)
// Formulas  false | P | (P t ...) | (and A B) | (or A B) | (imp A B) | (not A)
//           (forall x A) | (exists x A)
//
// Signature and derivation files are documented in the README.

#include <string>
#include <string_view>

#include "ireal/derivation.hpp"
#include "ireal/runtime.hpp"
#include "ireal/sexpr.hpp"
#include "ireal/signature.hpp"
#include "ireal/term.hpp"
#include "ireal/type.hpp"

namespace ireal {

Type parse_type(const SExpr& e, const Signature& sig);
Type parse_type(std::string_view text, const Signature& sig);

/// Free variables of the term may be typed through `free`.
Term parse_term(const SExpr& e, const Signature& sig, const TypeContext& free = {});
Term parse_term(std::string_view text, const Signature& sig, const TypeContext& free = {});

ArithTerm parse_arith(const SExpr& e, const Signature& sig);
Formula parse_formula(const SExpr& e, const Signature& sig);
Formula parse_formula(std::string_view text, const Signature& sig);

KnowledgeState parse_state(const SExpr& e, const Signature& sig);
KnowledgeState parse_state(std::string_view text, const Signature& sig);
ExceptionValue parse_exception(const SExpr& e, const Signature& sig);

Signature parse_signature(const SExpr& e);
Signature parse_signature(std::string_view text);

Derivation parse_derivation(const SExpr& e, const Signature& sig);
Derivation parse_derivation(std::string_view text, const Signature& sig);

std::string to_string(const ArithTerm& t);
std::string to_string(const Formula& f);
std::string to_string(const KnowledgeState& s);
std::string to_string(const ExceptionValue& e);
std::string to_string(const Context& ctx);

/// Whole file contents. Throws Error if the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace ireal
