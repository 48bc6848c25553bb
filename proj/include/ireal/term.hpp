#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ireal/runtime.hpp"
#include "ireal/signature.hpp"
#include "ireal/type.hpp"

namespace ireal {

enum class ConstId : std::uint8_t {
  Unit,
  Pair,
  ProjL,
  ProjR,
  InjL,
  InjR,
  Case,
  Zero,
  Succ,
  Rec,
  ExMerge,
  Query,
  Eval
};

/// A term constant with its type instantiation.
///
///   pair[A,B] projl[A,B] projr[A,B] inl[A,B] inr[A,B]   targs = {A, B}
///   case[A,B,C]                                          targs = {A, B, C}
///   rec_n[C]                                             targs = {C}, guard n (nullopt = infinity)
///   query_P, eval_P                                      pred = P
struct Constant {
  ConstId id = ConstId::Unit;
  std::vector<Type> targs;
  std::optional<Nat> guard;
  PredicateRef pred;

  friend bool operator==(const Constant& a, const Constant& b);
};

Type constant_type(const Constant& c);
/// Number of arguments the reduction rule of `c` consumes (0 if none).
std::size_t redex_arity(const Constant& c);
const char* constant_name(ConstId id);

class Term {
 public:
  enum class Kind : std::uint8_t { Var, Const, App, Abs, StateLit, ExLit };

  static Term var(std::string name, Type type);
  static Term constant(Constant c);
  static Term app(Term fun, Term arg);
  static Term app(Term fun, const std::vector<Term>& args);
  static Term abs(std::string name, Type type, Term body);
  static Term state_lit(KnowledgeState s);
  static Term ex_lit(ExceptionValue e);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  /// Var name or Abs binder name.
  const std::string& name() const { return node_->name; }
  /// Var type or Abs binder type.
  const Type& type() const { return *node_->type; }
  const Constant& constant() const { return *node_->constant; }
  bool is_const(ConstId id) const { return is(Kind::Const) && node_->constant->id == id; }
  const Term& fun() const { return node_->children[0]; }
  const Term& arg() const { return node_->children[1]; }
  const Term& body() const { return node_->children[0]; }
  const KnowledgeState& state() const { return *node_->state; }
  const ExceptionValue& exception() const { return *node_->exception; }

  /// Sorted names of the free variables.
  const std::vector<std::string>& free_vars() const { return node_->free; }
  bool has_free(const std::string& x) const;
  bool closed() const { return node_->free.empty(); }
  std::size_t size() const { return node_->size; }
  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::optional<Type> type;
    std::optional<Constant> constant;
    std::vector<Term> children;
    std::optional<KnowledgeState> state;
    std::optional<ExceptionValue> exception;
    std::vector<std::string> free;
    std::size_t size = 1;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Head and argument list of an application spine.
std::pair<Term, std::vector<Term>> spine(const Term& t);

// Constants as bare terms.
Term c_unit();
Term c_zero();
Term c_succ();
Term c_pair(Type a, Type b);
Term c_projl(Type a, Type b);
Term c_projr(Type a, Type b);
Term c_inl(Type a, Type b);
Term c_inr(Type a, Type b);
Term c_case(Type a, Type b, Type c);
Term c_rec(std::optional<Nat> guard, Type c);
Term c_exmerge();
Term c_query(PredicateRef p);
Term c_eval(PredicateRef p);

// Applied constructors; type instantiations are inferred from the arguments.
Term mk_numeral(Nat n);
Term mk_succ(Term t);
Term mk_pair(Term a, Term b);
Term mk_projl(Term p);
Term mk_projr(Term p);
Term mk_inl(Term a, Type right);
Term mk_inr(Type left, Term b);
Term mk_case(Term s, Term l, Term r);
Term mk_rec(std::optional<Nat> guard, Term h, Term m);
Term mk_exmerge(Term e1, Term e2);
Term mk_query(PredicateRef p, Term s, const std::vector<Term>& params);
Term mk_eval(PredicateRef p, const std::vector<Term>& params, Term candidate);

std::optional<Nat> as_numeral(const Term& t);

/// Canonical closed inhabitant. State and Ex are inhabited by empty literals;
/// other base types are not. Throws TypeError.
Term dummy(const Type& t);

using TypeContext = std::map<std::string, Type>;

/// Type of `t` in `ctx`. Every free variable must be bound in `ctx` with the
/// type it is annotated with. Throws TypeError, UnboundVariable.
Type type_of(const TypeContext& ctx, const Term& t);
Type type_of(const Term& t);
/// Type of a possibly open term, trusting the annotations on free variables.
Type infer_type(const Term& t);

/// Capture-avoiding t[x := s]. Throws TypeError if a free occurrence of x
/// has a type different from the type of s.
Term substitute(const Term& t, const std::string& x, const Term& s);
/// Same without the type check.
Term subst(const Term& t, const std::string& x, const Term& s);

bool alpha_eq(const Term& a, const Term& b);

/// S-expression rendering, see syntax.hpp for the grammar.
std::string to_string(const Term& t);

}  // namespace ireal
