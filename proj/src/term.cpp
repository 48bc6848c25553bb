#include "ireal/term.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "ireal/formula.hpp"

namespace ireal {

bool operator==(const Constant& a, const Constant& b) {
  if (a.id != b.id || a.targs != b.targs || a.guard != b.guard) return false;
  if (a.pred == b.pred) return true;
  return a.pred && b.pred && a.pred->name == b.pred->name;
}

const char* constant_name(ConstId id) {
  switch (id) {
    case ConstId::Unit: return "unit";
    case ConstId::Pair: return "pair";
    case ConstId::ProjL: return "projl";
    case ConstId::ProjR: return "projr";
    case ConstId::InjL: return "inl";
    case ConstId::InjR: return "inr";
    case ConstId::Case: return "case";
    case ConstId::Zero: return "zero";
    case ConstId::Succ: return "succ";
    case ConstId::Rec: return "rec";
    case ConstId::ExMerge: return "exmerge";
    case ConstId::Query: return "query";
    case ConstId::Eval: return "eval";
  }
  return "?";
}

namespace {

std::size_t expected_targs(ConstId id) {
  switch (id) {
    case ConstId::Pair:
    case ConstId::ProjL:
    case ConstId::ProjR:
    case ConstId::InjL:
    case ConstId::InjR:
      return 2;
    case ConstId::Case:
      return 3;
    case ConstId::Rec:
      return 1;
    default:
      return 0;
  }
}

std::size_t param_count(const Constant& c) {
  if (!c.pred) throw TypeError(std::string(constant_name(c.id)) + " needs a predicate symbol");
  if (c.pred->arity == 0)
    throw ArityError("predicate " + c.pred->name + " has arity 0 and cannot be queried");
  return c.pred->arity - 1;
}

}  // namespace

Type constant_type(const Constant& c) {
  const auto& t = c.targs;
  switch (c.id) {
    case ConstId::Unit:
      return Type::unit();
    case ConstId::Pair:
      return Type::arrows({t[0], t[1]}, Type::product(t[0], t[1]));
    case ConstId::ProjL:
      return Type::arrow(Type::product(t[0], t[1]), t[0]);
    case ConstId::ProjR:
      return Type::arrow(Type::product(t[0], t[1]), t[1]);
    case ConstId::InjL:
      return Type::arrow(t[0], Type::sum(t[0], t[1]));
    case ConstId::InjR:
      return Type::arrow(t[1], Type::sum(t[0], t[1]));
    case ConstId::Case:
      return Type::arrows({Type::sum(t[0], t[1]), Type::arrow(t[0], t[2]), Type::arrow(t[1], t[2])},
                          t[2]);
    case ConstId::Zero:
      return Type::nat();
    case ConstId::Succ:
      return Type::arrow(Type::nat(), Type::nat());
    case ConstId::Rec: {
      Type step = Type::arrows({Type::nat(), Type::arrow(Type::nat(), t[0])}, t[0]);
      return Type::arrows({step, Type::nat()}, t[0]);
    }
    case ConstId::ExMerge:
      return Type::arrows({Type::ex(), Type::ex()}, Type::ex());
    case ConstId::Query: {
      std::vector<Type> doms{Type::state()};
      doms.insert(doms.end(), param_count(c), Type::nat());
      return Type::arrows(doms, Type::sum(Type::unit(), Type::nat()));
    }
    case ConstId::Eval: {
      std::vector<Type> doms(param_count(c) + 1, Type::nat());
      return Type::arrows(doms, Type::sum(Type::unit(), Type::ex()));
    }
  }
  return Type::unit();
}

std::size_t redex_arity(const Constant& c) {
  switch (c.id) {
    case ConstId::ProjL:
    case ConstId::ProjR:
      return 1;
    case ConstId::Case:
      return 3;
    case ConstId::Rec:
    case ConstId::ExMerge:
      return 2;
    case ConstId::Query:
    case ConstId::Eval:
      return param_count(c) + 1;
    default:
      return 0;
  }
}

// ---------------------------------------------------------------------------

bool Term::has_free(const std::string& x) const {
  return std::binary_search(node_->free.begin(), node_->free.end(), x);
}

Term Term::var(std::string name, Type type) {
  Node n{Kind::Var, std::move(name), std::move(type), {}, {}, {}, {}, {}, 1};
  n.free.push_back(n.name);
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::constant(Constant c) {
  if (c.targs.size() != expected_targs(c.id))
    throw TypeError(std::string("constant ") + constant_name(c.id) + " expects " +
                    std::to_string(expected_targs(c.id)) + " type arguments");
  if (c.id == ConstId::Query || c.id == ConstId::Eval) param_count(c);
  Node n{Kind::Const, {}, {}, std::move(c), {}, {}, {}, {}, 1};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::app(Term fun, Term arg) {
  Node n{Kind::App, {}, {}, {}, {}, {}, {}, {}, 1 + fun.size() + arg.size()};
  const auto& a = fun.free_vars();
  const auto& b = arg.free_vars();
  if (b.empty()) {
    n.free = a;
  } else if (a.empty()) {
    n.free = b;
  } else {
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(n.free));
  }
  n.children = {std::move(fun), std::move(arg)};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::app(Term fun, const std::vector<Term>& args) {
  for (const auto& a : args) fun = app(std::move(fun), a);
  return fun;
}

Term Term::abs(std::string name, Type type, Term body) {
  Node n{Kind::Abs, std::move(name), std::move(type), {}, {}, {}, {}, {}, 1 + body.size()};
  n.free = body.free_vars();
  auto it = std::lower_bound(n.free.begin(), n.free.end(), n.name);
  if (it != n.free.end() && *it == n.name) n.free.erase(it);
  n.children = {std::move(body)};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::state_lit(KnowledgeState s) {
  Node n{Kind::StateLit, {}, {}, {}, {}, std::move(s), {}, {}, 1};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::ex_lit(ExceptionValue e) {
  Node n{Kind::ExLit, {}, {}, {}, {}, {}, std::move(e), {}, 1};
  return Term(std::make_shared<const Node>(std::move(n)));
}

std::pair<Term, std::vector<Term>> spine(const Term& t) {
  std::vector<Term> args;
  const Term* cur = &t;
  while (cur->is(Term::Kind::App)) {
    args.push_back(cur->arg());
    cur = &cur->fun();
  }
  std::reverse(args.begin(), args.end());
  return {*cur, std::move(args)};
}

// ---------------------------------------------------------------------------

Term c_unit() {
  static const Term t = Term::constant({ConstId::Unit, {}, {}, nullptr});
  return t;
}
Term c_zero() {
  static const Term t = Term::constant({ConstId::Zero, {}, {}, nullptr});
  return t;
}
Term c_succ() {
  static const Term t = Term::constant({ConstId::Succ, {}, {}, nullptr});
  return t;
}
Term c_pair(Type a, Type b) { return Term::constant({ConstId::Pair, {std::move(a), std::move(b)}, {}, nullptr}); }
Term c_projl(Type a, Type b) { return Term::constant({ConstId::ProjL, {std::move(a), std::move(b)}, {}, nullptr}); }
Term c_projr(Type a, Type b) { return Term::constant({ConstId::ProjR, {std::move(a), std::move(b)}, {}, nullptr}); }
Term c_inl(Type a, Type b) { return Term::constant({ConstId::InjL, {std::move(a), std::move(b)}, {}, nullptr}); }
Term c_inr(Type a, Type b) { return Term::constant({ConstId::InjR, {std::move(a), std::move(b)}, {}, nullptr}); }
Term c_case(Type a, Type b, Type c) {
  return Term::constant({ConstId::Case, {std::move(a), std::move(b), std::move(c)}, {}, nullptr});
}
Term c_rec(std::optional<Nat> guard, Type c) {
  return Term::constant({ConstId::Rec, {std::move(c)}, guard, nullptr});
}
Term c_exmerge() {
  static const Term t = Term::constant({ConstId::ExMerge, {}, {}, nullptr});
  return t;
}
Term c_query(PredicateRef p) { return Term::constant({ConstId::Query, {}, {}, std::move(p)}); }
Term c_eval(PredicateRef p) { return Term::constant({ConstId::Eval, {}, {}, std::move(p)}); }

Term mk_numeral(Nat n) {
  Term t = c_zero();
  for (Nat i = 0; i < n; ++i) t = Term::app(c_succ(), std::move(t));
  return t;
}

Term mk_succ(Term t) { return Term::app(c_succ(), std::move(t)); }

Term mk_pair(Term a, Term b) {
  Type ta = infer_type(a);
  Type tb = infer_type(b);
  return Term::app(c_pair(std::move(ta), std::move(tb)), {std::move(a), std::move(b)});
}

namespace {

const Type& expect(const Type& t, Type::Kind k, const char* what) {
  if (!t.is(k)) throw TypeError(std::string(what) + ": unexpected type " + to_string(t));
  return t;
}

}  // namespace

Term mk_projl(Term p) {
  Type t = infer_type(p);
  expect(t, Type::Kind::Product, "projl");
  return Term::app(c_projl(t.left(), t.right()), std::move(p));
}

Term mk_projr(Term p) {
  Type t = infer_type(p);
  expect(t, Type::Kind::Product, "projr");
  return Term::app(c_projr(t.left(), t.right()), std::move(p));
}

Term mk_inl(Term a, Type right) {
  Type ta = infer_type(a);
  return Term::app(c_inl(std::move(ta), std::move(right)), std::move(a));
}

Term mk_inr(Type left, Term b) {
  Type tb = infer_type(b);
  return Term::app(c_inr(std::move(left), std::move(tb)), std::move(b));
}

Term mk_case(Term s, Term l, Term r) {
  Type ts = infer_type(s);
  expect(ts, Type::Kind::Sum, "case");
  Type tl = infer_type(l);
  expect(tl, Type::Kind::Arrow, "case branch");
  return Term::app(c_case(ts.left(), ts.right(), tl.cod()), {std::move(s), std::move(l), std::move(r)});
}

Term mk_rec(std::optional<Nat> guard, Term h, Term m) {
  Type th = infer_type(h);
  // h : Nat -> (Nat -> C) -> C
  expect(th, Type::Kind::Arrow, "rec step");
  expect(th.cod(), Type::Kind::Arrow, "rec step");
  return Term::app(c_rec(guard, th.cod().cod()), {std::move(h), std::move(m)});
}

Term mk_exmerge(Term e1, Term e2) { return Term::app(c_exmerge(), {std::move(e1), std::move(e2)}); }

Term mk_query(PredicateRef p, Term s, const std::vector<Term>& params) {
  Term t = Term::app(c_query(std::move(p)), std::move(s));
  return Term::app(std::move(t), params);
}

Term mk_eval(PredicateRef p, const std::vector<Term>& params, Term candidate) {
  Term t = Term::app(c_eval(std::move(p)), params);
  return Term::app(std::move(t), std::move(candidate));
}

std::optional<Nat> as_numeral(const Term& t) {
  Nat n = 0;
  const Term* cur = &t;
  while (cur->is(Term::Kind::App) && cur->fun().is_const(ConstId::Succ)) {
    ++n;
    cur = &cur->arg();
  }
  if (!cur->is_const(ConstId::Zero)) return std::nullopt;
  return n;
}

Term dummy(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Unit:
      return c_unit();
    case Type::Kind::Nat:
      return c_zero();
    case Type::Kind::Base:
      if (t.name() == "State") return Term::state_lit(KnowledgeState{});
      if (t.name() == "Ex") return Term::ex_lit(ExceptionValue{});
      throw TypeError("base type " + t.name() + " has no canonical inhabitant");
    case Type::Kind::Arrow:
      return Term::abs("_", t.dom(), dummy(t.cod()));
    case Type::Kind::Product:
      return Term::app(c_pair(t.left(), t.right()), {dummy(t.left()), dummy(t.right())});
    case Type::Kind::Sum:
      return Term::app(c_inl(t.left(), t.right()), dummy(t.left()));
  }
  throw TypeError("dummy: unknown type");
}

// ---------------------------------------------------------------------------

namespace {

using Scope = std::vector<std::pair<std::string, Type>>;

Type check(const TypeContext* ctx, Scope& scope, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      const Type* bound = nullptr;
      for (auto it = scope.rbegin(); it != scope.rend(); ++it)
        if (it->first == t.name()) {
          bound = &it->second;
          break;
        }
      if (!bound && ctx) {
        auto it = ctx->find(t.name());
        if (it == ctx->end()) throw UnboundVariable("unbound variable " + t.name());
        bound = &it->second;
      }
      if (bound && *bound != t.type())
        throw TypeError("variable " + t.name() + " annotated " + to_string(t.type()) +
                        " but bound at " + to_string(*bound));
      return t.type();
    }
    case Term::Kind::Const:
      return constant_type(t.constant());
    case Term::Kind::App: {
      Type f = check(ctx, scope, t.fun());
      Type a = check(ctx, scope, t.arg());
      if (!f.is(Type::Kind::Arrow))
        throw TypeError("cannot apply a term of type " + to_string(f) + " in " + to_string(t));
      if (f.dom() != a)
        throw TypeError("argument of type " + to_string(a) + " where " + to_string(f.dom()) +
                        " is expected in " + to_string(t));
      return f.cod();
    }
    case Term::Kind::Abs: {
      scope.emplace_back(t.name(), t.type());
      Type b = check(ctx, scope, t.body());
      scope.pop_back();
      return Type::arrow(t.type(), std::move(b));
    }
    case Term::Kind::StateLit:
      return Type::state();
    case Term::Kind::ExLit:
      return Type::ex();
  }
  throw TypeError("unknown term");
}

}  // namespace

Type type_of(const TypeContext& ctx, const Term& t) {
  Scope scope;
  return check(&ctx, scope, t);
}

Type type_of(const Term& t) { return type_of(TypeContext{}, t); }

Type infer_type(const Term& t) {
  Scope scope;
  return check(nullptr, scope, t);
}

// ---------------------------------------------------------------------------

Term subst(const Term& t, const std::string& x, const Term& s) {
  if (!t.has_free(x)) return t;
  switch (t.kind()) {
    case Term::Kind::Var:
      return s;
    case Term::Kind::App:
      return Term::app(subst(t.fun(), x, s), subst(t.arg(), x, s));
    case Term::Kind::Abs: {
      if (!s.has_free(t.name())) return Term::abs(t.name(), t.type(), subst(t.body(), x, s));
      std::set<std::string> avoid(s.free_vars().begin(), s.free_vars().end());
      avoid.insert(t.body().free_vars().begin(), t.body().free_vars().end());
      avoid.insert(x);
      std::string fresh = fresh_name(t.name(), avoid);
      Term body = subst(t.body(), t.name(), Term::var(fresh, t.type()));
      return Term::abs(fresh, t.type(), subst(body, x, s));
    }
    default:
      return t;
  }
}

namespace {

void check_occurrences(const Term& t, const std::string& x, const Type& ty) {
  if (!t.has_free(x)) return;
  switch (t.kind()) {
    case Term::Kind::Var:
      if (t.type() != ty)
        throw TypeError("substituting a term of type " + to_string(ty) + " for " + x + " : " +
                        to_string(t.type()));
      return;
    case Term::Kind::App:
      check_occurrences(t.fun(), x, ty);
      check_occurrences(t.arg(), x, ty);
      return;
    case Term::Kind::Abs:
      check_occurrences(t.body(), x, ty);
      return;
    default:
      return;
  }
}

}  // namespace

Term substitute(const Term& t, const std::string& x, const Term& s) {
  check_occurrences(t, x, infer_type(s));
  return subst(t, x, s);
}

namespace {

using Binders = std::vector<std::pair<std::string, std::string>>;

bool alpha_rec(const Term& a, const Term& b, Binders& env) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var: {
      if (a.type() != b.type()) return false;
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        bool la = it->first == a.name();
        bool lb = it->second == b.name();
        if (la || lb) return la && lb;
      }
      return a.name() == b.name();
    }
    case Term::Kind::Const:
      return a.constant() == b.constant();
    case Term::Kind::App:
      return alpha_rec(a.fun(), b.fun(), env) && alpha_rec(a.arg(), b.arg(), env);
    case Term::Kind::Abs: {
      if (a.type() != b.type()) return false;
      env.emplace_back(a.name(), b.name());
      bool ok = alpha_rec(a.body(), b.body(), env);
      env.pop_back();
      return ok;
    }
    case Term::Kind::StateLit:
      return a.state() == b.state();
    case Term::Kind::ExLit:
      return a.exception() == b.exception();
  }
  return false;
}

}  // namespace

bool alpha_eq(const Term& a, const Term& b) {
  if (a.same_node(b)) return true;
  Binders env;
  return alpha_rec(a, b, env);
}

}  // namespace ireal
