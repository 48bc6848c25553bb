#include "ireal/formula.hpp"

#include <algorithm>
#include <utility>

namespace ireal {

struct ArithTerm::Node {
  Kind kind;
  std::string name;
  std::vector<ArithTerm> args;  // Succ stores its argument here
};

ArithTerm::ArithTerm() : node_(zero().node_) {}

ArithTerm ArithTerm::var(std::string name) {
  return ArithTerm(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}}));
}

ArithTerm ArithTerm::zero() {
  static const ArithTerm z(std::make_shared<const Node>(Node{Kind::Zero, {}, {}}));
  return z;
}

ArithTerm ArithTerm::succ(ArithTerm t) {
  return ArithTerm(std::make_shared<const Node>(Node{Kind::Succ, {}, {std::move(t)}}));
}

ArithTerm ArithTerm::numeral(Nat n) {
  ArithTerm t = zero();
  for (Nat i = 0; i < n; ++i) t = succ(std::move(t));
  return t;
}

ArithTerm ArithTerm::fn(std::string name, std::vector<ArithTerm> args) {
  return ArithTerm(std::make_shared<const Node>(Node{Kind::Fn, std::move(name), std::move(args)}));
}

ArithTerm::Kind ArithTerm::kind() const { return node_->kind; }
const std::string& ArithTerm::name() const { return node_->name; }
const ArithTerm& ArithTerm::pred() const { return node_->args.at(0); }
const std::vector<ArithTerm>& ArithTerm::args() const { return node_->args; }

std::optional<Nat> ArithTerm::as_numeral() const {
  Nat n = 0;
  const Node* cur = node_.get();
  while (cur->kind == Kind::Succ) {
    ++n;
    cur = cur->args[0].node_.get();
  }
  if (cur->kind != Kind::Zero) return std::nullopt;
  return n;
}

namespace {

void collect_vars(const ArithTerm& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case ArithTerm::Kind::Var:
      out.insert(t.name());
      break;
    case ArithTerm::Kind::Zero:
      break;
    case ArithTerm::Kind::Succ:
      collect_vars(t.pred(), out);
      break;
    case ArithTerm::Kind::Fn:
      for (const auto& a : t.args()) collect_vars(a, out);
      break;
  }
}

int compare(const ArithTerm& a, const ArithTerm& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case ArithTerm::Kind::Var:
      return a.name().compare(b.name());
    case ArithTerm::Kind::Zero:
      return 0;
    case ArithTerm::Kind::Succ:
      return compare(a.pred(), b.pred());
    case ArithTerm::Kind::Fn: {
      if (int c = a.name().compare(b.name())) return c;
      if (a.args().size() != b.args().size()) return a.args().size() < b.args().size() ? -1 : 1;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (int c = compare(a.args()[i], b.args()[i])) return c;
      return 0;
    }
  }
  return 0;
}

}  // namespace

std::set<std::string> ArithTerm::free_vars() const {
  std::set<std::string> out;
  collect_vars(*this, out);
  return out;
}

bool operator==(const ArithTerm& a, const ArithTerm& b) {
  return a.node_ == b.node_ || compare(a, b) == 0;
}

bool operator<(const ArithTerm& a, const ArithTerm& b) { return compare(a, b) < 0; }

ArithTerm subst_arith(const ArithTerm& t, const std::string& x, const ArithTerm& s) {
  switch (t.kind()) {
    case ArithTerm::Kind::Var:
      return t.name() == x ? s : t;
    case ArithTerm::Kind::Zero:
      return t;
    case ArithTerm::Kind::Succ:
      return ArithTerm::succ(subst_arith(t.pred(), x, s));
    case ArithTerm::Kind::Fn: {
      std::vector<ArithTerm> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(subst_arith(a, x, s));
      return ArithTerm::fn(t.name(), std::move(args));
    }
  }
  return t;
}

// ---------------------------------------------------------------------------

struct Formula::Node {
  Kind kind;
  std::string name;  // predicate or bound variable
  std::vector<ArithTerm> args;
  std::vector<Formula> subs;
};

Formula::Formula() : node_(falsum().node_) {}

Formula Formula::atomic(std::string predicate, std::vector<ArithTerm> args) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Atomic, std::move(predicate), std::move(args), {}}));
}

Formula Formula::falsum() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::False, {}, {}, {}}));
  return f;
}

Formula Formula::conj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::disj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::implies(Formula a, Formula b) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Implies, {}, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::forall(std::string var, Formula body) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Forall, std::move(var), {}, {std::move(body)}}));
}

Formula Formula::exists(std::string var, Formula body) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Exists, std::move(var), {}, {std::move(body)}}));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::predicate() const { return node_->name; }
const std::vector<ArithTerm>& Formula::args() const { return node_->args; }
const Formula& Formula::left() const { return node_->subs.at(0); }
const Formula& Formula::right() const { return node_->subs.at(1); }
const std::string& Formula::var() const { return node_->name; }
const Formula& Formula::body() const { return node_->subs.at(0); }

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atomic:
      for (const auto& a : f.args())
        for (const auto& v : a.free_vars())
          if (!bound.count(v)) out.insert(v);
      break;
    case Formula::Kind::False:
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool inserted = bound.insert(f.var()).second;
      collect_free(f.body(), bound, out);
      if (inserted) bound.erase(f.var());
      break;
    }
  }
}

bool alpha_eq_arith(const ArithTerm& a, const ArithTerm& b,
                    const std::vector<std::pair<std::string, std::string>>& env) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ArithTerm::Kind::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        bool la = it->first == a.name();
        bool lb = it->second == b.name();
        if (la || lb) return la && lb;
      }
      return a.name() == b.name();
    }
    case ArithTerm::Kind::Zero:
      return true;
    case ArithTerm::Kind::Succ:
      return alpha_eq_arith(a.pred(), b.pred(), env);
    case ArithTerm::Kind::Fn:
      if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!alpha_eq_arith(a.args()[i], b.args()[i], env)) return false;
      return true;
  }
  return false;
}

bool alpha_eq_rec(const Formula& a, const Formula& b,
                  std::vector<std::pair<std::string, std::string>>& env) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Atomic:
      if (a.predicate() != b.predicate() || a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!alpha_eq_arith(a.args()[i], b.args()[i], env)) return false;
      return true;
    case Formula::Kind::False:
      return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return alpha_eq_rec(a.left(), b.left(), env) && alpha_eq_rec(a.right(), b.right(), env);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      env.emplace_back(a.var(), b.var());
      bool ok = alpha_eq_rec(a.body(), b.body(), env);
      env.pop_back();
      return ok;
    }
  }
  return false;
}

}  // namespace

std::set<std::string> Formula::free_vars() const {
  std::set<std::string> bound, out;
  collect_free(*this, bound, out);
  return out;
}

std::size_t Formula::quantifier_depth() const {
  switch (kind()) {
    case Kind::Atomic:
    case Kind::False:
      return 0;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      return std::max(left().quantifier_depth(), right().quantifier_depth());
    case Kind::Forall:
    case Kind::Exists:
      return 1 + body().quantifier_depth();
  }
  return 0;
}

std::size_t Formula::depth() const {
  switch (kind()) {
    case Kind::Atomic:
    case Kind::False:
      return 0;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      return 1 + std::max(left().depth(), right().depth());
    case Kind::Forall:
    case Kind::Exists:
      return 1 + body().depth();
  }
  return 0;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Atomic:
      return a.predicate() == b.predicate() && a.args() == b.args();
    case Formula::Kind::False:
      return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return a.left() == b.left() && a.right() == b.right();
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return a.var() == b.var() && a.body() == b.body();
  }
  return false;
}

bool alpha_eq(const Formula& a, const Formula& b) {
  std::vector<std::pair<std::string, std::string>> env;
  return alpha_eq_rec(a, b, env);
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  std::string candidate = base;
  for (int primes = 1; primes <= 3; ++primes) {
    candidate += '\'';
    if (!avoid.count(candidate)) return candidate;
  }
  for (std::size_t i = 4;; ++i) {
    candidate = base + "'" + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

Formula subst_formula(const Formula& a, const std::string& x, const ArithTerm& t) {
  switch (a.kind()) {
    case Formula::Kind::Atomic: {
      std::vector<ArithTerm> args;
      args.reserve(a.args().size());
      for (const auto& arg : a.args()) args.push_back(subst_arith(arg, x, t));
      return Formula::atomic(a.predicate(), std::move(args));
    }
    case Formula::Kind::False:
      return a;
    case Formula::Kind::And:
      return Formula::conj(subst_formula(a.left(), x, t), subst_formula(a.right(), x, t));
    case Formula::Kind::Or:
      return Formula::disj(subst_formula(a.left(), x, t), subst_formula(a.right(), x, t));
    case Formula::Kind::Implies:
      return Formula::implies(subst_formula(a.left(), x, t), subst_formula(a.right(), x, t));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (a.var() == x) return a;
      auto body_free = a.body().free_vars();
      if (!body_free.count(x)) return a;
      std::string bound = a.var();
      Formula body = a.body();
      auto t_free = t.free_vars();
      if (t_free.count(bound)) {
        std::set<std::string> avoid = body_free;
        avoid.insert(t_free.begin(), t_free.end());
        avoid.insert(x);
        std::string renamed = fresh_name(bound, avoid);
        body = subst_formula(body, bound, ArithTerm::var(renamed));
        bound = renamed;
      }
      Formula new_body = subst_formula(body, x, t);
      return a.kind() == Formula::Kind::Forall ? Formula::forall(bound, std::move(new_body))
                                               : Formula::exists(bound, std::move(new_body));
    }
  }
  return a;
}

Formula em_formula(const std::string& predicate, const std::vector<ArithTerm>& params,
                   const std::string& bound) {
  std::set<std::string> avoid;
  for (const auto& p : params)
    for (const auto& v : p.free_vars()) avoid.insert(v);
  std::string y = fresh_name(bound, avoid);
  std::vector<ArithTerm> args = params;
  args.push_back(ArithTerm::var(y));
  Formula instance = Formula::atomic(predicate, args);
  return Formula::disj(Formula::forall(y, instance),
                       Formula::exists(y, Formula::negation(instance)));
}

}  // namespace ireal
