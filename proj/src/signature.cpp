#include "ireal/signature.hpp"

#include <sstream>
#include <utility>

namespace ireal {

bool Predicate::operator()(std::span<const Nat> args) const {
  if (args.size() != arity)
    throw ArityError("predicate " + name + " expects " + std::to_string(arity) + " arguments, got " +
                     std::to_string(args.size()));
  return holds(args);
}

Signature::Signature() : base_types_{"State", "Ex"} {}

Signature Signature::standard() {
  Signature sig;
  sig.add_predicate("LT", 2, [](std::span<const Nat> a) { return a[0] < a[1]; });
  sig.add_predicate("LE", 2, [](std::span<const Nat> a) { return a[0] <= a[1]; });
  sig.add_predicate("EQ", 2, [](std::span<const Nat> a) { return a[0] == a[1]; });
  auto x = ArithTerm::var("x");
  auto y = ArithTerm::var("y");
  auto z = ArithTerm::var("z");
  auto lt = [](ArithTerm a, ArithTerm b) { return Formula::atomic("LT", {std::move(a), std::move(b)}); };
  auto le = [](ArithTerm a, ArithTerm b) { return Formula::atomic("LE", {std::move(a), std::move(b)}); };
  sig.add_rule({"lt-succ", {}, lt(x, ArithTerm::succ(x))});
  sig.add_rule({"lt-trans", {lt(x, y), lt(y, z)}, lt(x, z)});
  sig.add_rule({"le-refl", {}, le(x, x)});
  sig.add_rule({"lt-le", {lt(x, y)}, le(x, y)});
  sig.add_rule({"zero-le", {}, le(ArithTerm::zero(), x)});
  sig.add_rule({"eq-refl", {}, Formula::atomic("EQ", {x, x})});
  return sig;
}

void Signature::add_predicate(std::string name, std::size_t arity,
                              std::function<bool(std::span<const Nat>)> holds) {
  if (name == "false") throw Error("'false' is reserved");
  auto p = std::make_shared<Predicate>(Predicate{name, arity, std::move(holds)});
  predicates_[std::move(name)] = std::move(p);
}

void Signature::add_function(std::string name, std::size_t arity,
                             std::function<Nat(std::span<const Nat>)> apply) {
  if (name == "succ") throw Error("'succ' is reserved");
  FunctionSymbol f{name, arity, std::move(apply)};
  functions_[std::move(name)] = std::move(f);
}

void Signature::add_rule(AtomicRule rule, Nat soundness_bound) {
  for (const auto& p : rule.premises) {
    if (p.kind() != Formula::Kind::Atomic)
      throw Error("rule " + rule.name + ": premises must be atomic");
    check_formula(p);
  }
  if (!rule.conclusion.is_atomic()) throw Error("rule " + rule.name + ": conclusion must be atomic");
  check_formula(rule.conclusion);
  std::string why;
  if (!rule_sound(rule, *this, soundness_bound, &why))
    throw Error("rule " + rule.name + " is unsound: " + why);
  std::string key = rule.name;
  rules_.insert_or_assign(std::move(key), std::move(rule));
}

void Signature::add_base_type(std::string name) { base_types_.insert(std::move(name)); }

void Signature::set_order_predicate(std::string name) {
  auto p = predicate(name);
  if (p->arity != 2) throw ArityError("order predicate must be binary");
  order_ = std::move(name);
}

PredicateRef Signature::predicate(const std::string& name) const {
  auto it = predicates_.find(name);
  if (it == predicates_.end()) throw Error("unknown predicate symbol " + name);
  return it->second;
}

const FunctionSymbol& Signature::function(const std::string& name) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) throw Error("unknown function symbol " + name);
  return it->second;
}

const AtomicRule& Signature::rule(const std::string& name) const {
  auto it = rules_.find(name);
  if (it == rules_.end()) throw Error("unknown atomic rule " + name);
  return it->second;
}

namespace {

void check_arith(const ArithTerm& t, const Signature& sig) {
  switch (t.kind()) {
    case ArithTerm::Kind::Var:
    case ArithTerm::Kind::Zero:
      return;
    case ArithTerm::Kind::Succ:
      check_arith(t.pred(), sig);
      return;
    case ArithTerm::Kind::Fn: {
      const auto& f = sig.function(t.name());
      if (f.arity != t.args().size())
        throw ArityError("function " + t.name() + " expects " + std::to_string(f.arity) +
                         " arguments");
      for (const auto& a : t.args()) check_arith(a, sig);
      return;
    }
  }
}

}  // namespace

void Signature::check_formula(const Formula& a) const {
  switch (a.kind()) {
    case Formula::Kind::Atomic: {
      auto p = predicate(a.predicate());
      if (p->arity != a.args().size())
        throw ArityError("predicate " + a.predicate() + " expects " + std::to_string(p->arity) +
                         " arguments, got " + std::to_string(a.args().size()));
      for (const auto& t : a.args()) check_arith(t, *this);
      return;
    }
    case Formula::Kind::False:
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      check_formula(a.left());
      check_formula(a.right());
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      check_formula(a.body());
      return;
  }
}

Nat eval_arith(const ArithTerm& t, const std::map<std::string, Nat>& env, const Signature& sig) {
  switch (t.kind()) {
    case ArithTerm::Kind::Var: {
      auto it = env.find(t.name());
      if (it == env.end()) throw UnboundVariable("unbound arithmetic variable " + t.name());
      return it->second;
    }
    case ArithTerm::Kind::Zero:
      return 0;
    case ArithTerm::Kind::Succ:
      return eval_arith(t.pred(), env, sig) + 1;
    case ArithTerm::Kind::Fn: {
      const auto& f = sig.function(t.name());
      if (f.arity != t.args().size()) throw ArityError("function " + t.name() + " arity mismatch");
      std::vector<Nat> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(eval_arith(a, env, sig));
      return f.apply(args);
    }
  }
  return 0;
}

Nat eval_arith(const ArithTerm& t, const Signature& sig) { return eval_arith(t, {}, sig); }

bool atomic_truth(const Formula& a, const Signature& sig) {
  if (a.kind() == Formula::Kind::False) return false;
  if (a.kind() != Formula::Kind::Atomic) throw Error("atomic_truth: formula is not atomic");
  auto p = sig.predicate(a.predicate());
  std::vector<Nat> args;
  args.reserve(a.args().size());
  for (const auto& t : a.args()) args.push_back(eval_arith(t, sig));
  return (*p)(args);
}

namespace {

bool instance_true(const Formula& a, const std::map<std::string, Nat>& env, const Signature& sig) {
  if (a.kind() == Formula::Kind::False) return false;
  auto p = sig.predicate(a.predicate());
  std::vector<Nat> args;
  for (const auto& t : a.args()) args.push_back(eval_arith(t, env, sig));
  return (*p)(args);
}

}  // namespace

bool rule_sound(const AtomicRule& rule, const Signature& sig, Nat bound,
                std::string* counterexample) {
  std::set<std::string> vars = rule.conclusion.free_vars();
  for (const auto& p : rule.premises) {
    auto fv = p.free_vars();
    vars.insert(fv.begin(), fv.end());
  }
  std::vector<std::string> names(vars.begin(), vars.end());
  std::vector<Nat> values(names.size(), 0);
  std::map<std::string, Nat> env;
  while (true) {
    for (std::size_t i = 0; i < names.size(); ++i) env[names[i]] = values[i];
    bool premises_hold = true;
    for (const auto& p : rule.premises)
      if (!instance_true(p, env, sig)) {
        premises_hold = false;
        break;
      }
    if (premises_hold && !instance_true(rule.conclusion, env, sig)) {
      if (counterexample) {
        std::ostringstream out;
        for (const auto& [k, v] : env) out << k << "=" << v << " ";
        *counterexample = out.str();
      }
      return false;
    }
    std::size_t i = 0;
    while (i < values.size() && values[i] == bound) values[i++] = 0;
    if (i == values.size()) break;
    ++values[i];
  }
  return true;
}

namespace {

bool match_arith(const ArithTerm& schema, const ArithTerm& target,
                 std::map<std::string, ArithTerm>& binding) {
  switch (schema.kind()) {
    case ArithTerm::Kind::Var: {
      auto it = binding.find(schema.name());
      if (it == binding.end()) {
        binding.emplace(schema.name(), target);
        return true;
      }
      return it->second == target;
    }
    case ArithTerm::Kind::Zero:
      return target.kind() == ArithTerm::Kind::Zero;
    case ArithTerm::Kind::Succ:
      if (target.kind() != ArithTerm::Kind::Succ) return false;
      return match_arith(schema.pred(), target.pred(), binding);
    case ArithTerm::Kind::Fn:
      if (target.kind() != ArithTerm::Kind::Fn || target.name() != schema.name() ||
          target.args().size() != schema.args().size())
        return false;
      for (std::size_t i = 0; i < schema.args().size(); ++i)
        if (!match_arith(schema.args()[i], target.args()[i], binding)) return false;
      return true;
  }
  return false;
}

}  // namespace

bool match_schema(const Formula& schema, const Formula& target, const Signature&,
                  std::map<std::string, ArithTerm>& binding) {
  if (schema.kind() != target.kind()) return false;
  if (schema.kind() == Formula::Kind::False) return true;
  if (schema.kind() != Formula::Kind::Atomic) return false;
  if (schema.predicate() != target.predicate() || schema.args().size() != target.args().size())
    return false;
  for (std::size_t i = 0; i < schema.args().size(); ++i)
    if (!match_arith(schema.args()[i], target.args()[i], binding)) return false;
  return true;
}

}  // namespace ireal
