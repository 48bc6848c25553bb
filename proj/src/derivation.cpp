#include "ireal/derivation.hpp"

#include <algorithm>
#include <utility>

#include "ireal/syntax.hpp"

namespace ireal {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Id: return "id";
    case Rule::Atm: return "atm";
    case Rule::AndI: return "and-i";
    case Rule::AndEL: return "and-el";
    case Rule::AndER: return "and-er";
    case Rule::OrIL: return "or-il";
    case Rule::OrIR: return "or-ir";
    case Rule::OrE: return "or-e";
    case Rule::ImpI: return "imp-i";
    case Rule::ImpE: return "imp-e";
    case Rule::ForallI: return "forall-i";
    case Rule::ForallE: return "forall-e";
    case Rule::ExistsI: return "exists-i";
    case Rule::ExistsE: return "exists-e";
    case Rule::Ind: return "ind";
    case Rule::EM: return "em";
  }
  return "?";
}

Formula induction_hypothesis(const Formula& forall_a, const std::string& y, const std::string& z,
                             const Signature& sig) {
  if (forall_a.kind() != Formula::Kind::Forall) throw Error("induction needs a universal formula");
  Formula instance = subst_formula(forall_a.body(), forall_a.var(), ArithTerm::var(z));
  Formula order = Formula::atomic(sig.order_predicate(), {ArithTerm::var(z), ArithTerm::var(y)});
  return Formula::forall(z, Formula::implies(order, instance));
}

std::set<std::string> free_vars(const Sequent& s) {
  std::set<std::string> out = s.conclusion.free_vars();
  for (const auto& a : s.context) {
    auto fv = a.formula.free_vars();
    out.insert(fv.begin(), fv.end());
  }
  return out;
}

namespace build {

namespace {

Derivation node(Rule r, Context ctx, Formula conclusion, std::vector<Derivation> premises = {}) {
  Derivation d;
  d.rule = r;
  d.sequent = Sequent{std::move(ctx), std::move(conclusion)};
  d.premises = std::move(premises);
  return d;
}

const Formula& expect(const Formula& f, Formula::Kind k, const char* rule) {
  if (f.kind() != k)
    throw Error(std::string(rule) + ": premise has the wrong shape: " + to_string(f));
  return f;
}

Context without_last(const Context& ctx, const std::string& label, const char* rule) {
  if (ctx.empty() || ctx.back().label != label)
    throw Error(std::string(rule) + ": premise context does not end with assumption " + label);
  return Context(ctx.begin(), ctx.end() - 1);
}

}  // namespace

Derivation id(const Context& ctx, const std::string& label) {
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
    if (it->label == label) {
      Derivation d = node(Rule::Id, ctx, it->formula);
      d.label = label;
      return d;
    }
  throw Error("id: no assumption labelled " + label);
}

Derivation atm(const Context& ctx, const std::string& rule, Formula conclusion,
               std::vector<Derivation> premises) {
  Derivation d = node(Rule::Atm, ctx, std::move(conclusion), std::move(premises));
  d.atomic_rule = rule;
  return d;
}

Derivation and_i(Derivation a, Derivation b) {
  Context ctx = a.context();
  Formula c = Formula::conj(a.conclusion(), b.conclusion());
  return node(Rule::AndI, std::move(ctx), std::move(c), {std::move(a), std::move(b)});
}

Derivation and_el(Derivation p) {
  Formula c = expect(p.conclusion(), Formula::Kind::And, "and-el").left();
  Context ctx = p.context();
  return node(Rule::AndEL, std::move(ctx), std::move(c), {std::move(p)});
}

Derivation and_er(Derivation p) {
  Formula c = expect(p.conclusion(), Formula::Kind::And, "and-er").right();
  Context ctx = p.context();
  return node(Rule::AndER, std::move(ctx), std::move(c), {std::move(p)});
}

Derivation or_il(Derivation p, Formula right) {
  Formula c = Formula::disj(p.conclusion(), std::move(right));
  Context ctx = p.context();
  return node(Rule::OrIL, std::move(ctx), std::move(c), {std::move(p)});
}

Derivation or_ir(Formula left, Derivation p) {
  Formula c = Formula::disj(std::move(left), p.conclusion());
  Context ctx = p.context();
  return node(Rule::OrIR, std::move(ctx), std::move(c), {std::move(p)});
}

Derivation or_e(Derivation major, std::string left_label, Derivation left, std::string right_label,
                Derivation right) {
  Context ctx = major.context();
  Formula c = left.conclusion();
  Derivation d = node(Rule::OrE, std::move(ctx), std::move(c),
                      {std::move(major), std::move(left), std::move(right)});
  d.label = std::move(left_label);
  d.label2 = std::move(right_label);
  return d;
}

Derivation imp_i(std::string label, Formula antecedent, Derivation body) {
  Context ctx = without_last(body.context(), label, "imp-i");
  Formula c = Formula::implies(std::move(antecedent), body.conclusion());
  Derivation d = node(Rule::ImpI, std::move(ctx), std::move(c), {std::move(body)});
  d.label = std::move(label);
  return d;
}

Derivation imp_e(Derivation major, Derivation minor) {
  Formula c = expect(major.conclusion(), Formula::Kind::Implies, "imp-e").right();
  Context ctx = major.context();
  return node(Rule::ImpE, std::move(ctx), std::move(c), {std::move(major), std::move(minor)});
}

Derivation forall_i(std::string var, Derivation body) {
  Formula c = Formula::forall(var, body.conclusion());
  Context ctx = body.context();
  Derivation d = node(Rule::ForallI, std::move(ctx), std::move(c), {std::move(body)});
  d.var = std::move(var);
  return d;
}

Derivation forall_e(Derivation p, ArithTerm t) {
  const Formula& a = expect(p.conclusion(), Formula::Kind::Forall, "forall-e");
  Formula c = subst_formula(a.body(), a.var(), t);
  Context ctx = p.context();
  Derivation d = node(Rule::ForallE, std::move(ctx), std::move(c), {std::move(p)});
  d.term = std::move(t);
  return d;
}

Derivation exists_i(Formula exists_formula, ArithTerm witness, Derivation p) {
  expect(exists_formula, Formula::Kind::Exists, "exists-i");
  Context ctx = p.context();
  Derivation d = node(Rule::ExistsI, std::move(ctx), std::move(exists_formula), {std::move(p)});
  d.term = std::move(witness);
  return d;
}

Derivation exists_e(Derivation major, std::string y, std::string label, Derivation body) {
  Context ctx = major.context();
  Formula c = body.conclusion();
  Derivation d = node(Rule::ExistsE, std::move(ctx), std::move(c), {std::move(major), std::move(body)});
  d.var = std::move(y);
  d.label = std::move(label);
  return d;
}

Derivation ind(const Context& ctx, Formula forall_a, std::string y, std::string z,
               std::string label, Derivation step) {
  expect(forall_a, Formula::Kind::Forall, "ind");
  Derivation d = node(Rule::Ind, ctx, std::move(forall_a), {std::move(step)});
  d.var = std::move(y);
  d.var2 = std::move(z);
  d.label = std::move(label);
  return d;
}

Derivation em(const Context& ctx, std::string predicate, std::vector<ArithTerm> params) {
  Derivation d = node(Rule::EM, ctx, em_formula(predicate, params));
  d.predicate = std::move(predicate);
  d.terms = std::move(params);
  return d;
}

}  // namespace build

// ---------------------------------------------------------------------------

namespace {

class Checker {
 public:
  explicit Checker(const Signature& sig) : sig_(sig) {}

  std::vector<Diagnostic> run(const Derivation& d) {
    visit(d, "root");
    return std::move(out_);
  }

 private:
  void report(const std::string& path, Rule r, std::string msg) {
    out_.push_back(Diagnostic{path, r, std::move(msg)});
  }

  bool same_context(const Context& a, const Context& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].label != b[i].label || !alpha_eq(a[i].formula, b[i].formula)) return false;
    return true;
  }

  Context extended(const Context& ctx, const std::string& label, const Formula& f) {
    Context out = ctx;
    out.push_back(Assumption{label, f});
    return out;
  }

  // Premise i must live in `expected` context and conclude `expected_formula`
  // (when given).
  void premise(const Derivation& d, std::size_t i, const std::string& path, const Context& expected,
               const std::optional<Formula>& expected_formula, const char* role) {
    const Derivation& p = d.premises[i];
    if (!same_context(p.context(), expected))
      report(path, d.rule, std::string(role) + " premise has the wrong context");
    if (expected_formula && !alpha_eq(p.conclusion(), *expected_formula))
      report(path, d.rule,
             std::string(role) + " premise concludes " + to_string(p.conclusion()) +
                 ", expected " + to_string(*expected_formula));
  }

  bool fresh_label(const std::string& path, Rule r, const Context& ctx, const std::string& label) {
    if (label.empty() || label[0] == '$') {
      report(path, r, "invalid assumption label '" + label + "'");
      return false;
    }
    for (const auto& a : ctx)
      if (a.label == label) {
        report(path, r, "assumption label " + label + " is already in use");
        return false;
      }
    return true;
  }

  bool free_in_context(const Context& ctx, const std::string& x) {
    for (const auto& a : ctx)
      if (a.formula.free_vars().count(x)) return true;
    return false;
  }

  void visit(const Derivation& d, const std::string& path) {
    const std::size_t want = arity(d.rule);
    if (d.premises.size() != want && d.rule != Rule::Atm) {
      report(path, d.rule, "expected " + std::to_string(want) + " premises, found " +
                               std::to_string(d.premises.size()));
      return;
    }
    try {
      sig_.check_formula(d.conclusion());
    } catch (const Error& e) {
      report(path, d.rule, e.what());
    }
    {
      std::set<std::string> seen;
      for (const auto& a : d.context()) {
        if (!seen.insert(a.label).second) report(path, d.rule, "duplicate assumption label " + a.label);
      }
      auto fv = free_vars(d.sequent);
      for (const auto& a : d.context())
        if (fv.count(a.label))
          report(path, d.rule, "assumption label " + a.label + " clashes with an arithmetic variable");
    }

    check_node(d, path);
    for (std::size_t i = 0; i < d.premises.size(); ++i)
      visit(d.premises[i], path == "root" ? std::to_string(i) : path + "." + std::to_string(i));
  }

  static std::size_t arity(Rule r) {
    switch (r) {
      case Rule::Id:
      case Rule::EM:
        return 0;
      case Rule::AndEL:
      case Rule::AndER:
      case Rule::OrIL:
      case Rule::OrIR:
      case Rule::ImpI:
      case Rule::ForallI:
      case Rule::ForallE:
      case Rule::ExistsI:
      case Rule::Ind:
        return 1;
      case Rule::AndI:
      case Rule::ImpE:
      case Rule::ExistsE:
        return 2;
      case Rule::OrE:
        return 3;
      case Rule::Atm:
        return 0;
    }
    return 0;
  }

  void check_node(const Derivation& d, const std::string& path) {
    const Context& ctx = d.context();
    const Formula& c = d.conclusion();
    using K = Formula::Kind;
    switch (d.rule) {
      case Rule::Id: {
        const Assumption* found = nullptr;
        for (const auto& a : ctx)
          if (a.label == d.label) found = &a;
        if (!found)
          report(path, d.rule, "no assumption labelled " + d.label);
        else if (!alpha_eq(found->formula, c))
          report(path, d.rule, "assumption " + d.label + " is " + to_string(found->formula) +
                                   ", not " + to_string(c));
        return;
      }
      case Rule::Atm: {
        if (!sig_.has_rule(d.atomic_rule)) {
          report(path, d.rule, "unknown atomic rule " + d.atomic_rule);
          return;
        }
        const AtomicRule& rule = sig_.rule(d.atomic_rule);
        if (rule.premises.size() != d.premises.size()) {
          report(path, d.rule, "rule " + rule.name + " takes " + std::to_string(rule.premises.size()) +
                                   " premises, found " + std::to_string(d.premises.size()));
          return;
        }
        std::map<std::string, ArithTerm> binding;
        bool ok = true;
        for (std::size_t i = 0; i < d.premises.size(); ++i) {
          premise(d, i, path, ctx, std::nullopt, "atomic");
          const Formula& pc = d.premises[i].conclusion();
          if (!pc.is_atomic()) {
            report(path, d.rule, "premise " + std::to_string(i) + " is not atomic");
            ok = false;
          } else if (!match_schema(rule.premises[i], pc, sig_, binding)) {
            report(path, d.rule, "premise " + std::to_string(i) + " does not match rule " + rule.name);
            ok = false;
          }
        }
        if (!c.is_atomic())
          report(path, d.rule, "conclusion is not atomic");
        else if (ok && !match_schema(rule.conclusion, c, sig_, binding))
          report(path, d.rule, "conclusion does not match rule " + rule.name);
        return;
      }
      case Rule::AndI:
        if (c.kind() != K::And) {
          report(path, d.rule, "conclusion is not a conjunction");
          return;
        }
        premise(d, 0, path, ctx, c.left(), "left");
        premise(d, 1, path, ctx, c.right(), "right");
        return;
      case Rule::AndEL:
      case Rule::AndER: {
        const Formula& p = d.premises[0].conclusion();
        premise(d, 0, path, ctx, std::nullopt, "major");
        if (p.kind() != K::And) {
          report(path, d.rule, "premise is not a conjunction");
          return;
        }
        const Formula& part = d.rule == Rule::AndEL ? p.left() : p.right();
        if (!alpha_eq(part, c)) report(path, d.rule, "conclusion is not the selected conjunct");
        return;
      }
      case Rule::OrIL:
      case Rule::OrIR:
        if (c.kind() != K::Or) {
          report(path, d.rule, "conclusion is not a disjunction");
          return;
        }
        premise(d, 0, path, ctx, d.rule == Rule::OrIL ? c.left() : c.right(), "");
        return;
      case Rule::OrE: {
        const Formula& p = d.premises[0].conclusion();
        premise(d, 0, path, ctx, std::nullopt, "major");
        if (p.kind() != K::Or) {
          report(path, d.rule, "major premise is not a disjunction");
          return;
        }
        if (!fresh_label(path, d.rule, ctx, d.label) || !fresh_label(path, d.rule, ctx, d.label2))
          return;
        premise(d, 1, path, extended(ctx, d.label, p.left()), c, "left");
        premise(d, 2, path, extended(ctx, d.label2, p.right()), c, "right");
        return;
      }
      case Rule::ImpI:
        if (c.kind() != K::Implies) {
          report(path, d.rule, "conclusion is not an implication");
          return;
        }
        if (!fresh_label(path, d.rule, ctx, d.label)) return;
        premise(d, 0, path, extended(ctx, d.label, c.left()), c.right(), "");
        return;
      case Rule::ImpE: {
        const Formula& p = d.premises[0].conclusion();
        premise(d, 0, path, ctx, std::nullopt, "major");
        if (p.kind() != K::Implies) {
          report(path, d.rule, "major premise is not an implication");
          return;
        }
        premise(d, 1, path, ctx, p.left(), "minor");
        if (!alpha_eq(p.right(), c)) report(path, d.rule, "conclusion is not the consequent");
        return;
      }
      case Rule::ForallI:
        if (c.kind() != K::Forall || c.var() != d.var) {
          report(path, d.rule, "conclusion does not quantify the eigenvariable " + d.var);
          return;
        }
        if (free_in_context(ctx, d.var))
          report(path, d.rule, "eigenvariable " + d.var + " occurs free in an open assumption");
        premise(d, 0, path, ctx, c.body(), "");
        return;
      case Rule::ForallE: {
        const Formula& p = d.premises[0].conclusion();
        premise(d, 0, path, ctx, std::nullopt, "");
        if (p.kind() != K::Forall || !d.term) {
          report(path, d.rule, "premise is not universal or the instance term is missing");
          return;
        }
        if (!alpha_eq(subst_formula(p.body(), p.var(), *d.term), c))
          report(path, d.rule, "conclusion is not the stated instance");
        return;
      }
      case Rule::ExistsI:
        if (c.kind() != K::Exists || !d.term) {
          report(path, d.rule, "conclusion is not existential or the witness is missing");
          return;
        }
        premise(d, 0, path, ctx, subst_formula(c.body(), c.var(), *d.term), "");
        return;
      case Rule::ExistsE: {
        const Formula& p = d.premises[0].conclusion();
        premise(d, 0, path, ctx, std::nullopt, "major");
        if (p.kind() != K::Exists) {
          report(path, d.rule, "major premise is not existential");
          return;
        }
        if (!fresh_label(path, d.rule, ctx, d.label)) return;
        if (free_in_context(ctx, d.var) || c.free_vars().count(d.var) || p.free_vars().count(d.var))
          report(path, d.rule, "eigenvariable " + d.var + " is not fresh");
        premise(d, 1, path, extended(ctx, d.label, subst_formula(p.body(), p.var(), ArithTerm::var(d.var))),
                c, "minor");
        return;
      }
      case Rule::Ind: {
        if (c.kind() != K::Forall) {
          report(path, d.rule, "conclusion is not universal");
          return;
        }
        if (!sig_.has_predicate(sig_.order_predicate())) {
          report(path, d.rule, "signature has no order predicate " + sig_.order_predicate());
          return;
        }
        if (!fresh_label(path, d.rule, ctx, d.label)) return;
        if (d.var == d.var2) report(path, d.rule, "induction variables must differ");
        if (free_in_context(ctx, d.var) || c.free_vars().count(d.var))
          report(path, d.rule, "eigenvariable " + d.var + " is not fresh");
        if (c.free_vars().count(d.var2) || free_in_context(ctx, d.var2))
          report(path, d.rule, "bound variable " + d.var2 + " would be captured");
        Formula ih = induction_hypothesis(c, d.var, d.var2, sig_);
        premise(d, 0, path, extended(ctx, d.label, ih),
                subst_formula(c.body(), c.var(), ArithTerm::var(d.var)), "");
        return;
      }
      case Rule::EM: {
        if (!sig_.has_predicate(d.predicate)) {
          report(path, d.rule, "unknown predicate " + d.predicate);
          return;
        }
        auto p = sig_.predicate(d.predicate);
        if (p->arity != d.terms.size() + 1) {
          report(path, d.rule, "predicate " + d.predicate + " needs " +
                                   std::to_string(p->arity == 0 ? 0 : p->arity - 1) + " parameters");
          return;
        }
        if (!alpha_eq(em_formula(d.predicate, d.terms), c))
          report(path, d.rule, "conclusion is not the excluded-middle instance");
        return;
      }
    }
  }

  const Signature& sig_;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> check_derivation(const Derivation& d, const Signature& sig) {
  return Checker(sig).run(d);
}

std::string to_string(const Diagnostic& d) {
  return d.path + " [" + rule_name(d.rule) + "] " + d.message;
}

}  // namespace ireal
