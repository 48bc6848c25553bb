#include "ireal/learner.hpp"

#include <sstream>

#include "ireal/sexpr.hpp"
#include "ireal/syntax.hpp"

namespace ireal {

const char* terminal_name(Terminal t) {
  switch (t) {
    case Terminal::FixedPoint:
      return "fixed-point";
    case Terminal::BudgetExhausted:
      return "budget-exhausted";
    case Terminal::Conflict:
      return "conflict";
  }
  return "?";
}

std::optional<Term> LearnTrace::result() const {
  if (terminal != Terminal::FixedPoint || steps.empty()) return std::nullopt;
  return steps.back().value;
}

const KnowledgeState& LearnTrace::final_state() const {
  static const KnowledgeState empty;
  return steps.empty() ? empty : steps.back().after;
}

LearnStep learn_step(const Term& r, const KnowledgeState& s, std::uint64_t fuel) {
  Type t = type_of(r);
  if (!t.is(Type::Kind::Arrow) || !t.dom().is_base("State") || !t.cod().is(Type::Kind::Sum) ||
      !t.cod().right().is_base("Ex"))
    throw TypeError("learner expects a term of type State -> (A + Ex), got " + to_string(t));
  Term n = normalize(Term::app(r, Term::state_lit(s)), fuel);
  LearnStep step;
  step.before = s;
  step.after = s;
  if (!n.is(Term::Kind::App) || !n.fun().is(Term::Kind::Const))
    throw InvariantViolation("closed normal term of sum type is " + to_string(n));
  if (n.fun().is_const(ConstId::InjL)) {
    step.kind = StepKind::Regular;
    step.value = n.arg();
    return step;
  }
  if (!n.fun().is_const(ConstId::InjR) || !n.arg().is(Term::Kind::ExLit))
    throw InvariantViolation("closed normal term of sum type is " + to_string(n));
  step.exception = n.arg().exception();
  auto next = apply_exception(*step.exception, s);
  if (next && *next != s) {
    step.kind = StepKind::Exceptional;
    step.after = std::move(*next);
  } else {
    step.kind = StepKind::Conflict;
  }
  return step;
}

LearnTrace learn(const Term& r, const KnowledgeState& s0, std::size_t max_iters, std::uint64_t fuel,
                 std::uint64_t seed) {
  LearnTrace trace;
  trace.seed = seed;
  KnowledgeState s = s0;
  for (std::size_t i = 0; i < max_iters; ++i) {
    LearnStep step = learn_step(r, s, fuel);
    StepKind kind = step.kind;
    s = step.after;
    trace.steps.push_back(std::move(step));
    if (kind == StepKind::Regular) {
      trace.terminal = Terminal::FixedPoint;
      return trace;
    }
    if (kind == StepKind::Conflict) {
      trace.terminal = Terminal::Conflict;
      return trace;
    }
  }
  trace.terminal = Terminal::BudgetExhausted;
  return trace;
}

std::string to_text(const LearnTrace& t) {
  std::ostringstream out;
  out << "(trace (seed " << t.seed << "))\n";
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const LearnStep& st = t.steps[i];
    out << "(step " << (i + 1) << " (before " << to_string(st.before) << ") ";
    switch (st.kind) {
      case StepKind::Regular:
        out << "(regular " << to_string(*st.value) << ")";
        break;
      case StepKind::Exceptional:
        out << "(exceptional " << to_string(*st.exception) << ")";
        break;
      case StepKind::Conflict:
        out << "(conflict " << to_string(*st.exception) << ")";
        break;
    }
    out << " (after " << to_string(st.after) << "))\n";
  }
  out << "(terminal " << terminal_name(t.terminal) << ")\n";
  return out.str();
}

namespace {

[[noreturn]] void bad(const SExpr& e, const std::string& what) { throw ParseError(e.pos, what); }

const SExpr& field(const SExpr& e, std::size_t i, const char* tag) {
  if (i >= e.size() || !e[i].tagged(tag) || e[i].size() != 2)
    bad(i < e.size() ? e[i] : e, std::string("expected (") + tag + " ...)");
  return e[i][1];
}

}  // namespace

LearnTrace parse_trace(std::string_view text, const Signature& sig) {
  auto forms = read_sexprs(text);
  if (forms.empty() || !forms[0].tagged("trace")) throw ParseError({}, "expected a (trace ...) header");
  LearnTrace t;
  const SExpr& seed = field(forms[0], 1, "seed");
  if (!seed.is_atom) bad(seed, "expected a seed");
  t.seed = std::stoull(seed.atom);
  bool terminal = false;
  for (std::size_t i = 1; i < forms.size(); ++i) {
    const SExpr& f = forms[i];
    if (terminal) bad(f, "nothing may follow (terminal ...)");
    if (f.tagged("terminal")) {
      if (f.size() != 2 || !f[1].is_atom) bad(f, "expected (terminal NAME)");
      const std::string& name = f[1].atom;
      if (name == "fixed-point") t.terminal = Terminal::FixedPoint;
      else if (name == "budget-exhausted") t.terminal = Terminal::BudgetExhausted;
      else if (name == "conflict") t.terminal = Terminal::Conflict;
      else bad(f[1], "unknown terminal " + name);
      terminal = true;
      continue;
    }
    if (!f.tagged("step") || f.size() != 5) bad(f, "expected (step N (before S) OUTCOME (after S))");
    LearnStep st;
    st.before = parse_state(field(f, 2, "before"), sig);
    const SExpr& o = f[3];
    if (!o.is_list() || o.size() != 2 || !o[0].is_atom) bad(o, "expected an outcome");
    if (o[0].atom == "regular") {
      st.kind = StepKind::Regular;
      st.value = parse_term(o[1], sig);
    } else if (o[0].atom == "exceptional" || o[0].atom == "conflict") {
      st.kind = o[0].atom == "conflict" ? StepKind::Conflict : StepKind::Exceptional;
      st.exception = parse_exception(o[1], sig);
    } else {
      bad(o, "unknown outcome " + o[0].atom);
    }
    st.after = parse_state(field(f, 4, "after"), sig);
    t.steps.push_back(std::move(st));
  }
  if (!terminal) throw ParseError({}, "trace has no (terminal ...) line");
  return t;
}

namespace {

void describe(const Term& t, const Formula& a, const RealizabilityChecker& c, const std::string& indent,
              std::ostringstream& out) {
  switch (a.kind()) {
    case Formula::Kind::Atomic:
    case Formula::Kind::False:
      out << indent << "atomic " << to_string(a) << " holds\n";
      return;
    case Formula::Kind::And:
      out << indent << "conjunction\n";
      describe(mk_projl(t), a.left(), c, indent + "  ", out);
      describe(mk_projr(t), a.right(), c, indent + "  ", out);
      return;
    case Formula::Kind::Or: {
      Term n = normalize(t, c.bounds().fuel);
      bool left = n.fun().is_const(ConstId::InjL);
      out << indent << (left ? "left branch" : "right branch") << "\n";
      describe(n.arg(), left ? a.left() : a.right(), c, indent + "  ", out);
      return;
    }
    case Formula::Kind::Exists: {
      Nat k = *as_numeral(normalize(mk_projl(t), c.bounds().fuel));
      out << indent << "witness " << a.var() << "=" << k << "\n";
      describe(mk_projr(t), subst_formula(a.body(), a.var(), ArithTerm::numeral(k)), c, indent + "  ", out);
      return;
    }
    case Formula::Kind::Implies:
    case Formula::Kind::Forall:
      out << indent << "function realizing " << to_string(a) << "\n";
      return;
  }
}

}  // namespace

std::string extract_witness(const Term& t, const Formula& a, const RealizabilityChecker& checker,
                            const KnowledgeState& s) {
  TestVerdict v = checker.inner_realizes(t, a, s);
  if (!v.passed()) throw Error("not an inner realizer of " + to_string(a) + ": " + to_string(v));
  std::ostringstream out;
  describe(t, a, checker, "", out);
  return out.str();
}

}  // namespace ireal
