#include "ireal/syntax.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

namespace ireal {

namespace {

[[noreturn]] void fail(const SExpr& e, const std::string& what) { throw ParseError(e.pos, what); }

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Nat to_nat(const SExpr& e) {
  if (!e.is_atom || !is_number(e.atom)) fail(e, "expected a natural number");
  try {
    return std::stoull(e.atom);
  } catch (const std::exception&) {
    fail(e, "number out of range: " + e.atom);
  }
}

const std::string& atom(const SExpr& e, const char* what) {
  if (!e.is_atom) fail(e, std::string("expected ") + what);
  return e.atom;
}

void want_size(const SExpr& e, std::size_t n, const char* form) {
  if (e.size() != n)
    fail(e, std::string(form) + " expects " + std::to_string(n - 1) + " arguments");
}

// Runs `f`, turning library errors into located parse errors.
template <class F>
auto located(const SExpr& e, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(e.pos, err.what());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Types

Type parse_type(const SExpr& e, const Signature& sig) {
  if (e.is_atom) {
    if (e.atom == "Unit") return Type::unit();
    if (e.atom == "Nat") return Type::nat();
    if (sig.base_types().count(e.atom)) return Type::base(e.atom);
    fail(e, "unknown type " + e.atom);
  }
  if (e.size() < 3) fail(e, "malformed type");
  const std::string& head = atom(e[0], "a type constructor");
  if (head == "->") {
    std::vector<Type> parts;
    for (std::size_t i = 1; i < e.size(); ++i) parts.push_back(parse_type(e[i], sig));
    Type cod = parts.back();
    parts.pop_back();
    return Type::arrows(parts, cod);
  }
  want_size(e, 3, head.c_str());
  if (head == "*") return Type::product(parse_type(e[1], sig), parse_type(e[2], sig));
  if (head == "+") return Type::sum(parse_type(e[1], sig), parse_type(e[2], sig));
  fail(e[0], "unknown type constructor " + head);
}

Type parse_type(std::string_view text, const Signature& sig) { return parse_type(read_sexpr(text), sig); }

// ---------------------------------------------------------------------------
// States and exceptions

namespace {

WitnessMap parse_entries(const SExpr& e, const char* tag, const Signature& sig) {
  if (!e.tagged(tag)) fail(e, std::string("expected (") + tag + " ...)");
  WitnessMap out;
  for (std::size_t i = 1; i < e.size(); ++i) {
    const SExpr& entry = e[i];
    if (!entry.is_list() || entry.size() != 3) fail(entry, "expected (P (params...) witness)");
    const std::string& p = atom(entry[0], "a predicate symbol");
    if (!sig.has_predicate(p)) fail(entry[0], "unknown predicate symbol " + p);
    if (!entry[1].is_list()) fail(entry[1], "expected a parameter list");
    WitnessKey key{p, {}};
    for (const auto& n : entry[1].items) key.params.push_back(to_nat(n));
    if (key.params.size() + 1 != sig.predicate(p)->arity)
      fail(entry, "wrong number of parameters for " + p);
    if (!out.emplace(std::move(key), to_nat(entry[2])).second) fail(entry, "duplicate key");
  }
  return out;
}

void render_entries(const WitnessMap& m, const char* tag, std::string& out) {
  out += '(';
  out += tag;
  for (const auto& [key, w] : m) {
    out += " (" + key.predicate + " (";
    for (std::size_t i = 0; i < key.params.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(key.params[i]);
    }
    out += ") " + std::to_string(w) + ")";
  }
  out += ')';
}

}  // namespace

KnowledgeState parse_state(const SExpr& e, const Signature& sig) {
  auto entries = parse_entries(e, "state", sig);
  return located(e, [&] { return KnowledgeState(std::move(entries), sig); });
}

KnowledgeState parse_state(std::string_view text, const Signature& sig) {
  return parse_state(read_sexpr(text), sig);
}

ExceptionValue parse_exception(const SExpr& e, const Signature& sig) {
  auto claims = parse_entries(e, "ex", sig);
  return located(e, [&] { return ExceptionValue(std::move(claims), sig); });
}

std::string to_string(const KnowledgeState& s) {
  std::string out;
  render_entries(s.entries(), "state", out);
  return out;
}

std::string to_string(const ExceptionValue& e) {
  std::string out;
  render_entries(e.claims(), "ex", out);
  return out;
}

// ---------------------------------------------------------------------------
// Terms

namespace {

using Scope = std::vector<std::pair<std::string, Type>>;

bool is_binder_name(const std::string& s) {
  if (s.empty() || is_number(s) || s[0] == '(' || s[0] == ')') return false;
  return true;
}

class TermParser {
 public:
  TermParser(const Signature& sig, const TypeContext& free) : sig_(sig), free_(free) {}

  Term parse(const SExpr& e) {
    return located(e, [&] { return parse_inner(e); });
  }

 private:
  Term variable(const SExpr& e) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == e.atom) return Term::var(e.atom, it->second);
    auto it = free_.find(e.atom);
    if (it != free_.end()) return Term::var(e.atom, it->second);
    throw ParseError(e.pos, "unbound variable " + e.atom);
  }

  std::optional<Nat> guard(const SExpr& e) {
    if (e.is_atom && e.atom == "inf") return std::nullopt;
    return to_nat(e);
  }

  Term bare_constant(const SExpr& e) {
    if (e.size() < 2) fail(e, "const expects a name");
    const std::string& name = atom(e[1], "a constant name");
    auto types = [&](std::size_t n) {
      if (e.size() != n + 2) fail(e, "constant " + name + " expects " + std::to_string(n) + " types");
      std::vector<Type> out;
      for (std::size_t i = 0; i < n; ++i) out.push_back(parse_type(e[i + 2], sig_));
      return out;
    };
    if (name == "unit" || name == "zero" || name == "succ" || name == "exmerge") {
      types(0);
      if (name == "unit") return c_unit();
      if (name == "zero") return c_zero();
      return name == "succ" ? c_succ() : c_exmerge();
    }
    if (name == "pair" || name == "projl" || name == "projr" || name == "inl" || name == "inr") {
      auto t = types(2);
      if (name == "pair") return c_pair(t[0], t[1]);
      if (name == "projl") return c_projl(t[0], t[1]);
      if (name == "projr") return c_projr(t[0], t[1]);
      if (name == "inl") return c_inl(t[0], t[1]);
      return c_inr(t[0], t[1]);
    }
    if (name == "case") {
      auto t = types(3);
      return c_case(t[0], t[1], t[2]);
    }
    if (name == "rec") {
      want_size(e, 4, "const rec");
      return c_rec(guard(e[2]), parse_type(e[3], sig_));
    }
    if (name == "query" || name == "eval") {
      want_size(e, 3, "const query/eval");
      auto p = sig_.predicate(atom(e[2], "a predicate symbol"));
      return name == "query" ? c_query(p) : c_eval(p);
    }
    fail(e[1], "unknown constant " + name);
  }

  std::vector<Term> rest(const SExpr& e, std::size_t from) {
    std::vector<Term> out;
    for (std::size_t i = from; i < e.size(); ++i) out.push_back(parse(e[i]));
    return out;
  }

  Term parse_inner(const SExpr& e) {
    if (e.is_atom) {
      if (is_number(e.atom)) return mk_numeral(to_nat(e));
      if (e.atom == "unit") return c_unit();
      if (e.atom == "zero") return c_zero();
      return variable(e);
    }
    if (e.size() == 0) fail(e, "empty term");
    if (!e[0].is_atom) {
      // ((f ...) a ...) is application.
      Term f = parse(e[0]);
      return Term::app(std::move(f), rest(e, 1));
    }
    const std::string& head = e[0].atom;
    if (head == "lam") {
      if (e.size() < 3) fail(e, "lam expects binders and a body");
      std::size_t pushed = 0;
      std::vector<std::pair<std::string, Type>> binders;
      for (std::size_t i = 1; i + 1 < e.size(); ++i) {
        const SExpr& b = e[i];
        if (!b.is_list() || b.size() != 2) fail(b, "expected a binder (x Type)");
        const std::string& x = atom(b[0], "a variable name");
        if (!is_binder_name(x) || x == "unit" || x == "zero") fail(b[0], "invalid variable name " + x);
        Type ty = parse_type(b[1], sig_);
        binders.emplace_back(x, ty);
        scope_.emplace_back(x, ty);
        ++pushed;
      }
      Term body = parse(e[e.size() - 1]);
      scope_.erase(scope_.end() - static_cast<std::ptrdiff_t>(pushed), scope_.end());
      for (auto it = binders.rbegin(); it != binders.rend(); ++it)
        body = Term::abs(it->first, it->second, std::move(body));
      return body;
    }
    if (head == "app") {
      if (e.size() < 3) fail(e, "app expects a function and arguments");
      Term f = parse(e[1]);
      return Term::app(std::move(f), rest(e, 2));
    }
    if (head == "num") {
      want_size(e, 2, "num");
      return mk_numeral(to_nat(e[1]));
    }
    if (head == "const") return bare_constant(e);
    if (head == "state") return Term::state_lit(parse_state(e, sig_));
    if (head == "ex") return Term::ex_lit(parse_exception(e, sig_));
    if (head == "succ") {
      want_size(e, 2, "succ");
      return mk_succ(parse(e[1]));
    }
    if (head == "pair") {
      want_size(e, 3, "pair");
      Term a = parse(e[1]);
      return mk_pair(std::move(a), parse(e[2]));
    }
    if (head == "projl" || head == "projr") {
      want_size(e, 2, head.c_str());
      Term p = parse(e[1]);
      return head == "projl" ? mk_projl(std::move(p)) : mk_projr(std::move(p));
    }
    if (head == "inl") {
      want_size(e, 3, "inl");
      Term a = parse(e[1]);
      return mk_inl(std::move(a), parse_type(e[2], sig_));
    }
    if (head == "inr") {
      want_size(e, 3, "inr");
      Type l = parse_type(e[1], sig_);
      return mk_inr(std::move(l), parse(e[2]));
    }
    if (head == "case") {
      want_size(e, 4, "case");
      Term s = parse(e[1]);
      Term l = parse(e[2]);
      return mk_case(std::move(s), std::move(l), parse(e[3]));
    }
    if (head == "rec") {
      want_size(e, 4, "rec");
      auto g = guard(e[1]);
      Term h = parse(e[2]);
      return mk_rec(g, std::move(h), parse(e[3]));
    }
    if (head == "exmerge") {
      want_size(e, 3, "exmerge");
      Term a = parse(e[1]);
      return mk_exmerge(std::move(a), parse(e[2]));
    }
    if (head == "query") {
      if (e.size() < 3) fail(e, "query expects a predicate and a state");
      auto p = sig_.predicate(atom(e[1], "a predicate symbol"));
      Term s = parse(e[2]);
      return mk_query(p, std::move(s), rest(e, 3));
    }
    if (head == "eval") {
      if (e.size() < 3) fail(e, "eval expects a predicate and a candidate");
      auto p = sig_.predicate(atom(e[1], "a predicate symbol"));
      auto args = rest(e, 2);
      Term c = args.back();
      args.pop_back();
      return mk_eval(p, args, std::move(c));
    }
    // (f a ...) for a variable head.
    if (e.size() < 2) fail(e, "unknown form " + head);
    Term f = parse(e[0]);
    return Term::app(std::move(f), rest(e, 1));
  }

  const Signature& sig_;
  const TypeContext& free_;
  Scope scope_;
};

std::size_t sugar_arity(const Constant& c) {
  switch (c.id) {
    case ConstId::Succ:
    case ConstId::ProjL:
    case ConstId::ProjR:
    case ConstId::InjL:
    case ConstId::InjR:
      return 1;
    case ConstId::Pair:
    case ConstId::Rec:
    case ConstId::ExMerge:
      return 2;
    case ConstId::Case:
      return 3;
    case ConstId::Query:
    case ConstId::Eval:
      return c.pred->arity;
    default:
      return 0;
  }
}

void render(const Term& t, std::string& out);

void render_guard(const std::optional<Nat>& g, std::string& out) {
  out += g ? std::to_string(*g) : std::string("inf");
}

void render_bare(const Constant& c, std::string& out) {
  switch (c.id) {
    case ConstId::Unit:
      out += "unit";
      return;
    case ConstId::Zero:
      out += "(num 0)";
      return;
    case ConstId::Rec:
      out += "(const rec ";
      render_guard(c.guard, out);
      out += " " + to_string(c.targs[0]) + ")";
      return;
    case ConstId::Query:
    case ConstId::Eval:
      out += std::string("(const ") + constant_name(c.id) + " " + c.pred->name + ")";
      return;
    default:
      out += std::string("(const ") + constant_name(c.id);
      for (const auto& ty : c.targs) out += " " + to_string(ty);
      out += ")";
      return;
  }
}

void render_sugar(const Constant& c, const std::vector<Term>& args, std::string& out) {
  auto arg = [&](std::size_t i) {
    out += ' ';
    render(args[i], out);
  };
  out += '(';
  out += constant_name(c.id);
  switch (c.id) {
    case ConstId::InjL:
      arg(0);
      out += " " + to_string(c.targs[1]);
      break;
    case ConstId::InjR:
      out += " " + to_string(c.targs[0]);
      arg(0);
      break;
    case ConstId::Rec:
      out += ' ';
      render_guard(c.guard, out);
      arg(0);
      arg(1);
      break;
    case ConstId::Query:
    case ConstId::Eval:
      out += " " + c.pred->name;
      for (std::size_t i = 0; i < sugar_arity(c); ++i) arg(i);
      break;
    default:
      for (std::size_t i = 0; i < sugar_arity(c); ++i) arg(i);
      break;
  }
  out += ')';
}

void render(const Term& t, std::string& out) {
  if (auto n = as_numeral(t)) {
    out += "(num " + std::to_string(*n) + ")";
    return;
  }
  switch (t.kind()) {
    case Term::Kind::Var:
      out += t.name();
      return;
    case Term::Kind::Const:
      render_bare(t.constant(), out);
      return;
    case Term::Kind::StateLit:
      out += to_string(t.state());
      return;
    case Term::Kind::ExLit:
      out += to_string(t.exception());
      return;
    case Term::Kind::Abs: {
      out += "(lam";
      const Term* cur = &t;
      while (cur->is(Term::Kind::Abs)) {
        out += " (" + cur->name() + " " + to_string(cur->type()) + ")";
        cur = &cur->body();
      }
      out += ' ';
      render(*cur, out);
      out += ')';
      return;
    }
    case Term::Kind::App: {
      auto [head, args] = spine(t);
      std::size_t used = 0;
      std::string head_text;
      if (head.is(Term::Kind::Const)) {
        std::size_t k = sugar_arity(head.constant());
        if (k > 0 && args.size() >= k) {
          render_sugar(head.constant(), args, head_text);
          used = k;
        } else {
          render_bare(head.constant(), head_text);
        }
      } else {
        render(head, head_text);
      }
      if (used == args.size()) {
        out += head_text;
        return;
      }
      out += "(app " + head_text;
      for (std::size_t i = used; i < args.size(); ++i) {
        out += ' ';
        render(args[i], out);
      }
      out += ')';
      return;
    }
  }
}

}  // namespace

Term parse_term(const SExpr& e, const Signature& sig, const TypeContext& free) {
  return TermParser(sig, free).parse(e);
}

Term parse_term(std::string_view text, const Signature& sig, const TypeContext& free) {
  return parse_term(read_sexpr(text), sig, free);
}

std::string to_string(const Term& t) {
  std::string out;
  render(t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Arithmetic terms and formulas

ArithTerm parse_arith(const SExpr& e, const Signature& sig) {
  if (e.is_atom) {
    if (is_number(e.atom)) return ArithTerm::numeral(to_nat(e));
    if (sig.has_function(e.atom) && sig.function(e.atom).arity == 0) return ArithTerm::fn(e.atom, {});
    if (!is_binder_name(e.atom)) fail(e, "invalid variable name " + e.atom);
    return ArithTerm::var(e.atom);
  }
  if (e.size() == 0) fail(e, "empty arithmetic term");
  const std::string& head = atom(e[0], "a function symbol");
  if (head == "succ") {
    want_size(e, 2, "succ");
    return ArithTerm::succ(parse_arith(e[1], sig));
  }
  if (!sig.has_function(head)) fail(e[0], "unknown function symbol " + head);
  if (sig.function(head).arity != e.size() - 1) fail(e, "wrong number of arguments for " + head);
  std::vector<ArithTerm> args;
  for (std::size_t i = 1; i < e.size(); ++i) args.push_back(parse_arith(e[i], sig));
  return ArithTerm::fn(head, std::move(args));
}

Formula parse_formula(const SExpr& e, const Signature& sig) {
  if (e.is_atom) {
    if (e.atom == "false") return Formula::falsum();
    if (!sig.has_predicate(e.atom)) fail(e, "unknown predicate symbol " + e.atom);
    if (sig.predicate(e.atom)->arity != 0) fail(e, "predicate " + e.atom + " needs arguments");
    return Formula::atomic(e.atom, {});
  }
  if (e.size() == 0) fail(e, "empty formula");
  const std::string& head = atom(e[0], "a connective or predicate");
  if (head == "and" || head == "or" || head == "imp") {
    want_size(e, 3, head.c_str());
    Formula a = parse_formula(e[1], sig);
    Formula b = parse_formula(e[2], sig);
    if (head == "and") return Formula::conj(std::move(a), std::move(b));
    if (head == "or") return Formula::disj(std::move(a), std::move(b));
    return Formula::implies(std::move(a), std::move(b));
  }
  if (head == "not") {
    want_size(e, 2, "not");
    return Formula::negation(parse_formula(e[1], sig));
  }
  if (head == "forall" || head == "exists") {
    want_size(e, 3, head.c_str());
    const std::string& x = atom(e[1], "a variable");
    if (!is_binder_name(x)) fail(e[1], "invalid variable name " + x);
    Formula body = parse_formula(e[2], sig);
    return head == "forall" ? Formula::forall(x, std::move(body)) : Formula::exists(x, std::move(body));
  }
  if (!sig.has_predicate(head)) fail(e[0], "unknown predicate symbol " + head);
  if (sig.predicate(head)->arity != e.size() - 1)
    fail(e, "predicate " + head + " expects " + std::to_string(sig.predicate(head)->arity) +
                " arguments");
  std::vector<ArithTerm> args;
  for (std::size_t i = 1; i < e.size(); ++i) args.push_back(parse_arith(e[i], sig));
  return Formula::atomic(head, std::move(args));
}

Formula parse_formula(std::string_view text, const Signature& sig) {
  return parse_formula(read_sexpr(text), sig);
}

namespace {

void render(const ArithTerm& t, std::string& out) {
  if (auto n = t.as_numeral()) {
    out += std::to_string(*n);
    return;
  }
  switch (t.kind()) {
    case ArithTerm::Kind::Var:
      out += t.name();
      return;
    case ArithTerm::Kind::Zero:
      out += "0";
      return;
    case ArithTerm::Kind::Succ:
      out += "(succ ";
      render(t.pred(), out);
      out += ')';
      return;
    case ArithTerm::Kind::Fn:
      if (t.args().empty()) {
        out += t.name();
        return;
      }
      out += "(" + t.name();
      for (const auto& a : t.args()) {
        out += ' ';
        render(a, out);
      }
      out += ')';
      return;
  }
}

void render(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::False:
      out += "false";
      return;
    case Formula::Kind::Atomic:
      out += "(" + f.predicate();
      for (const auto& a : f.args()) {
        out += ' ';
        render(a, out);
      }
      out += ')';
      return;
    case Formula::Kind::Implies:
      if (f.right().kind() == Formula::Kind::False) {
        out += "(not ";
        render(f.left(), out);
        out += ')';
        return;
      }
      [[fallthrough]];
    case Formula::Kind::And:
    case Formula::Kind::Or:
      out += f.kind() == Formula::Kind::And ? "(and " : f.kind() == Formula::Kind::Or ? "(or " : "(imp ";
      render(f.left(), out);
      out += ' ';
      render(f.right(), out);
      out += ')';
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      out += f.kind() == Formula::Kind::Forall ? "(forall " : "(exists ";
      out += f.var() + " ";
      render(f.body(), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string to_string(const ArithTerm& t) {
  std::string out;
  render(t, out);
  return out;
}

std::string to_string(const Formula& f) {
  std::string out;
  render(f, out);
  return out;
}

std::string to_string(const Context& ctx) {
  std::string out = "(context";
  for (const auto& a : ctx) out += " (" + a.label + " " + to_string(a.formula) + ")";
  out += ')';
  return out;
}

// ---------------------------------------------------------------------------
// Signature files

namespace {

using Interp = std::function<Nat(std::span<const Nat>)>;

Interp compile(const SExpr& e, std::size_t arity) {
  if (e.is_atom) {
    const std::string& a = e.atom;
    if (is_number(a)) {
      Nat v = to_nat(e);
      return [v](std::span<const Nat>) { return v; };
    }
    if (a == "true" || a == "always") return [](std::span<const Nat>) -> Nat { return 1; };
    if (a == "false" || a == "never") return [](std::span<const Nat>) -> Nat { return 0; };
    auto binary = [&](auto cmp) -> Interp {
      if (arity != 2) fail(e, "built-in " + a + " needs arity 2");
      return [cmp](std::span<const Nat> x) -> Nat { return cmp(x[0], x[1]) ? 1 : 0; };
    };
    if (a == "lt") return binary(std::less<Nat>());
    if (a == "le") return binary(std::less_equal<Nat>());
    if (a == "eq") return binary(std::equal_to<Nat>());
    if (a == "gt") return binary(std::greater<Nat>());
    if (a == "ge") return binary(std::greater_equal<Nat>());
    fail(e, "unknown interpretation " + a);
  }
  if (e.size() == 0) fail(e, "empty interpretation");
  const std::string& op = atom(e[0], "an operator");
  if (op == "arg") {
    want_size(e, 2, "arg");
    Nat i = to_nat(e[1]);
    if (i >= arity) fail(e, "argument index out of range");
    return [i](std::span<const Nat> x) { return x[i]; };
  }
  if (op == "table") {
    std::vector<std::vector<Nat>> rows;
    for (std::size_t i = 1; i < e.size(); ++i) {
      if (!e[i].is_list() || e[i].size() != arity) fail(e[i], "table row has the wrong width");
      std::vector<Nat> row;
      for (const auto& n : e[i].items) row.push_back(to_nat(n));
      rows.push_back(std::move(row));
    }
    return [rows](std::span<const Nat> x) -> Nat {
      for (const auto& r : rows)
        if (std::equal(r.begin(), r.end(), x.begin(), x.end())) return 1;
      return 0;
    };
  }
  std::vector<Interp> args;
  for (std::size_t i = 1; i < e.size(); ++i) args.push_back(compile(e[i], arity));
  auto need = [&](std::size_t n) {
    if (args.size() != n) fail(e, op + " expects " + std::to_string(n) + " operands");
  };
  if (op == "not") {
    need(1);
    return [f = args[0]](std::span<const Nat> x) -> Nat { return f(x) == 0 ? 1 : 0; };
  }
  if (op == "if") {
    need(3);
    return [c = args[0], a = args[1], b = args[2]](std::span<const Nat> x) { return c(x) ? a(x) : b(x); };
  }
  if (op == "and" || op == "or") {
    bool conj = op == "and";
    return [args, conj](std::span<const Nat> x) -> Nat {
      for (const auto& f : args)
        if ((f(x) != 0) != conj) return conj ? 0 : 1;
      return conj ? 1 : 0;
    };
  }
  if (op == "+" || op == "*" || op == "min" || op == "max") {
    if (args.empty()) fail(e, op + " needs operands");
    std::function<Nat(Nat, Nat)> fold;
    if (op == "+") fold = [](Nat a, Nat b) { return a + b; };
    if (op == "*") fold = [](Nat a, Nat b) { return a * b; };
    if (op == "min") fold = [](Nat a, Nat b) { return std::min(a, b); };
    if (op == "max") fold = [](Nat a, Nat b) { return std::max(a, b); };
    return [args, fold](std::span<const Nat> x) {
      Nat acc = args[0](x);
      for (std::size_t i = 1; i < args.size(); ++i) acc = fold(acc, args[i](x));
      return acc;
    };
  }
  need(2);
  auto a = args[0], b = args[1];
  if (op == "-") return [a, b](std::span<const Nat> x) { Nat p = a(x), q = b(x); return p > q ? p - q : 0; };
  if (op == "div") return [a, b](std::span<const Nat> x) { Nat q = b(x); return q ? a(x) / q : 0; };
  if (op == "mod") return [a, b](std::span<const Nat> x) { Nat q = b(x); return q ? a(x) % q : a(x); };
  if (op == "<") return [a, b](std::span<const Nat> x) -> Nat { return a(x) < b(x); };
  if (op == "<=") return [a, b](std::span<const Nat> x) -> Nat { return a(x) <= b(x); };
  if (op == "=") return [a, b](std::span<const Nat> x) -> Nat { return a(x) == b(x); };
  if (op == ">") return [a, b](std::span<const Nat> x) -> Nat { return a(x) > b(x); };
  if (op == ">=") return [a, b](std::span<const Nat> x) -> Nat { return a(x) >= b(x); };
  fail(e[0], "unknown operator " + op);
}

}  // namespace

Signature parse_signature(const SExpr& e) {
  if (!e.tagged("signature")) fail(e, "expected (signature ...)");
  Signature sig;
  for (std::size_t i = 1; i < e.size(); ++i) {
    const SExpr& d = e[i];
    if (!d.is_list() || d.size() == 0) fail(d, "malformed declaration");
    const std::string& kind = atom(d[0], "a declaration keyword");
    located(d, [&] {
      if (kind == "standard") {
        want_size(d, 1, "standard");
        Signature std_sig = Signature::standard();
        for (const auto& [name, p] : std_sig.predicates()) sig.add_predicate(name, p->arity, p->holds);
        for (const auto& [name, r] : std_sig.rules()) sig.add_rule(r);
      } else if (kind == "predicate" || kind == "function") {
        want_size(d, 4, kind.c_str());
        std::string name = atom(d[1], "a name");
        std::size_t arity = to_nat(d[2]);
        Interp f = compile(d[3], arity);
        if (kind == "predicate")
          sig.add_predicate(name, arity, [f](std::span<const Nat> x) { return f(x) != 0; });
        else
          sig.add_function(name, arity, f);
      } else if (kind == "rule") {
        want_size(d, 4, "rule");
        if (!d[2].is_list()) fail(d[2], "expected a premise list");
        AtomicRule r{atom(d[1], "a rule name"), {}, parse_formula(d[3], sig)};
        for (const auto& p : d[2].items) r.premises.push_back(parse_formula(p, sig));
        sig.add_rule(std::move(r));
      } else if (kind == "order") {
        want_size(d, 2, "order");
        sig.set_order_predicate(atom(d[1], "a predicate"));
      } else if (kind == "base") {
        want_size(d, 2, "base");
        sig.add_base_type(atom(d[1], "a type name"));
      } else {
        fail(d[0], "unknown declaration " + kind);
      }
    });
  }
  return sig;
}

Signature parse_signature(std::string_view text) {
  auto all = read_sexprs(text);
  if (all.size() != 1) throw ParseError({}, "a signature file holds exactly one (signature ...) form");
  return parse_signature(all[0]);
}

// ---------------------------------------------------------------------------
// Derivations

namespace {

class DerivationParser {
 public:
  explicit DerivationParser(const Signature& sig) : sig_(sig) {}

  Derivation parse(const SExpr& e, const Context& ctx) {
    return located(e, [&] { return parse_inner(e, ctx); });
  }

 private:
  static Context with(const Context& ctx, std::string label, Formula f) {
    Context out = ctx;
    out.push_back(Assumption{std::move(label), std::move(f)});
    return out;
  }

  Derivation parse_inner(const SExpr& e, const Context& ctx) {
    if (!e.is_list() || e.size() == 0) fail(e, "expected a proof node");
    const std::string& r = atom(e[0], "a rule name");
    if (r == "id") {
      want_size(e, 2, "id");
      return build::id(ctx, atom(e[1], "a label"));
    }
    if (r == "concl") {
      want_size(e, 3, "concl");
      Formula f = parse_formula(e[1], sig_);
      Derivation d = parse(e[2], ctx);
      d.sequent.conclusion = std::move(f);
      return d;
    }
    if (r == "atm") {
      if (e.size() < 3) fail(e, "atm expects a rule name and a conclusion");
      std::vector<Derivation> premises;
      for (std::size_t i = 3; i < e.size(); ++i) premises.push_back(parse(e[i], ctx));
      return build::atm(ctx, atom(e[1], "a rule name"), parse_formula(e[2], sig_), std::move(premises));
    }
    if (r == "and-i") {
      want_size(e, 3, "and-i");
      Derivation a = parse(e[1], ctx);
      return build::and_i(std::move(a), parse(e[2], ctx));
    }
    if (r == "and-el" || r == "and-er") {
      want_size(e, 2, r.c_str());
      Derivation p = parse(e[1], ctx);
      return r == "and-el" ? build::and_el(std::move(p)) : build::and_er(std::move(p));
    }
    if (r == "or-il") {
      want_size(e, 3, "or-il");
      Derivation p = parse(e[1], ctx);
      return build::or_il(std::move(p), parse_formula(e[2], sig_));
    }
    if (r == "or-ir") {
      want_size(e, 3, "or-ir");
      Formula a = parse_formula(e[1], sig_);
      return build::or_ir(std::move(a), parse(e[2], ctx));
    }
    if (r == "or-e") {
      want_size(e, 4, "or-e");
      Derivation major = parse(e[1], ctx);
      if (major.conclusion().kind() != Formula::Kind::Or) fail(e[1], "or-e needs a disjunction");
      auto branch = [&](const SExpr& b, const Formula& f) {
        if (!b.is_list() || b.size() != 2) fail(b, "expected (label proof)");
        std::string label = atom(b[0], "a label");
        return std::make_pair(label, parse(b[1], with(ctx, label, f)));
      };
      auto [l, left] = branch(e[2], major.conclusion().left());
      auto [rl, right] = branch(e[3], major.conclusion().right());
      return build::or_e(std::move(major), l, std::move(left), rl, std::move(right));
    }
    if (r == "imp-i") {
      want_size(e, 3, "imp-i");
      const SExpr& b = e[1];
      if (!b.is_list() || b.size() != 2) fail(b, "expected (label formula)");
      std::string label = atom(b[0], "a label");
      Formula a = parse_formula(b[1], sig_);
      Derivation body = parse(e[2], with(ctx, label, a));
      return build::imp_i(label, std::move(a), std::move(body));
    }
    if (r == "imp-e") {
      want_size(e, 3, "imp-e");
      Derivation major = parse(e[1], ctx);
      return build::imp_e(std::move(major), parse(e[2], ctx));
    }
    if (r == "forall-i") {
      want_size(e, 3, "forall-i");
      std::string x = atom(e[1], "a variable");
      return build::forall_i(x, parse(e[2], ctx));
    }
    if (r == "forall-e") {
      want_size(e, 3, "forall-e");
      Derivation p = parse(e[1], ctx);
      return build::forall_e(std::move(p), parse_arith(e[2], sig_));
    }
    if (r == "exists-i") {
      want_size(e, 4, "exists-i");
      Formula f = parse_formula(e[1], sig_);
      ArithTerm t = parse_arith(e[2], sig_);
      return build::exists_i(std::move(f), std::move(t), parse(e[3], ctx));
    }
    if (r == "exists-e") {
      want_size(e, 4, "exists-e");
      Derivation major = parse(e[1], ctx);
      const Formula& ex = major.conclusion();
      if (ex.kind() != Formula::Kind::Exists) fail(e[1], "exists-e needs an existential");
      const SExpr& b = e[2];
      if (!b.is_list() || b.size() != 2) fail(b, "expected (variable label)");
      std::string y = atom(b[0], "a variable");
      std::string label = atom(b[1], "a label");
      Formula a = subst_formula(ex.body(), ex.var(), ArithTerm::var(y));
      Derivation body = parse(e[3], with(ctx, label, std::move(a)));
      return build::exists_e(std::move(major), y, label, std::move(body));
    }
    if (r == "ind") {
      want_size(e, 4, "ind");
      Formula f = parse_formula(e[1], sig_);
      if (f.kind() != Formula::Kind::Forall) fail(e[1], "ind proves a universal formula");
      const SExpr& b = e[2];
      if (!b.is_list() || b.size() != 3) fail(b, "expected (y z label)");
      std::string y = atom(b[0], "a variable");
      std::string z = atom(b[1], "a variable");
      std::string label = atom(b[2], "a label");
      Formula ih = induction_hypothesis(f, y, z, sig_);
      Derivation step = parse(e[3], with(ctx, label, std::move(ih)));
      return build::ind(ctx, std::move(f), y, z, label, std::move(step));
    }
    if (r == "em") {
      if (e.size() < 2) fail(e, "em expects a predicate");
      std::string p = atom(e[1], "a predicate");
      if (!sig_.has_predicate(p)) fail(e[1], "unknown predicate symbol " + p);
      std::vector<ArithTerm> ts;
      for (std::size_t i = 2; i < e.size(); ++i) ts.push_back(parse_arith(e[i], sig_));
      return build::em(ctx, p, std::move(ts));
    }
    fail(e[0], "unknown rule " + r);
  }

  const Signature& sig_;
};

}  // namespace

Derivation parse_derivation(const SExpr& e, const Signature& sig) {
  if (!e.tagged("derivation")) fail(e, "expected (derivation ...)");
  Context ctx;
  std::size_t i = 1;
  if (e.size() > 1 && e[1].tagged("context")) {
    for (std::size_t j = 1; j < e[1].size(); ++j) {
      const SExpr& a = e[1][j];
      if (!a.is_list() || a.size() != 2) fail(a, "expected (label formula)");
      ctx.push_back(Assumption{atom(a[0], "a label"), parse_formula(a[1], sig)});
    }
    i = 2;
  }
  if (e.size() != i + 1) fail(e, "expected exactly one proof");
  return DerivationParser(sig).parse(e[i], ctx);
}

Derivation parse_derivation(std::string_view text, const Signature& sig) {
  return parse_derivation(read_sexpr(text), sig);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace ireal
