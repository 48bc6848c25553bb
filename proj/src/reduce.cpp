#include "ireal/reduce.hpp"

#include <utility>

namespace ireal {

namespace {

Term rebuild(Term head, const std::vector<Term>& args, std::size_t from = 0) {
  for (std::size_t i = from; i < args.size(); ++i) head = Term::app(std::move(head), args[i]);
  return head;
}

// Payload of `inl x` / `inr x`, with the side in `left`.
std::optional<Term> injection(const Term& t, bool& left) {
  if (!t.is(Term::Kind::App)) return std::nullopt;
  const Term& f = t.fun();
  if (f.is_const(ConstId::InjL)) {
    left = true;
    return t.arg();
  }
  if (f.is_const(ConstId::InjR)) {
    left = false;
    return t.arg();
  }
  return std::nullopt;
}

std::optional<std::pair<Term, Term>> pair_parts(const Term& t) {
  if (!t.is(Term::Kind::App) || !t.fun().is(Term::Kind::App)) return std::nullopt;
  if (!t.fun().fun().is_const(ConstId::Pair)) return std::nullopt;
  return std::make_pair(t.fun().arg(), t.arg());
}

std::optional<std::vector<Nat>> numerals(const std::vector<Term>& args, std::size_t from,
                                         std::size_t to) {
  std::vector<Nat> out;
  for (std::size_t i = from; i < to; ++i) {
    auto n = as_numeral(args[i]);
    if (!n) return std::nullopt;
    out.push_back(*n);
  }
  return out;
}

}  // namespace

std::optional<Term> contract(const Term& head, const std::vector<Term>& args) {
  if (head.is(Term::Kind::Abs)) {
    if (args.empty()) return std::nullopt;
    return rebuild(subst(head.body(), head.name(), args[0]), args, 1);
  }
  if (!head.is(Term::Kind::Const)) return std::nullopt;
  const Constant& c = head.constant();
  std::size_t n = redex_arity(c);
  if (n == 0 || args.size() < n) return std::nullopt;

  switch (c.id) {
    case ConstId::ProjL:
    case ConstId::ProjR: {
      auto parts = pair_parts(args[0]);
      if (!parts) return std::nullopt;
      return rebuild(c.id == ConstId::ProjL ? parts->first : parts->second, args, 1);
    }
    case ConstId::Case: {
      bool left = true;
      auto payload = injection(args[0], left);
      if (!payload) return std::nullopt;
      return rebuild(Term::app(left ? args[1] : args[2], *payload), args, 3);
    }
    case ConstId::Rec: {
      auto m = as_numeral(args[1]);
      if (!m) return std::nullopt;
      const Type& result = c.targs[0];
      if (c.guard && *m >= *c.guard) return rebuild(dummy(result), args, 2);
      Term inner = Term::app(c_rec(*m, result), args[0]);
      return rebuild(Term::app(args[0], {args[1], std::move(inner)}), args, 2);
    }
    case ConstId::ExMerge: {
      if (!args[0].is(Term::Kind::ExLit) || !args[1].is(Term::Kind::ExLit)) return std::nullopt;
      return rebuild(Term::ex_lit(merge_exceptions(args[0].exception(), args[1].exception())), args,
                     2);
    }
    case ConstId::Query: {
      if (!args[0].is(Term::Kind::StateLit)) return std::nullopt;
      auto params = numerals(args, 1, n);
      if (!params) return std::nullopt;
      auto hit = query(*c.pred, args[0].state(), *params);
      Term out = hit ? Term::app(c_inr(Type::unit(), Type::nat()), mk_numeral(*hit))
                     : Term::app(c_inl(Type::unit(), Type::nat()), c_unit());
      return rebuild(std::move(out), args, n);
    }
    case ConstId::Eval: {
      auto values = numerals(args, 0, n);
      if (!values) return std::nullopt;
      Nat candidate = values->back();
      values->pop_back();
      auto e = eval_pred(*c.pred, *values, candidate);
      Term out = e ? Term::app(c_inr(Type::unit(), Type::ex()), Term::ex_lit(*e))
                   : Term::app(c_inl(Type::unit(), Type::ex()), c_unit());
      return rebuild(std::move(out), args, n);
    }
    default:
      return std::nullopt;
  }
}

std::optional<Term> step(const Term& t) {
  auto [head, args] = spine(t);
  if (auto r = contract(head, args)) return r;
  if (head.is(Term::Kind::Abs)) {
    // args is empty here: an abstraction with arguments is always a redex.
    if (auto b = step(head.body())) return Term::abs(head.name(), head.type(), std::move(*b));
    return std::nullopt;
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (auto a = step(args[i])) {
      args[i] = std::move(*a);
      return rebuild(head, args);
    }
  }
  return std::nullopt;
}

std::vector<Term> reducts(const Term& t) {
  std::vector<Term> out;
  auto [head, args] = spine(t);
  if (head.is(Term::Kind::Abs)) {
    // Redexes (lam x. b) a1 and those inside b, each with the whole spine.
    if (auto r = contract(head, args)) out.push_back(std::move(*r));
    for (auto& b : reducts(head.body()))
      out.push_back(rebuild(Term::abs(head.name(), head.type(), std::move(b)), args));
  } else if (head.is(Term::Kind::Const)) {
    if (auto r = contract(head, args)) out.push_back(std::move(*r));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    for (auto& a : reducts(args[i])) {
      auto copy = args;
      copy[i] = std::move(a);
      out.push_back(rebuild(head, copy));
    }
  }
  return out;
}

bool is_normal(const Term& t) { return !step(t).has_value(); }

namespace {

class Normalizer {
 public:
  explicit Normalizer(std::uint64_t fuel) : fuel_(fuel) {}

  std::uint64_t used() const { return used_; }

  Term whnf(const Term& t) {
    auto [head, args] = spine(t);
    while (true) {
      if (head.is(Term::Kind::Const)) force(head.constant(), args);
      auto r = contract(head, args);
      if (!r) return rebuild(head, args);
      tick();
      std::tie(head, args) = spine(*r);
    }
  }

  Term nf(const Term& t) {
    Term w = whnf(t);
    if (w.is(Term::Kind::Abs)) return Term::abs(w.name(), w.type(), nf(w.body()));
    auto [head, args] = spine(w);
    if (args.empty()) return w;
    for (auto& a : args) a = nf(a);
    return rebuild(head, args);
  }

 private:
  void tick() {
    if (used_ >= fuel_)
      throw FuelExhausted("normalization exceeded " + std::to_string(fuel_) + " steps");
    ++used_;
  }

  // Brings the arguments a constant inspects into the form its rule needs.
  void force(const Constant& c, std::vector<Term>& args) {
    std::size_t n = redex_arity(c);
    if (n == 0 || args.size() < n) return;
    switch (c.id) {
      case ConstId::ProjL:
      case ConstId::ProjR:
      case ConstId::Case:
        args[0] = whnf(args[0]);
        break;
      case ConstId::Rec:
        args[1] = nf(args[1]);
        break;
      case ConstId::ExMerge:
        args[0] = whnf(args[0]);
        args[1] = whnf(args[1]);
        break;
      case ConstId::Query:
        args[0] = whnf(args[0]);
        for (std::size_t i = 1; i < n; ++i) args[i] = nf(args[i]);
        break;
      case ConstId::Eval:
        for (std::size_t i = 0; i < n; ++i) args[i] = nf(args[i]);
        break;
      default:
        break;
    }
  }

  std::uint64_t fuel_;
  std::uint64_t used_ = 0;
};

}  // namespace

Term normalize(const Term& t, std::uint64_t fuel, std::uint64_t* used) {
  Normalizer n(fuel);
  Term out = n.nf(t);
  if (used) *used = n.used();
  return out;
}

Term whnf(const Term& t, std::uint64_t fuel) {
  Normalizer n(fuel);
  return n.whnf(t);
}

}  // namespace ireal
