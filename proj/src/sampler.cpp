#include "ireal/sampler.hpp"

namespace ireal {

TermSampler::TermSampler(const Signature& sig, std::uint64_t seed)
    : TermSampler(sig, seed, Options{}, nullptr) {}

TermSampler::TermSampler(const Signature& sig, std::uint64_t seed, Options opts,
                         const SyntacticMonad* monad)
    : sig_(&sig), runtime_(sig, seed, opts.runtime), opts_(opts), monad_(monad) {
  for (const auto& [name, p] : sig.predicates())
    if (p->arity >= 1) effect_preds_.push_back(p);
}

std::string TermSampler::fresh(const std::string& base) { return base + std::to_string(counter_++); }

Term TermSampler::closed(const Type& ty) {
  Env env;
  return gen(ty, env, opts_.max_depth);
}

Term TermSampler::monadic(const Type& a) {
  Env env;
  return gen_monadic(a, env, opts_.max_depth);
}

Term TermSampler::kleisli(const Type& a, const Type& b) {
  Env env;
  std::string name = fresh("v");
  env.push_back(Slot{Term::var(name, a), -1});
  Term body = gen_monadic(b, env, opts_.max_depth);
  return Term::abs(name, a, std::move(body));
}

std::vector<Term> TermSampler::arguments(const Type& ty, std::size_t n) {
  std::vector<Term> out;
  if (n == 0) return out;
  out.push_back(dummy(ty));
  while (out.size() < n) {
    if (ty.is(Type::Kind::Nat)) {
      out.push_back(mk_numeral(uniform(0, opts_.max_numeral)));
    } else if (ty.is_base("State")) {
      out.push_back(Term::state_lit(runtime_.state()));
    } else {
      out.push_back(closed(ty));
    }
  }
  return out;
}

Term TermSampler::small_nat(Env& env) {
  if (chance(30)) {
    std::vector<std::size_t> nats;
    for (std::size_t i = 0; i < env.size(); ++i)
      if (env[i].uses != 0 && env[i].var.type().is(Type::Kind::Nat)) nats.push_back(i);
    if (!nats.empty()) return env[nats[uniform(0, nats.size() - 1)]].var;
  }
  return mk_numeral(uniform(0, opts_.max_param));
}

Term TermSampler::with_binder(const Type& bound, const Type& ty, Env& env, int depth,
                              const std::string& base, std::string* name_out) {
  std::string name = fresh(base);
  if (name_out) *name_out = name;
  env.push_back(Slot{Term::var(name, bound), -1});
  Term body = gen(ty, env, depth);
  env.pop_back();
  return Term::abs(name, bound, std::move(body));
}

std::optional<Term> TermSampler::from_env(const Type& ty, Env& env, int depth) {
  std::vector<std::size_t> direct;
  std::vector<std::size_t> calls;
  for (std::size_t i = 0; i < env.size(); ++i) {
    if (env[i].uses == 0) continue;
    const Type& t = env[i].var.type();
    if (t == ty) direct.push_back(i);
    else if (t.is(Type::Kind::Arrow) && t.cod() == ty && depth > 0) calls.push_back(i);
  }
  if (direct.empty() && calls.empty()) return std::nullopt;
  std::size_t pick = uniform(0, direct.size() + calls.size() - 1);
  std::size_t i = pick < direct.size() ? direct[pick] : calls[pick - direct.size()];
  if (env[i].uses > 0) --env[i].uses;
  Term var = env[i].var;
  if (pick < direct.size()) return var;
  Term arg = gen(var.type().dom(), env, depth - 1);
  return Term::app(std::move(var), std::move(arg));
}

Term TermSampler::gen(const Type& ty, Env& env, int depth) {
  if (depth > 0 && chance(opts_.redex_weight)) {
    Type x = chance(70) ? Type::nat() : Type::unit();
    Term arg = gen(x, env, depth - 1);
    Term fn = with_binder(x, ty, env, depth - 1, "r");
    return Term::app(std::move(fn), std::move(arg));
  }
  if (chance(40))
    if (auto t = from_env(ty, env, depth)) return *t;

  const Term* state_var = nullptr;
  for (const auto& s : env)
    if (s.var.type().is_base("State")) state_var = &s.var;

  switch (ty.kind()) {
    case Type::Kind::Unit:
      return c_unit();
    case Type::Kind::Nat: {
      if (depth > 0 && chance(opts_.redex_weight)) {
        // Guarded recursion; the recursive call may be used at most once so
        // the unfolding stays linear in the numeral.
        std::optional<Nat> guard;
        if (chance(50)) guard = uniform(0, 20);
        Term n = chance(70) ? mk_numeral(uniform(0, 20)) : small_nat(env);
        std::string k = fresh("k");
        std::string r = fresh("rec");
        Type rt = Type::arrow(Type::nat(), Type::nat());
        env.push_back(Slot{Term::var(k, Type::nat()), -1});
        env.push_back(Slot{Term::var(r, rt), 1});
        Term body = gen(Type::nat(), env, depth - 1);
        env.pop_back();
        env.pop_back();
        Term h = Term::abs(k, Type::nat(), Term::abs(r, rt, std::move(body)));
        return mk_rec(guard, std::move(h), std::move(n));
      }
      if (depth > 0 && chance(20)) return mk_succ(gen(Type::nat(), env, depth - 1));
      if (depth > 0 && chance(10)) return mk_projl(mk_pair(gen(Type::nat(), env, depth - 1), c_unit()));
      return mk_numeral(uniform(0, opts_.max_numeral));
    }
    case Type::Kind::Base:
      if (ty.name() == "State") return Term::state_lit(runtime_.state());
      if (ty.name() == "Ex") {
        if (depth > 0 && chance(15))
          return mk_exmerge(gen(ty, env, depth - 1), gen(ty, env, depth - 1));
        if (auto e = runtime_.exception(); e && chance(80)) return Term::ex_lit(*e);
        return Term::ex_lit(ExceptionValue{});
      }
      return dummy(ty);
    case Type::Kind::Arrow:
      return with_binder(ty.dom(), ty.cod(), env, depth, ty.dom().is_base("State") ? "s" : "v");
    case Type::Kind::Product: {
      Term a = gen(ty.left(), env, depth);
      return mk_pair(std::move(a), gen(ty.right(), env, depth));
    }
    case Type::Kind::Sum: {
      if (depth > 0 && !effect_preds_.empty()) {
        auto p = effect_preds_[uniform(0, effect_preds_.size() - 1)];
        std::vector<Term> params;
        for (std::size_t i = 0; i + 1 < p->arity; ++i) params.push_back(small_nat(env));
        if (state_var && chance(45)) {
          Term q = mk_query(p, *state_var, params);
          Term miss = Term::abs("_", Type::unit(), gen(ty, env, depth - 1));
          Term hit = with_binder(Type::nat(), ty, env, depth - 1, "w");
          return mk_case(std::move(q), std::move(miss), std::move(hit));
        }
        if (chance(20)) {
          Term ev = mk_eval(p, params, small_nat(env));
          Term holds = Term::abs("_", Type::unit(), gen(ty, env, depth - 1));
          Term fails = with_binder(Type::ex(), ty, env, depth - 1, "e");
          return mk_case(std::move(ev), std::move(holds), std::move(fails));
        }
      }
      if (chance(50)) return mk_inl(gen(ty.left(), env, depth), ty.right());
      return mk_inr(ty.left(), gen(ty.right(), env, depth));
    }
  }
  return dummy(ty);
}

Term TermSampler::gen_monadic(const Type& a, Env& env, int depth) {
  if (!monad_) throw Error("monadic sampling needs a monad");
  const SyntacticMonad& m = *monad_;
  int roll = static_cast<int>(uniform(0, 99));
  if (depth <= 0 || roll < 30) return Term::app(m.unit_at(a), gen(a, env, depth));
  if (roll < 55) {
    Type y = chance(70) ? Type::nat() : Type::unit();
    std::string name = fresh("y");
    env.push_back(Slot{Term::var(name, y), -1});
    Term body = gen_monadic(a, env, depth - 1);
    env.pop_back();
    Term f = Term::abs(name, y, std::move(body));
    Term inner = gen_monadic(y, env, depth - 1);
    return Term::app(m.star_at(y, a), {std::move(f), std::move(inner)});
  }
  if (roll < 70 && a.is(Type::Kind::Product)) {
    Term l = gen_monadic(a.left(), env, depth - 1);
    Term r = gen_monadic(a.right(), env, depth - 1);
    return Term::app(m.merge_at(a.left(), a.right()), {std::move(l), std::move(r)});
  }
  return gen(m.T(a), env, depth);
}

// ---------------------------------------------------------------------------

namespace {

struct Observer {
  TermSampler& sampler;
  ObsOptions opts;

  ObsResult differ(const std::string& path, const Term& n1, const Term& n2) {
    return ObsResult{false, path + (path.empty() ? "" : ": ") + to_string(n1) + " vs " + to_string(n2)};
  }

  ObsResult run(const Term& t1, const Term& t2, const Type& ty, std::size_t depth, const std::string& path) {
    switch (ty.kind()) {
      case Type::Kind::Unit:
      case Type::Kind::Nat:
      case Type::Kind::Base: {
        Term n1 = normalize(t1, opts.fuel);
        Term n2 = normalize(t2, opts.fuel);
        if (alpha_eq(n1, n2)) return {};
        return differ(path, n1, n2);
      }
      case Type::Kind::Product: {
        auto l = run(Term::app(c_projl(ty.left(), ty.right()), t1),
                     Term::app(c_projl(ty.left(), ty.right()), t2), ty.left(), depth, path + " projl");
        if (!l.equal) return l;
        return run(Term::app(c_projr(ty.left(), ty.right()), t1),
                   Term::app(c_projr(ty.left(), ty.right()), t2), ty.right(), depth, path + " projr");
      }
      case Type::Kind::Sum: {
        Term n1 = normalize(t1, opts.fuel);
        Term n2 = normalize(t2, opts.fuel);
        auto side = [](const Term& t) -> int {
          if (!t.is(Term::Kind::App)) return 0;
          if (t.fun().is_const(ConstId::InjL)) return 1;
          if (t.fun().is_const(ConstId::InjR)) return 2;
          return 0;
        };
        int s1 = side(n1);
        int s2 = side(n2);
        if (s1 == 0 || s2 == 0 || s1 != s2) {
          if (s1 == s2 && alpha_eq(n1, n2)) return {};
          return differ(path, n1, n2);
        }
        return run(n1.arg(), n2.arg(), s1 == 1 ? ty.left() : ty.right(), depth,
                   path + (s1 == 1 ? " inl" : " inr"));
      }
      case Type::Kind::Arrow: {
        std::size_t k = std::max<std::size_t>(1, opts.budget >> depth);
        for (const auto& a : sampler.arguments(ty.dom(), k)) {
          auto r = run(Term::app(t1, a), Term::app(t2, a), ty.cod(), depth + 1,
                       path + " at " + to_string(a));
          if (!r.equal) return r;
        }
        return {};
      }
    }
    return {};
  }
};

}  // namespace

ObsResult obs_equal(const Term& t1, const Term& t2, const Type& ty, TermSampler& sampler,
                    ObsOptions opts) {
  if (!t1.closed() || !t2.closed()) throw Error("obs_equal expects closed terms");
  Observer o{sampler, opts};
  auto r = o.run(t1, t2, ty, 0, "");
  if (!r.equal && !r.witness.empty() && r.witness[0] == ' ') r.witness.erase(0, 1);
  return r;
}

}  // namespace ireal
