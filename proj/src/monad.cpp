#include "ireal/monad.hpp"

namespace ireal {

namespace {

Term v(const std::string& name, const Type& t) { return Term::var(name, t); }
Term lam(const std::string& name, const Type& t, Term body) { return Term::abs(name, t, std::move(body)); }

}  // namespace

SyntacticMonad identity_monad() {
  SyntacticMonad m;
  m.name = "identity";
  m.T = [](const Type& a) { return a; };
  m.unit_at = [](const Type& a) { return lam("x", a, v("x", a)); };
  m.star_at = [](const Type& a, const Type& b) {
    Type f = Type::arrow(a, b);
    return lam("f", f, v("f", f));
  };
  m.merge_at = [](const Type& a, const Type& b) { return c_pair(a, b); };
  return m;
}

SyntacticMonad exception_monad() {
  SyntacticMonad m;
  m.name = "exception";
  m.T = [](const Type& a) { return Type::sum(a, Type::ex()); };
  m.unit_at = [](const Type& a) {
    return lam("x", a, Term::app(c_inl(a, Type::ex()), v("x", a)));
  };
  m.star_at = [](const Type& a, const Type& b) {
    Type tb = Type::sum(b, Type::ex());
    Type f = Type::arrow(a, tb);
    Type ta = Type::sum(a, Type::ex());
    return lam("f", f,
               lam("m", ta,
                   Term::app(c_case(a, Type::ex(), tb), {v("m", ta), v("f", f), c_inr(b, Type::ex())})));
  };
  m.merge_at = [](const Type& a, const Type& b) {
    const Type ex = Type::ex();
    Type ab = Type::product(a, b);
    Type out = Type::sum(ab, ex);
    Type ta = Type::sum(a, ex);
    Type tb = Type::sum(b, ex);
    Term both_regular = lam(
        "x", a,
        Term::app(c_case(b, ex, out),
                  {v("mb", tb),
                   lam("y", b, Term::app(c_inl(ab, ex), Term::app(c_pair(a, b), {v("x", a), v("y", b)}))),
                   c_inr(ab, ex)}));
    Term left_exceptional = lam(
        "e1", ex,
        Term::app(c_case(b, ex, out),
                  {v("mb", tb), lam("_", b, Term::app(c_inr(ab, ex), v("e1", ex))),
                   lam("e2", ex, Term::app(c_inr(ab, ex), mk_exmerge(v("e1", ex), v("e2", ex))))}));
    return lam("ma", ta,
               lam("mb", tb,
                   Term::app(c_case(a, ex, out), {v("ma", ta), both_regular, left_exceptional})));
  };
  return m;
}

namespace {

Type ir_T(const Type& a) { return Type::arrow(Type::state(), Type::sum(a, Type::ex())); }

}  // namespace

SyntacticMonad ir_monad() {
  SyntacticMonad m;
  m.name = "ir";
  m.interactive = true;
  m.T = ir_T;
  m.unit_at = [](const Type& a) {
    return lam("x", a, lam("_", Type::state(), Term::app(c_inl(a, Type::ex()), v("x", a))));
  };
  m.star_at = [](const Type& a, const Type& b) {
    const Type st = Type::state();
    Type f = Type::arrow(a, ir_T(b));
    Type ta = ir_T(a);
    Term s = v("s", st);
    Term body = Term::app(c_case(a, Type::ex(), Type::sum(b, Type::ex())),
                          {Term::app(v("m", ta), s), lam("x", a, Term::app(v("f", f), {v("x", a), s})),
                           c_inr(b, Type::ex())});
    return lam("f", f, lam("m", ta, lam("s", st, std::move(body))));
  };
  m.merge_at = [](const Type& a, const Type& b) {
    const Type ex = Type::ex();
    const Type st = Type::state();
    Type ab = Type::product(a, b);
    Type out = Type::sum(ab, ex);
    Type ta = ir_T(a);
    Type tb = ir_T(b);
    Term s = v("s", st);
    Term mb_s = Term::app(v("mb", tb), s);
    Term both_regular = lam(
        "x", a,
        Term::app(c_case(b, ex, out),
                  {mb_s, lam("y", b, Term::app(c_inl(ab, ex), Term::app(c_pair(a, b), {v("x", a), v("y", b)}))),
                   c_inr(ab, ex)}));
    Term left_exceptional = lam(
        "e1", ex,
        Term::app(c_case(b, ex, out),
                  {mb_s, lam("_", b, Term::app(c_inr(ab, ex), v("e1", ex))),
                   lam("e2", ex, Term::app(c_inr(ab, ex), mk_exmerge(v("e1", ex), v("e2", ex))))}));
    Term body = Term::app(c_case(a, ex, out),
                          {Term::app(v("ma", ta), s), std::move(both_regular), std::move(left_exceptional)});
    return lam("ma", ta, lam("mb", tb, lam("s", st, std::move(body))));
  };
  return m;
}

SyntacticMonad monad_by_name(const std::string& name) {
  if (name == "identity") return identity_monad();
  if (name == "exception") return exception_monad();
  if (name == "ir") return ir_monad();
  throw Error("unknown monad " + name + " (expected identity, exception or ir)");
}

Term star_n(const SyntacticMonad& m, const std::vector<Type>& args, const Type& result) {
  const std::size_t k = args.size();
  Type tb = m.T(result);
  if (k == 0) return lam("f", tb, v("f", tb));
  if (k == 1) return m.star_at(args[0], result);
  // star_{k} f x y = star_{k-1} (lam z. f (projl z) (projr z)) (merge x y)
  const Type& a1 = args[0];
  const Type& a2 = args[1];
  Type f_type = Type::arrows(args, tb);
  Type prod = Type::product(a1, a2);
  std::vector<Type> tail{prod};
  tail.insert(tail.end(), args.begin() + 2, args.end());
  Term z = v("z", prod);
  Term uncurried = lam("z", prod,
                       Term::app(v("f", f_type), {Term::app(c_projl(a1, a2), z), Term::app(c_projr(a1, a2), z)}));
  Term merged = Term::app(m.merge_at(a1, a2), {v("x", m.T(a1)), v("y", m.T(a2))});
  Term body = Term::app(star_n(m, tail, result), {std::move(uncurried), std::move(merged)});
  return lam("f", f_type, lam("x", m.T(a1), lam("y", m.T(a2), std::move(body))));
}

Term raise_n(const SyntacticMonad& m, const std::vector<Type>& args, const Type& result) {
  Type f_type = Type::arrows(args, result);
  // lam x1 ... xk. unit (f x1 ... xk)
  std::vector<Term> xs;
  for (std::size_t i = 0; i < args.size(); ++i) xs.push_back(v("x" + std::to_string(i + 1), args[i]));
  Term inner = Term::app(m.unit_at(result), Term::app(v("f", f_type), xs));
  for (std::size_t i = args.size(); i-- > 0;) inner = lam(xs[i].name(), args[i], std::move(inner));
  return lam("f", f_type, Term::app(star_n(m, args, result), std::move(inner)));
}

Term bind_of(const SyntacticMonad& m, const Type& a, const Type& b) {
  Type ta = m.T(a);
  Type f = Type::arrow(a, m.T(b));
  return lam("m", ta, lam("f", f, Term::app(m.star_at(a, b), {v("f", f), v("m", ta)})));
}

std::vector<SyntacticMonad> mutant_monads() {
  std::vector<SyntacticMonad> out;
  {
    SyntacticMonad m = identity_monad();
    m.name = "identity/unit-dummy";
    m.unit_at = [](const Type& a) { return lam("x", a, dummy(a)); };
    out.push_back(m);
  }
  {
    SyntacticMonad m = identity_monad();
    m.name = "identity/star-dummy";
    m.star_at = [](const Type& a, const Type& b) {
      return lam("f", Type::arrow(a, b), lam("m", a, dummy(b)));
    };
    out.push_back(m);
  }
  {
    SyntacticMonad m = identity_monad();
    m.name = "identity/merge-drops-right";
    m.merge_at = [](const Type& a, const Type& b) {
      return lam("x", a, lam("y", b, Term::app(c_pair(a, b), {v("x", a), dummy(b)})));
    };
    out.push_back(m);
  }
  {
    SyntacticMonad m = exception_monad();
    m.name = "exception/star-throws";
    m.star_at = [](const Type& a, const Type& b) {
      Type ta = Type::sum(a, Type::ex());
      Type tb = Type::sum(b, Type::ex());
      return lam("f", Type::arrow(a, tb), lam("m", ta, Term::app(c_inr(b, Type::ex()), dummy(Type::ex()))));
    };
    out.push_back(m);
  }
  {
    SyntacticMonad m = ir_monad();
    m.name = "ir/star-forgets-state";
    m.star_at = [](const Type& a, const Type& b) {
      const Type st = Type::state();
      Type f = Type::arrow(a, ir_T(b));
      Type ta = ir_T(a);
      Term body = Term::app(
          c_case(a, Type::ex(), Type::sum(b, Type::ex())),
          {Term::app(v("m", ta), v("s", st)), lam("x", a, Term::app(v("f", f), {v("x", a), dummy(st)})),
           c_inr(b, Type::ex())});
      return lam("f", f, lam("m", ta, lam("s", st, std::move(body))));
    };
    out.push_back(m);
  }
  {
    SyntacticMonad m = ir_monad();
    m.name = "ir/star-runs-at-empty-state";
    m.star_at = [](const Type& a, const Type& b) {
      const Type st = Type::state();
      Type f = Type::arrow(a, ir_T(b));
      Type ta = ir_T(a);
      Term body = Term::app(
          c_case(a, Type::ex(), Type::sum(b, Type::ex())),
          {Term::app(v("m", ta), dummy(st)), lam("x", a, Term::app(v("f", f), {v("x", a), v("s", st)})),
           c_inr(b, Type::ex())});
      return lam("f", f, lam("m", ta, lam("s", st, std::move(body))));
    };
    out.push_back(m);
  }
  return out;
}

}  // namespace ireal
