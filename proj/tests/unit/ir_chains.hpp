#pragma once

// The three reduction chains that show the ir monad satisfies M1-M3, started
// from open terms and run with the kernel's leftmost-outermost strategy.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ireal/monad.hpp"
#include "ireal/reduce.hpp"

namespace test {

struct IrChain {
  std::string law;
  ireal::Term start;
  /// Where the chain stops before the eta and surjective-pairing steps.
  ireal::Term last;
  /// Number of kernel steps, counted by hand on the displayed chain.
  std::size_t steps;
  /// The law as closed terms of type `type`: both sides abstracted over the
  /// free variables, to be compared observationally.
  ireal::Term closed_lhs;
  ireal::Term closed_rhs;
  ireal::Type type;
};

inline std::vector<IrChain> ir_chains() {
  using namespace ireal;
  SyntacticMonad m = ir_monad();
  Type a = Type::nat();
  Type b = Type::unit();
  Type ex = Type::ex();
  Type st = Type::state();
  Type ta = m.T(a);
  Type tb = m.T(b);
  Term mv = Term::var("m", ta);
  Term s = Term::var("s", st);
  Term av = Term::var("a", a);
  Term bv = Term::var("b", b);
  Type ft = Type::arrow(a, tb);
  Term fv = Term::var("f", ft);

  std::vector<IrChain> out;
  {
    Term start = Term::app(m.star_at(a, a), {m.unit_at(a), mv});
    Term last = Term::abs(
        "s", st,
        Term::app(c_case(a, ex, Type::sum(a, ex)),
                  {Term::app(mv, s), Term::abs("x", a, Term::app(c_inl(a, ex), Term::var("x", a))), c_inr(a, ex)}));
    out.push_back({"M1", start, last, 4, Term::abs("m", ta, start), Term::abs("m", ta, mv), Type::arrow(ta, ta)});
  }
  {
    Term start = Term::app(m.star_at(a, b), {fv, Term::app(m.unit_at(a), av)});
    Term last = Term::abs("s", st, Term::app(fv, {av, s}));
    Type ty = Type::arrows({ft, a}, tb);
    out.push_back({"M2", start, last, 6, Term::abs("f", ft, Term::abs("a", a, start)),
                   Term::abs("f", ft, Term::abs("a", a, Term::app(fv, av))), ty});
  }
  {
    Type ab = Type::product(a, b);
    Term start = Term::app(m.merge_at(a, b), {Term::app(m.unit_at(a), av), Term::app(m.unit_at(b), bv)});
    Term last = Term::abs("s", st, Term::app(c_inl(ab, ex), Term::app(c_pair(a, b), {av, bv})));
    Term rhs = Term::app(m.unit_at(ab), Term::app(c_pair(a, b), {av, bv}));
    Type ty = Type::arrows({a, b}, m.T(ab));
    out.push_back({"M3", start, last, 10, Term::abs("a", a, Term::abs("b", b, start)),
                   Term::abs("a", a, Term::abs("b", b, rhs)), ty});
  }
  return out;
}

/// Every term along the leftmost-outermost chain, one per line.
inline std::vector<ireal::Term> chain_terms(const ireal::Term& start) {
  std::vector<ireal::Term> terms{start};
  while (auto next = ireal::step(terms.back())) terms.push_back(*next);
  return terms;
}

inline std::string chain_text(const std::vector<ireal::Term>& terms) {
  std::string out;
  for (const auto& t : terms) out += ireal::to_string(t) + "\n";
  return out;
}

inline std::string golden_path(const std::string& law) {
  return std::string(IREAL_CORPUS_DIR) + "/golden/ir-" + law + ".trace";
}

/// Compares with the golden file; IREAL_UPDATE_GOLDEN=1 rewrites it instead.
inline bool matches_golden(const std::string& path, const std::string& text) {
  if (const char* u = std::getenv("IREAL_UPDATE_GOLDEN"); u && std::string(u) == "1") {
    std::ofstream(path, std::ios::binary) << text;
    return true;
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str() == text;
}

}  // namespace test
