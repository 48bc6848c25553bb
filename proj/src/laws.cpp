#include "ireal/laws.hpp"

#include <sstream>

namespace ireal {

bool LawReport::passed() const {
  for (const auto& l : laws)
    if (!l.passed) return false;
  return true;
}

std::string LawReport::to_text() const {
  std::ostringstream out;
  out << "monad " << monad << " seed " << seed << "\n";
  for (const auto& l : laws) {
    out << "law " << l.law << " " << (l.passed ? "pass" : "fail") << " samples " << l.samples;
    if (!l.passed) out << " replay-seed " << l.failing_seed;
    out << "\n";
    if (!l.passed) out << "  counterexample: " << l.counterexample << "\n";
  }
  out << "result " << (passed() ? "pass" : "fail") << "\n";
  return out.str();
}

std::vector<Type> default_menu(const SyntacticMonad& m) {
  return {Type::nat(), Type::unit(), Type::product(Type::nat(), Type::unit()),
          Type::arrow(Type::nat(), m.T(Type::nat()))};
}

Signature law_universe() {
  Signature sig = Signature::standard();
  sig.add_predicate("P", 1, [](std::span<const Nat> a) { return a[0] <= 4; });
  sig.add_predicate("Q", 2, [](std::span<const Nat> a) { return a[0] < a[1]; });
  return sig;
}

std::uint64_t law_sample_seed(std::uint64_t seed, const std::string& law, std::size_t index) {
  // splitmix64 over (seed, law, index)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  for (char c : law) z = (z ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string check_law_sample(const SyntacticMonad& m, const std::string& law, const Signature& sig,
                             const LawOptions& opts, std::size_t index) {
  std::vector<Type> menu = opts.menu.empty() ? default_menu(m) : opts.menu;
  const std::size_t n = menu.size();
  const Type& a = menu[index % n];
  const Type& b = menu[(index / n) % n];
  TermSampler gen(sig, law_sample_seed(opts.seed, law, index), opts.sampler, &m);

  Term lhs = c_unit();
  Term rhs = c_unit();
  Type ty = Type::unit();
  if (law == "M1") {
    Term mhat = gen.monadic(a);
    lhs = Term::app(m.star_at(a, a), {m.unit_at(a), mhat});
    rhs = mhat;
    ty = m.T(a);
  } else if (law == "M2") {
    Term f = gen.kleisli(a, b);
    Term x = gen.closed(a);
    lhs = Term::app(m.star_at(a, b), {f, Term::app(m.unit_at(a), x)});
    rhs = Term::app(f, x);
    ty = m.T(b);
  } else if (law == "M3") {
    Term x = gen.closed(a);
    Term y = gen.closed(b);
    lhs = Term::app(m.merge_at(a, b), {Term::app(m.unit_at(a), x), Term::app(m.unit_at(b), y)});
    rhs = Term::app(m.unit_at(Type::product(a, b)), mk_pair(x, y));
    ty = m.T(Type::product(a, b));
  } else {
    throw Error("unknown law " + law);
  }
  auto r = obs_equal(lhs, rhs, ty, gen, opts.obs);
  if (r.equal) return {};
  return law + " at type " + to_string(ty) + ": " + to_string(lhs) + " vs " + to_string(rhs) +
         " differ (" + r.witness + ")";
}

LawReport check_monad_laws(const SyntacticMonad& m, const LawOptions& opts) {
  return check_monad_laws(m, law_universe(), opts);
}

LawReport check_monad_laws(const SyntacticMonad& m, const Signature& sig, const LawOptions& opts) {
  LawReport report;
  report.monad = m.name;
  report.seed = opts.seed;
  for (const char* law : {"M1", "M2", "M3"}) {
    LawResult res;
    res.law = law;
    for (std::size_t i = 0; i < opts.samples_per_law; ++i) {
      ++res.samples;
      std::string cex = check_law_sample(m, law, sig, opts, i);
      if (!cex.empty()) {
        res.passed = false;
        res.failing_seed = law_sample_seed(opts.seed, law, i);
        res.counterexample = cex;
        break;
      }
    }
    report.laws.push_back(std::move(res));
  }
  return report;
}

}  // namespace ireal
