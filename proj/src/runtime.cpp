#include "ireal/runtime.hpp"

#include <algorithm>

namespace ireal {

bool witness_condition(const Predicate& p, const std::vector<Nat>& params, Nat m) {
  if (params.size() + 1 != p.arity)
    throw ArityError("witness key for " + p.name + " has " + std::to_string(params.size()) +
                     " parameters, expected " + std::to_string(p.arity == 0 ? 0 : p.arity - 1));
  std::vector<Nat> args = params;
  args.push_back(m);
  return !p(args);
}

bool witness_condition(const Signature& sig, const WitnessKey& key, Nat m) {
  return witness_condition(*sig.predicate(key.predicate), key.params, m);
}

namespace {

void validate(const WitnessMap& entries, const Signature& sig, const char* what) {
  for (const auto& [key, m] : entries)
    if (!witness_condition(sig, key, m))
      throw InvariantViolation(std::string(what) + " entry for " + key.predicate +
                               " stores " + std::to_string(m) +
                               ", which does not satisfy the witness condition");
}

bool all_sound(const WitnessMap& entries, const Signature& sig) {
  for (const auto& [key, m] : entries)
    if (!sig.has_predicate(key.predicate) || !witness_condition(sig, key, m)) return false;
  return true;
}

}  // namespace

KnowledgeState::KnowledgeState(WitnessMap entries, const Signature& sig)
    : entries_(std::move(entries)) {
  validate(entries_, sig, "state");
}

KnowledgeState KnowledgeState::trusted(WitnessMap entries) {
  KnowledgeState s;
  s.entries_ = std::move(entries);
  return s;
}

std::optional<Nat> KnowledgeState::find(const WitnessKey& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool KnowledgeState::sound(const Signature& sig) const { return all_sound(entries_, sig); }

ExceptionValue::ExceptionValue(WitnessMap claims, const Signature& sig) : claims_(std::move(claims)) {
  validate(claims_, sig, "exception");
}

ExceptionValue ExceptionValue::trusted(WitnessMap claims) {
  ExceptionValue e;
  e.claims_ = std::move(claims);
  return e;
}

bool ExceptionValue::sound(const Signature& sig) const { return all_sound(claims_, sig); }

bool state_leq(const KnowledgeState& s1, const KnowledgeState& s2) {
  for (const auto& [key, m] : s1.entries()) {
    auto other = s2.find(key);
    if (!other || *other != m) return false;
  }
  return true;
}

std::optional<KnowledgeState> apply_exception(const ExceptionValue& e, const KnowledgeState& s) {
  WitnessMap out = s.entries();
  for (const auto& [key, m] : e.claims()) {
    auto [it, inserted] = out.emplace(key, m);
    if (!inserted && it->second != m) return std::nullopt;
  }
  return KnowledgeState::trusted(std::move(out));
}

bool properly_extends(const ExceptionValue& e, const KnowledgeState& s) {
  auto next = apply_exception(e, s);
  return next && next->size() > s.size();
}

ExceptionValue merge_exceptions(const ExceptionValue& e1, const ExceptionValue& e2,
                                MergeStrategy strategy) {
  WitnessMap out = e1.claims();
  for (const auto& [key, m] : e2.claims()) {
    auto [it, inserted] = out.emplace(key, m);
    if (!inserted && strategy == MergeStrategy::Minimum) it->second = std::min(it->second, m);
  }
  return ExceptionValue::trusted(std::move(out));
}

std::optional<Nat> query(const Predicate& p, const KnowledgeState& s, const std::vector<Nat>& params) {
  if (params.size() + 1 != p.arity)
    throw ArityError("query on " + p.name + " with " + std::to_string(params.size()) + " parameters");
  return s.find(WitnessKey{p.name, params});
}

std::optional<ExceptionValue> eval_pred(const Predicate& p, const std::vector<Nat>& params,
                                        Nat candidate) {
  if (!witness_condition(p, params, candidate)) return std::nullopt;
  return ExceptionValue::trusted({{WitnessKey{p.name, params}, candidate}});
}

// ---------------------------------------------------------------------------

RuntimeSampler::RuntimeSampler(const Signature& sig, std::uint64_t seed)
    : RuntimeSampler(sig, seed, Limits{}) {}

RuntimeSampler::RuntimeSampler(const Signature& sig, std::uint64_t seed, Limits limits)
    : sig_(&sig), rng_(seed), limits_(limits) {
  for (const auto& [name, p] : sig.predicates())
    if (p->arity >= 1) preds_.push_back(p);
}

Nat RuntimeSampler::uniform(Nat lo, Nat hi) {
  return std::uniform_int_distribution<Nat>(lo, hi)(rng_);
}

std::optional<std::pair<WitnessKey, Nat>> RuntimeSampler::claim() {
  if (preds_.empty()) return std::nullopt;
  // A few attempts: some keys have no witness below the bound.
  for (int attempt = 0; attempt < 8; ++attempt) {
    const auto& p = preds_[uniform(0, preds_.size() - 1)];
    std::vector<Nat> params;
    for (std::size_t i = 0; i + 1 < p->arity; ++i) params.push_back(uniform(0, limits_.max_param));
    std::vector<Nat> witnesses;
    for (Nat m = 0; m <= limits_.max_witness; ++m)
      if (witness_condition(*p, params, m)) witnesses.push_back(m);
    if (witnesses.empty()) continue;
    Nat m = witnesses[uniform(0, witnesses.size() - 1)];
    return std::make_pair(WitnessKey{p->name, std::move(params)}, m);
  }
  return std::nullopt;
}

KnowledgeState RuntimeSampler::state() {
  WitnessMap entries;
  std::size_t n = uniform(0, limits_.max_entries);
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = claim()) entries.emplace(c->first, c->second);
  return KnowledgeState(std::move(entries), *sig_);
}

std::optional<ExceptionValue> RuntimeSampler::exception() {
  WitnessMap claims;
  std::size_t n = uniform(1, std::max<std::size_t>(1, limits_.max_entries / 2));
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = claim()) claims.emplace(c->first, c->second);
  if (claims.empty()) return std::nullopt;
  return ExceptionValue(std::move(claims), *sig_);
}

std::optional<ExceptionValue> RuntimeSampler::exception_extending(const KnowledgeState& s) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    WitnessMap claims;
    // One fresh claim guarantees strictness; optionally repeat some of s.
    auto c = claim();
    if (!c || s.find(c->first)) continue;
    claims.emplace(c->first, c->second);
    if (uniform(0, 1) == 1)
      if (auto extra = claim(); extra && !s.find(extra->first)) claims.emplace(extra->first, extra->second);
    if (!s.empty() && uniform(0, 2) == 0) {
      auto it = s.entries().begin();
      std::advance(it, uniform(0, s.size() - 1));
      claims.emplace(it->first, it->second);
    }
    ExceptionValue e(std::move(claims), *sig_);
    if (properly_extends(e, s)) return e;
  }
  return std::nullopt;
}

}  // namespace ireal
