#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ireal/term.hpp"

namespace ireal {

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

/// Contracts the redex formed by `head` applied to the leading arguments, if
/// they have the required canonical shape; remaining arguments are reapplied.
std::optional<Term> contract(const Term& head, const std::vector<Term>& args);

/// One leftmost-outermost reduction step, or nullopt when `t` is normal.
std::optional<Term> step(const Term& t);

/// Every term reachable from `t` by contracting exactly one redex, in
/// leftmost-outermost order.
std::vector<Term> reducts(const Term& t);

bool is_normal(const Term& t);

/// Full normal form. Throws FuelExhausted once more than `fuel` contractions
/// are needed. `used`, when given, receives the number of contractions.
Term normalize(const Term& t, std::uint64_t fuel = kDefaultFuel, std::uint64_t* used = nullptr);

/// Weak head normal form under the same fuel discipline.
Term whnf(const Term& t, std::uint64_t fuel = kDefaultFuel);

}  // namespace ireal
