#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hankel/rational.hpp"

namespace hankel {

/// Complete (or budget-truncated) prime factorization of an integer >= 1.
/// factors holds certified primes in strictly increasing order; unfactored
/// holds composite cofactors left behind when the work budget ran out.
struct Factorization {
    Int value{1};
    std::vector<std::pair<Int, int>> factors;
    std::vector<Int> unfactored;

    bool complete() const { return unfactored.empty(); }
    // product of prime^exp times the unfactored cofactors
    Int reconstruct() const;
    // largest certified prime, 0 when there is none
    Int largest_prime() const;
};

/// Miller-Rabin. Deterministic witness set below 3317044064679887385961981
/// (~3.3e24); 64 pseudo-random rounds above, error probability < 2^-128.
bool is_probable_prime(const Int& x);

inline constexpr std::uint64_t kDefaultFactorBudget = 10'000'000; // rho iterations per composite

/// Trial division below 10^6, then recursive Pollard-Brent rho with
/// primality certification of every cofactor. A composite that exhausts
/// the budget is reported in Factorization::unfactored.
Factorization factor(const Int& x, std::uint64_t budget = kDefaultFactorBudget);

} // namespace hankel
