#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "sixsieve/core.hpp"

namespace sixsieve {

// Reference implementations used for verification only. These are built
// from different first principles than the scan path, so agreement between
// the two is evidence rather than tautology.

// Bit sieve of Eratosthenes over [0, limit].
class SieveTable {
public:
    explicit SieveTable(std::int64_t limit);

    std::int64_t limit() const noexcept { return limit_; }
    bool is_prime(std::int64_t n) const;
    std::int64_t count_up_to(std::int64_t h) const;

private:
    std::int64_t limit_;
    std::vector<bool> composite_;
};

// True iff |n| is prime; the sign is ignored.
bool is_prime_trial(std::int64_t n);

// pi(h) via a freshly built SieveTable. Throws ResourceError above the
// memory budget.
std::int64_t oracle_pi(std::int64_t h);

// The off-axis matrix values {a(i,j) : i,j != 0} clipped to [-bound, bound],
// computed by exhaustive enumeration and deduplicated.
std::set<std::int64_t> brute_force_A_tilde(std::int64_t bound);

// Checks that the complement of the off-axis matrix values in [-bound,bound]
// is exactly the set of n with |6n+1| prime, plus n = 0 (|6n+1| = 1, the
// unit generated by the excluded axes).
bool leopoldo_check(std::int64_t bound);

}  // namespace sixsieve
