#include "sixsieve/oracle.hpp"

#include <cstdlib>

namespace sixsieve {

namespace {

constexpr std::int64_t kSieveLimitBudget = 200'000'000;  // ~25 MB of flags
constexpr std::int64_t kBruteForceBudget = 10'000;

}  // namespace

SieveTable::SieveTable(std::int64_t limit) : limit_(limit) {
    if (limit < 0)
        throw std::invalid_argument("sieve limit must be non-negative");
    if (limit > kSieveLimitBudget)
        throw ResourceError("sieve limit exceeds memory budget");
    composite_.assign(static_cast<std::size_t>(limit) + 1, false);
    if (limit >= 0)
        composite_[0] = true;
    if (limit >= 1)
        composite_[1] = true;
    for (std::int64_t p = 2; p * p <= limit; ++p) {
        if (composite_[static_cast<std::size_t>(p)])
            continue;
        for (std::int64_t m = p * p; m <= limit; m += p)
            composite_[static_cast<std::size_t>(m)] = true;
    }
}

bool SieveTable::is_prime(std::int64_t n) const {
    if (n < 0 || n > limit_)
        throw std::invalid_argument("index outside sieve table");
    return !composite_[static_cast<std::size_t>(n)];
}

std::int64_t SieveTable::count_up_to(std::int64_t h) const {
    if (h > limit_)
        throw std::invalid_argument("count bound outside sieve table");
    std::int64_t count = 0;
    for (std::int64_t n = 2; n <= h; ++n)
        count += !composite_[static_cast<std::size_t>(n)];
    return count;
}

bool is_prime_trial(std::int64_t n) {
    const std::int64_t v = n < 0 ? -n : n;
    if (v < 2)
        return false;
    for (std::int64_t d = 2; d * d <= v; ++d)
        if (v % d == 0)
            return false;
    return true;
}

std::int64_t oracle_pi(std::int64_t h) {
    if (h < 0)
        throw std::invalid_argument("oracle_pi requires h >= 0");
    if (h < 2)
        return 0;
    return SieveTable(h).count_up_to(h);
}

std::set<std::int64_t> brute_force_A_tilde(std::int64_t bound) {
    if (bound < 0)
        throw std::invalid_argument("bound must be non-negative");
    if (bound > kBruteForceBudget)
        throw ResourceError("brute-force enumeration bound exceeds budget");
    // Any element of magnitude <= bound has a representation with
    // |i| <= (bound+1)/5, so this window is exhaustive.
    std::set<std::int64_t> out;
    const std::int64_t w = bound + 1;
    for (std::int64_t i = -w; i <= w; ++i) {
        if (i == 0)
            continue;
        const std::int64_t row = 6 * i + 1;
        for (std::int64_t j = -w; j <= w; ++j) {
            if (j == 0)
                continue;
            const std::int64_t a = i + j * row;
            if (a >= -bound && a <= bound)
                out.insert(a);
        }
    }
    return out;
}

bool leopoldo_check(std::int64_t bound) {
    if (bound < 1)
        throw std::invalid_argument("bound must be positive");
    const auto composites = brute_force_A_tilde(bound);
    for (std::int64_t n = -bound; n <= bound; ++n) {
        const bool survives = !composites.contains(n);
        const std::int64_t candidate = 6 * n + 1;
        const bool generates =
            is_prime_trial(candidate) || (candidate == 1 || candidate == -1);
        if (survives != generates)
            return false;
    }
    return true;
}

}  // namespace sixsieve
