#pragma once

#include <cstdint>
#include <functional>

#include "sixsieve/lambda.hpp"

namespace sixsieve {

// Pluggable evaluator for L over [c1,c2]; the parallel runner can be
// dropped in here. When empty, a sequential lambda_range is used.
using LambdaFn = std::function<std::uint64_t(std::int64_t c1, std::int64_t c2)>;

// The published interval count 2(c2-c1) - L(c1,c2) + 1, verbatim.
// Requires 8 <= c1 < c2. This equals the number of primes in
// (6c1-1, 6c2+1] only when 6c1-1 is itself prime; see prime_count_candidates
// for the unconditional count.
std::int64_t delta_pi_paper(GeneratorIndex c1, GeneratorIndex c2,
                            ScanVariant variant = ScanVariant::Fast,
                            const LambdaFn& eval = {});

// Exact count of primes among {6c+1, 6c-1 : c in [c1,c2]}:
// 2(c2-c1+1) - L(c1,c2). Requires 1 <= c1 <= c2.
std::uint64_t prime_count_candidates(GeneratorIndex c1, GeneratorIndex c2,
                                     ScanVariant variant = ScanVariant::Fast,
                                     const LambdaFn& eval = {});

// pi(6c2+1) = 2*c2 - L(8,c2), counting all primes including 2 and 3.
// Requires c2 >= 8.
std::uint64_t pi_exact(GeneratorIndex c2,
                       ScanVariant variant = ScanVariant::Fast,
                       const LambdaFn& eval = {});

// pi(h) for any h >= 2. Below 49 this consults the sieve oracle directly;
// otherwise pi_exact at c2 = (h-1)/6 plus a correction for a trailing
// 6(c2+1)-1 candidate that still fits under h.
std::uint64_t pi_of_h(std::int64_t h,
                      ScanVariant variant = ScanVariant::Fast,
                      const LambdaFn& eval = {});

}  // namespace sixsieve
