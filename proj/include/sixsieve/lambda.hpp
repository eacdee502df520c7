#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sixsieve/core.hpp"

namespace sixsieve {

// Which factorization shape a scan proves.
enum class ScanBranch { BetaBeta, AlphaAlpha, AlphaBeta };

// Scan ranges: Faithful walks the published linear ranges verbatim,
// Fast reaches the same verdicts by square-root-bounded trial division.
enum class ScanVariant { Faithful, Fast };

// A scan value x together with the cofactor q that certifies compositeness:
//   BetaBeta / AlphaAlpha:  x + q(6x+1) = c    (6c+1 = (6x+1)(6q+1))
//   AlphaBeta:              x + q(6x+1) = -c   (-(6c-1) = (6x+1)(6q+1))
struct ScanWitness {
    std::int64_t x = 0;
    std::int64_t cofactor = 0;
    ScanBranch branch = ScanBranch::BetaBeta;
};

struct CandidateClassification {
    GeneratorIndex c;
    bool alpha_composite = false;  // 6c+1 composite
    bool beta_composite = false;   // 6c-1 composite
    std::optional<ScanWitness> alpha_witness;
    std::optional<ScanWitness> beta_witness;
};

struct PrimeRecord {
    std::int64_t c = 0;
    std::int64_t value = 0;  // 6c+1 (Alpha) or 6c-1 (Beta), always positive
    ClassTag tag = ClassTag::Alpha;

    friend bool operator==(const PrimeRecord&, const PrimeRecord&) = default;
};

struct LambdaResult {
    std::int64_t c1 = 0;
    std::int64_t c2 = 0;
    std::uint64_t L = 0;                // composite candidates in [c1,c2]
    std::vector<PrimeRecord> primes;    // ascending by value, when emitted
};

// First x in [-(c+1)/5, -(isqrt(1+6c)+1)/6], x != 0, with (6x+1) | (c-x).
// A hit factors 6c+1 into two negative beta-class factors.
std::optional<ScanWitness> scan_beta_beta(GeneratorIndex c);

// First x in [1, (isqrt(1+6c)-1)/6] with (6x+1) | (c-x).
// A hit factors 6c+1 into two alpha-class factors.
std::optional<ScanWitness> scan_alpha_alpha(GeneratorIndex c);

// First x in [-(c+1)/7, -1] with (6x+1) | (-c-x).
// A hit factors -(6c-1), proving 6c-1 composite.
std::optional<ScanWitness> scan_alpha_beta(GeneratorIndex c);

// Classify both candidates of c using the three scans, in scan order
// (beta-beta first, then alpha-alpha, then alpha-beta).
CandidateClassification classify(GeneratorIndex c);

// Same verdicts as classify, via trial division of 6c±1 by 6k±1 divisors
// up to the square root. Witnesses may differ but satisfy the same identity.
CandidateClassification classify_fast(GeneratorIndex c);

// Accumulate L over [c1,c2] and optionally emit the surviving primes.
LambdaResult lambda_range(GeneratorIndex c1, GeneratorIndex c2,
                          bool emit_primes, ScanVariant variant);

}  // namespace sixsieve
