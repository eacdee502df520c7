#include "sixsieve/lambda.hpp"

namespace sixsieve {

namespace {

void require_positive(GeneratorIndex c) {
    if (c.value() < 1)
        throw std::invalid_argument("scan requires c >= 1");
}

// 6x+1 form of a positive factor f with f = 1 or 5 (mod 6).
// f = 1 (mod 6) maps to x = (f-1)/6; otherwise -f is used, x = (-f-1)/6.
std::int64_t factor_index(std::int64_t f) {
    return f % 6 == 1 ? (f - 1) / 6 : (-f - 1) / 6;
}

// Smallest divisor of v among 5, 7, 11, 13, ... up to sqrt(v).
// v is coprime to 6 here, so this finds a divisor iff v is composite.
std::optional<std::int64_t> smallest_wheel_divisor(std::int64_t v) {
    const std::int64_t root = isqrt(v);
    std::int64_t d = 5;
    while (d <= root) {
        if (v % d == 0)
            return d;
        d += (d % 6 == 5) ? 2 : 4;
    }
    return std::nullopt;
}

}  // namespace

std::optional<ScanWitness> scan_beta_beta(GeneratorIndex ci) {
    require_positive(ci);
    const std::int64_t c = ci.value();
    const std::int64_t lo = -((c + 1) / 5);
    const std::int64_t hi = -((isqrt(1 + 6 * c) + 1) / 6);
    for (std::int64_t x = lo; x <= hi; ++x) {
        if (x == 0)
            continue;  // 6*0+1 = 1 divides everything; the off-axis set excludes it
        const std::int64_t d = 6 * x + 1;
        if ((c - x) % d == 0)
            return ScanWitness{x, (c - x) / d, ScanBranch::BetaBeta};
    }
    return std::nullopt;
}

std::optional<ScanWitness> scan_alpha_alpha(GeneratorIndex ci) {
    require_positive(ci);
    const std::int64_t c = ci.value();
    const std::int64_t hi = (isqrt(1 + 6 * c) - 1) / 6;
    for (std::int64_t x = 1; x <= hi; ++x) {
        const std::int64_t d = 6 * x + 1;
        if ((c - x) % d == 0)
            return ScanWitness{x, (c - x) / d, ScanBranch::AlphaAlpha};
    }
    return std::nullopt;
}

std::optional<ScanWitness> scan_alpha_beta(GeneratorIndex ci) {
    require_positive(ci);
    const std::int64_t c = ci.value();
    const std::int64_t lo = -((c + 1) / 7);
    for (std::int64_t x = lo; x <= -1; ++x) {
        const std::int64_t d = 6 * x + 1;
        if ((-c - x) % d == 0)
            return ScanWitness{x, (-c - x) / d, ScanBranch::AlphaBeta};
    }
    return std::nullopt;
}

CandidateClassification classify(GeneratorIndex c) {
    require_positive(c);
    CandidateClassification out{c};
    auto alpha = scan_beta_beta(c);
    if (!alpha)
        alpha = scan_alpha_alpha(c);
    if (alpha) {
        out.alpha_composite = true;
        out.alpha_witness = *alpha;
    }
    if (auto beta = scan_alpha_beta(c)) {
        out.beta_composite = true;
        out.beta_witness = *beta;
    }
    return out;
}

CandidateClassification classify_fast(GeneratorIndex ci) {
    require_positive(ci);
    const std::int64_t c = ci.value();
    CandidateClassification out{ci};

    const std::int64_t alpha_value = 6 * c + 1;
    if (auto d = smallest_wheel_divisor(alpha_value)) {
        // Both factors are in the same class (alpha*alpha or beta*beta);
        // beta factors enter negated so both carry the 6x+1 form.
        const std::int64_t e = alpha_value / *d;
        out.alpha_composite = true;
        out.alpha_witness = ScanWitness{
            factor_index(*d), factor_index(e),
            *d % 6 == 1 ? ScanBranch::AlphaAlpha : ScanBranch::BetaBeta};
    }

    const std::int64_t beta_value = 6 * c - 1;
    if (auto d = smallest_wheel_divisor(beta_value)) {
        // Mixed classes; negating the beta factor factors -(6c-1).
        const std::int64_t e = beta_value / *d;
        out.beta_composite = true;
        out.beta_witness = ScanWitness{factor_index(*d), factor_index(e),
                                       ScanBranch::AlphaBeta};
    }

    return out;
}

LambdaResult lambda_range(GeneratorIndex c1, GeneratorIndex c2,
                          bool emit_primes, ScanVariant variant) {
    if (c1.value() < 1)
        throw std::invalid_argument("lambda_range requires c1 >= 1");
    if (c1.value() > c2.value())
        throw std::invalid_argument("lambda_range requires c1 <= c2");

    LambdaResult out{c1.value(), c2.value(), 0, {}};
    for (std::int64_t c = c1.value(); c <= c2.value(); ++c) {
        const GeneratorIndex idx{c};
        const auto cls =
            variant == ScanVariant::Fast ? classify_fast(idx) : classify(idx);
        out.L += static_cast<std::uint64_t>(cls.alpha_composite) +
                 static_cast<std::uint64_t>(cls.beta_composite);
        if (emit_primes) {
            // 6c-1 < 6c+1 and c is increasing, so this order is ascending.
            if (!cls.beta_composite)
                out.primes.push_back({c, 6 * c - 1, ClassTag::Beta});
            if (!cls.alpha_composite)
                out.primes.push_back({c, 6 * c + 1, ClassTag::Alpha});
        }
    }
    return out;
}

}  // namespace sixsieve
