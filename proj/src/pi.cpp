#include "sixsieve/pi.hpp"

#include "sixsieve/oracle.hpp"

namespace sixsieve {

namespace {

std::uint64_t eval_lambda(std::int64_t c1, std::int64_t c2,
                          ScanVariant variant, const LambdaFn& eval) {
    if (eval)
        return eval(c1, c2);
    return lambda_range(GeneratorIndex{c1}, GeneratorIndex{c2},
                        /*emit_primes=*/false, variant)
        .L;
}

}  // namespace

std::int64_t delta_pi_paper(GeneratorIndex c1, GeneratorIndex c2,
                            ScanVariant variant, const LambdaFn& eval) {
    if (c1.value() < 8 || c1.value() >= c2.value())
        throw std::invalid_argument("delta_pi_paper requires 8 <= c1 < c2");
    const auto L = eval_lambda(c1.value(), c2.value(), variant, eval);
    return 2 * (c2.value() - c1.value()) - static_cast<std::int64_t>(L) + 1;
}

std::uint64_t prime_count_candidates(GeneratorIndex c1, GeneratorIndex c2,
                                     ScanVariant variant, const LambdaFn& eval) {
    if (c1.value() < 1 || c1.value() > c2.value())
        throw std::invalid_argument(
            "prime_count_candidates requires 1 <= c1 <= c2");
    const auto L = eval_lambda(c1.value(), c2.value(), variant, eval);
    return 2 * static_cast<std::uint64_t>(c2.value() - c1.value() + 1) - L;
}

std::uint64_t pi_exact(GeneratorIndex c2, ScanVariant variant,
                       const LambdaFn& eval) {
    if (c2.value() < 8)
        throw std::invalid_argument("pi_exact requires c2 >= 8");
    const auto L = eval_lambda(8, c2.value(), variant, eval);
    return 2 * static_cast<std::uint64_t>(c2.value()) - L;
}

std::uint64_t pi_of_h(std::int64_t h, ScanVariant variant,
                      const LambdaFn& eval) {
    if (h < 2)
        throw std::invalid_argument("pi_of_h requires h >= 2");
    if (h < 49)
        return static_cast<std::uint64_t>(oracle_pi(h));

    const std::int64_t c2 = (h - 1) / 6;
    std::uint64_t count = pi_exact(GeneratorIndex{c2}, variant, eval);
    // The beta candidate of c2+1 may still be <= h even though 6(c2+1)+1 is not.
    const GeneratorIndex next{c2 + 1};
    if (class_value(next, ClassTag::Beta) <= h) {
        const auto cls = variant == ScanVariant::Fast ? classify_fast(next)
                                                      : classify(next);
        if (!cls.beta_composite)
            ++count;
    }
    return count;
}

}  // namespace sixsieve
