#include "sixsieve/core.hpp"

#include <cmath>

namespace sixsieve {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::range_error("64-bit overflow in matrix element");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::range_error("64-bit overflow in matrix element");
    return out;
}

}  // namespace

std::int64_t class_value(GeneratorIndex n, ClassTag tag) {
    // GeneratorIndex already guarantees 6n±1 fits.
    const std::int64_t base = 6 * n.value();
    return tag == ClassTag::Alpha ? base + 1 : base - 1;
}

std::pair<std::int64_t, std::int64_t> candidate_pair(GeneratorIndex c) {
    if (c.value() < 1)
        throw std::invalid_argument("candidate_pair requires c >= 1");
    return {class_value(c, ClassTag::Alpha), class_value(c, ClassTag::Beta)};
}

ClassTag product_class(ClassTag t1, ClassTag t2) noexcept {
    return t1 == t2 ? ClassTag::Alpha : ClassTag::Beta;
}

std::int64_t matrix_element(MatrixIndex idx) {
    // i + j(6i+1)
    const std::int64_t row = checked_add(checked_mul(6, idx.i), 1);
    return checked_add(idx.i, checked_mul(idx.j, row));
}

std::int64_t isqrt(std::int64_t n) {
    if (n < 0)
        throw std::invalid_argument("isqrt requires a non-negative argument");
    if (n == 0)
        return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    // The floating seed can land one off near perfect squares; fix it up
    // with division so no intermediate overflows.
    while (r > 0 && r > n / r)
        --r;
    while (r + 1 <= n / (r + 1))
        ++r;
    return r;
}

}  // namespace sixsieve
