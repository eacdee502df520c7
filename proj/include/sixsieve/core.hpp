#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

namespace sixsieve {

// Residue family of a candidate: Alpha holds 6n+1, Beta holds 6n-1.
enum class ClassTag { Alpha, Beta };

// Raised when an oracle request exceeds its configured memory/time budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a checkpoint does not belong to the plan being resumed.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Largest |n| for which both 6n+1 and 6n-1 fit in a signed 64-bit value.
inline constexpr std::int64_t kMaxGeneratorIndex =
    (std::numeric_limits<std::int64_t>::max() - 1) / 6;

// A validated index n; the values 6n+1 and 6n-1 are its prime candidates.
class GeneratorIndex {
public:
    explicit GeneratorIndex(std::int64_t v) : value_(v) {
        if (v > kMaxGeneratorIndex || v < -kMaxGeneratorIndex)
            throw std::range_error("generator index exceeds 64-bit candidate budget");
    }

    std::int64_t value() const noexcept { return value_; }

    friend bool operator==(GeneratorIndex a, GeneratorIndex b) noexcept {
        return a.value_ == b.value_;
    }
    friend auto operator<=>(GeneratorIndex a, GeneratorIndex b) noexcept {
        return a.value_ <=> b.value_;
    }

private:
    std::int64_t value_;
};

struct MatrixIndex {
    std::int64_t i = 0;
    std::int64_t j = 0;
};

// 6n+1 for Alpha, 6n-1 for Beta.
std::int64_t class_value(GeneratorIndex n, ClassTag tag);

// The two candidates of index c >= 1, as (6c+1, 6c-1).
std::pair<std::int64_t, std::int64_t> candidate_pair(GeneratorIndex c);

// Multiplication table of the two residue families.
// Alpha*Alpha = Alpha, Beta*Beta = Alpha, mixed = Beta.
ClassTag product_class(ClassTag t1, ClassTag t2) noexcept;

// a(i,j) = i + j(6i+1). Symmetric in (i,j); 6a+1 = (6i+1)(6j+1).
// Throws std::range_error on 64-bit overflow.
std::int64_t matrix_element(MatrixIndex idx);

// Exact floor square root of a non-negative 64-bit value.
std::int64_t isqrt(std::int64_t n);

}  // namespace sixsieve
