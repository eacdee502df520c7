#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sixsieve/lambda.hpp"

namespace sixsieve {

// One worker's contiguous slice of [c1,c2].
struct RangeAssignment {
    int worker_ordinal = 0;
    std::int64_t start = 0;
    std::int64_t end = 0;

    friend bool operator==(const RangeAssignment&, const RangeAssignment&) = default;
};

// Split [c1,c2] into `parts` contiguous chunks of size floor(N/parts) or
// ceil(N/parts), earlier chunks taking the larger size.
std::vector<RangeAssignment> partition(GeneratorIndex c1, GeneratorIndex c2,
                                       int parts);

// Persisted progress of a parallel counting run.
struct Checkpoint {
    struct Slot {
        std::int64_t next_c = 0;    // first unprocessed index of the slice
        std::uint64_t partial_L = 0;
    };

    std::string plan_id;
    std::int64_t c1 = 0;
    std::int64_t c2 = 0;
    int parts = 1;
    ScanVariant variant = ScanVariant::Fast;
    std::vector<Slot> slots;
};

std::string plan_identifier(std::int64_t c1, std::int64_t c2, int parts,
                            ScanVariant variant);

// Line-delimited JSON records, written to a temp file and renamed into place.
void save_checkpoint(const Checkpoint& ckpt, const std::filesystem::path& path);
Checkpoint load_checkpoint(const std::filesystem::path& path);

struct CheckpointConfig {
    std::filesystem::path path;
    std::int64_t every = 100'000;  // indices per worker between writes
    // Test hook: cooperatively stop the run after this many checkpoint
    // writes (0 = never). The interrupted run reports complete = false.
    int halt_after_writes = 0;
};

struct ParallelRun {
    LambdaResult result;
    bool complete = true;
};

// Evaluate lambda_range over [c1,c2] on `parts` threads and merge
// deterministically in ascending slice order. Prime emission cannot be
// combined with checkpointing (checkpoints persist counts only).
// Resuming requires a checkpoint from the identical plan; a mismatch
// raises IntegrityError.
ParallelRun run_parallel(GeneratorIndex c1, GeneratorIndex c2, int parts,
                         bool emit_primes, ScanVariant variant,
                         const std::optional<CheckpointConfig>& checkpointing = {},
                         const std::optional<Checkpoint>& resume = {},
                         const std::atomic<bool>* cancel = nullptr);

}  // namespace sixsieve
