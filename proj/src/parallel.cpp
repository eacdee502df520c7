#include "sixsieve/parallel.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace sixsieve {

namespace {

const char* variant_name(ScanVariant v) {
    return v == ScanVariant::Fast ? "fast" : "faithful";
}

ScanVariant variant_from_name(const std::string& s) {
    if (s == "fast")
        return ScanVariant::Fast;
    if (s == "faithful")
        return ScanVariant::Faithful;
    throw IntegrityError("unknown variant in checkpoint: " + s);
}

}  // namespace

std::vector<RangeAssignment> partition(GeneratorIndex c1i, GeneratorIndex c2i,
                                       int parts) {
    const std::int64_t c1 = c1i.value();
    const std::int64_t c2 = c2i.value();
    if (c1 > c2)
        throw std::invalid_argument("partition requires c1 <= c2");
    if (parts < 1)
        throw std::invalid_argument("partition requires parts >= 1");
    const std::int64_t n = c2 - c1 + 1;
    if (parts > n)
        throw std::invalid_argument("more parts than indexes to assign");

    std::vector<RangeAssignment> out;
    out.reserve(static_cast<std::size_t>(parts));
    const std::int64_t base = n / parts;
    const std::int64_t extra = n % parts;
    std::int64_t start = c1;
    for (int p = 0; p < parts; ++p) {
        const std::int64_t size = base + (p < extra ? 1 : 0);
        out.push_back({p, start, start + size - 1});
        start += size;
    }
    return out;
}

std::string plan_identifier(std::int64_t c1, std::int64_t c2, int parts,
                            ScanVariant variant) {
    std::ostringstream id;
    id << "lambda-" << c1 << '-' << c2 << '-' << parts << '-'
       << variant_name(variant);
    return id.str();
}

void save_checkpoint(const Checkpoint& ckpt, const std::filesystem::path& path) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open checkpoint file: " +
                                     tmp.string());
        nlohmann::json header = {{"plan_id", ckpt.plan_id},
                                 {"c1", ckpt.c1},
                                 {"c2", ckpt.c2},
                                 {"parts", ckpt.parts},
                                 {"variant", variant_name(ckpt.variant)}};
        out << header.dump() << '\n';
        for (std::size_t p = 0; p < ckpt.slots.size(); ++p) {
            nlohmann::json slot = {{"worker", p},
                                   {"next_c", ckpt.slots[p].next_c},
                                   {"partial_L", ckpt.slots[p].partial_L}};
            out << slot.dump() << '\n';
        }
    }
    std::filesystem::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read checkpoint file: " + path.string());
    std::string line;
    if (!std::getline(in, line))
        throw IntegrityError("checkpoint file is empty");
    const auto header = nlohmann::json::parse(line);

    Checkpoint ckpt;
    ckpt.plan_id = header.at("plan_id").get<std::string>();
    ckpt.c1 = header.at("c1").get<std::int64_t>();
    ckpt.c2 = header.at("c2").get<std::int64_t>();
    ckpt.parts = header.at("parts").get<int>();
    ckpt.variant = variant_from_name(header.at("variant").get<std::string>());
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto slot = nlohmann::json::parse(line);
        ckpt.slots.push_back({slot.at("next_c").get<std::int64_t>(),
                              slot.at("partial_L").get<std::uint64_t>()});
    }
    if (static_cast<int>(ckpt.slots.size()) != ckpt.parts)
        throw IntegrityError("checkpoint slot count does not match parts");
    return ckpt;
}

ParallelRun run_parallel(GeneratorIndex c1, GeneratorIndex c2, int parts,
                         bool emit_primes, ScanVariant variant,
                         const std::optional<CheckpointConfig>& checkpointing,
                         const std::optional<Checkpoint>& resume,
                         const std::atomic<bool>* cancel) {
    const auto plan = partition(c1, c2, parts);
    const auto plan_id = plan_identifier(c1.value(), c2.value(), parts, variant);

    if (emit_primes && (checkpointing || resume))
        throw std::invalid_argument(
            "checkpointing persists counts only and cannot be combined with "
            "prime emission");

    Checkpoint state;
    if (resume) {
        if (resume->plan_id != plan_id || resume->c1 != c1.value() ||
            resume->c2 != c2.value() || resume->parts != parts ||
            resume->variant != variant)
            throw IntegrityError("checkpoint does not belong to this plan");
        state = *resume;
        for (std::size_t p = 0; p < plan.size(); ++p) {
            if (state.slots[p].next_c < plan[p].start ||
                state.slots[p].next_c > plan[p].end + 1)
                throw IntegrityError("checkpoint progress outside assignment");
        }
    } else {
        state.plan_id = plan_id;
        state.c1 = c1.value();
        state.c2 = c2.value();
        state.parts = parts;
        state.variant = variant;
        for (const auto& a : plan)
            state.slots.push_back({a.start, 0});
    }

    std::vector<std::vector<PrimeRecord>> primes(plan.size());
    std::mutex state_mutex;  // guards state, checkpoint writes, writes counter
    int writes = 0;
    std::atomic<bool> halted{false};

    const std::int64_t chunk =
        checkpointing ? std::max<std::int64_t>(1, checkpointing->every)
                      : std::max<std::int64_t>(1, c2.value() - c1.value() + 1);

    auto worker = [&](std::size_t p) {
        std::int64_t next = state.slots[p].next_c;
        while (next <= plan[p].end) {
            if (halted.load(std::memory_order_relaxed) ||
                (cancel && cancel->load(std::memory_order_relaxed)))
                return;
            const std::int64_t stop = std::min(plan[p].end, next + chunk - 1);
            auto part = lambda_range(GeneratorIndex{next}, GeneratorIndex{stop},
                                     emit_primes, variant);
            if (emit_primes)
                primes[p].insert(primes[p].end(), part.primes.begin(),
                                 part.primes.end());
            next = stop + 1;
            {
                std::lock_guard<std::mutex> lock(state_mutex);
                state.slots[p].partial_L += part.L;
                state.slots[p].next_c = next;
                if (checkpointing) {
                    save_checkpoint(state, checkpointing->path);
                    ++writes;
                    if (checkpointing->halt_after_writes > 0 &&
                        writes >= checkpointing->halt_after_writes)
                        halted.store(true, std::memory_order_relaxed);
                }
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(plan.size());
    for (std::size_t p = 0; p < plan.size(); ++p)
        threads.emplace_back(worker, p);
    for (auto& t : threads)
        t.join();

    ParallelRun run;
    run.result.c1 = c1.value();
    run.result.c2 = c2.value();
    for (std::size_t p = 0; p < plan.size(); ++p) {
        run.result.L += state.slots[p].partial_L;
        run.result.primes.insert(run.result.primes.end(), primes[p].begin(),
                                 primes[p].end());
        if (state.slots[p].next_c != plan[p].end + 1)
            run.complete = false;
    }
    return run;
}

}  // namespace sixsieve
