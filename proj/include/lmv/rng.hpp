#pragma once

#include <cstdint>
#include <random>

namespace lmv {

/// Seeded RNG with platform-independent output. std::mt19937_64 has a fixed
/// sequence by the standard; the bounded draws below avoid
/// std::uniform_int_distribution, whose mapping is implementation-defined.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [lo, hi], rejection-sampled.
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t r;
        do {
            r = eng_();
        } while (r >= limit);
        return lo + static_cast<std::int64_t>(r % span);
    }

    /// Nonzero uniform integer in [-mag, mag].
    std::int64_t nonzero_int(std::int64_t mag) {
        std::int64_t v;
        do {
            v = int_in(-mag, mag);
        } while (v == 0);
        return v;
    }

    /// Derive an independent stream for a subtask; keeps parent stream stable.
    SeededRng fork(std::uint64_t salt) { return SeededRng(eng_() ^ (salt * 0x9e3779b97f4a7c15ull)); }

private:
    std::mt19937_64 eng_;
};

}  // namespace lmv
