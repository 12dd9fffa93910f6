// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dualledger {

/// Seeded generator with portable draws. std::mt19937_64's output sequence is
/// fixed by the standard; the distributions are not, so bounded draws are done here.
class Rng {
public:
    explicit Rng(std::uint64_t seed): engine_ { seed } {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do
            x = engine_();
        while (x >= limit);
        return x % n;
    }

    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    template<typename T>
    void shuffle(std::vector<T> &v)
    {
        for (size_t k = v.size(); k > 1; --k)
            std::swap(v[k - 1], v[below(k)]);
    }

    template<typename T>
    const T &pick(const std::vector<T> &v) { return v[below(v.size())]; }

private:
    std::mt19937_64 engine_;
};

/// Derives an independent per-case seed from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
{
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}
