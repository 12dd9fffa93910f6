// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#include <dualledger/pairing.hpp>

#include <limits>

namespace dualledger {

namespace {
    using wide = unsigned __int128;

    wide isqrt(wide x)
    {
        wide lo = 0, hi = wide { 1 } << 64;
        while (lo < hi) {
            const wide mid = lo + (hi - lo + 1) / 2;
            if (mid * mid <= x)
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo;
    }
}

Natural pair(Natural a, Natural b)
{
    const wide s = wide { a } + b;
    const wide z = s * (s + 1) / 2 + b;
    if (z > std::numeric_limits<Natural>::max())
        throw error { "pairing overflow" };
    return static_cast<Natural>(z);
}

std::pair<Natural, Natural> unpair(Natural z)
{
    const wide w = (isqrt(wide { 8 } * z + 1) - 1) / 2;
    const wide t = w * (w + 1) / 2;
    const Natural b = static_cast<Natural>(wide { z } - t);
    const Natural a = static_cast<Natural>(w - b);
    return { a, b };
}

}
