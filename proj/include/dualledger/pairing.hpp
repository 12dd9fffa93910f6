// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <utility>

#include <dualledger/core.hpp>

namespace dualledger {

/// Cantor pairing: a bijection N x N -> N. Throws when the result does not fit in 64 bits.
Natural pair(Natural a, Natural b);
std::pair<Natural, Natural> unpair(Natural z);

}
