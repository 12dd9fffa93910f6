// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <dualledger/ledger.hpp>
#include <dualledger/rng.hpp>

#include <span>

namespace dualledger {

struct GenOptions {
    size_t max_length = 12;
    size_t max_inputs = 4;
    size_t max_outputs = 3;
    /// percent of transactions that are genesis-style (no inputs)
    unsigned genesis_percent = 25;
    bool slots = false;
    /// percent of slotted transactions that carry a slot range
    unsigned range_percent = 50;
};

/// Random transactions and chains over AcceptAll and PayToPubKey outputs.
/// Positions are drawn from the shared supply, so separately generated
/// pieces never collide by accident.
class ChainGen {
public:
    ChainGen(Rng &rng, PositionSupply &supply, GenOptions opts = {}):
        rng_ { rng }, supply_ { supply }, opts_ { opts }
    {
    }

    const GenOptions &options() const { return opts_; }

    Output random_output();
    Input spend(const Output &o);

    /// Spends a random subset of the spendable unspent outputs of chain and
    /// creates fresh outputs. Valid after chain when chain is valid.
    Transaction valid_next(const Chain &chain, std::optional<Natural> slot = {});
    Transaction spending(std::vector<Output> pool, std::optional<Natural> slot = {});
    Chain valid_chain(size_t length);
    Chain valid_chain() { return valid_chain(rng_.below(opts_.max_length + 1)); }

    /// Like valid_next but may dangle, double-spend, forge a redeemer or
    /// reuse an existing position. Positions in `avoid` are never used.
    Transaction candidate(const Chain &chain, const std::set<Position> &avoid = {},
                          std::span<const Position> extra_positions = {});

    /// A random slot range; contains `target` unless the draw is tight elsewhere.
    std::optional<SlotRange> random_range(Natural target);

    /// Next nondecreasing slots after `from`.
    std::vector<Natural> schedule(Natural from, size_t n);

private:
    std::vector<Output> spendable(const Chain &chain) const;

    Rng &rng_;
    PositionSupply &supply_;
    GenOptions opts_;
};

}
