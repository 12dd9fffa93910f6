// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <span>

#include <dualledger/ledger.hpp>

namespace dualledger {

/// Same unspent outputs.
bool obs_equiv(const Chain &a, const Chain &b);

/// Disjoint position sets.
bool apart(const Transaction &a, const Transaction &b);
bool apart_seq(const Transaction &tx, std::span<const Transaction> txs);

/// Injective renaming of positions that leaves the fixed set alone.
struct PositionRenaming {
    std::map<Position, Position> mapping;
    std::set<Position> fixed;

    /// Throws unless the mapping is injective and avoids the fixed set on both sides.
    void check() const;
    Position apply(Position p) const;
};

Chain rename_positions(const Chain &chain, const PositionRenaming &r);
Transaction rename_positions(const Transaction &tx, const PositionRenaming &r);

std::set<Position> all_positions(const Chain &chain);
/// Positions of outputs that some later input spends.
std::set<Position> spent_positions(const Chain &chain);
std::set<Position> unspent_positions(const Chain &chain);

/// Renames each spent output (and the input spending it) to a name fixed by
/// traversal order; unspent positions are untouched. Throws on invalid chains.
Chain canonicalize(const Chain &chain);
bool alpha_equiv(const Chain &a, const Chain &b);

/// An alpha-variant of chain whose spent positions avoid `avoid`. Clashing
/// names go to the least naturals occurring neither in the chain nor in `avoid`.
Chain freshen(const Chain &chain, const std::set<Position> &avoid);

struct CommuteReport {
    bool apart = false;
    bool valid_12 = false;
    bool valid_21 = false;
    bool equiv = false;
};

/// Compares B;tx;tx2 with B;tx2;tx. On slotted chains both orders occupy the
/// given pair of slots.
CommuteReport check_commute(const Chain &chain, const Transaction &tx, const Transaction &tx2,
                            std::span<const Natural> slots = {});

struct DeferReport {
    /// valid(B;txs;tx) and valid(B;tx)
    bool hyp = false;
    bool valid_txs_then_tx = false;
    bool valid_tx_alone = false;
    bool valid_tx_first = false;
    /// B;tx;txs and B;txs;tx have the same unspent outputs.
    bool equiv = false;
};

/// Compares B;txs;tx with B;tx;txs. On slotted chains `schedule` holds the
/// |txs|+1 slots following B, which both orders occupy in turn.
DeferReport check_defer(const Chain &chain, std::span<const Transaction> txs, const Transaction &tx,
                        std::span<const Natural> schedule = {});

/// B followed by txs, slotted from `schedule` when B is slotted.
Chain extend(const Chain &chain, std::span<const Transaction> txs, std::span<const Natural> schedule = {});

}
