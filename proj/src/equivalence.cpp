// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#include <dualledger/equivalence.hpp>

#include <algorithm>
#include <tuple>

namespace dualledger {

bool obs_equiv(const Chain &a, const Chain &b)
{
    return utxo(a) == utxo(b);
}

bool apart(const Transaction &a, const Transaction &b)
{
    const auto pa = positions_of(a);
    for (const auto &p: positions_of(b))
        if (pa.contains(p))
            return false;
    return true;
}

bool apart_seq(const Transaction &tx, std::span<const Transaction> txs)
{
    return std::all_of(txs.begin(), txs.end(), [&](const Transaction &t) { return apart(tx, t); });
}

void PositionRenaming::check() const
{
    std::set<Position> targets;
    for (const auto &[from, to]: mapping) {
        if (fixed.contains(from) || fixed.contains(to))
            throw error { "renaming touches fixed position " + std::to_string(fixed.contains(from) ? from.id : to.id) };
        if (!targets.insert(to).second)
            throw error { "renaming is not injective at " + std::to_string(to.id) };
    }
}

Position PositionRenaming::apply(Position p) const
{
    const auto it = mapping.find(p);
    return it == mapping.end() ? p : it->second;
}

Transaction rename_positions(const Transaction &tx, const PositionRenaming &r)
{
    std::vector<Input> ins;
    for (const auto &i: tx.inputs())
        ins.push_back(Input { r.apply(i.position), i.redeemer });
    std::vector<Output> outs;
    for (const auto &o: tx.outputs())
        outs.push_back(Output { r.apply(o.position), o.validator, o.datum, o.value });
    return Transaction { std::move(ins), std::move(outs), tx.slot_range() };
}

Chain rename_positions(const Chain &chain, const PositionRenaming &r)
{
    r.check();
    std::vector<Transaction> txs;
    txs.reserve(chain.size());
    for (const auto &tx: chain.transactions())
        txs.push_back(rename_positions(tx, r));
    if (chain.has_slots())
        return Chain { std::move(txs), *chain.slots() };
    return Chain { std::move(txs) };
}

std::set<Position> all_positions(const Chain &chain)
{
    std::set<Position> ps;
    for (const auto &tx: chain.transactions())
        ps.merge(positions_of(tx));
    return ps;
}

std::set<Position> spent_positions(const Chain &chain)
{
    std::set<Position> spent;
    std::set<Position> outputs_so_far;
    for (const auto &tx: chain.transactions()) {
        for (const auto &i: tx.inputs())
            if (outputs_so_far.contains(i.position))
                spent.insert(i.position);
        for (const auto &o: tx.outputs())
            outputs_so_far.insert(o.position);
    }
    return spent;
}

std::set<Position> unspent_positions(const Chain &chain)
{
    std::set<Position> ps;
    for (const auto &o: utxo(chain))
        ps.insert(o.position);
    return ps;
}

namespace {
    // Yields the naturals not in `taken`, in increasing order.
    class name_source {
    public:
        explicit name_source(const std::set<Position> &taken): taken_ { taken } {}

        Position next()
        {
            while (taken_.contains(Position { next_ }))
                ++next_;
            return Position { next_++ };
        }

    private:
        const std::set<Position> &taken_;
        Natural next_ = 0;
    };
}

Chain canonicalize(const Chain &chain)
{
    if (!is_valid(chain))
        throw error { "canonicalize needs a valid chain" };

    struct spender {
        size_t tx_index;
        Redeemer redeemer;
    };
    std::map<Position, spender> spent_by;
    for (size_t k = 0; k < chain.size(); ++k)
        for (const auto &i: chain[k].inputs())
            spent_by.emplace(i.position, spender { k, i.redeemer });

    PositionRenaming r;
    r.fixed = unspent_positions(chain);
    name_source names { r.fixed };
    for (const auto &tx: chain.transactions()) {
        std::vector<std::pair<const Output *, spender>> spent;
        for (const auto &o: tx.outputs())
            if (const auto it = spent_by.find(o.position); it != spent_by.end())
                spent.emplace_back(&o, it->second);
        // Order by everything except the name being replaced; the old name
        // only breaks ties between indistinguishable pairs.
        std::sort(spent.begin(), spent.end(), [](const auto &a, const auto &b) {
            const auto &[oa, sa] = a;
            const auto &[ob, sb] = b;
            return std::tie(oa->validator, oa->datum, oa->value, sa.tx_index, sa.redeemer, oa->position)
                < std::tie(ob->validator, ob->datum, ob->value, sb.tx_index, sb.redeemer, ob->position);
        });
        for (const auto &[o, s]: spent)
            r.mapping.emplace(o->position, names.next());
    }
    return rename_positions(chain, r);
}

bool alpha_equiv(const Chain &a, const Chain &b)
{
    return canonicalize(a) == canonicalize(b);
}

Chain freshen(const Chain &chain, const std::set<Position> &avoid)
{
    std::set<Position> taken = all_positions(chain);
    taken.insert(avoid.begin(), avoid.end());
    name_source names { taken };
    PositionRenaming r;
    for (const auto &p: spent_positions(chain))
        if (avoid.contains(p))
            r.mapping.emplace(p, names.next());
    return rename_positions(chain, r);
}

Chain extend(const Chain &chain, std::span<const Transaction> txs, std::span<const Natural> schedule)
{
    if (!schedule.empty() && schedule.size() < txs.size())
        throw error { "slot schedule shorter than the extension" };
    Chain out = chain;
    for (size_t k = 0; k < txs.size(); ++k) {
        std::optional<Natural> slot;
        if (!schedule.empty())
            slot = schedule[k];
        out = out.then(txs[k], slot);
    }
    return out;
}

CommuteReport check_commute(const Chain &chain, const Transaction &tx, const Transaction &tx2,
                            std::span<const Natural> slots)
{
    const std::vector<Transaction> order12 { tx, tx2 };
    const std::vector<Transaction> order21 { tx2, tx };
    const Chain c12 = extend(chain, order12, slots);
    const Chain c21 = extend(chain, order21, slots);
    return CommuteReport { apart(tx, tx2), is_valid(c12), is_valid(c21), obs_equiv(c12, c21) };
}

DeferReport check_defer(const Chain &chain, std::span<const Transaction> txs, const Transaction &tx,
                        std::span<const Natural> schedule)
{
    std::vector<Transaction> txs_then_tx(txs.begin(), txs.end());
    txs_then_tx.push_back(tx);
    std::vector<Transaction> tx_then_txs { tx };
    tx_then_txs.insert(tx_then_txs.end(), txs.begin(), txs.end());
    const std::vector<Transaction> tx_only { tx };

    const Chain late = extend(chain, txs_then_tx, schedule);
    const Chain early = extend(chain, tx_then_txs, schedule);
    const Chain alone = extend(chain, tx_only, schedule.empty() ? schedule : schedule.first(1));

    DeferReport r;
    r.valid_txs_then_tx = is_valid(late);
    r.valid_tx_alone = is_valid(alone);
    r.valid_tx_first = is_valid(early);
    r.hyp = r.valid_txs_then_tx && r.valid_tx_alone;
    r.equiv = obs_equiv(early, late);
    return r;
}

}
