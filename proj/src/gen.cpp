// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#include <dualledger/gen.hpp>
#include <dualledger/equivalence.hpp>

#include <algorithm>

namespace dualledger {

Output ChainGen::random_output()
{
    Output o;
    o.position = supply_.fresh();
    const auto roll = rng_.below(100);
    if (roll < 55)
        o.validator = ValidatorRef::accept_all();
    else if (roll < 95)
        o.validator = ValidatorRef::pay_to_pub_key(KeyId { rng_.between(1, 4) });
    else
        o.validator = ValidatorRef::reject_all();
    o.datum = Datum { rng_.below(4) };
    const auto chips = rng_.below(3);
    for (size_t k = 0; k < chips; ++k)
        o.value = o.value.plus(Value::singleton(Chip { rng_.below(3), rng_.below(2) }, rng_.between(1, 5)));
    return o;
}

Input ChainGen::spend(const Output &o)
{
    if (o.validator.kind == ValidatorKind::pay_to_pub_key)
        return Input { o.position, Redeemer { o.validator.key.id } };
    return Input { o.position, Redeemer { rng_.below(10) } };
}

std::vector<Output> ChainGen::spendable(const Chain &chain) const
{
    std::vector<Output> pool;
    for (const auto &o: utxo(chain))
        if (o.validator.kind == ValidatorKind::accept_all || o.validator.kind == ValidatorKind::pay_to_pub_key)
            pool.push_back(o);
    return pool;
}

Transaction ChainGen::spending(std::vector<Output> pool, std::optional<Natural> slot)
{
    std::vector<Input> ins;
    if (!pool.empty() && !rng_.chance(opts_.genesis_percent, 100)) {
        rng_.shuffle(pool);
        const size_t n = rng_.between(1, std::min(pool.size(), opts_.max_inputs));
        for (size_t k = 0; k < n; ++k)
            ins.push_back(spend(pool[k]));
    }
    std::vector<Output> outs;
    const size_t m = rng_.below(opts_.max_outputs + 1);
    for (size_t k = 0; k < m; ++k)
        outs.push_back(random_output());
    std::optional<SlotRange> range;
    if (slot && rng_.chance(opts_.range_percent, 100))
        range = random_range(*slot);
    return Transaction { std::move(ins), std::move(outs), range };
}

Transaction ChainGen::valid_next(const Chain &chain, std::optional<Natural> slot)
{
    return spending(spendable(chain), slot);
}

Chain ChainGen::valid_chain(size_t length)
{
    Chain chain;
    const auto slots = opts_.slots ? schedule(0, length) : std::vector<Natural> {};
    for (size_t k = 0; k < length; ++k) {
        std::optional<Natural> slot;
        if (opts_.slots)
            slot = slots[k];
        chain = chain.then(valid_next(chain, slot), slot);
    }
    return chain;
}

Transaction ChainGen::candidate(const Chain &chain, const std::set<Position> &avoid,
                                std::span<const Position> extra_positions)
{
    std::vector<Output> pool;
    for (const auto &o: utxo(chain))
        if (!avoid.contains(o.position))
            pool.push_back(o);
    rng_.shuffle(pool);
    std::vector<Position> known;
    for (const auto &p: all_positions(chain))
        if (!avoid.contains(p))
            known.push_back(p);
    std::vector<Position> extra;
    for (const auto &p: extra_positions)
        if (!avoid.contains(p))
            extra.push_back(p);

    std::set<Position> used_in;
    std::set<Position> used_out;
    std::vector<Input> ins;
    const size_t n = rng_.chance(opts_.genesis_percent, 100) ? 0 : rng_.between(1, opts_.max_inputs);
    size_t next_pool = 0;
    for (size_t k = 0; k < n; ++k) {
        const auto roll = rng_.below(100);
        Input in;
        if (roll < 70 && next_pool < pool.size()) {
            in = spend(pool[next_pool++]);
            if (rng_.chance(1, 10))
                in.redeemer = Redeemer { in.redeemer.value + 1 };
        } else if (roll < 80 && !known.empty()) {
            in = Input { rng_.pick(known), Redeemer { rng_.below(5) } };
        } else if (roll < 90 && !extra.empty()) {
            in = Input { rng_.pick(extra), Redeemer { rng_.below(5) } };
        } else {
            in = Input { supply_.fresh(), Redeemer { rng_.below(5) } };
        }
        if (used_in.insert(in.position).second)
            ins.push_back(in);
    }
    std::vector<Output> outs;
    const size_t m = rng_.below(opts_.max_outputs + 1);
    for (size_t k = 0; k < m; ++k) {
        Output o = random_output();
        const auto roll = rng_.below(100);
        if (roll < 8 && !known.empty())
            o.position = rng_.pick(known);
        else if (roll < 16 && !extra.empty())
            o.position = rng_.pick(extra);
        if (used_out.insert(o.position).second)
            outs.push_back(o);
    }
    return Transaction { std::move(ins), std::move(outs) };
}

std::optional<SlotRange> ChainGen::random_range(Natural target)
{
    const auto roll = rng_.below(100);
    const Natural below = rng_.below(4);
    if (roll < 40)
        return SlotRange { target - std::min(target, below), target + rng_.below(4) };
    if (roll < 70)
        return SlotRange { target - std::min(target, below), std::nullopt };
    return SlotRange { target, target };
}

std::vector<Natural> ChainGen::schedule(Natural from, size_t n)
{
    std::vector<Natural> slots;
    Natural s = from;
    for (size_t k = 0; k < n; ++k) {
        s += rng_.below(3);
        slots.push_back(s);
    }
    return slots;
}

}
