// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#include <dualledger/core.hpp>

#include <algorithm>
#include <limits>

namespace dualledger {

Value Value::singleton(Chip c, Natural n)
{
    if (n == 0)
        throw error { "a value cannot hold a zero quantity" };
    Value v;
    v.entries_.emplace(c, n);
    return v;
}

Natural Value::get(Chip c) const
{
    const auto it = entries_.find(c);
    return it == entries_.end() ? 0 : it->second;
}

Natural Value::total_of_symbol(Natural symbol) const
{
    Natural total = 0;
    for (auto it = entries_.lower_bound(Chip { symbol, 0 });
         it != entries_.end() && it->first.currency_symbol == symbol; ++it)
        total += it->second;
    return total;
}

Value Value::plus(const Value &o) const
{
    Value r = *this;
    for (const auto &[c, n]: o.entries_) {
        auto &slot = r.entries_[c];
        if (slot > std::numeric_limits<Natural>::max() - n)
            throw error { "value quantity overflow" };
        slot += n;
    }
    return r;
}

Value Value::minus(Chip c, Natural n) const
{
    const Natural held = get(c);
    if (held < n)
        throw error { "value holds fewer chips than requested" };
    Value r = *this;
    if (held == n)
        r.entries_.erase(c);
    else
        r.entries_[c] = held - n;
    return r;
}

Natural value_get(const Value &v, Chip c)
{
    return v.get(c);
}

Value value_add(const Value &a, const Value &b)
{
    return a.plus(b);
}

Value value_singleton(Chip c, Natural n)
{
    return Value::singleton(c, n);
}

SlotRange::SlotRange(Natural lo_, std::optional<Natural> hi_):
    lo { lo_ }, hi { hi_ }
{
    if (hi && *hi < lo)
        throw error { "slot range upper bound below lower bound" };
}

Transaction::Transaction(std::vector<Input> inputs, std::vector<Output> outputs,
                         std::optional<SlotRange> slot_range):
    inputs_ { std::move(inputs) }, outputs_ { std::move(outputs) }, slot_range_ { slot_range }
{
    std::sort(inputs_.begin(), inputs_.end());
    std::sort(outputs_.begin(), outputs_.end());
    for (size_t k = 1; k < inputs_.size(); ++k)
        if (inputs_[k - 1].position == inputs_[k].position)
            throw error { "transaction has two inputs at position " + std::to_string(inputs_[k].position.id) };
    for (size_t k = 1; k < outputs_.size(); ++k)
        if (outputs_[k - 1].position == outputs_[k].position)
            throw error { "transaction has two outputs at position " + std::to_string(outputs_[k].position.id) };
}

bool Transaction::has_input(const Input &i) const
{
    return std::binary_search(inputs_.begin(), inputs_.end(), i);
}

Transaction Transaction::with_slot_range(std::optional<SlotRange> r) const
{
    Transaction t = *this;
    t.slot_range_ = r;
    return t;
}

Context context_at(const Transaction &tx, const Input &i)
{
    if (!tx.has_input(i))
        throw error { "context focus is not an input of the transaction" };
    return Context { tx.inputs(), i, tx.outputs() };
}

std::set<Position> positions_of(const Transaction &tx)
{
    std::set<Position> ps;
    for (const auto &i: tx.inputs())
        ps.insert(i.position);
    for (const auto &o: tx.outputs())
        ps.insert(o.position);
    return ps;
}

void PositionSupply::reserve_through(Position p)
{
    if (p.id >= next_)
        next_ = p.id + 1;
}

}
