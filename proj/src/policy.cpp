// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#include <dualledger/policy.hpp>

#include <limits>

namespace dualledger {

std::string_view rule_name(PolicyRule r)
{
    switch (r) {
        case PolicyRule::free_forge: return "free";
        case PolicyRule::forbid_forge: return "forbid";
        case PolicyRule::affine_once: return "affine";
    }
    return "?";
}

std::optional<PolicyRule> rule_from_name(std::string_view s)
{
    for (auto r: { PolicyRule::free_forge, PolicyRule::forbid_forge, PolicyRule::affine_once })
        if (rule_name(r) == s)
            return r;
    return {};
}

PolicyRule PolicyTable::rule_for(Natural symbol) const
{
    const auto it = rules.find(symbol);
    return it == rules.end() ? default_rule : it->second;
}

namespace {
    using wide = __int128;

    std::vector<Output> spent_by(const Chain &chain, const Transaction &tx)
    {
        std::map<Position, const Output *> outputs;
        for (const auto &t: chain.transactions())
            for (const auto &o: t.outputs())
                outputs.emplace(o.position, &o);
        std::vector<Output> spent;
        for (const auto &i: tx.inputs()) {
            const auto it = outputs.find(i.position);
            if (it == outputs.end())
                throw error { "input " + std::to_string(i.position.id) + " does not resolve" };
            spent.push_back(*it->second);
        }
        return spent;
    }

    wide delta(const std::vector<Output> &spent, const Transaction &tx, Natural symbol)
    {
        wide d = 0;
        for (const auto &o: tx.outputs())
            d += o.value.total_of_symbol(symbol);
        for (const auto &o: spent)
            d -= o.value.total_of_symbol(symbol);
        return d;
    }

    std::int64_t narrow(wide d)
    {
        if (d > std::numeric_limits<std::int64_t>::max() || d < std::numeric_limits<std::int64_t>::min())
            throw error { "forged quantity out of range" };
        return static_cast<std::int64_t>(d);
    }
}

std::int64_t forged(const Chain &chain, const Transaction &tx, Natural symbol)
{
    return narrow(delta(spent_by(chain, tx), tx, symbol));
}

std::optional<std::string> policy_violation(const PolicyTable &table, const Chain &chain, const Transaction &tx)
{
    const auto spent = spent_by(chain, tx);
    std::set<Natural> symbols;
    for (const auto &o: tx.outputs())
        for (const auto &[c, n]: o.value.entries())
            symbols.insert(c.currency_symbol);
    for (const auto &o: spent)
        for (const auto &[c, n]: o.value.entries())
            symbols.insert(c.currency_symbol);

    std::optional<OutputSet> unspent;
    for (const Natural s: symbols) {
        const wide d = delta(spent, tx, s);
        if (d == 0)
            continue;
        const std::string what = "symbol " + std::to_string(s);
        switch (table.rule_for(s)) {
            case PolicyRule::free_forge:
                break;
            case PolicyRule::forbid_forge:
                return what + " may not be forged or burned";
            case PolicyRule::affine_once: {
                if (d < 0)
                    return what + " may not be burned";
                if (d != 1)
                    return what + " may only be minted one unit at a time";
                if (!unspent)
                    unspent = utxo(chain);
                for (const auto &o: *unspent)
                    if (o.value.total_of_symbol(s) > 0)
                        return what + " already exists on the chain";
                break;
            }
        }
    }
    return {};
}

bool check_policies(const PolicyTable &table, const Chain &chain, const Transaction &tx)
{
    return !policy_violation(table, chain, tx).has_value();
}

AppendHook policy_hook(PolicyTable table)
{
    return [table = std::move(table)](const Chain &chain, const Transaction &tx) {
        return policy_violation(table, chain, tx);
    };
}

}
