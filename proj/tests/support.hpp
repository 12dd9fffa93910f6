// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

// Shared fixtures and reference oracles for the test binaries. The oracles
// are written from the definitions, without calling the library routine they
// check.

#pragma once

#include <dualledger/equivalence.hpp>
#include <dualledger/format.hpp>
#include <dualledger/gen.hpp>

#include <algorithm>
#include <filesystem>

namespace fixtures {

using namespace dualledger;

inline std::string corpus(const std::string &name)
{
    return std::string { CORPUS_DIR } + "/" + name;
}

inline Output plain(Natural p)
{
    return Output { Position { p }, ValidatorRef::accept_all(), Datum {}, Value {} };
}

inline Input at(Natural p, Natural r = 0)
{
    return Input { Position { p }, Redeemer { r } };
}

// The four transactions of the running example, with a..k as 1..11.
inline Transaction tx1() { return Transaction { {}, { plain(1), plain(2), plain(3) } }; }
inline Transaction tx2() { return Transaction { { at(2) }, { plain(4) } }; }
inline Transaction tx3() { return Transaction { { at(1) }, { plain(5), plain(6), plain(7) } }; }
inline Transaction tx4() { return Transaction { { at(4), at(5), at(6) }, { plain(8), plain(9), plain(10), plain(11) } }; }

inline Chain chain_b() { return Chain { { tx1(), tx2(), tx3(), tx4() } }; }
inline Chain chain_b_prime() { return Chain { { tx1(), tx3(), tx2(), tx4() } }; }

/// Outputs that no later input names, by direct scan.
inline std::set<Position> unspent_oracle(const Chain &c)
{
    std::set<Position> out;
    for (size_t k = 0; k < c.size(); ++k)
        for (const auto &o: c[k].outputs()) {
            bool spent = false;
            for (size_t j = k + 1; j < c.size() && !spent; ++j)
                for (const auto &i: c[j].inputs())
                    spent = spent || i.position == o.position;
            if (!spent)
                out.insert(o.position);
        }
    return out;
}

/// Renames through a plain map, with no checks.
inline Chain rename_raw(const Chain &c, const std::map<Position, Position> &m)
{
    const auto f = [&](Position p) {
        const auto it = m.find(p);
        return it == m.end() ? p : it->second;
    };
    std::vector<Transaction> txs;
    for (const auto &tx: c.transactions()) {
        std::vector<Input> ins;
        for (const auto &i: tx.inputs())
            ins.push_back(Input { f(i.position), i.redeemer });
        std::vector<Output> outs;
        for (const auto &o: tx.outputs())
            outs.push_back(Output { f(o.position), o.validator, o.datum, o.value });
        txs.emplace_back(std::move(ins), std::move(outs), tx.slot_range());
    }
    if (c.has_slots())
        return Chain { std::move(txs), *c.slots() };
    return Chain { std::move(txs) };
}

/// Spent positions: outputs that a later input names.
inline std::vector<Position> spent_oracle(const Chain &c)
{
    std::set<Position> all;
    for (const auto &tx: c.transactions())
        for (const auto &o: tx.outputs())
            all.insert(o.position);
    const auto un = unspent_oracle(c);
    std::vector<Position> out;
    for (const auto &p: all)
        if (!un.contains(p))
            out.push_back(p);
    return out;
}

/// Searches every bijection between the spent positions of a and b.
inline bool alpha_oracle(const Chain &a, const Chain &b)
{
    if (a.size() != b.size() || unspent_oracle(a) != unspent_oracle(b))
        return false;
    const auto sa = spent_oracle(a);
    auto sb = spent_oracle(b);
    if (sa.size() != sb.size())
        return false;
    std::sort(sb.begin(), sb.end());
    do {
        std::map<Position, Position> m;
        for (size_t k = 0; k < sa.size(); ++k)
            m.emplace(sa[k], sb[k]);
        if (rename_raw(a, m) == b)
            return true;
    } while (std::next_permutation(sb.begin(), sb.end()));
    return false;
}

/// A chain with at most four spent pairs and a second chain that is either a
/// reshuffle of its spent names or has one unspent output renamed.
inline std::pair<Chain, Chain> alpha_pair(Rng &rng)
{
    GenOptions small;
    small.max_length = 4;
    small.max_outputs = 2;
    while (true) {
        PositionSupply supply;
        ChainGen gen { rng, supply, small };
        const Chain a = gen.valid_chain();
        const auto spent = spent_oracle(a);
        if (spent.size() > 4)
            continue;
        if (rng.chance(1, 2) || a.empty()) {
            std::vector<Position> to = spent;
            for (auto &p: to)
                if (rng.chance(1, 3))
                    p = supply.fresh();
            rng.shuffle(to);
            std::map<Position, Position> m;
            for (size_t j = 0; j < spent.size(); ++j)
                m.emplace(spent[j], to[j]);
            return { a, rename_raw(a, m) };
        }
        // move one unspent output to a fresh name: still valid, never alpha-equivalent
        const auto unspent = unspent_oracle(a);
        if (unspent.empty())
            continue;
        auto it = unspent.begin();
        std::advance(it, rng.below(unspent.size()));
        return { a, rename_raw(a, { { *it, supply.fresh() } }) };
    }
}

}
