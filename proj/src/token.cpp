// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#include <dualledger/token.hpp>
#include <dualledger/pairing.hpp>

#include <limits>

namespace dualledger::token {

TokenConfig make_config(KeyId issuer, Chip traded_chip, Chip state_chip)
{
    if (traded_chip == state_chip)
        throw error { "traded chip and state chip must differ" };
    if (traded_chip.is_ada() || state_chip.is_ada())
        throw error { "neither the traded chip nor the state chip may be ada" };
    return TokenConfig { issuer, traded_chip, state_chip };
}

Redeemer encode_action(const Action &a)
{
    if (const auto *buy = std::get_if<Buy>(&a)) {
        if (buy->tokens == 0)
            throw error { "buy needs at least one token" };
        if (buy->tokens > std::numeric_limits<Natural>::max() / 2)
            throw error { "buy quantity too large to encode" };
        return Redeemer { 2 * buy->tokens };
    }
    const auto &set = std::get<SetPrice>(a);
    const Natural z = pair(set.price, set.signer.id);
    if (z > (std::numeric_limits<Natural>::max() - 1) / 2)
        throw error { "set-price payload too large to encode" };
    return Redeemer { 2 * z + 1 };
}

std::optional<Action> decode_action(Redeemer r)
{
    if (r.value % 2 == 0) {
        if (r.value == 0)
            return {};
        return Buy { r.value / 2 };
    }
    const auto [price, signer] = unpair(r.value / 2);
    return SetPrice { price, KeyId { signer } };
}

Transaction init_portal(const TokenConfig &cfg, Natural supply, Natural price, PositionSupply &fresh)
{
    if (supply == 0)
        throw error { "initial supply must be positive" };
    const Value v = Value::singleton(cfg.state_chip, 1).plus(Value::singleton(cfg.traded_chip, supply));
    return Transaction { {}, { Output { fresh.fresh(), ValidatorRef::state_machine(cfg), Datum { price }, v } } };
}

namespace {
    bool pays_issuer(const TokenConfig &cfg, const std::vector<Output> &outputs, Natural due)
    {
        if (due == 0)
            return true;
        const auto expected = Value::singleton(Chip::ada(), due);
        for (const auto &o: outputs)
            if (o.validator == ValidatorRef::pay_to_pub_key(cfg.issuer) && o.value == expected)
                return true;
        return false;
    }
}

bool transition_check(const TokenConfig &cfg, Redeemer r, Datum d, const Value &v, const Context &ctx)
{
    const auto action = decode_action(r);
    if (!action || v.get(cfg.state_chip) != 1)
        return false;

    const Output *successor = nullptr;
    Natural state_total = 0;
    for (const auto &o: ctx.outputs) {
        const Natural q = o.value.get(cfg.state_chip);
        if (q > 0) {
            state_total += q;
            successor = &o;
        }
    }
    if (state_total != 1 || successor->validator != ValidatorRef::state_machine(cfg))
        return false;

    if (const auto *buy = std::get_if<Buy>(&*action)) {
        if (v.get(cfg.traded_chip) < buy->tokens)
            return false;
        if (successor->datum != d || successor->value != v.minus(cfg.traded_chip, buy->tokens))
            return false;
        Natural due = 0;
        if (__builtin_mul_overflow(buy->tokens, d.value, &due))
            return false;
        return pays_issuer(cfg, ctx.outputs, due);
    }
    const auto &set = std::get<SetPrice>(*action);
    return set.signer == cfg.issuer && successor->datum == Datum { set.price } && successor->value == v;
}

Output find_portal(const Chain &chain, const TokenConfig &cfg)
{
    std::optional<Output> portal;
    for (const auto &o: utxo(chain)) {
        if (o.value.get(cfg.state_chip) == 0)
            continue;
        if (portal)
            throw error { "malformed chain: more than one output carries the state chip" };
        portal = o;
    }
    if (!portal)
        throw error { "no portal: no unspent output carries the state chip" };
    return *portal;
}

Natural lookup_price(const Chain &chain, const TokenConfig &cfg)
{
    return find_portal(chain, cfg).datum.value;
}

std::variant<Transaction, PriceTooHigh> build_buy_tx(const Chain &chain, const TokenConfig &cfg, KeyId buyer,
                                                     Natural n, std::optional<Natural> max_price,
                                                     PositionSupply &fresh)
{
    const Output portal = find_portal(chain, cfg);
    const Natural price = portal.datum.value;
    if (max_price && price > *max_price)
        return PriceTooHigh { price, *max_price };
    if (n == 0)
        throw error { "buy needs at least one token" };
    if (portal.value.get(cfg.traded_chip) < n)
        throw error { "insufficient supply at the portal" };
    Natural due = 0;
    if (__builtin_mul_overflow(n, price, &due))
        throw error { "payment overflow" };

    std::vector<Output> outs;
    outs.push_back(Output { fresh.fresh(), portal.validator, portal.datum, portal.value.minus(cfg.traded_chip, n) });
    if (due > 0)
        outs.push_back(Output { fresh.fresh(), ValidatorRef::pay_to_pub_key(cfg.issuer), Datum {},
                                Value::singleton(Chip::ada(), due) });
    outs.push_back(Output { fresh.fresh(), ValidatorRef::pay_to_pub_key(buyer), Datum {},
                            Value::singleton(cfg.traded_chip, n) });
    return Transaction { { Input { portal.position, encode_action(Buy { n }) } }, std::move(outs) };
}

Transaction build_set_price_tx(const Chain &chain, const TokenConfig &cfg, Natural price, PositionSupply &fresh,
                               std::optional<KeyId> signer)
{
    const Output portal = find_portal(chain, cfg);
    return Transaction {
        { Input { portal.position, encode_action(SetPrice { price, signer.value_or(cfg.issuer) }) } },
        { Output { fresh.fresh(), portal.validator, Datum { price }, portal.value } }
    };
}

}
