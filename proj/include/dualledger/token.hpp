// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <variant>

#include <dualledger/ledger.hpp>

namespace dualledger::token {

/// Checks the config invariants: traded and state chips differ and neither is ada.
TokenConfig make_config(KeyId issuer, Chip traded_chip, Chip state_chip);

struct Buy {
    Natural tokens = 0;
    auto operator<=>(const Buy &) const = default;
};

struct SetPrice {
    Natural price = 0;
    KeyId signer;
    auto operator<=>(const SetPrice &) const = default;
};

using Action = std::variant<Buy, SetPrice>;

/// Even redeemers carry Buy(n) as 2n; odd ones carry SetPrice as 2*pair(price, signer)+1.
Redeemer encode_action(const Action &a);
/// Nothing for redeemers that name no well-formed action (e.g. Buy(0)).
std::optional<Action> decode_action(Redeemer r);

/// A genesis transaction minting the state chip and the whole supply into the portal output.
Transaction init_portal(const TokenConfig &cfg, Natural supply, Natural price, PositionSupply &fresh);

/// The on-chain transition rule behind the StateMachine validator.
bool transition_check(const TokenConfig &cfg, Redeemer r, Datum d, const Value &v, const Context &ctx);

/// The unique unspent output carrying the state chip.
Output find_portal(const Chain &chain, const TokenConfig &cfg);
Natural lookup_price(const Chain &chain, const TokenConfig &cfg);

struct PriceTooHigh {
    Natural price = 0;
    Natural max_price = 0;
};

/// Off-chain buy builder. Refuses locally, building nothing, when the current
/// price exceeds max_price. Throws when the portal holds fewer than n tokens.
std::variant<Transaction, PriceTooHigh> build_buy_tx(const Chain &chain, const TokenConfig &cfg, KeyId buyer,
                                                     Natural n, std::optional<Natural> max_price,
                                                     PositionSupply &fresh);

/// Signed by the issuer unless another signer is given; such a transaction is
/// well formed but the portal's validator rejects it.
Transaction build_set_price_tx(const Chain &chain, const TokenConfig &cfg, Natural price, PositionSupply &fresh,
                               std::optional<KeyId> signer = {});

}
