// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <dualledger/ledger.hpp>

namespace dualledger {

enum class PolicyRule : std::uint8_t {
    free_forge,
    forbid_forge,
    /// At most one unit ever exists, minted once and never burned.
    affine_once
};

std::string_view rule_name(PolicyRule r);
std::optional<PolicyRule> rule_from_name(std::string_view s);

struct PolicyTable {
    std::map<Natural, PolicyRule> rules;
    PolicyRule default_rule = PolicyRule::free_forge;

    PolicyRule rule_for(Natural symbol) const;
    bool operator==(const PolicyTable &) const = default;
};

/// Net change of a currency symbol's quantity caused by tx; negative when burning.
/// Throws when an input of tx does not resolve in chain.
std::int64_t forged(const Chain &chain, const Transaction &tx, Natural symbol);

/// Rejection reason, or nothing when every pertinent policy admits tx.
std::optional<std::string> policy_violation(const PolicyTable &table, const Chain &chain, const Transaction &tx);
bool check_policies(const PolicyTable &table, const Chain &chain, const Transaction &tx);

/// Adapts a table into an append hook.
AppendHook policy_hook(PolicyTable table);

}
