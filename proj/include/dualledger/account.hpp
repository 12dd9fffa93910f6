// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <utility>

#include <dualledger/core.hpp>

namespace dualledger::account {

using ContractName = Natural;

enum class FunctionName : Natural {
    send = 1,
    buy = 2,
    set_price = 3,
    /// buy with an expected-price argument; not part of the deployed contract's intent,
    /// kept to show that the fix exists only if the issuer ships it
    buy_guarded = 4
};

std::string_view function_label(FunctionName f);
std::optional<FunctionName> function_from_label(std::string_view s);

/// Thrown by a contract function whose guard fails; the call reverts.
struct guard_failure : error {
    using error::error;
};

/// Storage of the Changing contract.
struct ChangingState {
    KeyId issuer;
    Natural price = 0;
    std::map<KeyId, Natural> balances;

    Natural balance_of(KeyId k) const;
    Natural total_tokens() const;
    bool operator==(const ChangingState &) const = default;
};

struct Contract {
    Natural balance = 0;
    ChangingState state;
    bool operator==(const Contract &) const = default;
};

struct CallTx {
    ContractName contract = 0;
    FunctionName function = FunctionName::buy;
    KeyId sender;
    /// attached payment
    Natural value = 0;
    /// encoded arguments: send carries pair(recipient, amount), set_price the price,
    /// buy_guarded the highest acceptable price
    Natural datum = 0;
    bool operator==(const CallTx &) const = default;
};

enum class CallStatus : std::uint8_t { ok, guard_failed };

struct CallResult {
    CallStatus status = CallStatus::ok;
    std::string detail;
    /// tokens credited to the sender by a buy
    Natural tokens = 0;
    /// part of the attached value that bought nothing and stays with the contract
    Natural retained = 0;
    bool operator==(const CallResult &) const = default;
};

struct LoggedCall {
    CallTx tx;
    CallResult result;
    bool operator==(const LoggedCall &) const = default;
};

/// Contract names to (balance, state), plus the log of executed calls.
class AccountChain {
public:
    const std::map<ContractName, Contract> &contracts() const { return contracts_; }
    const Contract &contract(ContractName n) const;
    const std::vector<LoggedCall> &log() const { return log_; }

    AccountChain with_contract(ContractName n, Contract c) const;
    AccountChain with_logged(LoggedCall c) const;

    bool operator==(const AccountChain &) const = default;

private:
    std::map<ContractName, Contract> contracts_;
    std::vector<LoggedCall> log_;
};

/// Constructor: the sender becomes issuer and holds the whole supply.
AccountChain deploy_changing(const AccountChain &chain, ContractName name, KeyId sender,
                             Natural initial_supply, Natural initial_price);

/// Runs a function as a whole-state transformer. A failed guard leaves the
/// contracts untouched and keeps the attached value with the sender. Throws
/// for an unknown contract.
std::pair<AccountChain, CallResult> call(const AccountChain &chain, const CallTx &tx);

struct BuyEffect {
    ChangingState state;
    Natural tokens = 0;
    Natural retained = 0;
};

/// tokens = value / price, floored; the remainder is kept, not refunded.
BuyEffect changing_buy(const ChangingState &state, KeyId sender, Natural value);
BuyEffect changing_buy_guarded(const ChangingState &state, KeyId sender, Natural value, Natural max_price);
ChangingState changing_send(const ChangingState &state, KeyId sender, KeyId recipient, Natural amount);
ChangingState changing_set_price(const ChangingState &state, KeyId sender, Natural price);

}
