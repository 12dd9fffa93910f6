// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#include <dualledger/account.hpp>
#include <dualledger/pairing.hpp>

#include <limits>

namespace dualledger::account {

std::string_view function_label(FunctionName f)
{
    switch (f) {
        case FunctionName::send: return "send";
        case FunctionName::buy: return "buy";
        case FunctionName::set_price: return "setPrice";
        case FunctionName::buy_guarded: return "buyGuarded";
    }
    return "?";
}

std::optional<FunctionName> function_from_label(std::string_view s)
{
    for (auto f: { FunctionName::send, FunctionName::buy, FunctionName::set_price, FunctionName::buy_guarded })
        if (function_label(f) == s)
            return f;
    return {};
}

Natural ChangingState::balance_of(KeyId k) const
{
    const auto it = balances.find(k);
    return it == balances.end() ? 0 : it->second;
}

Natural ChangingState::total_tokens() const
{
    Natural t = 0;
    for (const auto &[k, n]: balances)
        t += n;
    return t;
}

const Contract &AccountChain::contract(ContractName n) const
{
    const auto it = contracts_.find(n);
    if (it == contracts_.end())
        throw error { "unknown contract " + std::to_string(n) };
    return it->second;
}

AccountChain AccountChain::with_contract(ContractName n, Contract c) const
{
    AccountChain r = *this;
    r.contracts_[n] = std::move(c);
    return r;
}

AccountChain AccountChain::with_logged(LoggedCall c) const
{
    AccountChain r = *this;
    r.log_.push_back(std::move(c));
    return r;
}

AccountChain deploy_changing(const AccountChain &chain, ContractName name, KeyId sender,
                             Natural initial_supply, Natural initial_price)
{
    if (chain.contracts().contains(name))
        throw error { "contract name " + std::to_string(name) + " already deployed" };
    Contract c;
    c.state.issuer = sender;
    c.state.price = initial_price;
    if (initial_supply > 0)
        c.state.balances[sender] = initial_supply;
    return chain.with_contract(name, std::move(c));
}

namespace {
    void move_tokens(ChangingState &s, KeyId from, KeyId to, Natural amount)
    {
        if (amount == 0)
            return;
        auto &src = s.balances[from];
        src -= amount;
        if (src == 0)
            s.balances.erase(from);
        s.balances[to] += amount;
    }
}

BuyEffect changing_buy(const ChangingState &state, KeyId sender, Natural value)
{
    if (state.price == 0)
        throw guard_failure { "price is zero" };
    const Natural tokens = value / state.price;
    if (state.balance_of(state.issuer) < tokens)
        throw guard_failure { "issuer holds too few tokens" };
    BuyEffect e { state, tokens, value - tokens * state.price };
    move_tokens(e.state, state.issuer, sender, tokens);
    return e;
}

BuyEffect changing_buy_guarded(const ChangingState &state, KeyId sender, Natural value, Natural max_price)
{
    if (state.price > max_price)
        throw guard_failure { "price " + std::to_string(state.price) + " above expected " + std::to_string(max_price) };
    return changing_buy(state, sender, value);
}

ChangingState changing_send(const ChangingState &state, KeyId sender, KeyId recipient, Natural amount)
{
    if (state.balance_of(sender) < amount)
        throw guard_failure { "sender holds too few tokens" };
    ChangingState s = state;
    move_tokens(s, sender, recipient, amount);
    return s;
}

ChangingState changing_set_price(const ChangingState &state, KeyId sender, Natural price)
{
    if (sender != state.issuer)
        throw guard_failure { "only the issuer may set the price" };
    ChangingState s = state;
    s.price = price;
    return s;
}

std::pair<AccountChain, CallResult> call(const AccountChain &chain, const CallTx &tx)
{
    Contract c = chain.contract(tx.contract);
    CallResult result;
    try {
        switch (tx.function) {
            case FunctionName::buy:
            case FunctionName::buy_guarded: {
                const auto e = tx.function == FunctionName::buy
                    ? changing_buy(c.state, tx.sender, tx.value)
                    : changing_buy_guarded(c.state, tx.sender, tx.value, tx.datum);
                if (c.balance > std::numeric_limits<Natural>::max() - tx.value)
                    throw guard_failure { "contract balance overflow" };
                c.state = e.state;
                c.balance += tx.value;
                result.tokens = e.tokens;
                result.retained = e.retained;
                break;
            }
            case FunctionName::send: {
                if (tx.value != 0)
                    throw guard_failure { "send is not payable" };
                const auto [recipient, amount] = unpair(tx.datum);
                c.state = changing_send(c.state, tx.sender, KeyId { recipient }, amount);
                break;
            }
            case FunctionName::set_price:
                if (tx.value != 0)
                    throw guard_failure { "setPrice is not payable" };
                c.state = changing_set_price(c.state, tx.sender, tx.datum);
                break;
            default:
                throw error { "unknown function " + std::to_string(static_cast<Natural>(tx.function)) };
        }
    } catch (const guard_failure &g) {
        result = CallResult { CallStatus::guard_failed, g.what(), 0, 0 };
        return { chain.with_logged({ tx, result }), result };
    }
    return { chain.with_contract(tx.contract, std::move(c)).with_logged({ tx, result }), result };
}

}
