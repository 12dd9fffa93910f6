// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <dualledger/account.hpp>
#include <dualledger/policy.hpp>

namespace dualledger::sim {

enum class LedgerKind : std::uint8_t { eutxo, account };

std::string_view ledger_name(LedgerKind k);

struct Actor {
    std::string name;
    KeyId key;
    bool operator==(const Actor &) const = default;
};

enum class IntentKind : std::uint8_t { buy, set_price, send };

std::string_view intent_name(IntentKind k);

/// What an actor wants done. On the UTxO ledger the transaction is built
/// against the snapshot at submission and never rebuilt; on the account
/// ledger the call is executed against whatever state it meets.
struct Intent {
    std::string actor;
    IntentKind kind = IntentKind::buy;
    /// buy: tokens wanted; send: tokens to move
    Natural tokens = 0;
    /// buy: the price the buyer expects; defaults to the price seen at submission
    std::optional<Natural> expect_price;
    /// buy: refuse or revert above the expected price
    bool guarded = false;
    /// set-price: the new price
    Natural price = 0;
    /// send: receiving actor
    std::string recipient;
    /// UTxO ledger with slots: last slot in which the transaction may land
    std::optional<Natural> until;
    bool operator==(const Intent &) const = default;
};

enum class ScheduleMode : std::uint8_t { orders, all, sample };

struct ScheduleSpec {
    ScheduleMode mode = ScheduleMode::all;
    std::vector<std::vector<size_t>> orders;
    size_t samples = 0;
    std::uint64_t seed = 0;
    bool operator==(const ScheduleSpec &) const = default;
};

struct Scenario {
    LedgerKind ledger = LedgerKind::eutxo;
    std::vector<Actor> actors;
    std::string issuer;
    Chip traded_chip { 1, 1 };
    Chip state_chip { 2, 1 };
    Natural supply = 1000;
    Natural price = 1;
    PolicyTable policies;
    bool slots = false;
    /// rebuild UTxO transactions at execution time instead of submission
    bool rebuild = false;
    std::vector<Intent> intents;
    ScheduleSpec schedule;

    const Actor &actor(std::string_view name) const;
    TokenConfig config() const;
    bool operator==(const Scenario &) const = default;
};

/// Throws parse_error on malformed text and unknown actors.
Scenario parse_scenario(std::string_view text);
std::string print_scenario(const Scenario &s);

enum class IntentStatus : std::uint8_t { accepted, rejected, guard_failed, refused };

std::string_view status_name(IntentStatus s);

struct StepOutcome {
    size_t intent = 0;
    IntentStatus status = IntentStatus::accepted;
    /// price the actor saw at submission
    Natural seen_price = 0;
    Natural tokens = 0;
    Natural paid = 0;
    std::string reason;
    bool operator==(const StepOutcome &) const = default;
};

struct Holding {
    std::string actor;
    Natural tokens = 0;
    Natural paid = 0;
    Natural received = 0;
    bool operator==(const Holding &) const = default;
};

struct Outcome {
    LedgerKind ledger = LedgerKind::eutxo;
    std::vector<size_t> order;
    /// in execution order
    std::vector<StepOutcome> steps;
    std::vector<Holding> holdings;
    Natural final_price = 0;
    std::string digest;

    /// Everything except the order; two schedules with equal signatures had the same effect.
    std::string signature() const;
    bool operator==(const Outcome &) const = default;
};

std::string print_outcome(const Outcome &o);
Outcome parse_outcome(std::string_view text);

/// Applies the scenario's intents in the given order. Every failure is recorded, none thrown.
Outcome run_schedule(const Scenario &s, const std::vector<size_t> &order);

/// All permutations of [0, count) when count! <= limit, else `limit` seeded samples.
std::vector<std::vector<size_t>> enumerate_interleavings(size_t count, size_t limit, std::uint64_t seed);

std::vector<std::vector<size_t>> schedules_for(const Scenario &s);

struct OutcomeClass {
    Outcome representative;
    std::vector<std::vector<size_t>> orders;
    /// every accepted buy delivered the tokens asked for at the price seen at submission
    bool price_faithful = true;
};

struct ScenarioReport {
    std::vector<Outcome> outcomes;
    std::vector<OutcomeClass> distinct;
};

ScenarioReport run_scenario(const Scenario &s);
ScenarioReport run_scenario(const Scenario &s, const std::vector<std::vector<size_t>> &orders);
std::string print_report(const ScenarioReport &r);

/// The bundled two-actor race: a buyer wants 100 tokens at price 1 while the
/// issuer raises the price to 100.
Scenario race_scenario(LedgerKind ledger);

}
