// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualledger {

using Natural = std::uint64_t;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Position {
    Natural id = 0;
    auto operator<=>(const Position &) const = default;
};

struct Datum {
    Natural value = 0;
    auto operator<=>(const Datum &) const = default;
};

struct Redeemer {
    Natural value = 0;
    auto operator<=>(const Redeemer &) const = default;
};

/// Simulated public-key hash. A redeemer equal to the key id plays the role of a signature.
struct KeyId {
    Natural id = 0;
    auto operator<=>(const KeyId &) const = default;
};

struct Chip {
    Natural currency_symbol = 0;
    Natural token_name = 0;

    static constexpr Chip ada() { return {0, 0}; }
    bool is_ada() const { return currency_symbol == 0 && token_name == 0; }
    auto operator<=>(const Chip &) const = default;
};

/// A finite multiset of chips. Absent chips have quantity zero and zero
/// quantities are never stored.
class Value {
public:
    Value() = default;

    static Value singleton(Chip c, Natural n);

    Natural get(Chip c) const;
    /// Sum of quantities over every chip carrying this currency symbol.
    Natural total_of_symbol(Natural symbol) const;
    bool empty() const { return entries_.empty(); }
    const std::map<Chip, Natural> &entries() const { return entries_; }

    Value plus(const Value &o) const;
    /// Removes n units of c; throws if fewer are held.
    Value minus(Chip c, Natural n) const;

    auto operator<=>(const Value &) const = default;

private:
    std::map<Chip, Natural> entries_;
};

Natural value_get(const Value &v, Chip c);
Value value_add(const Value &a, const Value &b);
Value value_singleton(Chip c, Natural n);

/// Parameters of the token portal. Lives here because the state-machine
/// validator carries it.
struct TokenConfig {
    KeyId issuer;
    Chip traded_chip;
    Chip state_chip;
    auto operator<=>(const TokenConfig &) const = default;
};

enum class ValidatorKind : std::uint8_t {
    accept_all = 0,
    reject_all = 1,
    pay_to_pub_key = 2,
    state_machine = 3
};

/// Serializable reference into the validator registry. Only the field that
/// matches the kind is meaningful; the others stay value-initialized so that
/// structural comparison is exact.
struct ValidatorRef {
    ValidatorKind kind = ValidatorKind::accept_all;
    KeyId key;
    TokenConfig config;

    static ValidatorRef accept_all() { return {}; }
    static ValidatorRef reject_all() { return { ValidatorKind::reject_all, {}, {} }; }
    static ValidatorRef pay_to_pub_key(KeyId k) { return { ValidatorKind::pay_to_pub_key, k, {} }; }
    static ValidatorRef state_machine(const TokenConfig &c) { return { ValidatorKind::state_machine, {}, c }; }

    auto operator<=>(const ValidatorRef &) const = default;
};

struct Input {
    Position position;
    Redeemer redeemer;
    auto operator<=>(const Input &) const = default;
};

struct Output {
    Position position;
    ValidatorRef validator;
    Datum datum;
    Value value;
    auto operator<=>(const Output &) const = default;
};

/// Inclusive slot interval; an absent upper bound means unbounded.
struct SlotRange {
    Natural lo = 0;
    std::optional<Natural> hi;

    SlotRange() = default;
    SlotRange(Natural lo_, std::optional<Natural> hi_);

    bool contains(Natural slot) const { return slot >= lo && (!hi || slot <= *hi); }
    auto operator<=>(const SlotRange &) const = default;
};

/// A set of inputs and a set of outputs, either possibly empty. Both sets
/// are kept sorted by position, so equality is set equality.
class Transaction {
public:
    Transaction() = default;
    Transaction(std::vector<Input> inputs, std::vector<Output> outputs,
                std::optional<SlotRange> slot_range = {});

    const std::vector<Input> &inputs() const { return inputs_; }
    const std::vector<Output> &outputs() const { return outputs_; }
    const std::optional<SlotRange> &slot_range() const { return slot_range_; }

    bool has_input(const Input &i) const;
    Transaction with_slot_range(std::optional<SlotRange> r) const;

    auto operator<=>(const Transaction &) const = default;

private:
    std::vector<Input> inputs_;
    std::vector<Output> outputs_;
    std::optional<SlotRange> slot_range_;
};

/// A transaction viewed from one of its inputs.
struct Context {
    std::vector<Input> inputs;
    Input focus;
    std::vector<Output> outputs;
};

Context context_at(const Transaction &tx, const Input &i);
std::set<Position> positions_of(const Transaction &tx);

/// Monotone allocator of fresh positions.
class PositionSupply {
public:
    explicit PositionSupply(Natural next = 1): next_ { next } {}

    Position fresh() { return Position { next_++ }; }
    Natural peek() const { return next_; }
    /// Never hand out anything at or below p.
    void reserve_through(Position p);

private:
    Natural next_;
};

}
