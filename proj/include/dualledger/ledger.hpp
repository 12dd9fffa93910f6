// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <functional>
#include <variant>

#include <dualledger/core.hpp>

namespace dualledger {

/// An ordered sequence of transactions, optionally with one slot per
/// transaction. Any sequence is representable; validity is a separate check.
class Chain {
public:
    Chain() = default;
    explicit Chain(std::vector<Transaction> txs);
    /// Slots must match the transactions one to one and be nondecreasing.
    Chain(std::vector<Transaction> txs, std::vector<Natural> slots);

    const std::vector<Transaction> &transactions() const { return txs_; }
    const std::optional<std::vector<Natural>> &slots() const { return slots_; }
    bool has_slots() const { return slots_.has_value(); }
    size_t size() const { return txs_.size(); }
    bool empty() const { return txs_.empty(); }
    const Transaction &operator[](size_t k) const { return txs_.at(k); }
    std::optional<Natural> last_slot() const;

    Chain prefix(size_t n) const;
    Chain suffix(size_t from) const;
    /// Sequence extension without any validity check.
    Chain then(const Transaction &tx, std::optional<Natural> slot = {}) const;
    Chain then(const Chain &more) const;
    Chain without(size_t k) const;

    auto operator<=>(const Chain &) const = default;

private:
    std::vector<Transaction> txs_;
    std::optional<std::vector<Natural>> slots_;
};

enum class ViolationKind : std::uint8_t {
    duplicate_position,
    dangling_or_forward_input,
    validator_rejected,
    slot_out_of_range,
    policy_rejected
};

std::string_view violation_name(ViolationKind k);

struct Violation {
    size_t tx_index = 0;
    ViolationKind kind = ViolationKind::duplicate_position;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

/// The output with i's position among transactions [0, upto), if any.
/// Throws when more than one candidate exists.
std::optional<Output> resolve_input(const Chain &chain, const Input &i, size_t upto);

ValidationReport validate_chain(const Chain &chain);
bool is_valid(const Chain &chain);

/// Extra admission rule consulted by append after the base checks pass.
/// Returns a rejection reason, or nothing to admit.
using AppendHook = std::function<std::optional<std::string>(const Chain &, const Transaction &)>;

/// Validates only tx against an already-valid chain. On rejection the report
/// holds the first violated condition.
std::variant<Chain, ValidationReport> append(const Chain &chain, const Transaction &tx,
                                             std::optional<Natural> slot = {}, const AppendHook &hook = {});

using OutputSet = std::set<Output>;

/// Outputs to which no later input points. Defined for any sequence.
OutputSet utxo(const Chain &chain);

enum class ChainClass : std::uint8_t { blockchain, chunk, neither };

std::string_view class_name(ChainClass c);
/// A chunk satisfies the blockchain conditions except that inputs may dangle.
ChainClass classify(const Chain &chain);

}
