// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <dualledger/equivalence.hpp>
#include <dualledger/gen.hpp>
#include <dualledger/policy.hpp>

namespace dualledger {

enum class Statement : std::uint8_t {
    /// valid(B;tx) implies valid(B)
    prefix_closure,
    /// apartness is symmetric
    apart_symmetry,
    /// apart transactions commute, for validity and up to equivalence
    apart_commute,
    /// after valid(B;tx';tx), tx alone is valid exactly when tx and tx' are apart
    apart_needed,
    /// a transaction valid now stays valid and equivalent when deferred
    defer,
    /// the same deferral claim with slot ranges; expected to fail
    defer_slots,
    /// with slot ranges, two valid orders are equivalent
    defer_slots_equiv,
    /// equivalent chains stay equivalent after appending the same transaction
    equiv_append,
    /// renaming spent positions preserves the unspent outputs
    alpha_obs,
    /// equivalent chains accept the same transactions after freshening
    alpha_valid,
    /// and give equivalent results
    alpha_append,
};

std::string_view statement_name(Statement s);
std::optional<Statement> statement_from_name(std::string_view s);
const std::vector<Statement> &all_statements();

/// One generated instance. Which fields matter depends on the statement:
/// `chain` is B, `alt` is B', `txs` the competing transactions and `tx` the
/// transaction under study; `schedule` gives slots after B.
struct Instance {
    Statement which = Statement::prefix_closure;
    Chain chain;
    std::optional<Chain> alt;
    std::vector<Transaction> txs;
    std::optional<Transaction> tx;
    std::vector<Natural> schedule;

    bool operator==(const Instance &) const = default;
};

std::string print_instance(const Instance &i);
/// Throws parse_error on malformed text.
Instance parse_instance(std::string_view text);

struct Verdict {
    bool hypothesis = false;
    bool holds = true;
    /// the instance exercised the non-trivial side of the claim
    bool interesting = false;
};

Verdict evaluate(const Instance &i);

/// Greedy transaction removal, keeping the hypothesis true and the claim false.
Instance minimize(const Instance &i);

Instance generate_instance(Statement which, std::uint64_t seed);

/// B' with the same unspent outputs as B: spent positions renamed, adjacent
/// apart transactions swapped, or a create-then-spend detour inserted.
Chain equivalent_variant(const Chain &chain, Rng &rng, PositionSupply &supply);

struct FuzzReport {
    Statement which = Statement::prefix_closure;
    std::uint64_t seed = 0;
    size_t requested = 0;
    /// attempts that satisfied the hypothesis
    size_t cases = 0;
    size_t passes = 0;
    size_t attempts = 0;
    size_t interesting = 0;
    size_t failures = 0;
    /// the first few minimized counterexamples, serialized
    std::vector<std::string> counterexamples;
    bool expect_counterexample = false;

    bool ok() const;
};

/// Draws instances until `cases` satisfy the hypothesis or the attempt budget runs out.
FuzzReport fuzz_statement(Statement which, std::uint64_t seed, size_t cases);
std::string render(const FuzzReport &r);

struct TokenFuzzReport {
    std::uint64_t seed = 0;
    size_t scenarios = 0;
    size_t attempted = 0;
    size_t appended = 0;
    std::map<std::string, size_t> accepted_by_action;
    std::map<std::string, size_t> rejected_by_action;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Random portal histories with honest and hostile actions; checks the state
/// chip and supply invariants after every append.
TokenFuzzReport fuzz_token_policy(std::uint64_t seed, size_t scenarios, size_t steps);
std::string render(const TokenFuzzReport &r);

}
