// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dualledger::cli {

/// 0: success or equivalent; 1: semantic negative; 2: input error.
struct CommandResult {
    int code = 0;
    std::string out;
    std::string err;
};

enum class Format { text, json };

CommandResult cmd_validate(const std::string &path, Format f);
CommandResult cmd_utxo(const std::string &path, Format f);
CommandResult cmd_classify(const std::string &path, Format f);
/// mode is "obs" or "alpha"
CommandResult cmd_equiv(const std::string &path_a, const std::string &path_b, const std::string &mode, Format f);
/// schedule overrides the file: "all", "sample:<n>:<seed>" or "order:<i>,<j>,..."
CommandResult cmd_scenario(const std::string &path, const std::string &schedule, Format f);
/// statement is a statement name, "token-policy" or "all"
CommandResult cmd_fuzz(const std::string &statement, size_t cases, std::uint64_t seed, Format f);
/// ledger is "eutxo", "account" or "both"
CommandResult cmd_demo_race(const std::string &ledger, Format f);

/// Parses argv and dispatches.
CommandResult run(const std::vector<std::string> &args);

}
