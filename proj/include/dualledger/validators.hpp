// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <string_view>

#include <dualledger/core.hpp>

namespace dualledger {

/// Interprets a validator reference as a predicate over (redeemer, datum, value, context).
/// Total and pure; never searches over redeemers.
bool run_validator(const ValidatorRef &v, Redeemer r, Datum d, const Value &val, const Context &ctx);

std::string_view kind_name(ValidatorKind k);
std::optional<ValidatorKind> kind_from_name(std::string_view s);

}
