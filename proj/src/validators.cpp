// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#include <dualledger/validators.hpp>
#include <dualledger/token.hpp>

namespace dualledger {

bool run_validator(const ValidatorRef &v, Redeemer r, Datum d, const Value &val, const Context &ctx)
{
    switch (v.kind) {
        case ValidatorKind::accept_all:
            return true;
        case ValidatorKind::reject_all:
            return false;
        case ValidatorKind::pay_to_pub_key:
            return r.value == v.key.id;
        case ValidatorKind::state_machine:
            return token::transition_check(v.config, r, d, val, ctx);
    }
    return false;
}

std::string_view kind_name(ValidatorKind k)
{
    switch (k) {
        case ValidatorKind::accept_all: return "AcceptAll";
        case ValidatorKind::reject_all: return "RejectAll";
        case ValidatorKind::pay_to_pub_key: return "PayToPubKey";
        case ValidatorKind::state_machine: return "StateMachine";
    }
    return "?";
}

std::optional<ValidatorKind> kind_from_name(std::string_view s)
{
    for (auto k: { ValidatorKind::accept_all, ValidatorKind::reject_all,
                   ValidatorKind::pay_to_pub_key, ValidatorKind::state_machine })
        if (kind_name(k) == s)
            return k;
    return {};
}

}
