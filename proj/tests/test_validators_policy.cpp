// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include <dualledger/policy.hpp>
#include <dualledger/token.hpp>
#include <dualledger/validators.hpp>

using namespace dualledger;
using namespace fixtures;

namespace {

Output holding(Natural p, Value v)
{
    return Output { Position { p }, ValidatorRef::accept_all(), Datum {}, std::move(v) };
}

}

TEST_CASE("simple validators")
{
    const Transaction t { { at(1, 42) }, {} };
    const Context ctx = context_at(t, at(1, 42));
    CHECK(run_validator(ValidatorRef::accept_all(), Redeemer { 5 }, Datum {}, Value {}, ctx));
    CHECK(!run_validator(ValidatorRef::reject_all(), Redeemer { 5 }, Datum {}, Value {}, ctx));
    CHECK(run_validator(ValidatorRef::pay_to_pub_key(KeyId { 42 }), Redeemer { 42 }, Datum {}, Value {}, ctx));
    CHECK(!run_validator(ValidatorRef::pay_to_pub_key(KeyId { 42 }), Redeemer { 7 }, Datum {}, Value {}, ctx));
}

TEST_CASE("kind names round trip")
{
    for (auto k: { ValidatorKind::accept_all, ValidatorKind::reject_all, ValidatorKind::pay_to_pub_key,
                   ValidatorKind::state_machine })
        CHECK(kind_from_name(kind_name(k)) == k);
    CHECK(!kind_from_name("Nope"));
}

TEST_CASE("state machine accepts a well formed buy")
{
    const auto cfg = token::make_config(KeyId { 1 }, Chip { 1, 1 }, Chip { 2, 1 });
    PositionSupply fresh;
    const Chain c { { token::init_portal(cfg, 1000, 5, fresh) } };
    const auto built = token::build_buy_tx(c, cfg, KeyId { 2 }, 3, 5, fresh);
    REQUIRE(std::holds_alternative<Transaction>(built));
    const Transaction &tx = std::get<Transaction>(built);
    const Output portal = token::find_portal(c, cfg);
    const Input &in = tx.inputs().at(0);
    CHECK(run_validator(portal.validator, in.redeemer, portal.datum, portal.value, context_at(tx, in)));
    CHECK(is_valid(c.then(tx)));
}

TEST_CASE("forged quantities")
{
    const Chip c { 5, 1 };
    const Transaction mint { {}, { holding(1, Value::singleton(c, 100)) } };
    CHECK(forged(Chain {}, mint, 5) == 100);

    const Chain three { { Transaction { {}, { holding(1, Value::singleton(c, 3)) } } } };
    CHECK(forged(three, Transaction { { at(1) }, { holding(2, Value::singleton(c, 3)) } }, 5) == 0);
    CHECK(forged(three, Transaction { { at(1) }, { holding(2, Value::singleton(c, 1)) } }, 5) == -2);
    CHECK(forged(three, Transaction { { at(1) }, {} }, 6) == 0);
}

TEST_CASE("policy rules")
{
    const Chip s { 7, 1 };
    PolicyTable table;
    table.rules[7] = PolicyRule::affine_once;
    table.rules[8] = PolicyRule::forbid_forge;

    const Transaction mint1 { {}, { holding(1, Value::singleton(s, 1)) } };
    CHECK(check_policies(table, Chain {}, mint1));
    CHECK(!check_policies(table, Chain {}, Transaction { {}, { holding(1, Value::singleton(s, 2)) } }));

    const Chain minted { { mint1 } };
    CHECK(!check_policies(table, minted, Transaction { {}, { holding(2, Value::singleton(s, 1)) } }));
    CHECK(!check_policies(table, minted, Transaction { { at(1) }, {} }));
    CHECK(check_policies(table, minted, Transaction { { at(1) }, { holding(2, Value::singleton(s, 1)) } }));

    CHECK(!check_policies(table, Chain {}, Transaction { {}, { holding(1, Value::singleton(Chip { 8, 1 }, 1)) } }));
    // unlisted symbols fall to the default rule
    CHECK(check_policies(table, Chain {}, Transaction { {}, { holding(1, Value::singleton(Chip { 9, 1 }, 9)) } }));
    table.default_rule = PolicyRule::forbid_forge;
    CHECK(!check_policies(table, Chain {}, Transaction { {}, { holding(1, Value::singleton(Chip { 9, 1 }, 9)) } }));
}

TEST_CASE("policy hook refuses through append")
{
    PolicyTable table;
    table.rules[7] = PolicyRule::affine_once;
    const Chain minted { { Transaction { {}, { holding(1, Value::singleton(Chip { 7, 1 }, 1)) } } } };
    const auto r = append(minted, Transaction { {}, { holding(2, Value::singleton(Chip { 7, 1 }, 1)) } }, {},
                          policy_hook(table));
    REQUIRE(std::holds_alternative<ValidationReport>(r));
    CHECK(std::get<ValidationReport>(r).violations[0].kind == ViolationKind::policy_rejected);
}

TEST_CASE("rule names round trip")
{
    for (auto r: { PolicyRule::free_forge, PolicyRule::forbid_forge, PolicyRule::affine_once })
        CHECK(rule_from_name(rule_name(r)) == r);
}
