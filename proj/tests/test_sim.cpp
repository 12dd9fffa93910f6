// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include <dualledger/sim.hpp>

using namespace dualledger;
using namespace dualledger::sim;

namespace {

std::string golden(const std::string &name)
{
    return read_file(std::string { GOLDEN_DIR } + "/" + name);
}

const Holding &holding_of(const Outcome &o, std::string_view actor)
{
    for (const auto &h: o.holdings)
        if (h.actor == actor)
            return h;
    FAIL("no holding for actor");
    throw 0;
}

Scenario single_buy(LedgerKind ledger)
{
    Scenario s = race_scenario(ledger);
    s.intents.resize(1);
    return s;
}

}

TEST_CASE("single buy on a fresh portal")
{
    for (auto ledger: { LedgerKind::eutxo, LedgerKind::account }) {
        const Outcome o = run_schedule(single_buy(ledger), { 0 });
        REQUIRE(o.steps.size() == 1);
        CHECK(o.steps[0].status == IntentStatus::accepted);
        CHECK(o.steps[0].tokens == 100);
        CHECK(o.steps[0].paid == 100);
        CHECK(holding_of(o, "B").tokens == 100);
    }
}

TEST_CASE("race on the UTxO ledger")
{
    const Scenario s = race_scenario(LedgerKind::eutxo);
    const Outcome buy_first = run_schedule(s, { 0, 1 });
    CHECK(buy_first.steps[0].status == IntentStatus::accepted);
    CHECK(buy_first.steps[1].status == IntentStatus::rejected);
    CHECK(buy_first.final_price == 1);

    const Outcome set_first = run_schedule(s, { 1, 0 });
    CHECK(set_first.steps[0].status == IntentStatus::accepted);
    CHECK(set_first.steps[1].status == IntentStatus::rejected);
    CHECK(holding_of(set_first, "B").tokens == 0);
    CHECK(holding_of(set_first, "B").paid == 0);
    CHECK(set_first.final_price == 100);
}

TEST_CASE("race on the account ledger")
{
    const Scenario s = race_scenario(LedgerKind::account);
    const Outcome set_first = run_schedule(s, { 1, 0 });
    REQUIRE(set_first.steps.size() == 2);
    CHECK(set_first.steps[1].status == IntentStatus::accepted);
    CHECK(set_first.steps[1].tokens == 100 / 100);
    CHECK(set_first.steps[1].paid == 100);
    CHECK(holding_of(set_first, "B").tokens == 1);

    const Outcome buy_first = run_schedule(s, { 0, 1 });
    CHECK(holding_of(buy_first, "B").tokens == 100);
}

TEST_CASE("the issuer keeps the rounding remainder")
{
    const Scenario s = parse_scenario(read_file(fixtures::corpus("rounding.scenario")));
    const Outcome o = run_schedule(s, { 0 });
    CHECK(o.steps[0].status == IntentStatus::accepted);
    CHECK(o.steps[0].tokens == 0);
    CHECK(o.steps[0].paid == 2);
    CHECK(holding_of(o, "I").received == 2);
}

TEST_CASE("run schedule needs a permutation")
{
    const Scenario s = race_scenario(LedgerKind::eutxo);
    CHECK_THROWS_AS(run_schedule(s, { 0, 0 }), error);
    CHECK_THROWS_AS(run_schedule(s, { 0 }), error);
}

TEST_CASE("enumerate interleavings")
{
    CHECK(enumerate_interleavings(2, 2, 0) == std::vector<std::vector<size_t>> { { 0, 1 }, { 1, 0 } });
    CHECK(enumerate_interleavings(1, 5, 0) == std::vector<std::vector<size_t>> { { 0 } });
    CHECK(enumerate_interleavings(0, 5, 0).size() == 1);

    const auto sampled = enumerate_interleavings(5, 10, 7);
    CHECK(sampled.size() == 10);
    CHECK(sampled == enumerate_interleavings(5, 10, 7));
    for (auto p: sampled) {
        std::sort(p.begin(), p.end());
        CHECK(p == std::vector<size_t> { 0, 1, 2, 3, 4 });
    }
    CHECK(enumerate_interleavings(4, 24, 0).size() == 24);
}

TEST_CASE("no intents give one empty outcome")
{
    Scenario s = race_scenario(LedgerKind::eutxo);
    s.intents.clear();
    const auto r = run_scenario(s);
    REQUIRE(r.outcomes.size() == 1);
    CHECK(r.outcomes[0].steps.empty());
}

TEST_CASE("scenario text round trip")
{
    for (const char *name: { "race.scenario", "race-account.scenario", "rounding.scenario" }) {
        INFO(name);
        const Scenario s = parse_scenario(read_file(fixtures::corpus(name)));
        CHECK(parse_scenario(print_scenario(s)) == s);
    }
    CHECK(parse_scenario(print_scenario(race_scenario(LedgerKind::eutxo))) == race_scenario(LedgerKind::eutxo));
}

TEST_CASE("scenario parse errors")
{
    CHECK_THROWS_AS(parse_scenario("ledger ponies\n"), parse_error);
    CHECK_THROWS_AS(parse_scenario("ledger eutxo\nactor I 1\nissuer I\nintent buy Z tokens=1\n"), parse_error);
    CHECK_THROWS_AS(parse_scenario("ledger eutxo\nactor I 1\nissuer I\nsupply 0\n"), parse_error);
}

TEST_CASE("outcome text round trip")
{
    for (auto ledger: { LedgerKind::eutxo, LedgerKind::account })
        for (const auto &o: run_scenario(race_scenario(ledger)).outcomes)
            CHECK(parse_outcome(print_outcome(o)) == o);
}

TEST_CASE("race report matches the golden file")
{
    const Scenario s = parse_scenario(read_file(fixtures::corpus("race.scenario")));
    CHECK(print_report(run_scenario(s)) == golden("race_eutxo.outcome"));
}

TEST_CASE("safety across interleavings")
{
    const auto utxo = run_scenario(race_scenario(LedgerKind::eutxo));
    CHECK(utxo.distinct.size() == 2);
    for (const auto &c: utxo.distinct)
        CHECK(c.price_faithful);

    const auto acct = run_scenario(race_scenario(LedgerKind::account));
    CHECK(acct.distinct.size() == 2);
    size_t unfaithful = 0;
    for (const auto &c: acct.distinct) {
        // the buy goes through in every order
        for (const auto &st: c.representative.steps)
            CHECK(st.status == IntentStatus::accepted);
        unfaithful += !c.price_faithful;
    }
    CHECK(unfaithful == 1);
}

TEST_CASE("replay is deterministic")
{
    for (auto ledger: { LedgerKind::eutxo, LedgerKind::account }) {
        const Scenario s = race_scenario(ledger);
        CHECK(print_report(run_scenario(s)) == print_report(run_scenario(s)));
        CHECK(print_outcome(run_schedule(s, { 1, 0 })) == print_outcome(run_schedule(s, { 1, 0 })));
    }
}
