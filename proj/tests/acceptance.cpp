// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "support.hpp"

#include <dualledger/cli.hpp>
#include <dualledger/fuzz.hpp>
#include <dualledger/sim.hpp>

#include <chrono>
#include <cstdio>
#include <functional>

using namespace dualledger;
using fixtures::corpus;

namespace {

constexpr std::uint64_t seed = 1;

struct Check {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string &what)
    {
        if (!cond) {
            ok = false;
            note += (note.empty() ? "" : "; ") + what;
        }
    }
};

bool fuzz_clean(Check &c, Statement s, size_t cases)
{
    const FuzzReport r = fuzz_statement(s, seed, cases);
    const std::string name { statement_name(s) };
    c.require(r.cases == cases, name + " reached " + std::to_string(r.cases) + " cases");
    c.require(r.failures == 0, name + " found " + std::to_string(r.failures) + " counterexample(s)");
    return r.ok();
}

int failed = 0;

void criterion(int n, const std::string &title, double limit_s, const std::function<void(Check &)> &body)
{
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception &e) {
        c.require(false, std::string { "exception: " } + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0)
        c.require(secs < limit_s, "over the time limit");
    failed += !c.ok;
    std::printf("criterion %2d %s  %s (%.2fs)%s%s\n", n, c.ok ? "PASS" : "FAIL", title.c_str(), secs,
                c.note.empty() ? "" : ": ", c.note.c_str());
    std::fflush(stdout);
}

const sim::Holding *holding(const sim::Outcome &o, std::string_view actor)
{
    for (const auto &h: o.holdings)
        if (h.actor == actor)
            return &h;
    return nullptr;
}

}

int main()
{
    criterion(1, "figure fixtures classify as printed", 1.0, [](Check &c) {
        const std::pair<const char *, ChainClass> want[] = {
            { "figure-3-B.chain", ChainClass::blockchain },
            { "figure-6-B-prime.chain", ChainClass::blockchain },
            { "figure-4-blockchain.chain", ChainClass::blockchain },
            { "figure-5-blockchain.chain", ChainClass::blockchain },
            { "figure-4-chunk.chain", ChainClass::chunk },
            { "figure-5-chunk.chain", ChainClass::chunk },
            { "swapped.chain", ChainClass::neither },
        };
        for (const auto &[file, cls]: want) {
            const ChainClass got = classify(load_chain_file(corpus(file)));
            c.require(got == cls, std::string { file } + " is " + std::string { class_name(got) });
        }
    });

    criterion(2, "prefix closure, 10000 chains, plus suffix witness", 60.0, [](Check &c) {
        fuzz_clean(c, Statement::prefix_closure, 10000);
        const Chain w = load_chain_file(corpus("suffix-witness.chain"));
        c.require(is_valid(w) && !is_valid(w.suffix(1)), "suffix witness does not witness");
    });

    criterion(3, "apartness symmetry and commutation, 10000 each", 120.0, [](Check &c) {
        fuzz_clean(c, Statement::apart_symmetry, 10000);
        fuzz_clean(c, Statement::apart_commute, 10000);
        fuzz_clean(c, Statement::apart_needed, 10000);
    });

    criterion(4, "deferral, 10000 instances", 120.0, [](Check &c) { fuzz_clean(c, Statement::defer, 10000); });

    criterion(5, "slot ranges: equivalence holds, deferral breaks", 0, [](Check &c) {
        fuzz_clean(c, Statement::defer_slots_equiv, 10000);
        const FuzzReport broken = fuzz_statement(Statement::defer_slots, seed, 1000);
        c.require(broken.failures >= 1, "no slot-ranged deferral counterexample found");
        const Instance stored = parse_instance(read_file(corpus("defer-slots-counterexample.instance")));
        const Verdict v = evaluate(stored);
        c.require(stored.which == Statement::defer_slots && v.hypothesis && !v.holds,
                  "stored counterexample does not replay");
    });

    criterion(6, "renaming lemmas, 5000 each, and alpha against bijection search", 0, [](Check &c) {
        for (auto s: { Statement::equiv_append, Statement::alpha_obs, Statement::alpha_valid, Statement::alpha_append })
            fuzz_clean(c, s, 5000);
        Rng rng { seed };
        size_t mismatches = 0;
        for (int k = 0; k < 1000; ++k) {
            const auto [a, b] = fixtures::alpha_pair(rng);
            mismatches += alpha_equiv(a, b) != fixtures::alpha_oracle(a, b);
        }
        c.require(mismatches == 0, std::to_string(mismatches) + " alpha mismatch(es)");
    });

    criterion(7, "UTxO race: golden table, every accepted buy at build price", 0, [](Check &c) {
        const auto s = sim::parse_scenario(read_file(corpus("race.scenario")));
        const auto r = sim::run_scenario(s);
        c.require(sim::print_report(r) == read_file(std::string { GOLDEN_DIR } + "/race_eutxo.outcome"),
                  "report differs from the golden file");
        c.require(r.outcomes.size() == 2, "not every interleaving ran");
        for (const auto &cls: r.distinct)
            c.require(cls.price_faithful, "a class is not price faithful");
        for (const auto &o: r.outcomes)
            for (const auto &st: o.steps)
                if (s.intents[st.intent].kind == sim::IntentKind::buy) {
                    const bool exact = st.status == sim::IntentStatus::accepted && st.tokens == 100 && st.paid == 100;
                    const bool nothing = st.status != sim::IntentStatus::accepted && st.tokens == 0 && st.paid == 0;
                    c.require(exact || nothing, "a buy neither completed at price 1 nor left untouched");
                }
    });

    criterion(8, "account ledger: front run and rounding", 0, [](Check &c) {
        const auto race = sim::parse_scenario(read_file(corpus("race-account.scenario")));
        const auto o = sim::run_schedule(race, { 1, 0 });
        const auto *b = holding(o, "B");
        c.require(b && b->tokens == 1 && b->paid == 100, "setPrice first did not give 1 token for 100");

        const auto rounding = sim::parse_scenario(read_file(corpus("rounding.scenario")));
        const auto r = sim::run_schedule(rounding, { 0 });
        const auto *rb = holding(r, "B");
        const auto *ri = holding(r, "I");
        c.require(rb && rb->tokens == 0 && rb->paid == 2, "rounding buyer did not pay 2 for 0 tokens");
        c.require(ri && ri->received == 2, "contract did not retain 2");
    });

    criterion(9, "monetary policy over fuzzed token histories", 0, [](Check &c) {
        const auto r = fuzz_token_policy(seed, 200, 60);
        c.require(r.appended >= 5000, "only " + std::to_string(r.appended) + " transactions appended");
        c.require(r.violations.empty(), std::to_string(r.violations.size()) + " violation(s)");
    });

    criterion(10, "byte-identical reruns", 0, [](Check &c) {
        const std::vector<std::vector<std::string>> commands {
            { "fuzz", "--theorem", "all", "--cases", "300", "--seed", "7" },
            { "fuzz", "--theorem", "token-policy", "--cases", "20", "--seed", "7" },
            { "scenario", corpus("race.scenario") },
            { "scenario", corpus("race-account.scenario") },
            { "scenario", corpus("rounding.scenario") },
            { "scenario", corpus("race.scenario"), "--schedule", "sample:5:3" },
            { "demo-race" },
        };
        for (const auto &cmd: commands)
            for (const char *fmt: { "text", "json" }) {
                std::vector<std::string> args { "--format", fmt };
                args.insert(args.end(), cmd.begin(), cmd.end());
                const auto first = cli::run(args);
                const auto second = cli::run(args);
                c.require(first.out == second.out && first.code == second.code && !first.out.empty(),
                          cmd[0] + " " + fmt + " output changed between runs");
            }
    });

    std::printf("%s: %d criterion(s) failed\n", failed ? "FAIL" : "PASS", failed);
    return failed ? 1 : 0;
}
