// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include <dualledger/gen.hpp>

using namespace dualledger;
using namespace fixtures;

TEST_CASE("observational equivalence")
{
    CHECK(obs_equiv(chain_b(), chain_b()));
    CHECK(obs_equiv(chain_b(), chain_b_prime()));
    const Chain one { { Transaction { {}, { plain(1) } } } };
    CHECK(!obs_equiv(one, one.then(Transaction { { at(1) }, {} })));
}

TEST_CASE("apartness")
{
    CHECK(apart(tx2(), tx3()));
    CHECK(!apart(tx2(), tx2()));
    CHECK(!apart(Transaction { {}, { plain(9) } }, Transaction { { at(9) }, {} }));
    // two empty transactions share nothing
    CHECK(apart(Transaction {}, Transaction {}));

    CHECK(apart_seq(tx1(), {}));
    const std::vector<Transaction> just2 { tx2() };
    const std::vector<Transaction> just3 { tx3() };
    CHECK(apart_seq(tx3(), just2));
    CHECK(!apart_seq(tx4(), just3));
}

TEST_CASE("position sets")
{
    const Chain b = chain_b();
    CHECK(spent_positions(b) == std::set<Position> { { 1 }, { 2 }, { 4 }, { 5 }, { 6 } });
    CHECK(unspent_positions(b) == std::set<Position> { { 3 }, { 7 }, { 8 }, { 9 }, { 10 }, { 11 } });
    CHECK(all_positions(b).size() == 11);
}

TEST_CASE("renaming checks")
{
    PositionRenaming clash { { { Position { 1 }, Position { 3 } } }, { Position { 3 } } };
    CHECK_THROWS_AS(clash.check(), error);
    PositionRenaming merge { { { Position { 1 }, Position { 20 } }, { Position { 2 }, Position { 20 } } }, {} };
    CHECK_THROWS_AS(merge.check(), error);
    PositionRenaming ok { { { Position { 2 }, Position { 20 } } }, unspent_positions(chain_b()) };
    CHECK_NOTHROW(ok.check());
    CHECK(rename_positions(chain_b(), ok) == load_chain_file(corpus("figure-3-B-alpha.chain")));
}

TEST_CASE("canonical form")
{
    const Chain no_spend { { Transaction { {}, { plain(5), plain(9) } } } };
    CHECK(canonicalize(no_spend) == no_spend);

    const Chain b = chain_b();
    const Chain renamed = rename_raw(b, { { Position { 4 }, Position { 40 } } });
    CHECK(canonicalize(b) == canonicalize(renamed));
}

TEST_CASE("alpha equivalence")
{
    const Chain b = chain_b();
    CHECK(alpha_equiv(b, b));
    CHECK(alpha_equiv(b, rename_raw(b, { { Position { 2 }, Position { 20 } } })));
    CHECK(!alpha_equiv(b, rename_raw(b, { { Position { 3 }, Position { 30 } } })));
    CHECK(alpha_equiv(b, load_chain_file(corpus("figure-3-B-alpha.chain"))));
    CHECK(!alpha_equiv(b, load_chain_file(corpus("figure-3-B-unspent-renamed.chain"))));
    // same unspent outputs is not enough: the orders differ
    CHECK(!alpha_equiv(b, chain_b_prime()));
}

TEST_CASE("freshen")
{
    const Chain b = chain_b();
    const std::set<Position> avoid { Position { 2 }, Position { 4 } };
    const Chain f = freshen(b, avoid);
    CHECK(alpha_equiv(b, f));
    for (const auto &p: all_positions(f))
        CHECK(!avoid.contains(p));
    // unspent positions are never moved
    CHECK(freshen(b, { Position { 3 } }) == b);
}

TEST_CASE("commute report")
{
    const Chain base { { tx1() } };
    const auto r = check_commute(base, tx2(), tx3());
    CHECK(r.apart);
    CHECK(r.valid_12);
    CHECK(r.valid_21);
    CHECK(r.equiv);

    const Chain b12 { { tx1(), tx2() } };
    const auto dep = check_commute(b12.then(tx3()), tx4(), Transaction { { at(8) }, {} });
    CHECK(!dep.apart);
    CHECK(dep.valid_12);
    CHECK(!dep.valid_21);

    // the figures: [tx1,tx2] then tx3 then tx4 is B; the other order spends e,f before they exist
    const auto fig = check_commute(b12, tx3(), tx4());
    CHECK(!fig.apart);
    CHECK(fig.valid_12);
    CHECK(!fig.valid_21);
}

TEST_CASE("defer report")
{
    const Chain base { { tx1() } };
    const auto none = check_defer(base, {}, tx2());
    CHECK(none.hyp);
    CHECK(none.valid_tx_first == none.hyp);
    CHECK(none.equiv);

    const std::vector<Transaction> txs { tx3() };
    const auto d = check_defer(base, txs, tx2());
    CHECK(d.hyp);
    CHECK(d.valid_tx_first);
    CHECK(d.equiv);

    // tx4 needs an output of tx3, so it is not valid on its own
    const Chain b12 { { tx1(), tx2() } };
    const auto dang = check_defer(b12, txs, tx4());
    CHECK(!dang.hyp);
    CHECK(!dang.valid_tx_alone);
}

TEST_CASE("canonicalize is idempotent and respects alpha")
{
    Rng rng { 21 };
    for (int k = 0; k < 300; ++k) {
        PositionSupply supply;
        ChainGen gen { rng, supply };
        const Chain c = gen.valid_chain();
        const Chain canon = canonicalize(c);
        CHECK(canonicalize(canon) == canon);
        CHECK(alpha_equiv(c, canon));
        CHECK(unspent_positions(canon) == unspent_positions(c));
        CHECK(is_valid(canon));
    }
}

TEST_CASE("alpha decision agrees with the bijection search")
{
    Rng rng { 99 };
    size_t positive = 0, negative = 0;
    for (int k = 0; k < 400; ++k) {
        const auto [a, b] = alpha_pair(rng);
        const bool expect = alpha_oracle(a, b);
        (expect ? positive : negative) += 1;
        CHECK(alpha_equiv(a, b) == expect);
    }
    CHECK(positive > 0);
    CHECK(negative > 0);
}
