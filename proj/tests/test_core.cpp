// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include <dualledger/pairing.hpp>
#include <dualledger/rng.hpp>

using namespace dualledger;
using fixtures::at;
using fixtures::plain;

namespace {

Value random_value(Rng &rng)
{
    Value v;
    const size_t n = rng.below(4);
    for (size_t k = 0; k < n; ++k)
        v = v.plus(Value::singleton(Chip { rng.below(3), rng.below(2) }, rng.between(1, 50)));
    return v;
}

}

TEST_CASE("value lookup")
{
    const Chip c { 1, 7 };
    const Value v = Value::singleton(c, 3);
    CHECK(value_get(v, c) == 3);
    CHECK(value_get(v, Chip::ada()) == 0);
    CHECK(value_get(Value {}, Chip { 5, 5 }) == 0);
}

TEST_CASE("value addition")
{
    const Chip c { 1, 1 }, d { 2, 2 };
    CHECK(value_add(Value::singleton(c, 2), Value::singleton(c, 3)) == Value::singleton(c, 5));
    CHECK(value_add(Value::singleton(c, 2), Value {}) == Value::singleton(c, 2));
    const Value lhs = value_add(Value::singleton(c, 1), Value::singleton(d, 1));
    const Value sum = value_add(lhs, Value::singleton(d, 4));
    CHECK(sum.get(c) == 1);
    CHECK(sum.get(d) == 5);
    CHECK(sum.entries().size() == 2);
}

TEST_CASE("singleton")
{
    CHECK(value_singleton(Chip { 2, 9 }, 1).entries() == std::map<Chip, Natural> { { Chip { 2, 9 }, 1 } });
    CHECK(value_singleton(Chip::ada(), 15).get(Chip::ada()) == 15);
    CHECK_THROWS_AS(value_singleton(Chip { 2, 9 }, 0), error);
}

TEST_CASE("minus removes chips and drops zeros")
{
    const Chip c { 1, 1 };
    const Value v = Value::singleton(c, 5);
    CHECK(v.minus(c, 2).get(c) == 3);
    CHECK(v.minus(c, 5).empty());
    CHECK_THROWS_AS(v.minus(c, 6), error);
}

TEST_CASE("value addition laws")
{
    Rng rng { 11 };
    for (int k = 0; k < 500; ++k) {
        const Value a = random_value(rng), b = random_value(rng), c = random_value(rng);
        CHECK(a.plus(b) == b.plus(a));
        CHECK(a.plus(b).plus(c) == a.plus(b.plus(c)));
        CHECK(a.plus(Value {}) == a);
        for (Natural cs = 0; cs < 3; ++cs)
            for (Natural tn = 0; tn < 2; ++tn)
                CHECK(a.plus(b).get(Chip { cs, tn }) == a.get(Chip { cs, tn }) + b.get(Chip { cs, tn }));
        const Value sum = a.plus(b);
        for (const auto &[chip, n]: sum.entries())
            CHECK(n > 0);
    }
}

TEST_CASE("total of symbol")
{
    const Value v = Value::singleton(Chip { 4, 1 }, 2).plus(Value::singleton(Chip { 4, 2 }, 3)).plus(
        Value::singleton(Chip { 5, 1 }, 7));
    CHECK(v.total_of_symbol(4) == 5);
    CHECK(v.total_of_symbol(5) == 7);
    CHECK(v.total_of_symbol(6) == 0);
}

TEST_CASE("context at an input")
{
    const Transaction two { { at(1), at(2) }, { plain(3) } };
    const Context c = context_at(two, at(1));
    CHECK(c.inputs == two.inputs());
    CHECK(c.focus == at(1));
    CHECK(c.outputs == two.outputs());

    const Transaction one { { at(1) }, { plain(3) } };
    CHECK(context_at(one, at(1)).inputs.size() == 1);
    CHECK_THROWS_AS(context_at(one, at(2)), error);
}

TEST_CASE("positions of a transaction")
{
    const Transaction t { { at(1) }, { plain(4), plain(5) } };
    CHECK(positions_of(t) == std::set<Position> { { 1 }, { 4 }, { 5 } });
    CHECK(positions_of(fixtures::tx1()) == std::set<Position> { { 1 }, { 2 }, { 3 } });
    CHECK(positions_of(Transaction {}).empty());
}

TEST_CASE("transaction keeps inputs and outputs as sets")
{
    const Transaction a { { at(2), at(1) }, { plain(5), plain(4) } };
    const Transaction b { { at(1), at(2) }, { plain(4), plain(5) } };
    CHECK(a == b);
    CHECK_THROWS_AS((Transaction { { at(1), at(1, 3) }, {} }), error);
    CHECK_THROWS_AS((Transaction { {}, { plain(1), plain(1) } }), error);
}

TEST_CASE("slot range")
{
    const SlotRange r { 2, 4 };
    CHECK(!r.contains(1));
    CHECK(r.contains(2));
    CHECK(r.contains(4));
    CHECK(!r.contains(5));
    CHECK(SlotRange { 3, std::nullopt }.contains(1000));
    CHECK_THROWS_AS((SlotRange { 4, 2 }), error);
}

TEST_CASE("position supply")
{
    PositionSupply s;
    CHECK(s.fresh() == Position { 1 });
    s.reserve_through(Position { 10 });
    CHECK(s.fresh() == Position { 11 });
    s.reserve_through(Position { 3 });
    CHECK(s.fresh() == Position { 12 });
}

TEST_CASE("pairing round trip")
{
    CHECK(pair(0, 0) == 0);
    Rng rng { 3 };
    for (int k = 0; k < 2000; ++k) {
        const Natural a = rng.below(1u << 20), b = rng.below(1u << 20);
        CHECK(unpair(pair(a, b)) == std::pair { a, b });
    }
    for (Natural z = 0; z < 500; ++z) {
        const auto [a, b] = unpair(z);
        CHECK(pair(a, b) == z);
    }
}
