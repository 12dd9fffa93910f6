// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#include <dualledger/format.hpp>
#include <dualledger/pairing.hpp>
#include <dualledger/rng.hpp>
#include <dualledger/sim.hpp>
#include <dualledger/token.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dualledger::sim {

std::string Outcome::signature() const
{
    Outcome o = *this;
    o.order.clear();
    o.digest.clear();
    std::stable_sort(o.steps.begin(), o.steps.end(),
                     [](const StepOutcome &a, const StepOutcome &b) { return a.intent < b.intent; });
    return print_outcome(o);
}

namespace {
    // A transaction frozen at submission, or the refusal that prevented building one.
    struct built {
        std::optional<Transaction> tx;
        Natural seen_price = 0;
        Natural tokens = 0;
        Natural paid = 0;
        std::string refusal;
    };

    std::optional<Natural> checked_mul(Natural a, Natural b)
    {
        Natural r = 0;
        if (__builtin_mul_overflow(a, b, &r))
            return {};
        return r;
    }

    Transaction build_send(const Chain &chain, const TokenConfig &cfg, KeyId from, KeyId to, Natural n,
                           PositionSupply &fresh)
    {
        if (n == 0)
            throw error { "send needs at least one token" };
        std::vector<Input> ins;
        Value gathered;
        for (const auto &o: utxo(chain)) {
            if (gathered.get(cfg.traded_chip) >= n)
                break;
            if (o.validator != ValidatorRef::pay_to_pub_key(from) || o.value.get(cfg.traded_chip) == 0)
                continue;
            ins.push_back(Input { o.position, Redeemer { from.id } });
            gathered = gathered.plus(o.value);
        }
        if (gathered.get(cfg.traded_chip) < n)
            throw error { "sender holds too few tokens" };
        std::vector<Output> outs;
        outs.push_back(Output { fresh.fresh(), ValidatorRef::pay_to_pub_key(to), Datum {},
                                Value::singleton(cfg.traded_chip, n) });
        const Value change = gathered.minus(cfg.traded_chip, n);
        if (!change.empty())
            outs.push_back(Output { fresh.fresh(), ValidatorRef::pay_to_pub_key(from), Datum {}, change });
        return Transaction { std::move(ins), std::move(outs) };
    }

    built build_intent(const Scenario &s, const Intent &in, const Chain &chain, PositionSupply &fresh)
    {
        const TokenConfig cfg = s.config();
        built b;
        try {
            b.seen_price = token::lookup_price(chain, cfg);
            const KeyId who = s.actor(in.actor).key;
            std::optional<Transaction> tx;
            switch (in.kind) {
                case IntentKind::buy: {
                    const Natural expect = in.expect_price.value_or(b.seen_price);
                    auto r = token::build_buy_tx(chain, cfg, who, in.tokens,
                                                 in.guarded ? std::optional<Natural> { expect } : std::nullopt, fresh);
                    if (const auto *high = std::get_if<token::PriceTooHigh>(&r)) {
                        b.refusal = "price " + std::to_string(high->price) + " above expected " +
                                    std::to_string(high->max_price);
                        return b;
                    }
                    tx = std::get<Transaction>(std::move(r));
                    b.tokens = in.tokens;
                    b.paid = in.tokens * b.seen_price;
                    break;
                }
                case IntentKind::set_price:
                    tx = token::build_set_price_tx(chain, cfg, in.price, fresh, who);
                    break;
                case IntentKind::send:
                    tx = build_send(chain, cfg, who, s.actor(in.recipient).key, in.tokens, fresh);
                    b.tokens = in.tokens;
                    break;
            }
            if (s.slots && in.until)
                tx = tx->with_slot_range(SlotRange { 0, in.until });
            b.tx = std::move(tx);
        } catch (const error &e) {
            b.refusal = e.what();
        }
        return b;
    }

    std::string rejection_text(const ValidationReport &r)
    {
        const auto &v = r.violations.front();
        return std::string { violation_name(v.kind) } + ": " + v.detail;
    }

    Outcome run_eutxo(const Scenario &s, const std::vector<size_t> &order)
    {
        const TokenConfig cfg = s.config();
        const AppendHook hook = policy_hook(s.policies);
        PositionSupply fresh;
        const auto slot_at = [&](Natural k) { return s.slots ? std::optional<Natural> { k } : std::nullopt; };

        auto genesis = append(Chain {}, token::init_portal(cfg, s.supply, s.price, fresh), slot_at(0), hook);
        if (const auto *bad = std::get_if<ValidationReport>(&genesis))
            throw error { "portal genesis rejected: " + rejection_text(*bad) };
        Chain chain = std::get<Chain>(std::move(genesis));

        // batch submission: every intent sees the same snapshot
        std::vector<built> frozen;
        if (!s.rebuild)
            for (const auto &in: s.intents)
                frozen.push_back(build_intent(s, in, chain, fresh));

        Outcome out;
        out.ledger = LedgerKind::eutxo;
        out.order = order;
        std::map<std::string, Natural> paid;
        for (size_t k = 0; k < order.size(); ++k) {
            const size_t idx = order[k];
            const Intent &in = s.intents.at(idx);
            const built b = s.rebuild ? build_intent(s, in, chain, fresh) : frozen[idx];
            StepOutcome st;
            st.intent = idx;
            st.seen_price = b.seen_price;
            if (!b.tx) {
                st.status = IntentStatus::refused;
                st.reason = b.refusal;
            } else {
                auto r = append(chain, *b.tx, slot_at(k + 1), hook);
                if (auto *next = std::get_if<Chain>(&r)) {
                    chain = std::move(*next);
                    st.status = IntentStatus::accepted;
                    st.tokens = b.tokens;
                    st.paid = b.paid;
                    paid[in.actor] += b.paid;
                } else {
                    st.status = IntentStatus::rejected;
                    st.reason = rejection_text(std::get<ValidationReport>(r));
                }
            }
            out.steps.push_back(std::move(st));
        }

        const auto left = utxo(chain);
        for (const auto &a: s.actors) {
            Holding h { a.name, 0, paid[a.name], 0 };
            for (const auto &o: left) {
                const bool own = o.validator == ValidatorRef::pay_to_pub_key(a.key);
                const bool portal = a.name == s.issuer && o.validator.kind == ValidatorKind::state_machine &&
                                    o.validator.config == cfg;
                if (own || portal)
                    h.tokens += o.value.get(cfg.traded_chip);
                if (own)
                    h.received += o.value.get(Chip::ada());
            }
            out.holdings.push_back(std::move(h));
        }
        out.final_price = token::lookup_price(chain, cfg);
        out.digest = fnv1a_hex(print_chain(chain));
        return out;
    }

    std::string account_dump(const account::AccountChain &chain)
    {
        std::ostringstream os;
        for (const auto &[name, c]: chain.contracts()) {
            os << "contract " << name << " balance " << c.balance << " issuer " << c.state.issuer.id << " price "
               << c.state.price << '\n';
            for (const auto &[k, n]: c.state.balances)
                os << "holds " << k.id << ' ' << n << '\n';
        }
        for (const auto &l: chain.log())
            os << "call " << l.tx.contract << ' ' << account::function_label(l.tx.function) << ' ' << l.tx.sender.id
               << ' ' << l.tx.value << ' ' << l.tx.datum << ' '
               << (l.result.status == account::CallStatus::ok ? "ok" : "guard-failed") << '\n';
        return os.str();
    }

    Outcome run_account(const Scenario &s, const std::vector<size_t> &order)
    {
        constexpr account::ContractName contract = 1;
        const KeyId issuer = s.actor(s.issuer).key;
        account::AccountChain chain = account::deploy_changing({}, contract, issuer, s.supply, s.price);
        const Natural seen = s.price;

        Outcome out;
        out.ledger = LedgerKind::account;
        out.order = order;
        std::map<std::string, Natural> paid;
        for (const size_t idx: order) {
            const Intent &in = s.intents.at(idx);
            StepOutcome st;
            st.intent = idx;
            st.seen_price = seen;
            account::CallTx tx { contract, account::FunctionName::buy, s.actor(in.actor).key, 0, 0 };
            switch (in.kind) {
                case IntentKind::buy: {
                    const Natural expect = in.expect_price.value_or(seen);
                    const auto value = checked_mul(in.tokens, expect);
                    if (!value) {
                        st.status = IntentStatus::refused;
                        st.reason = "payment overflow";
                        out.steps.push_back(std::move(st));
                        continue;
                    }
                    tx.value = *value;
                    if (in.guarded) {
                        tx.function = account::FunctionName::buy_guarded;
                        tx.datum = expect;
                    }
                    break;
                }
                case IntentKind::set_price:
                    tx.function = account::FunctionName::set_price;
                    tx.datum = in.price;
                    break;
                case IntentKind::send:
                    tx.function = account::FunctionName::send;
                    tx.datum = pair(s.actor(in.recipient).key.id, in.tokens);
                    break;
            }
            try {
                auto [next, result] = account::call(chain, tx);
                chain = std::move(next);
                if (result.status == account::CallStatus::ok) {
                    st.status = IntentStatus::accepted;
                    st.tokens = in.kind == IntentKind::send ? in.tokens : result.tokens;
                    st.paid = tx.value;
                    paid[in.actor] += tx.value;
                } else {
                    st.status = IntentStatus::guard_failed;
                    st.reason = result.detail;
                }
            } catch (const error &e) {
                st.status = IntentStatus::rejected;
                st.reason = e.what();
            }
            out.steps.push_back(std::move(st));
        }

        const auto &c = chain.contract(contract);
        for (const auto &a: s.actors)
            out.holdings.push_back(Holding { a.name, c.state.balance_of(a.key), paid[a.name],
                                             a.name == s.issuer ? c.balance : 0 });
        out.final_price = c.state.price;
        out.digest = fnv1a_hex(account_dump(chain));
        return out;
    }

    bool is_permutation_of(const std::vector<size_t> &order, size_t n)
    {
        if (order.size() != n)
            return false;
        std::vector<bool> seen(n, false);
        for (auto k: order) {
            if (k >= n || seen[k])
                return false;
            seen[k] = true;
        }
        return true;
    }

    bool faithful(const Scenario &s, const Outcome &o)
    {
        for (const auto &st: o.steps) {
            const Intent &in = s.intents.at(st.intent);
            if (in.kind != IntentKind::buy || st.status != IntentStatus::accepted)
                continue;
            const auto due = checked_mul(in.tokens, in.expect_price.value_or(st.seen_price));
            if (st.tokens != in.tokens || !due || st.paid != *due)
                return false;
        }
        return true;
    }

    // all orders are listed when there are at most this many
    constexpr size_t all_limit = 40320;
}

Outcome run_schedule(const Scenario &s, const std::vector<size_t> &order)
{
    if (!is_permutation_of(order, s.intents.size()))
        throw error { "order is not a permutation of the intents" };
    return s.ledger == LedgerKind::eutxo ? run_eutxo(s, order) : run_account(s, order);
}

std::vector<std::vector<size_t>> enumerate_interleavings(size_t count, size_t limit, std::uint64_t seed)
{
    std::vector<size_t> base(count);
    std::iota(base.begin(), base.end(), 0);

    size_t total = 1;
    bool within = true;
    for (size_t k = 2; k <= count && within; ++k)
        within = !__builtin_mul_overflow(total, k, &total) && total <= limit;

    std::vector<std::vector<size_t>> out;
    if (within) {
        do
            out.push_back(base);
        while (std::next_permutation(base.begin(), base.end()));
        return out;
    }
    Rng rng { seed };
    for (size_t k = 0; k < limit; ++k) {
        auto p = base;
        rng.shuffle(p);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<std::vector<size_t>> schedules_for(const Scenario &s)
{
    const size_t n = s.intents.size();
    switch (s.schedule.mode) {
        case ScheduleMode::orders:
            if (s.schedule.orders.empty()) {
                std::vector<size_t> identity(n);
                std::iota(identity.begin(), identity.end(), 0);
                return { identity };
            }
            return s.schedule.orders;
        case ScheduleMode::all:
            return enumerate_interleavings(n, all_limit, 0);
        case ScheduleMode::sample:
            return enumerate_interleavings(n, s.schedule.samples, s.schedule.seed);
    }
    return {};
}

ScenarioReport run_scenario(const Scenario &s)
{
    return run_scenario(s, schedules_for(s));
}

ScenarioReport run_scenario(const Scenario &s, const std::vector<std::vector<size_t>> &orders)
{
    ScenarioReport r;
    std::map<std::string, size_t> by_signature;
    for (const auto &order: orders) {
        Outcome o = run_schedule(s, order);
        const auto sig = o.signature();
        const auto [it, fresh] = by_signature.emplace(sig, r.distinct.size());
        if (fresh)
            r.distinct.push_back(OutcomeClass { o, {}, faithful(s, o) });
        r.distinct[it->second].orders.push_back(order);
        r.outcomes.push_back(std::move(o));
    }
    return r;
}

std::string print_report(const ScenarioReport &r)
{
    std::ostringstream os;
    for (const auto &o: r.outcomes)
        os << print_outcome(o);
    os << "summary schedules=" << r.outcomes.size() << " distinct=" << r.distinct.size() << '\n';
    for (size_t k = 0; k < r.distinct.size(); ++k) {
        const auto &c = r.distinct[k];
        os << "class " << k << " faithful=" << (c.price_faithful ? "yes" : "no") << " orders=";
        for (size_t j = 0; j < c.orders.size(); ++j) {
            if (j)
                os << ';';
            for (size_t i = 0; i < c.orders[j].size(); ++i)
                os << (i ? "," : "") << c.orders[j][i];
        }
        os << '\n';
        for (const auto &st: c.representative.steps) {
            os << "  intent " << st.intent << ' ' << status_name(st.status) << " tokens=" << st.tokens
               << " paid=" << st.paid << '\n';
        }
    }
    return os.str();
}

Scenario race_scenario(LedgerKind ledger)
{
    Scenario s;
    s.ledger = ledger;
    s.actors = { Actor { "I", KeyId { 1 } }, Actor { "B", KeyId { 2 } } };
    s.issuer = "I";
    s.supply = 1000;
    s.price = 1;
    s.policies.rules[s.state_chip.currency_symbol] = PolicyRule::affine_once;
    Intent buy;
    buy.actor = "B";
    buy.kind = IntentKind::buy;
    buy.tokens = 100;
    buy.expect_price = 1;
    Intent set;
    set.actor = "I";
    set.kind = IntentKind::set_price;
    set.price = 100;
    s.intents = { buy, set };
    s.schedule = ScheduleSpec { ScheduleMode::all, {}, 0, 0 };
    return s;
}

}
