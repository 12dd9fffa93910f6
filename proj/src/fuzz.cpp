// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#include <dualledger/format.hpp>
#include <dualledger/fuzz.hpp>
#include <dualledger/token.hpp>

#include <algorithm>
#include <sstream>

namespace dualledger {

namespace {
    struct statement_entry {
        Statement which;
        std::string_view name;
    };

    constexpr statement_entry statement_table[] = {
        { Statement::prefix_closure, "prefix-closure" },
        { Statement::apart_symmetry, "apart-symmetry" },
        { Statement::apart_commute, "apart-commute" },
        { Statement::apart_needed, "apart-needed" },
        { Statement::defer, "defer" },
        { Statement::defer_slots, "defer-slots" },
        { Statement::defer_slots_equiv, "defer-slots-equiv" },
        { Statement::equiv_append, "equiv-append" },
        { Statement::alpha_obs, "alpha-obs" },
        { Statement::alpha_valid, "alpha-valid" },
        { Statement::alpha_append, "alpha-append" },
    };

    bool slotted(Statement s)
    {
        return s == Statement::defer_slots || s == Statement::defer_slots_equiv;
    }
}

std::string_view statement_name(Statement s)
{
    for (const auto &e: statement_table)
        if (e.which == s)
            return e.name;
    return "?";
}

std::optional<Statement> statement_from_name(std::string_view s)
{
    for (const auto &e: statement_table)
        if (e.name == s)
            return e.which;
    return {};
}

const std::vector<Statement> &all_statements()
{
    static const std::vector<Statement> all = [] {
        std::vector<Statement> v;
        for (const auto &e: statement_table)
            v.push_back(e.which);
        return v;
    }();
    return all;
}

// --- serialization ------------------------------------------------------

std::string print_instance(const Instance &i)
{
    std::ostringstream os;
    os << "statement " << statement_name(i.which) << '\n';
    if (!i.schedule.empty()) {
        os << "schedule";
        for (auto s: i.schedule)
            os << ' ' << s;
        os << '\n';
    }
    os << "chain\n" << print_chain(i.chain);
    if (i.alt)
        os << "alt\n" << print_chain(*i.alt);
    if (!i.txs.empty())
        os << "txs\n" << print_chain(Chain { i.txs });
    if (i.tx)
        os << "tx\n" << print_chain(Chain { { *i.tx } });
    return os.str();
}

Instance parse_instance(std::string_view text)
{
    Instance inst;
    bool have_statement = false;
    std::string section;
    size_t section_start = 0;
    std::map<std::string, std::pair<size_t, std::string>> bodies;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        const auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        const auto hash = line.find('#');
        const auto w = split_words(hash == std::string_view::npos ? line : line.substr(0, hash));
        if (!w.empty() && (w[0] == "chain" || w[0] == "alt" || w[0] == "txs" || w[0] == "tx") && w.size() == 1) {
            section = std::string { w[0] };
            section_start = line_no;
            if (bodies.contains(section))
                throw parse_error { line_no, "section '" + section + "' repeated" };
            bodies[section] = { section_start, {} };
            continue;
        }
        if (section.empty()) {
            if (w.empty())
                continue;
            if (w[0] == "statement" && w.size() == 2) {
                const auto s = statement_from_name(w[1]);
                if (!s)
                    throw parse_error { line_no, "unknown statement '" + std::string { w[1] } + "'" };
                inst.which = *s;
                have_statement = true;
            } else if (w[0] == "schedule") {
                for (size_t k = 1; k < w.size(); ++k)
                    inst.schedule.push_back(parse_natural(w[k], line_no));
            } else {
                throw parse_error { line_no, "unexpected '" + std::string { w[0] } + "' before the first section" };
            }
            continue;
        }
        bodies[section].second.append(line).push_back('\n');
    }
    if (!have_statement)
        throw parse_error { line_no, "missing statement line" };
    if (!bodies.contains("chain"))
        throw parse_error { line_no, "missing chain section" };

    const auto load = [&](const std::string &name) {
        const auto &[start, body] = bodies.at(name);
        try {
            return parse_chain(body);
        } catch (const parse_error &e) {
            const std::string what = e.what();
            const auto colon = what.find(": ");
            throw parse_error { start + e.line_no, colon == std::string::npos ? what : what.substr(colon + 2) };
        }
    };
    inst.chain = load("chain");
    if (bodies.contains("alt"))
        inst.alt = load("alt");
    if (bodies.contains("txs"))
        inst.txs = load("txs").transactions();
    if (bodies.contains("tx")) {
        const Chain one = load("tx");
        if (one.size() != 1)
            throw parse_error { bodies.at("tx").first, "tx section must hold exactly one transaction" };
        inst.tx = one[0];
    }
    return inst;
}

// --- checking -----------------------------------------------------------

namespace {
    const Transaction &need_tx(const Instance &i)
    {
        if (!i.tx)
            throw error { "instance lacks a transaction" };
        return *i.tx;
    }

    const Transaction &need_other(const Instance &i)
    {
        if (i.txs.size() != 1)
            throw error { "instance needs exactly one competing transaction" };
        return i.txs.front();
    }

    const Chain &need_alt(const Instance &i)
    {
        if (!i.alt)
            throw error { "instance lacks an alternative chain" };
        return *i.alt;
    }

    Verdict check(const Instance &i)
    {
        const Chain &b = i.chain;
        Verdict v;
        switch (i.which) {
            case Statement::prefix_closure: {
                v.hypothesis = is_valid(b);
                for (size_t n = 0; n < b.size(); ++n)
                    v.holds = v.holds && is_valid(b.prefix(n));
                v.interesting = b.size() >= 2;
                break;
            }
            case Statement::apart_symmetry: {
                const auto &tx = need_tx(i);
                const auto &other = need_other(i);
                v.hypothesis = true;
                v.holds = apart(tx, other) == apart(other, tx);
                v.interesting = apart(tx, other);
                break;
            }
            case Statement::apart_commute: {
                const auto &tx = need_tx(i);
                const auto &other = need_other(i);
                v.hypothesis = is_valid(b) && apart(tx, other);
                if (!v.hypothesis)
                    break;
                const auto r = check_commute(b, tx, other);
                v.holds = r.valid_12 == r.valid_21 && r.equiv;
                v.interesting = r.valid_12;
                break;
            }
            case Statement::apart_needed: {
                const auto &tx = need_tx(i);
                const auto &other = need_other(i);
                v.hypothesis = is_valid(b.then(other).then(tx));
                if (!v.hypothesis)
                    break;
                v.holds = is_valid(b.then(tx)) == apart(tx, other);
                v.interesting = !apart(tx, other);
                break;
            }
            case Statement::defer:
            case Statement::defer_slots: {
                v.hypothesis = is_valid(b);
                if (!v.hypothesis)
                    break;
                const auto r = check_defer(b, i.txs, need_tx(i), i.schedule);
                v.hypothesis = r.hyp;
                v.holds = r.valid_tx_first && r.equiv;
                v.interesting = !i.txs.empty();
                break;
            }
            case Statement::defer_slots_equiv: {
                v.hypothesis = is_valid(b);
                if (!v.hypothesis)
                    break;
                const auto r = check_defer(b, i.txs, need_tx(i), i.schedule);
                v.hypothesis = r.valid_tx_first && r.valid_txs_then_tx;
                v.holds = r.equiv;
                v.interesting = !i.txs.empty();
                break;
            }
            case Statement::equiv_append: {
                const auto &alt = need_alt(i);
                const auto &tx = need_tx(i);
                v.hypothesis = is_valid(b) && is_valid(alt) && obs_equiv(b, alt) && is_valid(b.then(tx)) &&
                               is_valid(alt.then(tx));
                if (!v.hypothesis)
                    break;
                v.holds = obs_equiv(b.then(tx), alt.then(tx));
                v.interesting = b != alt;
                break;
            }
            case Statement::alpha_obs: {
                const auto &alt = need_alt(i);
                v.hypothesis = is_valid(b) && is_valid(alt) && alpha_equiv(b, alt);
                if (!v.hypothesis)
                    break;
                v.holds = obs_equiv(b, alt) && unspent_positions(b) == unspent_positions(alt);
                v.interesting = b != alt;
                break;
            }
            case Statement::alpha_valid:
            case Statement::alpha_append: {
                const auto &alt = need_alt(i);
                const auto &tx = need_tx(i);
                v.hypothesis = is_valid(b) && is_valid(alt) && obs_equiv(b, alt);
                if (i.which == Statement::alpha_append)
                    v.hypothesis = v.hypothesis && is_valid(b.then(tx));
                if (!v.hypothesis)
                    break;
                const auto avoid = positions_of(tx);
                const Chain fb = freshen(b, avoid);
                const Chain fa = freshen(alt, avoid);
                const bool variants = alpha_equiv(fb, b) && alpha_equiv(fa, alt);
                if (i.which == Statement::alpha_valid) {
                    v.holds = variants && is_valid(fb.then(tx)) == is_valid(fa.then(tx));
                    v.interesting = is_valid(b.then(tx)) != is_valid(alt.then(tx));
                } else {
                    v.holds = variants && is_valid(fa.then(tx)) && obs_equiv(b.then(tx), fa.then(tx));
                    v.interesting = !is_valid(alt.then(tx));
                }
                break;
            }
        }
        return v;
    }
}

Verdict evaluate(const Instance &i)
{
    return check(i);
}

namespace {
    bool still_fails(const Instance &i)
    {
        try {
            const auto v = check(i);
            return v.hypothesis && !v.holds;
        } catch (const error &) {
            return false;
        }
    }

    std::vector<Instance> removals(const Instance &i)
    {
        std::vector<Instance> out;
        for (size_t k = 0; k < i.chain.size(); ++k) {
            Instance c = i;
            c.chain = i.chain.without(k);
            out.push_back(std::move(c));
        }
        if (i.alt)
            for (size_t k = 0; k < i.alt->size(); ++k) {
                Instance c = i;
                c.alt = i.alt->without(k);
                out.push_back(std::move(c));
            }
        if (i.which != Statement::apart_symmetry && i.which != Statement::apart_commute &&
            i.which != Statement::apart_needed)
            for (size_t k = 0; k < i.txs.size(); ++k) {
                Instance c = i;
                c.txs.erase(c.txs.begin() + static_cast<std::ptrdiff_t>(k));
                if (k < c.schedule.size())
                    c.schedule.erase(c.schedule.begin() + static_cast<std::ptrdiff_t>(k));
                out.push_back(std::move(c));
            }
        return out;
    }
}

Instance minimize(const Instance &i)
{
    Instance best = i;
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto &c: removals(best)) {
            if (still_fails(c)) {
                best = std::move(c);
                progress = true;
                break;
            }
        }
    }
    return best;
}

// --- generation ---------------------------------------------------------

namespace {
    std::vector<Output> spendable_outputs(const OutputSet &outs, const std::set<Position> &avoid = {})
    {
        std::vector<Output> pool;
        for (const auto &o: outs)
            if ((o.validator.kind == ValidatorKind::accept_all || o.validator.kind == ValidatorKind::pay_to_pub_key) &&
                !avoid.contains(o.position))
                pool.push_back(o);
        return pool;
    }

    Chain rebuild(const Chain &like, std::vector<Transaction> txs)
    {
        if (like.has_slots())
            return Chain { std::move(txs), *like.slots() };
        return Chain { std::move(txs) };
    }

    Chain rename_spent(const Chain &chain, Rng &rng, PositionSupply &supply)
    {
        const auto spent = spent_positions(chain);
        if (spent.empty())
            return chain;
        std::vector<Position> chosen;
        for (const auto &p: spent)
            if (rng.chance(1, 2))
                chosen.push_back(p);
        if (chosen.empty())
            chosen.push_back(*std::next(spent.begin(), static_cast<std::ptrdiff_t>(rng.below(spent.size()))));
        PositionRenaming r;
        r.fixed = unspent_positions(chain);
        if (rng.chance(1, 2)) {
            auto targets = chosen;
            rng.shuffle(targets);
            for (size_t k = 0; k < chosen.size(); ++k)
                r.mapping.emplace(chosen[k], targets[k]);
        } else {
            for (const auto &p: chosen)
                r.mapping.emplace(p, supply.fresh());
        }
        return rename_positions(chain, r);
    }

    Chain commute_adjacent(const Chain &chain, Rng &rng)
    {
        std::vector<size_t> spots;
        for (size_t k = 0; k + 1 < chain.size(); ++k)
            if (apart(chain[k], chain[k + 1]))
                spots.push_back(k);
        if (spots.empty())
            return chain;
        const size_t k = rng.pick(spots);
        auto txs = chain.transactions();
        std::swap(txs[k], txs[k + 1]);
        return rebuild(chain, std::move(txs));
    }

    Chain insert_detour(const Chain &chain, Rng &rng, PositionSupply &supply)
    {
        if (chain.has_slots())
            return chain;
        const Position p = supply.fresh();
        const Transaction make { {}, { Output { p, ValidatorRef::accept_all(), Datum { rng.below(4) }, Value {} } } };
        const Transaction take { { Input { p, Redeemer { rng.below(4) } } }, {} };
        auto txs = chain.transactions();
        const size_t at = rng.below(txs.size() + 1);
        txs.insert(txs.begin() + static_cast<std::ptrdiff_t>(at), make);
        const size_t later = rng.between(at + 1, txs.size());
        txs.insert(txs.begin() + static_cast<std::ptrdiff_t>(later), take);
        return Chain { std::move(txs) };
    }

    Transaction with_clash(const Transaction &tx, const Chain &b, const Chain &alt, Rng &rng, ChainGen &gen)
    {
        std::set<Position> spent = spent_positions(b);
        spent.merge(spent_positions(alt));
        for (const auto &p: positions_of(tx))
            spent.erase(p);
        if (spent.empty())
            return tx;
        const Position q = *std::next(spent.begin(), static_cast<std::ptrdiff_t>(rng.below(spent.size())));
        auto outs = tx.outputs();
        if (outs.empty() || rng.chance(1, 3)) {
            Output o = gen.random_output();
            o.position = q;
            outs.push_back(o);
        } else {
            outs[rng.below(outs.size())].position = q;
        }
        return Transaction { tx.inputs(), std::move(outs), tx.slot_range() };
    }
}

Chain equivalent_variant(const Chain &chain, Rng &rng, PositionSupply &supply)
{
    Chain out = chain;
    const size_t ops = rng.between(1, 3);
    for (size_t k = 0; k < ops; ++k) {
        switch (rng.below(3)) {
            case 0: out = rename_spent(out, rng, supply); break;
            case 1: out = commute_adjacent(out, rng); break;
            default: out = insert_detour(out, rng, supply); break;
        }
    }
    return out;
}

Instance generate_instance(Statement which, std::uint64_t seed)
{
    Rng rng { seed };
    PositionSupply supply;
    GenOptions opts;
    opts.slots = slotted(which);
    ChainGen gen { rng, supply, opts };

    Instance inst;
    inst.which = which;
    inst.chain = gen.valid_chain();
    const Chain &b = inst.chain;

    switch (which) {
        case Statement::prefix_closure:
            break;
        case Statement::apart_symmetry: {
            const Transaction tx = gen.candidate(b);
            inst.txs = { rng.chance(1, 2) ? gen.candidate(b, positions_of(tx)) : gen.candidate(b) };
            inst.tx = tx;
            break;
        }
        case Statement::apart_commute: {
            const Transaction tx = rng.chance(2, 3) ? gen.valid_next(b) : gen.candidate(b);
            if (rng.chance(3, 5))
                inst.txs = { gen.spending(spendable_outputs(utxo(b), positions_of(tx))) };
            else
                inst.txs = { gen.candidate(b, positions_of(tx)) };
            inst.tx = tx;
            break;
        }
        case Statement::apart_needed: {
            const Transaction other = gen.valid_next(b);
            const Chain b1 = b.then(other);
            inst.txs = { other };
            inst.tx = rng.chance(7, 10) ? gen.valid_next(b1) : gen.candidate(b1);
            break;
        }
        case Statement::defer:
        case Statement::defer_slots:
        case Statement::defer_slots_equiv: {
            const size_t n = rng.below(4);
            if (opts.slots)
                inst.schedule = gen.schedule(b.last_slot().value_or(0), n + 1);
            Chain cur = b;
            const auto slot_of = [&](size_t k) {
                return opts.slots ? std::optional<Natural> { inst.schedule[k] } : std::nullopt;
            };
            for (size_t k = 0; k < n; ++k) {
                inst.txs.push_back(gen.valid_next(cur, slot_of(k)));
                cur = cur.then(inst.txs.back(), slot_of(k));
            }
            std::vector<Output> pool;
            if (rng.chance(4, 5)) {
                const auto before = utxo(b);
                for (const auto &o: spendable_outputs(utxo(cur)))
                    if (before.contains(o))
                        pool.push_back(o);
            } else {
                pool = spendable_outputs(utxo(cur));
            }
            inst.tx = gen.spending(pool, slot_of(n));
            break;
        }
        case Statement::equiv_append:
            inst.alt = equivalent_variant(b, rng, supply);
            inst.tx = rng.chance(4, 5) ? gen.valid_next(b) : gen.candidate(b);
            break;
        case Statement::alpha_obs:
            inst.alt = rename_spent(b, rng, supply);
            break;
        case Statement::alpha_valid:
        case Statement::alpha_append: {
            inst.alt = equivalent_variant(b, rng, supply);
            Transaction tx = rng.chance(4, 5) ? gen.valid_next(b) : gen.candidate(b);
            if (rng.chance(1, 2))
                tx = with_clash(tx, b, *inst.alt, rng, gen);
            inst.tx = tx;
            break;
        }
    }
    return inst;
}

// --- campaigns ----------------------------------------------------------

bool FuzzReport::ok() const
{
    if (expect_counterexample)
        return failures > 0;
    return failures == 0 && cases == requested;
}

FuzzReport fuzz_statement(Statement which, std::uint64_t seed, size_t cases)
{
    FuzzReport r;
    r.which = which;
    r.seed = seed;
    r.requested = cases;
    r.expect_counterexample = which == Statement::defer_slots;
    const size_t budget = cases * 50 + 100;
    while (r.cases < cases && r.attempts < budget) {
        const Instance inst = generate_instance(which, derive_seed(seed, r.attempts));
        ++r.attempts;
        Verdict v;
        try {
            v = check(inst);
        } catch (const error &) {
            v.hypothesis = true;
            v.holds = false;
        }
        if (!v.hypothesis)
            continue;
        ++r.cases;
        if (v.interesting)
            ++r.interesting;
        if (v.holds) {
            ++r.passes;
            continue;
        }
        ++r.failures;
        if (r.counterexamples.size() < 3)
            r.counterexamples.push_back(print_instance(minimize(inst)));
    }
    return r;
}

std::string render(const FuzzReport &r)
{
    std::ostringstream os;
    os << "fuzz " << statement_name(r.which) << " seed=" << r.seed << " requested=" << r.requested << '\n';
    os << "cases=" << r.cases << " attempts=" << r.attempts << " passes=" << r.passes
       << " interesting=" << r.interesting << " counterexamples=" << r.failures << '\n';
    os << "expected-counterexample=" << (r.expect_counterexample ? "yes" : "no")
       << " result=" << (r.ok() ? "ok" : "fail") << '\n';
    for (size_t k = 0; k < r.counterexamples.size(); ++k)
        os << "counterexample " << k << '\n' << r.counterexamples[k] << "end\n";
    return os.str();
}

// --- token policy campaign ---------------------------------------------

namespace {
    struct token_run {
        Rng &rng;
        PositionSupply fresh;
        TokenConfig cfg;
        Natural supply = 0;
        PolicyTable table;
        Chain chain;
        std::vector<Chain> snapshots;
        bool state_seen = false;

        Natural state_total() const
        {
            Natural n = 0;
            for (const auto &o: utxo(chain))
                n += o.value.get(cfg.state_chip);
            return n;
        }

        Natural traded_total() const
        {
            Natural n = 0;
            for (const auto &o: utxo(chain))
                n += o.value.get(cfg.traded_chip);
            return n;
        }

        KeyId random_key() { return KeyId { rng.between(1, 4) }; }

        const Chain &stale() { return snapshots[rng.below(snapshots.size())]; }

        std::optional<Output> portal() const
        {
            try {
                return token::find_portal(chain, cfg);
            } catch (const error &) {
                return {};
            }
        }
    };

    // Honest actions may be accepted; the rest must always be rejected.
    struct attempt {
        std::string action;
        std::optional<Transaction> tx;
        bool hostile = false;
    };

    attempt draw(token_run &run)
    {
        auto &rng = run.rng;
        const auto &cfg = run.cfg;
        const auto roll = rng.below(100);
        const auto portal = run.portal();
        attempt a;
        try {
            if (roll < 30) {
                a.action = "buy";
                const Natural left = portal ? portal->value.get(cfg.traded_chip) : 0;
                if (left == 0)
                    return a;
                auto r = token::build_buy_tx(run.chain, cfg, run.random_key(), rng.between(1, std::min<Natural>(left, 10)),
                                             std::nullopt, run.fresh);
                a.tx = std::get<Transaction>(std::move(r));
            } else if (roll < 40) {
                a.action = "buy-stale";
                const Chain &old = run.stale();
                const Natural left = token::find_portal(old, cfg).value.get(cfg.traded_chip);
                if (left == 0)
                    return a;
                a.tx = std::get<Transaction>(
                    token::build_buy_tx(old, cfg, run.random_key(), rng.between(1, std::min<Natural>(left, 10)),
                                        std::nullopt, run.fresh));
            } else if (roll < 50) {
                a.action = "set-price";
                a.tx = token::build_set_price_tx(rng.chance(1, 3) ? run.stale() : run.chain, cfg, rng.below(6),
                                                 run.fresh);
            } else if (roll < 53) {
                a.action = "set-price-forged";
                KeyId signer = run.random_key();
                if (signer == cfg.issuer)
                    signer = KeyId { signer.id + 10 };
                a.tx = token::build_set_price_tx(run.chain, cfg, rng.below(6), run.fresh, signer);
                a.hostile = true;
            } else if (roll < 68) {
                a.action = "transfer";
                std::vector<Output> held;
                for (const auto &o: utxo(run.chain))
                    if (o.validator.kind == ValidatorKind::pay_to_pub_key && o.value.get(cfg.traded_chip) > 0)
                        held.push_back(o);
                if (held.empty())
                    return a;
                const Output o = rng.pick(held);
                a.tx = Transaction { { Input { o.position, Redeemer { o.validator.key.id } } },
                                     { Output { run.fresh.fresh(), ValidatorRef::pay_to_pub_key(run.random_key()),
                                                Datum {}, o.value } } };
            } else if (roll < 72) {
                a.action = "reinit";
                a.tx = token::init_portal(cfg, rng.between(1, 100), rng.below(5), run.fresh);
                a.hostile = true;
            } else if (roll < 76) {
                a.action = "rogue-mint-state";
                a.tx = Transaction { {}, { Output { run.fresh.fresh(), ValidatorRef::pay_to_pub_key(run.random_key()),
                                                    Datum {}, Value::singleton(cfg.state_chip, 1) } } };
                a.hostile = true;
            } else if (roll < 80) {
                a.action = "rogue-mint-traded";
                a.tx = Transaction { {}, { Output { run.fresh.fresh(), ValidatorRef::pay_to_pub_key(run.random_key()),
                                                    Datum {}, Value::singleton(cfg.traded_chip, rng.between(1, 9)) } } };
                a.hostile = true;
            } else if (!portal) {
                return a;
            } else if (roll < 84) {
                a.action = "extra-state-chip";
                auto tx = std::get<Transaction>(token::build_buy_tx(run.chain, cfg, run.random_key(), 1, std::nullopt,
                                                                    run.fresh));
                auto outs = tx.outputs();
                outs.push_back(Output { run.fresh.fresh(), ValidatorRef::pay_to_pub_key(run.random_key()), Datum {},
                                        Value::singleton(cfg.state_chip, 1) });
                a.tx = Transaction { tx.inputs(), std::move(outs) };
                a.hostile = true;
            } else if (roll < 88) {
                a.action = "burn-state-chip";
                const Natural traded = portal->value.get(cfg.traded_chip);
                std::vector<Output> outs;
                if (traded > 0)
                    outs.push_back(Output { run.fresh.fresh(), portal->validator, portal->datum,
                                            Value::singleton(cfg.traded_chip, traded) });
                a.tx = Transaction {
                    { Input { portal->position, token::encode_action(token::SetPrice { 0, cfg.issuer }) } },
                    std::move(outs) };
                a.hostile = true;
            } else if (roll < 94) {
                a.action = "steal-portal";
                a.tx = Transaction { { Input { portal->position, token::encode_action(token::Buy { 1 }) } },
                                     { Output { run.fresh.fresh(), ValidatorRef::pay_to_pub_key(run.random_key()),
                                                portal->datum, portal->value } } };
                a.hostile = true;
            } else {
                a.action = "underpay";
                const Natural price = portal->datum.value;
                const Natural left = portal->value.get(cfg.traded_chip);
                if (price == 0 || left == 0)
                    return a;
                const Natural n = rng.between(1, std::min<Natural>(left, 10));
                const Natural due = n * price;
                auto tx = std::get<Transaction>(
                    token::build_buy_tx(run.chain, cfg, run.random_key(), n, std::nullopt, run.fresh));
                std::vector<Output> outs;
                for (auto o: tx.outputs()) {
                    if (o.validator == ValidatorRef::pay_to_pub_key(cfg.issuer) &&
                        o.value == Value::singleton(Chip::ada(), due)) {
                        if (due == 1)
                            continue;
                        o.value = Value::singleton(Chip::ada(), due - 1);
                    }
                    outs.push_back(o);
                }
                a.tx = Transaction { tx.inputs(), std::move(outs) };
                a.hostile = true;
            }
        } catch (const error &) {
            a.tx.reset();
        }
        return a;
    }

    // A buy that got in must have paid its own quoted price in full.
    std::optional<std::string> payment_problem(const token_run &run, const Chain &before, const Transaction &tx)
    {
        std::optional<Output> old;
        try {
            old = token::find_portal(before, run.cfg);
        } catch (const error &) {
            return {};
        }
        for (const auto &in: tx.inputs()) {
            if (in.position != old->position)
                continue;
            const auto action = token::decode_action(in.redeemer);
            const auto *buy = action ? std::get_if<token::Buy>(&*action) : nullptr;
            if (!buy)
                return {};
            const Natural due = buy->tokens * old->datum.value;
            if (due == 0)
                return {};
            for (const auto &o: tx.outputs())
                if (o.validator == ValidatorRef::pay_to_pub_key(run.cfg.issuer) &&
                    o.value == Value::singleton(Chip::ada(), due))
                    return {};
            return "buy of " + std::to_string(buy->tokens) + " accepted without paying " + std::to_string(due);
        }
        return {};
    }
}

TokenFuzzReport fuzz_token_policy(std::uint64_t seed, size_t scenarios, size_t steps)
{
    TokenFuzzReport rep;
    rep.seed = seed;
    for (size_t s = 0; s < scenarios; ++s) {
        Rng rng { derive_seed(seed, s) };
        token_run run { rng, PositionSupply {}, {}, 0, {}, {}, {}, false };
        run.cfg = token::make_config(KeyId { rng.between(1, 3) }, Chip { 1, rng.between(1, 2) },
                                     Chip { 2, rng.between(1, 2) });
        run.supply = rng.between(1, 500);
        const auto note = [&](size_t step, const std::string &what) {
            if (rep.violations.size() < 20)
                rep.violations.push_back("scenario " + std::to_string(s) + " step " + std::to_string(step) + ": " +
                                         what);
            else
                rep.violations.back() = "... and more";
        };

        // issuance is the one moment the traded chip may be forged
        PolicyTable issue;
        issue.rules[run.cfg.state_chip.currency_symbol] = PolicyRule::affine_once;
        issue.rules[run.cfg.traded_chip.currency_symbol] = PolicyRule::free_forge;
        run.table.rules[run.cfg.state_chip.currency_symbol] = PolicyRule::affine_once;
        run.table.rules[run.cfg.traded_chip.currency_symbol] = PolicyRule::forbid_forge;

        auto genesis = append(Chain {}, token::init_portal(run.cfg, run.supply, rng.below(5), run.fresh), {},
                              policy_hook(issue));
        if (!std::holds_alternative<Chain>(genesis)) {
            note(0, "portal genesis rejected");
            continue;
        }
        run.chain = std::get<Chain>(std::move(genesis));
        run.snapshots.push_back(run.chain);
        ++rep.scenarios;
        Natural last_state = run.state_total();
        if (last_state != 1)
            note(0, "state chip total after issuance is " + std::to_string(last_state));

        const AppendHook hook = policy_hook(run.table);
        for (size_t step = 1; step <= steps; ++step) {
            const attempt a = draw(run);
            if (!a.tx)
                continue;
            ++rep.attempted;
            const Chain before = run.chain;
            auto r = append(run.chain, *a.tx, {}, hook);
            if (!std::holds_alternative<Chain>(r)) {
                ++rep.rejected_by_action[a.action];
                continue;
            }
            run.chain = std::get<Chain>(std::move(r));
            run.snapshots.push_back(run.chain);
            ++rep.appended;
            ++rep.accepted_by_action[a.action];
            if (a.hostile)
                note(step, a.action + " was accepted");

            const Natural state = run.state_total();
            if (state > 1)
                note(step, "state chip total " + std::to_string(state));
            if (state < last_state)
                note(step, "state chip total fell from " + std::to_string(last_state) + " to " + std::to_string(state));
            last_state = state;
            if (run.traded_total() != run.supply)
                note(step, "traded total " + std::to_string(run.traded_total()) + " differs from supply " +
                               std::to_string(run.supply));
            if (const auto p = payment_problem(run, before, *a.tx))
                note(step, *p);
            const Chain canon = canonicalize(run.chain);
            if (!check_policies(run.table, canon.prefix(canon.size() - 1), canon[canon.size() - 1]))
                note(step, "policies disagree on the canonical form");
        }
    }
    return rep;
}

std::string render(const TokenFuzzReport &r)
{
    std::ostringstream os;
    os << "token-policy seed=" << r.seed << " scenarios=" << r.scenarios << " attempted=" << r.attempted
       << " appended=" << r.appended << " violations=" << r.violations.size() << '\n';
    std::set<std::string> actions;
    for (const auto &[k, n]: r.accepted_by_action)
        actions.insert(k);
    for (const auto &[k, n]: r.rejected_by_action)
        actions.insert(k);
    for (const auto &k: actions) {
        const auto acc = r.accepted_by_action.find(k);
        const auto rej = r.rejected_by_action.find(k);
        os << "action " << k << " accepted=" << (acc == r.accepted_by_action.end() ? 0 : acc->second)
           << " rejected=" << (rej == r.rejected_by_action.end() ? 0 : rej->second) << '\n';
    }
    for (const auto &v: r.violations)
        os << "violation " << v << '\n';
    os << "result=" << (r.ok() ? "ok" : "fail") << '\n';
    return os.str();
}

}
