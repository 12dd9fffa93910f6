// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

// Scenario and outcome text formats.
//
// A scenario is a list of records, one per line:
//
//   ledger eutxo|account
//   actor <name> <key>
//   issuer <name>
//   traded <cs> <tn>
//   state <cs> <tn>
//   supply <n>
//   price <n>
//   policy <symbol> free|forbid|affine
//   default-policy free|forbid|affine
//   slots on|off
//   rebuild on|off
//   intent buy <actor> tokens=<n> [expect=<n>] [guarded] [until=<slot>]
//   intent set-price <actor> price=<n> [until=<slot>]
//   intent send <actor> to=<actor> tokens=<n> [until=<slot>]
//   schedule all | schedule sample <n> <seed> | schedule order <i>... (repeatable)

#include <dualledger/format.hpp>
#include <dualledger/sim.hpp>
#include <dualledger/token.hpp>

#include <algorithm>
#include <sstream>

namespace dualledger::sim {

std::string_view ledger_name(LedgerKind k)
{
    return k == LedgerKind::eutxo ? "eutxo" : "account";
}

std::string_view intent_name(IntentKind k)
{
    switch (k) {
        case IntentKind::buy: return "buy";
        case IntentKind::set_price: return "set-price";
        case IntentKind::send: return "send";
    }
    return "?";
}

std::string_view status_name(IntentStatus s)
{
    switch (s) {
        case IntentStatus::accepted: return "accepted";
        case IntentStatus::rejected: return "rejected";
        case IntentStatus::guard_failed: return "guard-failed";
        case IntentStatus::refused: return "refused";
    }
    return "?";
}

const Actor &Scenario::actor(std::string_view name) const
{
    const auto it = std::find_if(actors.begin(), actors.end(), [&](const Actor &a) { return a.name == name; });
    if (it == actors.end())
        throw error { "unknown actor '" + std::string { name } + "'" };
    return *it;
}

TokenConfig Scenario::config() const
{
    return TokenConfig { actor(issuer).key, traded_chip, state_chip };
}

namespace {
    struct line_reader {
        std::string_view text;
        size_t pos = 0;
        size_t line_no = 0;

        bool next(std::vector<std::string_view> &words)
        {
            while (pos <= text.size()) {
                const auto end = std::min(text.find('\n', pos), text.size());
                auto line = text.substr(pos, end - pos);
                pos = end + 1;
                ++line_no;
                if (const auto hash = line.find('#'); hash != std::string_view::npos)
                    line = line.substr(0, hash);
                words = split_words(line);
                if (!words.empty())
                    return true;
            }
            return false;
        }
    };

    bool parse_switch(std::string_view w, size_t line)
    {
        if (w == "on")
            return true;
        if (w == "off")
            return false;
        throw parse_error { line, "expected on or off" };
    }

    PolicyRule parse_rule(std::string_view w, size_t line)
    {
        const auto r = rule_from_name(w);
        if (!r)
            throw parse_error { line, "unknown policy rule '" + std::string { w } + "'" };
        return *r;
    }

    void expect_words(const std::vector<std::string_view> &w, size_t n, size_t line)
    {
        if (w.size() != n)
            throw parse_error { line, "'" + std::string { w[0] } + "' takes " + std::to_string(n - 1) + " argument(s)" };
    }

    Intent parse_intent(const std::vector<std::string_view> &w, size_t line)
    {
        if (w.size() < 3)
            throw parse_error { line, "intent needs a kind and an actor" };
        Intent in;
        if (w[1] == "buy")
            in.kind = IntentKind::buy;
        else if (w[1] == "set-price")
            in.kind = IntentKind::set_price;
        else if (w[1] == "send")
            in.kind = IntentKind::send;
        else
            throw parse_error { line, "unknown intent '" + std::string { w[1] } + "'" };
        in.actor = std::string { w[2] };
        bool have_tokens = false, have_price = false;
        for (size_t k = 3; k < w.size(); ++k) {
            const auto word = w[k];
            const auto eq = word.find('=');
            const auto key = word.substr(0, eq);
            const auto val = eq == std::string_view::npos ? std::string_view {} : word.substr(eq + 1);
            if (key == "guarded" && eq == std::string_view::npos && in.kind == IntentKind::buy)
                in.guarded = true;
            else if (key == "tokens" && in.kind != IntentKind::set_price) {
                in.tokens = parse_natural(val, line);
                have_tokens = true;
            } else if (key == "expect" && in.kind == IntentKind::buy)
                in.expect_price = parse_natural(val, line);
            else if (key == "price" && in.kind == IntentKind::set_price) {
                in.price = parse_natural(val, line);
                have_price = true;
            } else if (key == "to" && in.kind == IntentKind::send && !val.empty())
                in.recipient = std::string { val };
            else if (key == "until")
                in.until = parse_natural(val, line);
            else
                throw parse_error { line, "unexpected intent field '" + std::string { word } + "'" };
        }
        if (in.kind != IntentKind::set_price && !have_tokens)
            throw parse_error { line, "intent needs tokens=" };
        if (in.kind == IntentKind::set_price && !have_price)
            throw parse_error { line, "set-price needs price=" };
        if (in.kind == IntentKind::send && in.recipient.empty())
            throw parse_error { line, "send needs to=" };
        return in;
    }
}

Scenario parse_scenario(std::string_view text)
{
    Scenario s;
    s.policies = PolicyTable {};
    bool have_ledger = false, have_issuer = false, schedule_orders = false, schedule_other = false;
    std::vector<size_t> intent_lines;
    line_reader rd { text };
    std::vector<std::string_view> w;
    while (rd.next(w)) {
        const size_t ln = rd.line_no;
        const auto &kw = w[0];
        if (kw == "ledger") {
            expect_words(w, 2, ln);
            if (w[1] == "eutxo")
                s.ledger = LedgerKind::eutxo;
            else if (w[1] == "account")
                s.ledger = LedgerKind::account;
            else
                throw parse_error { ln, "ledger must be eutxo or account" };
            have_ledger = true;
        } else if (kw == "actor") {
            expect_words(w, 3, ln);
            const std::string name { w[1] };
            if (std::any_of(s.actors.begin(), s.actors.end(), [&](const Actor &a) { return a.name == name; }))
                throw parse_error { ln, "actor '" + name + "' declared twice" };
            s.actors.push_back(Actor { name, KeyId { parse_natural(w[2], ln) } });
        } else if (kw == "issuer") {
            expect_words(w, 2, ln);
            s.issuer = std::string { w[1] };
            have_issuer = true;
        } else if (kw == "traded" || kw == "state") {
            expect_words(w, 3, ln);
            const Chip c { parse_natural(w[1], ln), parse_natural(w[2], ln) };
            (kw == "traded" ? s.traded_chip : s.state_chip) = c;
        } else if (kw == "supply") {
            expect_words(w, 2, ln);
            s.supply = parse_natural(w[1], ln);
        } else if (kw == "price") {
            expect_words(w, 2, ln);
            s.price = parse_natural(w[1], ln);
        } else if (kw == "policy") {
            expect_words(w, 3, ln);
            s.policies.rules[parse_natural(w[1], ln)] = parse_rule(w[2], ln);
        } else if (kw == "default-policy") {
            expect_words(w, 2, ln);
            s.policies.default_rule = parse_rule(w[1], ln);
        } else if (kw == "slots") {
            expect_words(w, 2, ln);
            s.slots = parse_switch(w[1], ln);
        } else if (kw == "rebuild") {
            expect_words(w, 2, ln);
            s.rebuild = parse_switch(w[1], ln);
        } else if (kw == "intent") {
            s.intents.push_back(parse_intent(w, ln));
            intent_lines.push_back(ln);
        } else if (kw == "schedule") {
            if (w.size() < 2)
                throw parse_error { ln, "schedule needs a mode" };
            if (w[1] == "all") {
                expect_words(w, 2, ln);
                s.schedule = ScheduleSpec { ScheduleMode::all, {}, 0, 0 };
                schedule_other = true;
            } else if (w[1] == "sample") {
                expect_words(w, 4, ln);
                s.schedule = ScheduleSpec { ScheduleMode::sample, {}, parse_natural(w[2], ln), parse_natural(w[3], ln) };
                schedule_other = true;
            } else if (w[1] == "order") {
                std::vector<size_t> order;
                for (size_t k = 2; k < w.size(); ++k)
                    order.push_back(parse_natural(w[k], ln));
                s.schedule.mode = ScheduleMode::orders;
                s.schedule.orders.push_back(std::move(order));
                schedule_orders = true;
            } else {
                throw parse_error { ln, "unknown schedule mode '" + std::string { w[1] } + "'" };
            }
            if (schedule_orders && schedule_other)
                throw parse_error { ln, "explicit orders cannot be mixed with other schedule modes" };
        } else {
            throw parse_error { ln, "unknown record '" + std::string { kw } + "'" };
        }
    }
    if (!have_ledger)
        throw parse_error { rd.line_no, "missing ledger record" };
    if (!have_issuer)
        throw parse_error { rd.line_no, "missing issuer record" };
    try {
        s.actor(s.issuer);
        token::make_config(s.actor(s.issuer).key, s.traded_chip, s.state_chip);
    } catch (const error &e) {
        throw parse_error { rd.line_no, e.what() };
    }
    if (s.supply == 0)
        throw parse_error { rd.line_no, "supply must be positive" };
    for (size_t k = 0; k < s.intents.size(); ++k) {
        try {
            s.actor(s.intents[k].actor);
            if (s.intents[k].kind == IntentKind::send)
                s.actor(s.intents[k].recipient);
        } catch (const error &e) {
            throw parse_error { intent_lines[k], e.what() };
        }
    }
    for (const auto &order: s.schedule.orders) {
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        for (size_t k = 0; k < sorted.size(); ++k)
            if (sorted[k] != k || sorted.size() != s.intents.size())
                throw parse_error { rd.line_no, "schedule order is not a permutation of the intents" };
    }
    return s;
}

std::string print_scenario(const Scenario &s)
{
    std::ostringstream os;
    os << "ledger " << ledger_name(s.ledger) << '\n';
    for (const auto &a: s.actors)
        os << "actor " << a.name << ' ' << a.key.id << '\n';
    os << "issuer " << s.issuer << '\n';
    os << "traded " << s.traded_chip.currency_symbol << ' ' << s.traded_chip.token_name << '\n';
    os << "state " << s.state_chip.currency_symbol << ' ' << s.state_chip.token_name << '\n';
    os << "supply " << s.supply << '\n';
    os << "price " << s.price << '\n';
    for (const auto &[sym, rule]: s.policies.rules)
        os << "policy " << sym << ' ' << rule_name(rule) << '\n';
    os << "default-policy " << rule_name(s.policies.default_rule) << '\n';
    os << "slots " << (s.slots ? "on" : "off") << '\n';
    os << "rebuild " << (s.rebuild ? "on" : "off") << '\n';
    for (const auto &in: s.intents) {
        os << "intent " << intent_name(in.kind) << ' ' << in.actor;
        switch (in.kind) {
            case IntentKind::buy:
                os << " tokens=" << in.tokens;
                if (in.expect_price)
                    os << " expect=" << *in.expect_price;
                if (in.guarded)
                    os << " guarded";
                break;
            case IntentKind::set_price:
                os << " price=" << in.price;
                break;
            case IntentKind::send:
                os << " to=" << in.recipient << " tokens=" << in.tokens;
                break;
        }
        if (in.until)
            os << " until=" << *in.until;
        os << '\n';
    }
    switch (s.schedule.mode) {
        case ScheduleMode::all:
            os << "schedule all\n";
            break;
        case ScheduleMode::sample:
            os << "schedule sample " << s.schedule.samples << ' ' << s.schedule.seed << '\n';
            break;
        case ScheduleMode::orders:
            for (const auto &order: s.schedule.orders) {
                os << "schedule order";
                for (auto k: order)
                    os << ' ' << k;
                os << '\n';
            }
            break;
    }
    return os.str();
}

std::string print_outcome(const Outcome &o)
{
    std::ostringstream os;
    os << "outcome " << ledger_name(o.ledger) << '\n';
    os << "order";
    for (auto k: o.order)
        os << ' ' << k;
    os << '\n';
    for (const auto &st: o.steps) {
        os << "step " << st.intent << ' ' << status_name(st.status) << " seen=" << st.seen_price
           << " tokens=" << st.tokens << " paid=" << st.paid;
        if (!st.reason.empty())
            os << " | " << st.reason;
        os << '\n';
    }
    for (const auto &h: o.holdings)
        os << "holding " << h.actor << " tokens=" << h.tokens << " paid=" << h.paid << " received=" << h.received << '\n';
    os << "final-price " << o.final_price << '\n';
    os << "digest " << o.digest << '\n';
    os << "end\n";
    return os.str();
}

namespace {
    Natural field(std::string_view w, std::string_view key, size_t line)
    {
        if (w.substr(0, key.size()) != key || w.size() <= key.size() || w[key.size()] != '=')
            throw parse_error { line, "expected " + std::string { key } + "=<n>" };
        return parse_natural(w.substr(key.size() + 1), line);
    }

    IntentStatus parse_status(std::string_view w, size_t line)
    {
        for (auto s: { IntentStatus::accepted, IntentStatus::rejected, IntentStatus::guard_failed, IntentStatus::refused })
            if (status_name(s) == w)
                return s;
        throw parse_error { line, "unknown status '" + std::string { w } + "'" };
    }
}

Outcome parse_outcome(std::string_view text)
{
    Outcome o;
    line_reader rd { text };
    std::vector<std::string_view> w;
    bool ended = false, started = false;
    while (!ended && rd.next(w)) {
        const size_t ln = rd.line_no;
        if (!started) {
            if (w.size() != 2 || w[0] != "outcome")
                throw parse_error { ln, "expected 'outcome <ledger>'" };
            o.ledger = w[1] == "account" ? LedgerKind::account : LedgerKind::eutxo;
            if (w[1] != "account" && w[1] != "eutxo")
                throw parse_error { ln, "unknown ledger" };
            started = true;
            continue;
        }
        if (w[0] == "order") {
            for (size_t k = 1; k < w.size(); ++k)
                o.order.push_back(parse_natural(w[k], ln));
        } else if (w[0] == "step") {
            if (w.size() < 6)
                throw parse_error { ln, "short step record" };
            StepOutcome st;
            st.intent = parse_natural(w[1], ln);
            st.status = parse_status(w[2], ln);
            st.seen_price = field(w[3], "seen", ln);
            st.tokens = field(w[4], "tokens", ln);
            st.paid = field(w[5], "paid", ln);
            if (w.size() > 6) {
                if (w[6] != "|")
                    throw parse_error { ln, "expected '|' before the reason" };
                // the reason runs verbatim to the end of the line
                const std::string_view line_text = rd.text.substr(0, rd.pos - 1);
                const auto bar = line_text.rfind(" | ");
                st.reason = std::string { line_text.substr(bar + 3) };
                if (!st.reason.empty() && st.reason.back() == '\r')
                    st.reason.pop_back();
            }
            o.steps.push_back(std::move(st));
        } else if (w[0] == "holding") {
            if (w.size() != 5)
                throw parse_error { ln, "holding takes an actor and three fields" };
            o.holdings.push_back(Holding { std::string { w[1] }, field(w[2], "tokens", ln), field(w[3], "paid", ln),
                                           field(w[4], "received", ln) });
        } else if (w[0] == "final-price") {
            expect_words(w, 2, ln);
            o.final_price = parse_natural(w[1], ln);
        } else if (w[0] == "digest") {
            expect_words(w, 2, ln);
            o.digest = std::string { w[1] };
        } else if (w[0] == "end") {
            ended = true;
        } else {
            throw parse_error { ln, "unknown outcome record '" + std::string { w[0] } + "'" };
        }
    }
    if (!ended)
        throw parse_error { rd.line_no, "outcome not terminated by 'end'" };
    return o;
}

}
