// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#include <dualledger/cli.hpp>
#include <dualledger/format.hpp>
#include <dualledger/fuzz.hpp>
#include <dualledger/sim.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <sstream>

namespace dualledger::cli {

using nlohmann::json;

namespace {
    CommandResult input_error(const std::string &what)
    {
        return CommandResult { 2, {}, "error: " + what + "\n" };
    }

    std::string dump(const json &j)
    {
        return j.dump(2) + "\n";
    }

    json output_json(const Output &o)
    {
        json v = json::array();
        for (const auto &[c, n]: o.value.entries())
            v.push_back({ { "cs", c.currency_symbol }, { "tn", c.token_name }, { "qty", n } });
        return { { "position", o.position.id },
                 { "validator", print_output(o) },
                 { "datum", o.datum.value },
                 { "value", v } };
    }

    json outcome_json(const sim::Outcome &o)
    {
        json steps = json::array();
        for (const auto &s: o.steps)
            steps.push_back({ { "intent", s.intent },
                              { "status", sim::status_name(s.status) },
                              { "seen_price", s.seen_price },
                              { "tokens", s.tokens },
                              { "paid", s.paid },
                              { "reason", s.reason } });
        json holdings = json::array();
        for (const auto &h: o.holdings)
            holdings.push_back(
                { { "actor", h.actor }, { "tokens", h.tokens }, { "paid", h.paid }, { "received", h.received } });
        return { { "ledger", sim::ledger_name(o.ledger) },
                 { "order", o.order },
                 { "steps", steps },
                 { "holdings", holdings },
                 { "final_price", o.final_price },
                 { "digest", o.digest } };
    }

    json report_json(const sim::ScenarioReport &r)
    {
        json outcomes = json::array();
        for (const auto &o: r.outcomes)
            outcomes.push_back(outcome_json(o));
        json classes = json::array();
        for (const auto &c: r.distinct)
            classes.push_back({ { "orders", c.orders },
                                { "price_faithful", c.price_faithful },
                                { "representative", outcome_json(c.representative) } });
        return { { "outcomes", outcomes }, { "distinct", classes } };
    }

    std::optional<Chain> load(const std::string &path, CommandResult &fail)
    {
        try {
            return load_chain_file(path);
        } catch (const error &e) {
            fail = input_error(path + ": " + e.what());
            return {};
        }
    }
}

CommandResult cmd_validate(const std::string &path, Format f)
{
    CommandResult res;
    const auto chain = load(path, res);
    if (!chain)
        return res;
    const auto report = validate_chain(*chain);
    res.code = report.valid() ? 0 : 1;
    if (f == Format::json) {
        json vs = json::array();
        for (const auto &v: report.violations)
            vs.push_back({ { "tx", v.tx_index }, { "kind", violation_name(v.kind) }, { "detail", v.detail } });
        res.out = dump({ { "valid", report.valid() }, { "violations", vs } });
        return res;
    }
    std::ostringstream os;
    if (report.valid()) {
        os << "valid: " << chain->size() << " transaction(s)\n";
    } else {
        os << "invalid: " << report.violations.size() << " violation(s)\n";
        for (const auto &v: report.violations)
            os << "tx " << v.tx_index << ' ' << violation_name(v.kind) << ": " << v.detail << '\n';
    }
    res.out = os.str();
    return res;
}

CommandResult cmd_utxo(const std::string &path, Format f)
{
    CommandResult res;
    const auto chain = load(path, res);
    if (!chain)
        return res;
    const auto outs = utxo(*chain);
    if (f == Format::json) {
        json a = json::array();
        for (const auto &o: outs)
            a.push_back(output_json(o));
        res.out = dump({ { "utxo", a } });
        return res;
    }
    for (const auto &o: outs)
        res.out += print_output(o) + "\n";
    return res;
}

CommandResult cmd_classify(const std::string &path, Format f)
{
    CommandResult res;
    const auto chain = load(path, res);
    if (!chain)
        return res;
    const auto c = class_name(classify(*chain));
    res.out = f == Format::json ? dump({ { "class", c } }) : std::string { c } + "\n";
    return res;
}

CommandResult cmd_equiv(const std::string &path_a, const std::string &path_b, const std::string &mode, Format f)
{
    if (mode != "obs" && mode != "alpha")
        return input_error("mode must be obs or alpha");
    CommandResult res;
    const auto a = load(path_a, res);
    if (!a)
        return res;
    const auto b = load(path_b, res);
    if (!b)
        return res;
    if (!is_valid(*a))
        return input_error(path_a + " is not a valid chain");
    if (!is_valid(*b))
        return input_error(path_b + " is not a valid chain");

    json j { { "mode", mode } };
    std::ostringstream os;
    if (mode == "obs") {
        const auto ua = utxo(*a);
        const auto ub = utxo(*b);
        json only_a = json::array(), only_b = json::array();
        for (const auto &o: ua)
            if (!ub.contains(o)) {
                only_a.push_back(output_json(o));
                os << "- " << print_output(o) << '\n';
            }
        for (const auto &o: ub)
            if (!ua.contains(o)) {
                only_b.push_back(output_json(o));
                os << "+ " << print_output(o) << '\n';
            }
        res.code = ua == ub ? 0 : 1;
        j["only_first"] = only_a;
        j["only_second"] = only_b;
    } else {
        const Chain ca = canonicalize(*a);
        const Chain cb = canonicalize(*b);
        res.code = ca == cb ? 0 : 1;
        if (res.code) {
            size_t k = 0;
            while (k < ca.size() && k < cb.size() && ca[k] == cb[k])
                ++k;
            const auto tx_text = [](const Chain &c, size_t k) {
                if (k >= c.size())
                    return std::string { "(none)\n" };
                return print_chain(Chain { { c[k] } });
            };
            os << "canonical forms differ at transaction " << k << "\n< " << tx_text(ca, k) << "> " << tx_text(cb, k);
            j["first_difference"] = k;
        }
    }
    j["equivalent"] = res.code == 0;
    if (f == Format::json)
        res.out = dump(j);
    else
        res.out = (res.code == 0 ? "equivalent\n" : "not equivalent\n") + os.str();
    return res;
}

namespace {
    std::optional<sim::ScheduleSpec> parse_schedule_flag(const std::string &s, size_t intents)
    {
        if (s == "all")
            return sim::ScheduleSpec { sim::ScheduleMode::all, {}, 0, 0 };
        const auto colon = s.find(':');
        const std::string head = s.substr(0, colon);
        const std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
        if (head == "sample") {
            const auto c2 = rest.find(':');
            if (c2 == std::string::npos)
                return {};
            return sim::ScheduleSpec { sim::ScheduleMode::sample, {}, parse_natural(rest.substr(0, c2), 0),
                                       parse_natural(rest.substr(c2 + 1), 0) };
        }
        if (head == "order") {
            std::vector<size_t> order;
            std::stringstream ss { rest };
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty())
                    order.push_back(parse_natural(item, 0));
            auto sorted = order;
            std::sort(sorted.begin(), sorted.end());
            if (sorted.size() != intents)
                return {};
            for (size_t k = 0; k < sorted.size(); ++k)
                if (sorted[k] != k)
                    return {};
            return sim::ScheduleSpec { sim::ScheduleMode::orders, { order }, 0, 0 };
        }
        return {};
    }

    CommandResult render_report(const sim::ScenarioReport &r, Format f)
    {
        CommandResult res;
        res.out = f == Format::json ? dump(report_json(r)) : sim::print_report(r);
        return res;
    }
}

CommandResult cmd_scenario(const std::string &path, const std::string &schedule, Format f)
{
    sim::Scenario s;
    try {
        s = sim::parse_scenario(read_file(path));
        if (!schedule.empty()) {
            const auto spec = parse_schedule_flag(schedule, s.intents.size());
            if (!spec)
                return input_error("bad --schedule '" + schedule + "'");
            s.schedule = *spec;
        }
        return render_report(sim::run_scenario(s), f);
    } catch (const error &e) {
        return input_error(path + ": " + e.what());
    }
}

namespace {
    constexpr size_t token_steps = 60;

    json fuzz_json(const FuzzReport &r)
    {
        return { { "statement", statement_name(r.which) },
                 { "seed", r.seed },
                 { "requested", r.requested },
                 { "cases", r.cases },
                 { "attempts", r.attempts },
                 { "passes", r.passes },
                 { "interesting", r.interesting },
                 { "counterexamples", r.failures },
                 { "expected_counterexample", r.expect_counterexample },
                 { "stored", r.counterexamples },
                 { "ok", r.ok() } };
    }

    json token_json(const TokenFuzzReport &r)
    {
        return { { "statement", "token-policy" },
                 { "seed", r.seed },
                 { "scenarios", r.scenarios },
                 { "attempted", r.attempted },
                 { "appended", r.appended },
                 { "accepted_by_action", r.accepted_by_action },
                 { "rejected_by_action", r.rejected_by_action },
                 { "violations", r.violations },
                 { "ok", r.ok() } };
    }
}

CommandResult cmd_fuzz(const std::string &statement, size_t cases, std::uint64_t seed, Format f)
{
    if (cases == 0)
        return input_error("--cases must be positive");
    std::vector<Statement> which;
    bool token = false;
    if (statement == "all") {
        which = all_statements();
        token = true;
    } else if (statement == "token-policy") {
        token = true;
    } else if (const auto s = statement_from_name(statement)) {
        which.push_back(*s);
    } else {
        std::string names;
        for (auto s: all_statements())
            names += " " + std::string { statement_name(s) };
        return input_error("unknown statement '" + statement + "'; known:" + names + " token-policy all");
    }

    CommandResult res;
    json reports = json::array();
    std::string text;
    for (const auto s: which) {
        const auto r = fuzz_statement(s, seed, cases);
        if (!r.ok())
            res.code = 1;
        reports.push_back(fuzz_json(r));
        text += render(r);
    }
    if (token) {
        const auto r = fuzz_token_policy(seed, cases, token_steps);
        if (!r.ok())
            res.code = 1;
        reports.push_back(token_json(r));
        text += render(r);
    }
    res.out = f == Format::json ? dump(reports) : text;
    return res;
}

CommandResult cmd_demo_race(const std::string &ledger, Format f)
{
    std::vector<sim::LedgerKind> kinds;
    if (ledger == "eutxo" || ledger == "both")
        kinds.push_back(sim::LedgerKind::eutxo);
    if (ledger == "account" || ledger == "both")
        kinds.push_back(sim::LedgerKind::account);
    if (kinds.empty())
        return input_error("ledger must be eutxo, account or both");

    CommandResult res;
    json all = json::array();
    for (const auto k: kinds) {
        const auto s = sim::race_scenario(k);
        const auto r = sim::run_scenario(s);
        if (f == Format::json) {
            all.push_back(report_json(r));
            continue;
        }
        res.out += "# race on the " + std::string { sim::ledger_name(k) } + " ledger\n";
        res.out += sim::print_report(r);
    }
    if (f == Format::json)
        res.out = dump(all);
    return res;
}

CommandResult run(const std::vector<std::string> &args)
{
    CLI::App app { "Dual-ledger toolkit: UTxO and account ledger semantics side by side", "dualledger" };
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({ "text", "json" }));

    std::string file, file2, mode = "obs", schedule, statement = "all", ledger = "both";
    size_t cases = 1000;
    std::uint64_t seed = 1;

    auto *validate = app.add_subcommand("validate", "check a chain file");
    validate->add_option("chain", file)->required();
    auto *utxo_cmd = app.add_subcommand("utxo", "list unspent outputs");
    utxo_cmd->add_option("chain", file)->required();
    auto *classify_cmd = app.add_subcommand("classify", "blockchain, chunk or neither");
    classify_cmd->add_option("chain", file)->required();
    auto *equiv = app.add_subcommand("equiv", "compare two chains");
    equiv->add_option("first", file)->required();
    equiv->add_option("second", file2)->required();
    equiv->add_option("--mode", mode, "obs or alpha")->check(CLI::IsMember({ "obs", "alpha" }));
    auto *scenario = app.add_subcommand("scenario", "run a scenario file");
    scenario->add_option("scenario", file)->required();
    scenario->add_option("--schedule", schedule, "all, sample:N:SEED or order:I,J,...");
    auto *fuzz = app.add_subcommand("fuzz", "random testing of the ledger statements");
    fuzz->add_option("--theorem", statement, "statement name, token-policy or all");
    fuzz->add_option("--cases", cases);
    fuzz->add_option("--seed", seed);
    auto *race = app.add_subcommand("demo-race", "the bundled buy/setPrice race");
    race->add_option("--ledger", ledger, "eutxo, account or both");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp &) {
        return CommandResult { 0, app.help(), {} };
    } catch (const CLI::ParseError &e) {
        return input_error(e.what());
    }

    const Format f = format == "json" ? Format::json : Format::text;
    if (*validate)
        return cmd_validate(file, f);
    if (*utxo_cmd)
        return cmd_utxo(file, f);
    if (*classify_cmd)
        return cmd_classify(file, f);
    if (*equiv)
        return cmd_equiv(file, file2, mode, f);
    if (*scenario)
        return cmd_scenario(file, schedule, f);
    if (*fuzz)
        return cmd_fuzz(statement, cases, seed, f);
    return cmd_demo_race(ledger, f);
}

}
