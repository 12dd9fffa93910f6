// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#include <dualledger/format.hpp>
#include <dualledger/validators.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace dualledger {

std::vector<std::string_view> split_words(std::string_view line)
{
    std::vector<std::string_view> words;
    size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r'))
            ++k;
        const size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r')
            ++k;
        if (k > start)
            words.push_back(line.substr(start, k - start));
    }
    return words;
}

Natural parse_natural(std::string_view s, size_t line)
{
    Natural n = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc {} || ptr != s.data() + s.size())
        throw parse_error { line, "expected a natural number, got '" + std::string { s } + "'" };
    return n;
}

namespace {
    Chip parse_chip_quantity(std::string_view w, size_t line, Natural &qty)
    {
        const auto a = w.find(':');
        const auto b = a == std::string_view::npos ? a : w.find(':', a + 1);
        if (b == std::string_view::npos)
            throw parse_error { line, "expected cs:tn:qty, got '" + std::string { w } + "'" };
        qty = parse_natural(w.substr(b + 1), line);
        return Chip { parse_natural(w.substr(0, a), line), parse_natural(w.substr(a + 1, b - a - 1), line) };
    }

    size_t param_count(ValidatorKind k)
    {
        switch (k) {
            case ValidatorKind::pay_to_pub_key: return 1;
            case ValidatorKind::state_machine: return 5;
            default: return 0;
        }
    }

    struct pending_tx {
        std::vector<Input> ins;
        std::vector<Output> outs;
        std::optional<SlotRange> range;
        std::optional<Natural> slot;
        size_t line;
    };
}

Chain parse_chain(std::string_view text)
{
    std::vector<pending_tx> txs;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        const auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        const auto hash = line.find('#');
        const auto w = split_words(hash == std::string_view::npos ? line : line.substr(0, hash));
        if (w.empty())
            continue;
        if (w[0] == "TX") {
            if (w.size() < 2 || parse_natural(w[1], line_no) != txs.size())
                throw parse_error { line_no, "TX index must count up from 0" };
            pending_tx t { {}, {}, {}, {}, line_no };
            for (size_t k = 2; k < w.size();) {
                if (w[k] == "SLOT" && k + 1 < w.size()) {
                    t.slot = parse_natural(w[k + 1], line_no);
                    k += 2;
                } else if (w[k] == "RANGE" && k + 2 < w.size()) {
                    const Natural lo = parse_natural(w[k + 1], line_no);
                    std::optional<Natural> hi;
                    if (w[k + 2] != "*")
                        hi = parse_natural(w[k + 2], line_no);
                    if (hi && *hi < lo)
                        throw parse_error { line_no, "RANGE upper bound below lower bound" };
                    t.range = SlotRange { lo, hi };
                    k += 3;
                } else {
                    throw parse_error { line_no, "unexpected '" + std::string { w[k] } + "' in TX record" };
                }
            }
            txs.push_back(std::move(t));
        } else if (w[0] == "IN") {
            if (txs.empty())
                throw parse_error { line_no, "IN before any TX" };
            if (w.size() != 3)
                throw parse_error { line_no, "IN takes a position and a redeemer" };
            txs.back().ins.push_back(Input { Position { parse_natural(w[1], line_no) },
                                             Redeemer { parse_natural(w[2], line_no) } });
        } else if (w[0] == "OUT") {
            if (txs.empty())
                throw parse_error { line_no, "OUT before any TX" };
            if (w.size() < 4)
                throw parse_error { line_no, "OUT needs a position, a validator and a datum" };
            Output o;
            o.position = Position { parse_natural(w[1], line_no) };
            const auto kind = kind_from_name(w[2]);
            if (!kind)
                throw parse_error { line_no, "unknown validator kind '" + std::string { w[2] } + "'" };
            const size_t np = param_count(*kind);
            if (w.size() < 4 + np)
                throw parse_error { line_no, "missing validator parameters" };
            std::vector<Natural> ps;
            for (size_t k = 0; k < np; ++k)
                ps.push_back(parse_natural(w[3 + k], line_no));
            switch (*kind) {
                case ValidatorKind::accept_all: o.validator = ValidatorRef::accept_all(); break;
                case ValidatorKind::reject_all: o.validator = ValidatorRef::reject_all(); break;
                case ValidatorKind::pay_to_pub_key: o.validator = ValidatorRef::pay_to_pub_key(KeyId { ps[0] }); break;
                case ValidatorKind::state_machine:
                    o.validator = ValidatorRef::state_machine(
                        TokenConfig { KeyId { ps[0] }, Chip { ps[1], ps[2] }, Chip { ps[3], ps[4] } });
                    break;
            }
            o.datum = Datum { parse_natural(w[3 + np], line_no) };
            for (size_t k = 4 + np; k < w.size(); ++k) {
                Natural qty = 0;
                const Chip c = parse_chip_quantity(w[k], line_no, qty);
                if (qty == 0)
                    throw parse_error { line_no, "zero quantity in value" };
                if (o.value.get(c) != 0)
                    throw parse_error { line_no, "chip listed twice in value" };
                o.value = o.value.plus(Value::singleton(c, qty));
            }
            txs.back().outs.push_back(std::move(o));
        } else {
            throw parse_error { line_no, "unknown record '" + std::string { w[0] } + "'" };
        }
    }

    const bool slotted = !txs.empty() && txs.front().slot.has_value();
    std::vector<Transaction> out;
    std::vector<Natural> slots;
    for (auto &t: txs) {
        if (t.slot.has_value() != slotted)
            throw parse_error { t.line, "either every TX has a SLOT or none does" };
        if (slotted) {
            if (!slots.empty() && *t.slot < slots.back())
                throw parse_error { t.line, "slots must be nondecreasing" };
            slots.push_back(*t.slot);
        }
        try {
            out.emplace_back(std::move(t.ins), std::move(t.outs), t.range);
        } catch (const error &e) {
            throw parse_error { t.line, e.what() };
        }
    }
    if (slotted)
        return Chain { std::move(out), std::move(slots) };
    return Chain { std::move(out) };
}

std::string print_value(const Value &v)
{
    std::string s;
    for (const auto &[c, n]: v.entries()) {
        if (!s.empty())
            s += ' ';
        s += std::to_string(c.currency_symbol) + ':' + std::to_string(c.token_name) + ':' + std::to_string(n);
    }
    return s;
}

std::string print_output(const Output &o)
{
    std::ostringstream os;
    os << "OUT " << o.position.id << ' ' << kind_name(o.validator.kind);
    if (o.validator.kind == ValidatorKind::pay_to_pub_key)
        os << ' ' << o.validator.key.id;
    if (o.validator.kind == ValidatorKind::state_machine) {
        const auto &c = o.validator.config;
        os << ' ' << c.issuer.id << ' ' << c.traded_chip.currency_symbol << ' ' << c.traded_chip.token_name
           << ' ' << c.state_chip.currency_symbol << ' ' << c.state_chip.token_name;
    }
    os << ' ' << o.datum.value;
    if (!o.value.empty())
        os << ' ' << print_value(o.value);
    return os.str();
}

std::string print_chain(const Chain &chain)
{
    std::ostringstream os;
    for (size_t k = 0; k < chain.size(); ++k) {
        const auto &tx = chain[k];
        os << "TX " << k;
        if (chain.has_slots())
            os << " SLOT " << (*chain.slots())[k];
        if (const auto &r = tx.slot_range()) {
            os << " RANGE " << r->lo << ' ';
            if (r->hi)
                os << *r->hi;
            else
                os << '*';
        }
        os << '\n';
        for (const auto &i: tx.inputs())
            os << "IN " << i.position.id << ' ' << i.redeemer.value << '\n';
        for (const auto &o: tx.outputs())
            os << print_output(o) << '\n';
    }
    return os.str();
}

std::string read_file(const std::string &path)
{
    std::ifstream in { path, std::ios::binary };
    if (!in)
        throw error { "cannot open " + path };
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Chain load_chain_file(const std::string &path)
{
    return parse_chain(read_file(path));
}

std::string fnv1a_hex(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c: data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static constexpr char digits[] = "0123456789abcdef";
    std::string s(16, '0');
    for (int k = 15; k >= 0; --k, h >>= 4)
        s[static_cast<size_t>(k)] = digits[h & 0xf];
    return s;
}

}
