// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#include <dualledger/ledger.hpp>
#include <dualledger/validators.hpp>

#include <algorithm>

namespace dualledger {

Chain::Chain(std::vector<Transaction> txs): txs_ { std::move(txs) }
{
}

Chain::Chain(std::vector<Transaction> txs, std::vector<Natural> slots):
    txs_ { std::move(txs) }, slots_ { std::move(slots) }
{
    if (slots_->size() != txs_.size())
        throw error { "chain needs exactly one slot per transaction" };
    if (!std::is_sorted(slots_->begin(), slots_->end()))
        throw error { "chain slots must be nondecreasing" };
}

std::optional<Natural> Chain::last_slot() const
{
    if (!slots_ || slots_->empty())
        return {};
    return slots_->back();
}

Chain Chain::prefix(size_t n) const
{
    n = std::min(n, txs_.size());
    std::vector<Transaction> txs(txs_.begin(), txs_.begin() + n);
    if (slots_)
        return Chain { std::move(txs), std::vector<Natural>(slots_->begin(), slots_->begin() + n) };
    return Chain { std::move(txs) };
}

Chain Chain::suffix(size_t from) const
{
    from = std::min(from, txs_.size());
    std::vector<Transaction> txs(txs_.begin() + from, txs_.end());
    if (slots_)
        return Chain { std::move(txs), std::vector<Natural>(slots_->begin() + from, slots_->end()) };
    return Chain { std::move(txs) };
}

Chain Chain::then(const Transaction &tx, std::optional<Natural> slot) const
{
    auto txs = txs_;
    txs.push_back(tx);
    if (slots_ || (txs_.empty() && slot)) {
        if (!slot)
            throw error { "slotted chain extended without a slot" };
        auto slots = slots_.value_or(std::vector<Natural> {});
        slots.push_back(*slot);
        return Chain { std::move(txs), std::move(slots) };
    }
    if (slot)
        throw error { "slot given for a chain without slots" };
    return Chain { std::move(txs) };
}

Chain Chain::then(const Chain &more) const
{
    if (more.empty())
        return *this;
    if (empty())
        return more;
    if (has_slots() != more.has_slots())
        throw error { "cannot concatenate slotted and unslotted chains" };
    auto txs = txs_;
    txs.insert(txs.end(), more.txs_.begin(), more.txs_.end());
    if (slots_) {
        auto slots = *slots_;
        slots.insert(slots.end(), more.slots_->begin(), more.slots_->end());
        return Chain { std::move(txs), std::move(slots) };
    }
    return Chain { std::move(txs) };
}

Chain Chain::without(size_t k) const
{
    auto txs = txs_;
    txs.erase(txs.begin() + static_cast<std::ptrdiff_t>(k));
    if (slots_) {
        auto slots = *slots_;
        slots.erase(slots.begin() + static_cast<std::ptrdiff_t>(k));
        return Chain { std::move(txs), std::move(slots) };
    }
    return Chain { std::move(txs) };
}

std::string_view violation_name(ViolationKind k)
{
    switch (k) {
        case ViolationKind::duplicate_position: return "duplicate-position";
        case ViolationKind::dangling_or_forward_input: return "dangling-or-forward-input";
        case ViolationKind::validator_rejected: return "validator-rejected";
        case ViolationKind::slot_out_of_range: return "slot-out-of-range";
        case ViolationKind::policy_rejected: return "policy-rejected";
    }
    return "?";
}

std::string_view class_name(ChainClass c)
{
    switch (c) {
        case ChainClass::blockchain: return "blockchain";
        case ChainClass::chunk: return "chunk";
        case ChainClass::neither: return "neither";
    }
    return "?";
}

namespace {
    enum class scan_mode { blockchain, chunk };

    std::string pos_text(Position p)
    {
        return std::to_string(p.id);
    }

    // Walks a sequence left to right, checking each transaction against the
    // outputs registered by its predecessors.
    class scanner {
    public:
        explicit scanner(scan_mode mode, const std::map<Position, size_t> *last_output_at = nullptr):
            mode_ { mode }, last_output_at_ { last_output_at }
        {
        }

        void step(const Transaction &tx, size_t k, std::optional<Natural> slot, std::vector<Violation> &out)
        {
            if (slot && tx.slot_range() && !tx.slot_range()->contains(*slot))
                out.push_back({ k, ViolationKind::slot_out_of_range,
                                "slot " + std::to_string(*slot) + " outside the transaction's range" });
            for (const auto &i: tx.inputs())
                check_input(tx, i, k, out);
            for (const auto &o: tx.outputs()) {
                auto [it, inserted] = seen_.try_emplace(o.position, entry { k, &o });
                if (!inserted) {
                    it->second.ambiguous = true;
                    out.push_back({ k, ViolationKind::duplicate_position,
                                    "output position " + pos_text(o.position) + " already used by transaction "
                                    + std::to_string(it->second.tx_index) });
                }
            }
        }

    private:
        struct entry {
            size_t tx_index;
            const Output *output;
            bool spent = false;
            bool ambiguous = false;
        };

        bool points_forward(const Transaction &tx, Position p, size_t k) const
        {
            const auto own = std::find_if(tx.outputs().begin(), tx.outputs().end(),
                                          [&](const Output &o) { return o.position == p; });
            if (own != tx.outputs().end())
                return true;
            if (!last_output_at_)
                return false;
            const auto it = last_output_at_->find(p);
            return it != last_output_at_->end() && it->second >= k;
        }

        void check_input(const Transaction &tx, const Input &i, size_t k, std::vector<Violation> &out)
        {
            const auto it = seen_.find(i.position);
            if (it == seen_.end()) {
                if (points_forward(tx, i.position, k)) {
                    out.push_back({ k, ViolationKind::dangling_or_forward_input,
                                    "input " + pos_text(i.position) + " points forward" });
                } else if (mode_ == scan_mode::blockchain) {
                    out.push_back({ k, ViolationKind::dangling_or_forward_input,
                                    "input " + pos_text(i.position) + " dangles" });
                } else if (!dangling_.insert(i.position).second) {
                    out.push_back({ k, ViolationKind::duplicate_position,
                                    "input position " + pos_text(i.position) + " used twice" });
                }
                return;
            }
            auto &e = it->second;
            if (e.ambiguous) {
                out.push_back({ k, ViolationKind::dangling_or_forward_input,
                                "input " + pos_text(i.position) + " points to more than one output" });
                return;
            }
            if (e.spent) {
                out.push_back({ k, ViolationKind::dangling_or_forward_input,
                                "input " + pos_text(i.position) + " points to an already spent output" });
                return;
            }
            e.spent = true;
            const Output &o = *e.output;
            if (!run_validator(o.validator, i.redeemer, o.datum, o.value, context_at(tx, i)))
                out.push_back({ k, ViolationKind::validator_rejected,
                                "validator of output " + pos_text(o.position) + " rejects input" });
        }

        scan_mode mode_;
        const std::map<Position, size_t> *last_output_at_;
        std::map<Position, entry> seen_;
        std::set<Position> dangling_;
    };

    std::map<Position, size_t> last_output_index(const Chain &chain)
    {
        std::map<Position, size_t> last;
        for (size_t k = 0; k < chain.size(); ++k)
            for (const auto &o: chain[k].outputs())
                last[o.position] = k;
        return last;
    }

    std::vector<Violation> scan(const Chain &chain, scan_mode mode)
    {
        const auto last = last_output_index(chain);
        scanner sc { mode, &last };
        std::vector<Violation> out;
        for (size_t k = 0; k < chain.size(); ++k) {
            std::optional<Natural> slot;
            if (chain.has_slots())
                slot = (*chain.slots())[k];
            sc.step(chain[k], k, slot, out);
        }
        return out;
    }
}

std::optional<Output> resolve_input(const Chain &chain, const Input &i, size_t upto)
{
    if (upto > chain.size())
        throw error { "resolve_input: upto exceeds chain length" };
    std::optional<Output> found;
    for (size_t k = 0; k < upto; ++k) {
        for (const auto &o: chain[k].outputs()) {
            if (o.position != i.position)
                continue;
            if (found)
                throw error { "position " + std::to_string(i.position.id) + " carried by more than one output" };
            found = o;
        }
    }
    return found;
}

ValidationReport validate_chain(const Chain &chain)
{
    return ValidationReport { scan(chain, scan_mode::blockchain) };
}

bool is_valid(const Chain &chain)
{
    return validate_chain(chain).valid();
}

std::variant<Chain, ValidationReport> append(const Chain &chain, const Transaction &tx,
                                             std::optional<Natural> slot, const AppendHook &hook)
{
    const size_t k = chain.size();
    auto reject = [k](ViolationKind kind, std::string detail) {
        return ValidationReport { { Violation { k, kind, std::move(detail) } } };
    };
    if (chain.has_slots() && !slot)
        return reject(ViolationKind::slot_out_of_range, "slotted chain needs a slot for every transaction");
    if (!chain.has_slots() && !chain.empty() && slot)
        return reject(ViolationKind::slot_out_of_range, "chain carries no slots");
    if (slot && chain.last_slot() && *slot < *chain.last_slot())
        return reject(ViolationKind::slot_out_of_range, "slot " + std::to_string(*slot) + " precedes the chain's last slot");

    scanner sc { scan_mode::blockchain };
    std::vector<Violation> scratch;
    for (size_t j = 0; j < k; ++j)
        sc.step(chain[j], j, {}, scratch);
    std::vector<Violation> found;
    sc.step(tx, k, slot, found);
    if (!found.empty())
        return ValidationReport { { found.front() } };
    if (hook) {
        if (auto why = hook(chain, tx))
            return reject(ViolationKind::policy_rejected, std::move(*why));
    }
    return chain.then(tx, slot);
}

OutputSet utxo(const Chain &chain)
{
    std::map<Position, size_t> last_input_at;
    for (size_t k = 0; k < chain.size(); ++k)
        for (const auto &i: chain[k].inputs())
            last_input_at[i.position] = k;
    OutputSet unspent;
    for (size_t k = 0; k < chain.size(); ++k) {
        for (const auto &o: chain[k].outputs()) {
            const auto it = last_input_at.find(o.position);
            if (it == last_input_at.end() || it->second <= k)
                unspent.insert(o);
        }
    }
    return unspent;
}

ChainClass classify(const Chain &chain)
{
    if (is_valid(chain))
        return ChainClass::blockchain;
    if (scan(chain, scan_mode::chunk).empty())
        return ChainClass::chunk;
    return ChainClass::neither;
}

}
