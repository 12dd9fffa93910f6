// dual-ledger: UTxO and account ledger semantics side by side
// Copyright 2026 The dual-ledger Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <string>
#include <string_view>

#include <dualledger/ledger.hpp>

namespace dualledger {

struct parse_error : error {
    parse_error(size_t line, const std::string &what):
        error { "line " + std::to_string(line) + ": " + what }, line_no { line }
    {
    }

    size_t line_no;
};

/*
 * Chain files are line oriented; blank lines and '#' comments are ignored.
 *
 *   TX <index> [SLOT <n>] [RANGE <lo> <hi>|*]
 *   IN <position> <redeemer>
 *   OUT <position> <validator-kind> <params...> <datum> <cs:tn:qty>...
 *
 * Validator kinds and their parameters:
 *   AcceptAll | RejectAll | PayToPubKey <key>
 *   StateMachine <issuer> <traded-cs> <traded-tn> <state-cs> <state-tn>
 *
 * Indices run 0,1,2,... in file order. Either every TX carries SLOT or none does.
 */
Chain parse_chain(std::string_view text);
std::string print_chain(const Chain &chain);
std::string print_output(const Output &o);
std::string print_value(const Value &v);

Chain load_chain_file(const std::string &path);
std::string read_file(const std::string &path);

/// 64-bit FNV-1a, hex encoded; a stable digest for reports, not a cryptographic hash.
std::string fnv1a_hex(std::string_view data);

std::vector<std::string_view> split_words(std::string_view line);
Natural parse_natural(std::string_view s, size_t line);

}
