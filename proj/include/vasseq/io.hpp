#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vasseq/reduction.hpp"
#include "vasseq/twocm.hpp"
#include "vasseq/vass.hpp"

namespace vasseq
{

// Two-counter machine text format:
//
//   # comment
//   2cm <initial> <final>
//   <source> <op> <target>      (op in inc_1 inc_2 dec_1 dec_2 z_1 z_2)
//
// Blank lines are ignored and '#' starts a comment anywhere on a line.

/// A machine as read from text, with the line of every transition.
struct CmDocument
{
    CounterMachine machine;
    std::size_t header_line = 0;
    std::vector<std::size_t> transition_lines;
};

/// Syntax only; throws SyntaxError.
CmDocument read_cm(std::string_view text);

/// Violations of `doc.machine`, each prefixed with the line it concerns.
std::vector<std::string> describe_violations(const CmDocument& doc);

/// read_cm followed by validation; throws SyntaxError or InvalidMachine
/// (whose problems carry line numbers).
CounterMachine parse_cm(std::string_view text);

/// Canonical text: header, then one transition per line, no comments.
std::string print_cm(const CounterMachine& m);

// VASS document format: a JSON object with the fields dimension, alphabet,
// states, transitions, initial and finals, in that order. print_vass writes
// the canonical layout (one transition or final configuration per line), and
// parse_vass(print_vass(v)) == v.

/// Throws SyntaxError on malformed text and InvariantViolation when the
/// document describes an ill-formed VASS.
Vass parse_vass(std::string_view text);
std::string print_vass(const Vass& v);

/// Graphviz rendering. Nodes are states; tagged states of a reduction are
/// styled (gadget, split and halt states). Edges read "letter / effect".
std::string export_dot(const Vass& v, const std::map<std::string, StateTag>* tags = nullptr);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace vasseq
