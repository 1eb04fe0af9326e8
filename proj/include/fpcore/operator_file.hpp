#pragma once

#include "fpcore/finite_potent.hpp"

#include <string>
#include <string_view>

namespace fpcore {

/// JSON operator description:
///
///   {"name": "A", "field": "rational" | "gaussian",
///    "ambient": {"kind": "finite", "dim": n} | {"kind": "countable", "support": m},
///    "entries": [[row, col, scalar], ...]}
///
/// Indices are 1-based and omitted entries are zero. A rational scalar is an
/// integer or a "p/q" string; a Gaussian one is {"re": ..., "im": ...}.
struct OperatorFile {
    std::string name;
    Operator op;
};

/// Throws ParseError. Syntax errors mention line and column, semantic errors
/// the JSON pointer of the offending value.
OperatorFile parse_operator_file(std::string_view text);
OperatorFile load_operator_file(const std::string& path);

/// Canonical text: entries in row-major order, zeros omitted, trailing newline.
std::string format_operator_file(const Operator& op, const std::string& name = "");

}  // namespace fpcore
