#pragma once

#include "acomp/composants.hpp"

#include <string>
#include <vector>

namespace acomp {

/// One row of the bundled atlas: representative rule plus the published
/// invariant columns. rank and osd are carried verbatim as opaque text
/// (they come from external computations and are never recomputed here).
struct TableRow {
    int table = 0;
    int nr = 0;
    std::string repr;
    std::string rank;
    std::string osd;
    std::string ac_left;
    std::string ac_right;
    std::string perm;
};

struct TableFixture {
    std::vector<TableRow> rows;
};

/// The bundled six-table atlas (66 rows) in the text fixture format:
/// one row per line, fields table|nr|repr|rank|osd|ac_left|ac_right|perm,
/// '#' comments.
const std::string& builtin_fixture_text();

TableFixture parse_fixture(const std::string& text);
TableFixture load_fixture(const std::string& path);

std::string table_title(int id);

/// "[1,2],[3,4]" (1-based) -> sorted 0-based blocks; "-" -> none.
std::vector<std::vector<int>> parse_blocks(const std::string& text);

/// "(1,2)(3,4)" (1-based) -> permutation vector on 0..n-1.
std::vector<int> parse_perm_cycles(const std::string& text, int n);

/// The row's published invariant columns as a bare signature: n inferred
/// from the largest index in the row, partitions completed with
/// singletons. points/pd are left empty.
AsymptoticSignature row_signature(const TableRow& row);

} // namespace acomp
