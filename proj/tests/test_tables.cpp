#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acomp/error.hpp"
#include "acomp/invariants.hpp"
#include "acomp/oracle.hpp"
#include "acomp/tables.hpp"

#include <map>
#include <set>

using namespace acomp;

namespace {
const TableFixture& fixture() {
    static TableFixture fx = parse_fixture(builtin_fixture_text());
    return fx;
}

const TableRow& row(int table, int nr) {
    for (const auto& r : fixture().rows)
        if (r.table == table && r.nr == nr) return r;
    REQUIRE(false);
    static TableRow dummy;
    return dummy;
}
}

TEST_CASE("builtin fixture parses with the expected shape") {
    const auto& fx = fixture();
    CHECK(fx.rows.size() == 66);
    std::map<int, int> per_table;
    for (const auto& r : fx.rows) ++per_table[r.table];
    CHECK(per_table == std::map<int, int>{{1, 8}, {2, 8}, {3, 5}, {4, 18}, {5, 15}, {6, 12}});
    for (int t = 1; t <= 6; ++t) CHECK(!table_title(t).empty());
}

TEST_CASE("blocks and cycles parsing") {
    CHECK(parse_blocks("[1,2],[3,4]") ==
          std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK(parse_blocks("-").empty());
    CHECK_THROWS_AS(parse_blocks("[1]"), Error); // blocks need two members

    CHECK(parse_perm_cycles("(1,2)(3,4)", 4) == std::vector<int>{1, 0, 3, 2});
    CHECK(parse_perm_cycles("(2,4)", 4) == std::vector<int>{0, 3, 2, 1});
    CHECK_THROWS_AS(parse_perm_cycles("(1,2)(2,3)", 3), Error); // repeated index
}

TEST_CASE("row signatures carry the printed data") {
    auto s = row_signature(row(2, 7));
    CHECK(s.n == 6);
    CHECK(s.left_partition == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}});
    CHECK(s.right_partition == std::vector<std::vector<int>>{{0, 2, 4}, {1, 3, 5}});
    CHECK(s.perm == std::vector<int>{2, 3, 4, 5, 0, 1});

    auto g = row_signature(row(1, 1));
    CHECK(g.n == 2);
    CHECK(g.perm == std::vector<int>{1, 0});

    // singleton completion: indices outside the printed blocks still count
    auto s2 = row_signature(row(1, 2)); // blocks [1,3] and [2,4], perm (2,4)
    CHECK(s2.n == 4);
    CHECK(s2.left_partition == std::vector<std::vector<int>>{{0, 2}, {1}, {3}});
    CHECK(s2.perm == std::vector<int>{0, 3, 2, 1});
}

TEST_CASE("every representative parses as a rule") {
    for (const auto& r : fixture().rows) CHECK_NOTHROW(parse_rule(r.repr));
}

TEST_CASE("rows that do not reproduce are exactly the flagged set") {
    std::set<std::pair<int, int>> flagged;
    for (const auto& r : fixture().rows) {
        try {
            AsymptoticSignature sig = signature(parse_rule(r.repr));
            if (isomorphic_strong(sig, row_signature(r)).obstructed) flagged.insert({r.table, r.nr});
        } catch (const Error&) {
            flagged.insert({r.table, r.nr});
        }
    }
    CHECK(flagged == std::set<std::pair<int, int>>{{1, 5}, {2, 5}, {2, 7}, {5, 7}, {5, 9}});
}

TEST_CASE("flagged representatives with composite spectra carry exact factor certificates") {
    for (auto [t, nr] : {std::pair{1, 5}, {2, 5}, {5, 7}, {5, 9}}) {
        auto cp = count_matrix(parse_rule(row(t, nr).repr)).char_poly();
        auto f = cp.find_rational_factor();
        REQUIRE(f.has_value());
        CHECK(cp.divide_exact(*f).has_value());
    }
}

TEST_CASE("the half-line oracle confirms the recomputed six-cycle row") {
    auto rule = parse_rule(row(2, 7).repr); // printed permutation disagrees
    AsymptoticSignature sig = signature(rule);
    CHECK(isomorphic_strong(sig, row_signature(row(2, 7))).obstructed);
    OracleResult orc = oracle_check(rule, sig);
    CHECK(orc.matches(sig));
    CHECK(canonicalize(sig).encoding == "n=6|L={1,2}{3,4}{5,6}|R={1,3,5}{2,4,6}|P=(1,4,5,2,3,6)");
}

TEST_CASE("fixture error reporting") {
    CHECK_THROWS_AS(parse_fixture("1|1|[ab,a]|2|1.0|[1,2]|[1,2]"), Error); // missing field
    CHECK_THROWS_AS(parse_fixture("1|x|[ab,a]|2|1.0|[1,2]|[1,2]|(1,2)"), Error);
    CHECK_THROWS_AS(parse_fixture("1|1|[ab|2|1.0|[1,2]|[1,2]|(1,2)"), Error);
    CHECK_NOTHROW(parse_fixture("# comment only\n\n1|1|[ab,a]|2|1.0|[1,2]|[1,2]|(1,2)\n"));
    CHECK_THROWS_AS(load_fixture("/nonexistent/fixture.txt"), Error);
    try {
        load_fixture("/nonexistent/fixture.txt");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IoError);
    }
}
