#include "acomp/tables.hpp"

#include "acomp/error.hpp"
#include "acomp/rule.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace acomp {

namespace {

// Atlas of inflation-rule classes: six tables, 66 rows. The rank and OSD
// columns are external reference values carried through verbatim.
const char* kBuiltinFixture = R"(# table|nr|representative|rank|osd|ac_left|ac_right|perm
# Table 1: variations of powers of the golden-ratio rule
1|1|[ab,a]|2|1.0000|[1,2]|[1,2]|(1,2)
1|2|[aaabb,aab]|2|4.1842|[1,3]|[2,4]|(2,4)
1|3|[abbaa,aab]|2|10.4419|[3,4]|[1,2]|(3,4)
1|4|[abaab,baa]|3|2.5676|[1,2],[3,4]|[1,3],[2,4]|(1,3)(2,4)
1|5|[abbba,aba]|3|4.1842|[1,2],[3,4]|[1,3],[2,4]|(1,4)(2,3)
1|6|[aabab,baa]|3|4.8878|[1,2],[3,4]|[1,3],[2,4]|(1,3)(2,4)
1|7|[aab,ba]|3|11.8744|[1,2],[3,4]|[1,3],[2,4]|(1,3)(2,4)
1|8|[aaabb,baa]|3|22.6225|[1,2],[3,4]|[1,3],[2,4]|(1,3)(2,4)
# Table 2: powers of the plastic number (x^3-x-1)
2|1|[ab,cb,a]|3|2.2229|[2,8],[3,4]|[1,7],[5,6]|(1,5,7,6)(2,3,8,4)
2|2|[aac,a,bc]|3|4.4260|[1,4]|[2,5],[3,6]|(2,6,5,3)
2|3|[acb,ab,bc]|3|5.9468|[3,4],[5,6]|[1,2]|(3,6,4,5)
2|4|[bac,ab,cb]|3|21.4521|[1,2,3]|[4,7],[5,6]|(1,2)(4,5,7,6)
2|5|[acb,ba,bca]|4|14.6784|[2,3],[4,5]|[1,3,5],[2,4]|(2,4)(3,5)
2|6|[caa,a,bc]|5|17.5023|[1,2,3],[4,5,6]|[1,4],[2,5],[3,6]|(1,3,2)(4,6,5)
2|7|[bc,a,b]|5|37.3375|[1,2],[3,4],[5,6]|[1,3,5],[2,4,6]|(1,3,5)(2,4,6)
2|8|[cba,ab,bc]|7|19.8019|[1,2,3],[4,5,6],[7,8,9]|[1,4,7],[2,5,8],[3,6,9]|(1,3,2)(4,6,5)(7,9,8)
# Table 3: Tribonacci factor (x^3-x^2-x-1)
3|1|[ab,ac,a]|3|2.2060|[4,5,6]|[1,2,3]|(1,2,3)(4,6,5)
3|2|[ab,ca,a]|3|9.6109|[3,6],[4,5]|[1,2]|(1,2)(3,5,6,4)
3|3|[bac,a,b]|5|5.5585|[1,2],[3,4],[5,6]|[1,3,5],[2,4,6]|(1,4,5,2,3,6)
3|4|[bbc,cb,a]|7|21.2133|[1,2,3],[4,5,6],[7,8,9]|[1,4,7],[2,5,8],[3,6,9]|(1,5,3,4,2,6)(7,8,9)
3|5|[acc,ca,b]|7|27.9209|[1,2,3],[4,5,6],[7,8,9]|[1,4,7],[2,5,8],[3,6,9]|(1,4,7)(2,6,8,3,5,9)
# Table 4: powers of the second-smallest ternary Pisot unit (x^3-x^2-1)
4|1|[ac,a,b]|3|3.7829|[4,7],[5,6]|[1,2,3]|(1,2,3)(4,5,7,6)
4|2|[bcc,ac,cb]|3|8.7737|[1,2],[3,4]|[2,4]|(1,3)(2,4)
4|3|[ccbbc,a,cb]|3|12.8251|[4,5],[6,7]|[1,2,3]|(1,3,2)(4,6,5,7)
4|4|[bcc,ca,cb]|3|15.5091|[4,5],[6,7]|[1,2,3]|(1,2,3)(4,6)(5,7)
4|5|[abc,ca,a]|3|27.6619|[3,4],[5,6]|[1,2]|(1,2)(3,6,4,5)
4|6|[cccbb,a,cb]|3|65.4734|[3,4],[5,6]|[1,2]|(1,2)(3,5,4,6)
4|7|[bac,ac,a]|4|3.7829|[1,2],[3,4]|[1,3],[2,4]|(1,4)(2,3)
4|8|[cab,ac,a]|5|12.2329|[1,2],[3,4],[5,6]|[1,3,5],[2,4,6]|(1,4,5,2,3,6)
4|9|[accb,ca,b]|5|21.6026|[1,2,3],[4,5,6]|[1,4],[2,5],[3,6]|(1,4)(2,6)(3,5)
4|10|[bbac,a,b]|5|26.5686|[1,2],[3,4],[5,6]|[1,3,5],[2,4,6]|(1,4,5,2,3,6)
4|11|[bacc,ca,b]|5|36.0646|[1,2],[3,4],[5,6]|[1,3,5],[2,4,6]|(1,4,5,2,3,6)
4|12|[cabc,ac,b]|6|7.6330|[1,2,3],[4,5,6]|[1,4],[2,5],[3,6],[7,8]|(1,6,2,4,3,5)(7,8)
4|13|[bccbc,a,cb]|7|24.8793|[1,2,3],[4,5,6],[7,8,9]|[1,4,7],[2,5,8],[3,6,9]|(1,8,4,2,7,5)(3,9,6)
4|14|[acbc,ca,b]|7|27.4558|[1,2,3],[4,5,6],[7,8,9]|[1,4,7],[2,5,8],[3,6,9]|(1,4,7)(2,6,8,3,5,9)
4|15|[bcbcc,a,cb]|7|36.3827|[1,2,3],[4,5,6],[7,8,9]|[1,4,7],[2,5,8],[3,6,9]|(1,8,4,2,7,5)(3,9,6)
4|16|[accc,cca,b]|7|71.8547|[1,2,3],[4,5,6],[7,8,9]|[1,4,7],[2,5,8],[3,6,9]|(1,4,7)(2,6,8,3,5,9)
4|17|[abcc,ca,b]|7|97.2913|[1,2,3],[4,5,6],[7,8,9]|[1,4,7],[2,5,8],[3,6,9]|(1,4,7)(2,6,8,3,5,9)
4|18|[bbccc,a,cb]|7|174.3150|[1,2,3],[4,5,6],[7,8,9]|[1,4,7],[2,5,8],[3,6,9]|(1,8,4,2,7,5)(3,9,6)
# Table 5: Kolakoski-(3,1) factor (x^3-2x^2-1)
5|1|[aca,a,b]|3|2.5534|[2,8],[3,4]|[1,7],[5,6]|(1,5,7,6)(2,3,8,4)
5|2|[aac,a,b]|3|2.5534|[4,7],[5,6]|[1,2,3]|(1,2,3)(4,5,7,6)
5|3|[cabc,a,cb]|3|3.3299|[4,5],[6,7]|[1,2,3]|(1,3,2)(4,6,5,7)
5|4|[abc,cbc,a]|3|7.2657|[3,6],[4,5]|[1,2]|(1,2)(3,4,6,5)
5|5|[abc,ccb,a]|3|8.7747|[4,7],[5,6]|[1,2,3]|(1,2)(4,6,7,5)
5|6|[bcc,ab,cb]|3|9.6121|[1,2,3]|[4,7],[5,6]|(1,2)(4,5,7,6)
5|7|[bac,bcb,a]|3|9.4088|[3,4],[5,6]|[1,2]|(1,2)(3,6,4,5)
5|8|[acb,ba,b]|4|27.2585|[1,2],[3,4]|[1,3],[2,4]|(1,3)(2,4)
5|9|[bac,cba,a]|5|13.8073|[1,2,3],[4,5,6]|[1,4],[2,5],[3,6],[7,8]|(1,5,3,4,2,6)
5|10|[abc,ba,b]|5|17.9987|[1,2],[3,4],[5,6]|[1,3,5],[2,4,6]|(1,3,5)(2,4,6)
5|11|[acb,bcc,a]|5|18.8489|[1,2],[3,4],[5,6]|[1,3,5],[2,4,6]|(1,3,5)(2,4,6)
5|12|[bcc,ba,cb]|5|19.9170|[1,2],[3,4],[5,6]|[1,3,5],[2,4,6]|(1,5,3)(2,6,4)
5|13|[bcac,a,cb]|7|11.4483|[1,2,3],[4,5,6],[7,8,9]|[1,4,7],[2,5,8],[3,6,9]|(1,8,4,2,7,5)(3,9,6)
5|14|[bac,ccb,a]|7|44.8306|[1,2,3],[4,5,6],[7,8,9]|[1,4,7],[2,5,8],[3,6,9]|(1,5,3,4,2,6)(7,8,9)
5|15|[bacc,a,cb]|7|60.9140|[1,2,3],[4,5,6],[7,8,9]|[1,4,7],[2,5,8],[3,6,9]|(1,8,4,2,7,5)(3,9,6)
# Table 6: smallest ternary Pisot unit with all-real conjugates (x^3-2x^2-x+1)
6|1|[aac,ac,b]|3|3.6679|[1,4],[2,5]|[1,2,3]|(1,2)(4,5)
6|2|[bac,ca,bc]|3|9.8655|[1,2,4]|[3,7],[5,6]|(1,2)(3,5,7,6)
6|3|[bac,ca,cb]|3|11.5683|[4,5],[6,7]|[1,2,3]|(1,2,3)(4,6)(5,7)
6|4|[bbac,a,bc]|3|14.2701|[1,2]|[3,5],[4,6]|(1,2)(3,4,5,6)
6|5|[abc,ba,a]|4|5.3822|[1,2],[3,4]|[1,3],[2,4]|(1,3)(2,4)
6|6|[abc,ac,cb]|4|12.9699|[1,2],[3,4]|[1,3],[2,4],[5,6]|(1,3)(2,4)(5,6)
6|7|[acb,ca,bc]|5|5.1217|[1,2,3],[4,5],[6,7]|[2,4,6],[3,5,7]|(2,3)(4,7)(5,6)
6|8|[bbc,ba,cb]|5|10.2679|[1,2],[3,4],[5,6],[7,8]|[1,3,5],[2,4,6]|(1,5,3)(2,6,4)(7,8)
6|9|[abc,ca,cb]|5|12.3481|[1,2],[3,4],[5,6]|[1,3,5],[2,4,6]|(1,3,5)(2,4,6)
6|10|[aac,ca,b]|7|8.7780|[1,2,3],[4,5,6],[7,8,9]|[1,4,7],[2,5,8],[3,6,9]|(1,8,4,2,7,5)(3,9,6)
6|11|[bbac,a,cb]|7|10.2377|[1,2,3],[4,5,6],[7,8,9]|[1,4,7],[2,5,8],[3,6,9]|(1,4,7)(2,6,8,3,5,9)
6|12|[babc,a,cb]|7|50.1704|[1,2,3],[4,5,6],[7,8,9]|[1,4,7],[2,5,8],[3,6,9]|(1,8,4,2,7,5)(3,9,6)
)";

std::vector<int> parse_int_list(const std::string& s, char open, char close,
                                const std::string& context) {
    std::vector<int> out;
    size_t i = 0;
    if (i >= s.size() || s[i] != open)
        throw Error(ErrorKind::FixtureError, "expected '" + std::string(1, open) + "' in " + context);
    ++i;
    while (i < s.size() && s[i] != close) {
        size_t j = i;
        while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw Error(ErrorKind::FixtureError, "expected index in " + context);
        out.push_back(std::stoi(s.substr(i, j - i)));
        i = j;
        if (i < s.size() && s[i] == ',') ++i;
    }
    if (i >= s.size()) throw Error(ErrorKind::FixtureError, "unterminated list in " + context);
    return out;
}

} // namespace

const std::string& builtin_fixture_text() {
    static const std::string text = kBuiltinFixture;
    return text;
}

TableFixture parse_fixture(const std::string& text) {
    TableFixture fx;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, '|')) fields.push_back(f);
        if (fields.size() != 8)
            throw Error(ErrorKind::FixtureError,
                        "line " + std::to_string(lineno) + ": expected 8 fields, got " +
                            std::to_string(fields.size()));
        TableRow row;
        try {
            row.table = std::stoi(fields[0]);
            row.nr = std::stoi(fields[1]);
        } catch (const std::exception&) {
            throw Error(ErrorKind::FixtureError,
                        "line " + std::to_string(lineno) + ": bad table/row number");
        }
        row.repr = fields[2];
        row.rank = fields[3];
        row.osd = fields[4];
        row.ac_left = fields[5];
        row.ac_right = fields[6];
        row.perm = fields[7];
        try {
            parse_rule(row.repr);
            row_signature(row); // validates blocks and permutation
        } catch (const Error& e) {
            throw Error(ErrorKind::FixtureError,
                        "line " + std::to_string(lineno) + ": " + e.what());
        }
        fx.rows.push_back(std::move(row));
    }
    return fx;
}

TableFixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open fixture file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fixture(buf.str());
}

std::string table_title(int id) {
    switch (id) {
        case 1: return "variations of powers of the golden-ratio rule";
        case 2: return "powers of the plastic number";
        case 3: return "Tribonacci factor";
        case 4: return "powers of the second-smallest ternary Pisot unit";
        case 5: return "Kolakoski-(3,1) factor";
        case 6: return "smallest ternary Pisot unit with all-real conjugates";
        default: return "table " + std::to_string(id);
    }
}

std::vector<std::vector<int>> parse_blocks(const std::string& text) {
    std::vector<std::vector<int>> out;
    if (text == "-" || text.empty()) return out;
    size_t i = 0;
    while (i < text.size()) {
        size_t close = text.find(']', i);
        if (text[i] != '[' || close == std::string::npos)
            throw Error(ErrorKind::FixtureError, "bad block list: " + text);
        auto block = parse_int_list(text.substr(i, close - i + 1), '[', ']', text);
        if (block.size() < 2)
            throw Error(ErrorKind::FixtureError, "listed blocks must have >= 2 members: " + text);
        for (int& v : block) {
            if (v < 1) throw Error(ErrorKind::FixtureError, "indices are 1-based: " + text);
            --v;
        }
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
        i = close + 1;
        if (i < text.size() && text[i] == ',') ++i;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> parse_perm_cycles(const std::string& text, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    if (text == "-" || text.empty()) return perm;
    std::vector<bool> used(n, false);
    size_t i = 0;
    while (i < text.size()) {
        size_t close = text.find(')', i);
        if (text[i] != '(' || close == std::string::npos)
            throw Error(ErrorKind::FixtureError, "bad cycle list: " + text);
        auto cyc = parse_int_list(text.substr(i, close - i + 1), '(', ')', text);
        for (size_t j = 0; j < cyc.size(); ++j) {
            int from = cyc[j] - 1, to = cyc[(j + 1) % cyc.size()] - 1;
            if (from < 0 || from >= n || to < 0 || to >= n)
                throw Error(ErrorKind::FixtureError, "cycle index out of range: " + text);
            if (used[from])
                throw Error(ErrorKind::FixtureError, "index repeated in cycles: " + text);
            used[from] = true;
            perm[from] = to;
        }
        i = close + 1;
    }
    return perm;
}

AsymptoticSignature row_signature(const TableRow& row) {
    auto left = parse_blocks(row.ac_left);
    auto right = parse_blocks(row.ac_right);
    int n = 0;
    for (const auto& blocks : {left, right})
        for (const auto& b : blocks)
            for (int i : b) n = std::max(n, i + 1);
    // the permutation may reach beyond the listed blocks
    for (size_t pos = 0; pos < row.perm.size();) {
        if (isdigit(static_cast<unsigned char>(row.perm[pos]))) {
            size_t end = pos;
            while (end < row.perm.size() && isdigit(static_cast<unsigned char>(row.perm[end])))
                ++end;
            n = std::max(n, std::stoi(row.perm.substr(pos, end - pos)));
            pos = end;
        } else {
            ++pos;
        }
    }

    AsymptoticSignature sig;
    sig.n = n;
    sig.perm = parse_perm_cycles(row.perm, n);
    auto complete = [n](std::vector<std::vector<int>> blocks) {
        std::vector<bool> covered(n, false);
        for (const auto& b : blocks)
            for (int i : b) covered[i] = true;
        for (int i = 0; i < n; ++i)
            if (!covered[i]) blocks.push_back({i});
        std::sort(blocks.begin(), blocks.end());
        return blocks;
    };
    sig.left_partition = complete(std::move(left));
    sig.right_partition = complete(std::move(right));
    {
        std::vector<bool> seen(n, false);
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            std::vector<int> orb;
            int j = i;
            while (!seen[j]) {
                seen[j] = true;
                orb.push_back(j);
                j = sig.perm[j];
            }
            std::sort(orb.begin(), orb.end());
            sig.orbits.push_back(std::move(orb));
        }
        std::sort(sig.orbits.begin(), sig.orbits.end());
    }
    return sig;
}

} // namespace acomp
