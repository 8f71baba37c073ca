#include "acomp/oracle.hpp"

#include "acomp/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace acomp {

namespace {

struct Placed {
    char letter;
    FieldElement start;
    FieldElement end;
};

std::vector<Placed> place(const PerronData& pd, const PositionedPatch& patch) {
    std::vector<Placed> out;
    out.reserve(patch.word.size());
    FieldElement pos = patch.left_edge;
    for (char c : patch.word) {
        FieldElement end = pos + pd.length(c);
        out.push_back(Placed{c, pos, end});
        pos = end;
    }
    return out;
}

// tiles meeting the open interval (lo, hi)
std::vector<const Placed*> slice(const std::vector<Placed>& tiles, const FieldElement& lo,
                                 const FieldElement& hi) {
    std::vector<const Placed*> out;
    for (const auto& t : tiles) {
        if (t.end.compare(lo) != Ordering::Greater) continue;
        if (t.start.compare(hi) != Ordering::Less) break;
        out.push_back(&t);
    }
    return out;
}

bool same_slice(const std::vector<const Placed*>& a, const std::vector<const Placed*>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i]->letter != b[i]->letter || !(a[i]->start == b[i]->start)) return false;
    return true;
}

std::vector<std::vector<int>> partition_from_relation(const std::vector<std::vector<bool>>& rel,
                                                      bool& transitive) {
    const int n = static_cast<int>(rel.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (rel[i][j] && rel[j][k] && !rel[i][k] && i != k) transitive = false;
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> b{i};
        seen[i] = true;
        for (int j = i + 1; j < n; ++j)
            if (rel[i][j] && !seen[j]) {
                b.push_back(j);
                seen[j] = true;
            }
        blocks.push_back(std::move(b));
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

} // namespace

bool OracleResult::matches(const AsymptoticSignature& sig) const {
    return points_distinct && relations_transitive && n == sig.n &&
           left_partition == sig.left_partition && right_partition == sig.right_partition &&
           perm == sig.perm;
}

std::string OracleResult::describe() const {
    std::ostringstream os;
    auto blocks = [&](const std::vector<std::vector<int>>& part) {
        std::string s;
        for (const auto& b : part) {
            if (b.size() < 2) continue;
            s += "[";
            for (size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i] + 1);
            s += "]";
        }
        return s.empty() ? std::string("-") : s;
    };
    os << "n=" << n << " L=" << blocks(left_partition) << " R=" << blocks(right_partition)
       << " perm=";
    for (size_t i = 0; i < perm.size(); ++i) os << (i ? "," : "") << perm[i] + 1;
    if (!points_distinct) os << " [points not distinct]";
    if (!relations_transitive) os << " [relations not transitive]";
    return os.str();
}

OracleResult oracle_check(const InflationRule& rule, const AsymptoticSignature& sig) {
    const PerronData& pd = sig.pd;
    OracleResult res;
    res.n = sig.n;
    if (sig.n == 0) return res;

    FieldElement max_len = pd.lengths[0];
    FieldElement min_len = pd.lengths[0];
    for (const auto& l : pd.lengths) {
        if (l > max_len) max_len = l;
        if (l < min_len) min_len = l;
    }
    FieldElement margin = max_len * mpq_class(2);

    // N: common multiple of all periods, large enough that lambda^N margin
    // spans at least 50 maximal tile lengths
    long long ncm = 1;
    for (const auto& t : sig.points) ncm = std::lcm(ncm, static_cast<long long>(t.period));
    FieldElement lam_n = pd.field->one();
    for (long long i = 0; i < ncm; ++i) lam_n = lam_n * pd.lambda;
    FieldElement factor = lam_n;
    while ((factor * margin).compare(max_len * mpq_class(50)) == Ordering::Less)
        factor = factor * lam_n;
    FieldElement radius = factor * margin;

    // grow every point once; all are fixed under rho^N
    std::vector<std::vector<Placed>> grown;
    grown.reserve(sig.n);
    for (const auto& t : sig.points) grown.push_back(place(pd, grow_tiling(rule, pd, t, radius)));

    // distinctness on the core window
    std::vector<std::vector<const Placed*>> cores;
    for (const auto& g : grown) cores.push_back(slice(g, -min_len, min_len));
    for (int i = 0; i < sig.n; ++i)
        for (int j = i + 1; j < sig.n; ++j)
            if (same_slice(cores[i], cores[j])) res.points_distinct = false;

    // two rho^N-fixed tilings agree on a left half-line iff they agree on
    // (-lambda^N margin, -margin): the agreement propagates leftward under
    // the inflation, because the window maps over its own extension
    std::vector<std::vector<bool>> left_rel(sig.n, std::vector<bool>(sig.n, false));
    std::vector<std::vector<bool>> right_rel(sig.n, std::vector<bool>(sig.n, false));
    FieldElement neg_margin = -margin;
    FieldElement neg_radius = -radius;
    std::vector<std::vector<const Placed*>> lslices, rslices;
    for (const auto& g : grown) {
        lslices.push_back(slice(g, neg_radius, neg_margin));
        rslices.push_back(slice(g, margin, radius));
    }
    for (int i = 0; i < sig.n; ++i) {
        left_rel[i][i] = right_rel[i][i] = true;
        for (int j = i + 1; j < sig.n; ++j) {
            left_rel[i][j] = left_rel[j][i] = same_slice(lslices[i], lslices[j]);
            right_rel[i][j] = right_rel[j][i] = same_slice(rslices[i], rslices[j]);
        }
    }
    res.left_partition = partition_from_relation(left_rel, res.relations_transitive);
    res.right_partition = partition_from_relation(right_rel, res.relations_transitive);

    // inflation action read off by inflating each grown patch once
    res.perm.assign(sig.n, -1);
    for (int i = 0; i < sig.n; ++i) {
        PositionedPatch p;
        p.left_edge = FieldElement();
        // rebuild a small central patch, inflate, compare cores
        PositionedTiling small = sig.points[i];
        PositionedPatch base = grow_tiling(rule, pd, small, min_len);
        p.word = inflate(rule, base.word);
        p.left_edge = base.left_edge * pd.lambda;
        auto inflated = place(pd, p);
        auto core = slice(inflated, -min_len, min_len);
        for (int j = 0; j < sig.n; ++j) {
            if (!same_slice(core, cores[j])) continue;
            res.perm[i] = res.perm[i] == -1 ? j : -2; // -2: ambiguous
        }
    }
    return res;
}

} // namespace acomp
