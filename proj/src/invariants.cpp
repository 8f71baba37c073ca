#include "acomp/invariants.hpp"

#include "acomp/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace acomp {

namespace {

std::vector<std::vector<int>> non_singleton_blocks(const std::vector<std::vector<int>>& part) {
    std::vector<std::vector<int>> out;
    for (const auto& b : part)
        if (b.size() >= 2) out.push_back(b);
    return out;
}

// non-singleton cycles, each rotated to start at its minimum, sorted
std::vector<std::vector<int>> cycle_list(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> cycles;
    for (int i = 0; i < n; ++i) {
        if (seen[i] || perm[i] == i) continue;
        std::vector<int> c;
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            c.push_back(j);
            j = perm[j];
        }
        cycles.push_back(std::move(c));
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

std::multiset<int> size_profile(const std::vector<std::vector<int>>& part) {
    std::multiset<int> out;
    for (const auto& b : part) out.insert(static_cast<int>(b.size()));
    return out;
}

std::multiset<int> cycle_type(const std::vector<int>& perm) {
    std::multiset<int> out;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            ++len;
            j = perm[j];
        }
        out.insert(len);
    }
    return out;
}

void append_blocks(std::vector<int>& key, const std::vector<std::vector<int>>& blocks) {
    for (const auto& b : blocks) {
        key.insert(key.end(), b.begin(), b.end());
        key.push_back(-1);
    }
    key.push_back(-2);
}

std::string format_blocks(const std::vector<std::vector<int>>& blocks, char open, char close) {
    if (blocks.empty()) return "-";
    std::ostringstream os;
    for (const auto& b : blocks) {
        os << open;
        for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i] + 1;
        os << close;
    }
    return os.str();
}

} // namespace

CanonicalSignature canonicalize(const AsymptoticSignature& sig) {
    const int n = sig.n;
    auto lblocks = non_singleton_blocks(sig.left_partition);
    auto rblocks = non_singleton_blocks(sig.right_partition);

    // indices that appear in the encoding: moved by the permutation or
    // member of a non-singleton block; the rest are interchangeable
    std::vector<bool> active(n, false);
    for (int i = 0; i < n; ++i)
        if (sig.perm[i] != i) active[i] = true;
    for (const auto& b : lblocks)
        for (int i : b) active[i] = true;
    for (const auto& b : rblocks)
        for (int i : b) active[i] = true;
    std::vector<int> act;
    for (int i = 0; i < n; ++i)
        if (active[i]) act.push_back(i);
    const int m = static_cast<int>(act.size());
    std::vector<int> act_pos(n, -1);
    for (int j = 0; j < m; ++j) act_pos[act[j]] = j;

    auto build_key = [&](const std::vector<int>& assign) {
        // assign[j] is the canonical label of original index act[j]
        std::vector<std::vector<int>> L, R;
        for (const auto& b : lblocks) {
            std::vector<int> nb;
            for (int i : b) nb.push_back(assign[act_pos[i]]);
            std::sort(nb.begin(), nb.end());
            L.push_back(std::move(nb));
        }
        std::sort(L.begin(), L.end());
        for (const auto& b : rblocks) {
            std::vector<int> nb;
            for (int i : b) nb.push_back(assign[act_pos[i]]);
            std::sort(nb.begin(), nb.end());
            R.push_back(std::move(nb));
        }
        std::sort(R.begin(), R.end());
        std::vector<int> np(m);
        for (int j = 0; j < m; ++j) np[assign[j]] = assign[act_pos[sig.perm[act[j]]]];
        auto P = cycle_list(np);
        std::vector<int> key;
        append_blocks(key, L);
        append_blocks(key, R);
        append_blocks(key, P);
        return std::tuple{key, L, R, P};
    };

    std::vector<int> assign(m);
    std::iota(assign.begin(), assign.end(), 0);
    auto best = build_key(assign);
    std::vector<int> best_assign = assign;
    while (std::next_permutation(assign.begin(), assign.end())) {
        auto cand = build_key(assign);
        if (std::get<0>(cand) < std::get<0>(best)) {
            best = std::move(cand);
            best_assign = assign;
        }
    }

    CanonicalSignature out;
    out.size = n;
    out.left_blocks = std::get<1>(best);
    out.right_blocks = std::get<2>(best);
    out.perm_cycles = std::get<3>(best);
    out.labeling.assign(n, -1);
    for (int j = 0; j < m; ++j) out.labeling[act[j]] = best_assign[j];
    int next_label = m;
    for (int i = 0; i < n; ++i)
        if (out.labeling[i] < 0) out.labeling[i] = next_label++;

    std::vector<int> canon_perm(n);
    for (int i = 0; i < n; ++i) canon_perm[out.labeling[i]] = out.labeling[sig.perm[i]];
    {
        std::vector<bool> seen(n, false);
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            std::vector<int> orb;
            int j = i;
            while (!seen[j]) {
                seen[j] = true;
                orb.push_back(j);
                j = canon_perm[j];
            }
            std::sort(orb.begin(), orb.end());
            out.orbit_blocks.push_back(std::move(orb));
        }
        std::sort(out.orbit_blocks.begin(), out.orbit_blocks.end());
    }

    std::ostringstream os;
    os << "n=" << n << "|L=" << format_blocks(out.left_blocks, '{', '}') << "|R="
       << format_blocks(out.right_blocks, '{', '}') << "|P="
       << format_blocks(out.perm_cycles, '(', ')');
    out.encoding = os.str();
    return out;
}

Verdict isomorphic_strong(const AsymptoticSignature& a, const AsymptoticSignature& b) {
    Verdict v;
    if (a.n != b.n) {
        v.obstructed = true;
        v.failed_condition = "point sets have different sizes";
        return v;
    }
    if (size_profile(a.left_partition) != size_profile(b.left_partition)) {
        v.obstructed = true;
        v.failed_condition = "left-asymptotic partitions are not isomorphic";
        return v;
    }
    if (size_profile(a.right_partition) != size_profile(b.right_partition)) {
        v.obstructed = true;
        v.failed_condition = "right-asymptotic partitions are not isomorphic";
        return v;
    }
    if (cycle_type(a.perm) != cycle_type(b.perm)) {
        v.obstructed = true;
        v.failed_condition = "inflation permutations are not conjugate";
        return v;
    }
    CanonicalSignature ca = canonicalize(a);
    CanonicalSignature cb = canonicalize(b);
    if (ca.encoding != cb.encoding) {
        v.obstructed = true;
        v.failed_condition =
            "no single bijection matches the permutation and both partitions";
        return v;
    }
    // witness: through the shared canonical labeling
    std::vector<int> inv_b(b.n);
    for (int i = 0; i < b.n; ++i) inv_b[cb.labeling[i]] = i;
    v.witness.resize(a.n);
    for (int i = 0; i < a.n; ++i) v.witness[i] = inv_b[ca.labeling[i]];

    // re-verify the witness against all requirements
    auto check = [&](const std::vector<std::vector<int>>& pa,
                     const std::vector<std::vector<int>>& pb) {
        std::set<std::vector<int>> target(pb.begin(), pb.end());
        for (const auto& blk : pa) {
            std::vector<int> img;
            for (int i : blk) img.push_back(v.witness[i]);
            std::sort(img.begin(), img.end());
            if (!target.count(img)) return false;
        }
        return true;
    };
    bool ok = check(a.left_partition, b.left_partition) &&
              check(a.right_partition, b.right_partition);
    for (int i = 0; ok && i < a.n; ++i)
        if (v.witness[a.perm[i]] != b.perm[v.witness[i]]) ok = false;
    if (!ok)
        throw Error(ErrorKind::InconsistentPermutation,
                    "canonical witness failed verification (internal error)");
    return v;
}

Verdict isomorphic_weak(const AsymptoticSignature& a, const AsymptoticSignature& b) {
    Verdict v;
    if (a.n != b.n) {
        v.obstructed = true;
        v.failed_condition = "point sets have different sizes";
        return v;
    }
    if (size_profile(a.left_partition) != size_profile(b.left_partition)) {
        v.obstructed = true;
        v.failed_condition = "left-asymptotic partitions are not isomorphic";
        return v;
    }
    if (size_profile(a.right_partition) != size_profile(b.right_partition)) {
        v.obstructed = true;
        v.failed_condition = "right-asymptotic partitions are not isomorphic";
        return v;
    }
    v.note = "partitions compared as abstract block-size profiles; the permutation is ignored";
    return v;
}

Verdict mirror_test(const AsymptoticSignature& sig, TestMode mode) {
    AsymptoticSignature m = sig.mirrored();
    Verdict v = mode == TestMode::Strong ? isomorphic_strong(sig, m) : isomorphic_weak(sig, m);
    if (!v.obstructed) {
        if (!v.note.empty()) v.note += "; ";
        v.note += "no obstruction found; this does not certify equivalence with the mirror";
        if (mode == TestMode::Strong)
            v.note += " (the full comparison assumes a pure-point input; "
                      "use the weak mode otherwise)";
    }
    return v;
}

Verdict mirror_test(const InflationRule& rule, TestMode mode) {
    return mirror_test(signature(rule), mode);
}

} // namespace acomp
