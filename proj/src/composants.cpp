#include "acomp/composants.hpp"

#include "acomp/error.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace acomp {

namespace {

size_t common_prefix(const Word& a, const Word& b) {
    size_t n = std::min(a.size(), b.size());
    size_t i = 0;
    while (i < n && a[i] == b[i]) ++i;
    return i;
}

FieldElement min_tile_length(const PerronData& pd) {
    FieldElement m = pd.lengths[0];
    for (const auto& l : pd.lengths)
        if (l < m) m = l;
    return m;
}

// Lenient variant of step_pair: nullopt when the k-window around the new
// split cannot be extracted (fewer than k-1 tiles to the right).
std::optional<SplitStep> try_step(const InflationRule& rule, const PerronData& pd,
                                  const SeedPair& pair) {
    const int k = static_cast<int>(pair.p.size());
    Word ip = inflate(rule, pair.p);
    Word iq = inflate(rule, pair.q);
    size_t lcp = common_prefix(ip, iq);
    if (lcp == ip.size() && lcp == iq.size())
        throw Error(ErrorKind::NoSplit, "inflated pair is identical: " + pair.p + " / " + pair.q);
    if (ip.size() - lcp < static_cast<size_t>(k - 1) || iq.size() - lcp < static_cast<size_t>(k - 1))
        return std::nullopt;
    bool strict =
        ip.size() - lcp >= static_cast<size_t>(k) && iq.size() - lcp >= static_cast<size_t>(k);

    Word from_p = ip.substr(lcp - 1, k);
    Word from_q = iq.substr(lcp - 1, k);

    // delta = (position of the new split) - lambda * (old split position),
    // both measured from the common left edge; the old split sits after
    // the first tile of the pair.
    FieldElement new_split = pd.word_length(ip.substr(0, lcp));
    FieldElement delta = new_split - pd.lambda * pd.length(pair.p[0]);
    if (delta.compare_to_zero() == Ordering::Less)
        throw Error(ErrorKind::NoSplit, "negative split gap (internal error)");

    SplitStep step;
    step.source = pair;
    step.delta = delta;
    step.strict = strict;
    if (from_p <= from_q) {
        step.target = SeedPair{from_p, from_q};
        step.slot_to = {0, 1};
    } else {
        step.target = SeedPair{from_q, from_p};
        step.slot_to = {1, 0};
    }
    return step;
}

// Stable image W'_k with all growth conditions satisfied, or nullopt when
// k has to be escalated.
std::optional<StablePairs> compute_stable(const InflationRule& rule, const PerronData& pd, int k) {
    std::set<SeedPair> wk = initial_pairs(rule, k);
    std::map<SeedPair, std::optional<SplitStep>> steps;
    for (const auto& pair : wk) steps[pair] = try_step(rule, pd, pair);

    // iterate the induced map to its stable image; f(W) subset of W, so the
    // image sets decrease and stabilize after at most |W| rounds
    std::set<SeedPair> cur = wk;
    while (true) {
        std::set<SeedPair> next;
        for (const auto& pair : cur) {
            const auto& st = steps.at(pair);
            if (st) next.insert(st->target);
        }
        if (next == cur) break;
        cur = std::move(next);
    }

    if (cur.empty()) return std::nullopt;
    for (const auto& pair : cur) {
        const auto& st = steps.at(pair);
        if (!st || !st->strict) return std::nullopt; // k too small
    }

    StablePairs out;
    out.k_used = k;
    out.pairs.assign(cur.begin(), cur.end());
    for (const auto& pair : cur) out.steps[pair] = *steps.at(pair);
    return out;
}

struct WindowKey {
    std::vector<WindowTile> tiles;
};

int compare_windows(const WindowKey& a, const WindowKey& b) {
    size_t n = std::min(a.tiles.size(), b.tiles.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.tiles[i].letter != b.tiles[i].letter)
            return a.tiles[i].letter < b.tiles[i].letter ? -1 : 1;
        Ordering o = a.tiles[i].start.compare(b.tiles[i].start);
        if (o == Ordering::Less) return -1;
        if (o == Ordering::Greater) return 1;
    }
    if (a.tiles.size() != b.tiles.size()) return a.tiles.size() < b.tiles.size() ? -1 : 1;
    return 0;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> blocks_of(UnionFind& uf, int n) {
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        blocks.push_back(std::move(members));
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> orbit;
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            orbit.push_back(j);
            j = perm[j];
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end());
    return orbits;
}

std::optional<SidedData> try_left_side(const InflationRule& rule, const PerronData& pd, int k) {
    auto sp = compute_stable(rule, pd, k);
    if (!sp) return std::nullopt;

    const int np = static_cast<int>(sp->pairs.size());
    std::map<SeedPair, int> pair_index;
    for (int i = 0; i < np; ++i) pair_index[sp->pairs[i]] = i;

    // f-cycles over the stable pairs
    std::vector<int> pair_next(np);
    for (int i = 0; i < np; ++i) pair_next[i] = pair_index.at(sp->steps.at(sp->pairs[i]).target);

    std::vector<FieldElement> split_pos(np);
    {
        std::vector<bool> seen(np, false);
        for (int i = 0; i < np; ++i) {
            if (seen[i]) continue;
            std::vector<int> cycle;
            int j = i;
            while (!seen[j]) {
                seen[j] = true;
                cycle.push_back(j);
                j = pair_next[j];
            }
            std::vector<SplitStep> steps;
            for (int idx : cycle) steps.push_back(sp->steps.at(sp->pairs[idx]));
            std::vector<FieldElement> pos = position_orbit(pd, steps);
            for (size_t t = 0; t < cycle.size(); ++t) split_pos[cycle[t]] = pos[t];
        }
    }

    // positioned seeds, one per (pair, slot); the centre must lie strictly
    // inside every seed span, otherwise k is still too small
    struct Node {
        int pair;
        int slot;
        PositionedTiling tiling;
    };
    std::vector<Node> nodes;
    nodes.reserve(2 * np);
    for (int i = 0; i < np; ++i) {
        const auto& pr = sp->pairs[i];
        FieldElement offset = pd.length(pr.p[0]) - split_pos[i];
        for (int slot = 0; slot < 2; ++slot) {
            const Word& w = slot == 0 ? pr.p : pr.q;
            if (offset.compare_to_zero() != Ordering::Greater) return std::nullopt;
            if ((pd.word_length(w) - offset).compare_to_zero() != Ordering::Greater)
                return std::nullopt;
            nodes.push_back(Node{i, slot, PositionedTiling{w, offset, 1}});
        }
    }

    // induced map on individual seeds; its cycle length is the period
    auto node_id = [&](int pair, int slot) { return 2 * pair + slot; };
    std::vector<int> g(nodes.size());
    for (const auto& nd : nodes) {
        const SplitStep& st = sp->steps.at(sp->pairs[nd.pair]);
        g[node_id(nd.pair, nd.slot)] = node_id(pair_index.at(st.target), st.slot_to[nd.slot]);
    }
    {
        std::vector<int> cycle_len(nodes.size(), 0);
        std::vector<bool> seen(nodes.size(), false);
        for (size_t i = 0; i < nodes.size(); ++i) {
            if (seen[i]) continue;
            std::vector<int> cyc;
            size_t j = i;
            while (!seen[j]) {
                seen[j] = true;
                cyc.push_back(static_cast<int>(j));
                j = g[j];
            }
            for (int idx : cyc) cycle_len[idx] = static_cast<int>(cyc.size());
        }
        for (size_t i = 0; i < nodes.size(); ++i) nodes[i].tiling.period = cycle_len[i];
    }

    // deduplicate by the central window around the scaling centre
    FieldElement radius = min_tile_length(pd);
    std::vector<WindowKey> keys(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) {
        PositionedPatch patch = grow_tiling(rule, pd, nodes[i].tiling, radius);
        keys[i].tiles = central_window(pd, patch, radius);
    }
    std::vector<int> order(nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return compare_windows(keys[a], keys[b]) < 0; });

    SidedData out;
    out.k_used = k;
    std::vector<int> node_class(nodes.size(), -1);
    for (size_t oi = 0; oi < order.size(); ++oi) {
        int i = order[oi];
        if (oi > 0 && compare_windows(keys[order[oi - 1]], keys[i]) == 0) {
            node_class[i] = node_class[order[oi - 1]];
        } else {
            node_class[i] = static_cast<int>(out.tilings.size());
            out.tilings.push_back(nodes[i].tiling);
        }
    }
    const int n = static_cast<int>(out.tilings.size());

    // P'_L from pair membership, closed transitively
    UnionFind uf(n);
    for (int i = 0; i < np; ++i) uf.unite(node_class[node_id(i, 0)], node_class[node_id(i, 1)]);
    out.blocks = blocks_of(uf, n);

    // induced permutation on tilings; must be consistent across duplicates
    out.perm.assign(n, -1);
    for (size_t i = 0; i < nodes.size(); ++i) {
        int from = node_class[i], to = node_class[g[i]];
        if (out.perm[from] != -1 && out.perm[from] != to)
            throw Error(ErrorKind::InconsistentPermutation,
                        "inflation action disagrees on duplicated seeds");
        out.perm[from] = to;
    }

    out.pairs.reserve(np);
    for (int i = 0; i < np; ++i) {
        AsymptoticPair ap;
        ap.pair = sp->pairs[i];
        ap.split_position = split_pos[i];
        ap.tiling_index = {node_class[node_id(i, 0)], node_class[node_id(i, 1)]};
        out.pairs.push_back(std::move(ap));
    }
    return out;
}

} // namespace

FieldElement PositionedPatch::right_edge(const PerronData& pd) const {
    return left_edge + pd.word_length(word);
}

std::set<SeedPair> initial_pairs(const InflationRule& rule, int k) {
    if (k < 2) throw Error(ErrorKind::KTooSmall, "seed pairs need k >= 2");
    std::set<Word> factors = legal_factors(rule, k);
    std::vector<Word> list(factors.begin(), factors.end());
    std::set<SeedPair> out;
    for (size_t i = 0; i < list.size(); ++i)
        for (size_t j = i + 1; j < list.size(); ++j) {
            if (list[i][0] != list[j][0]) continue;
            if (list[i][1] == list[j][1]) continue;
            out.insert(SeedPair::make(list[i], list[j]));
        }
    return out;
}

SplitStep step_pair(const InflationRule& rule, const PerronData& pd, const SeedPair& pair) {
    auto st = try_step(rule, pd, pair);
    if (!st || !st->strict)
        throw Error(ErrorKind::KTooSmall,
                    "inflated pair keeps fewer than k tiles right of the split: " + pair.p + " / " +
                        pair.q);
    return *st;
}

StablePairs stable_pairs(const InflationRule& rule, const PerronData& pd, int k_init, int k_max) {
    if (k_init < 2) throw Error(ErrorKind::KTooSmall, "k_init must be >= 2");
    for (int k = k_init; k <= k_max; ++k) {
        auto sp = compute_stable(rule, pd, k);
        if (sp) return *sp;
    }
    throw Error(ErrorKind::KExhausted,
                "no stable seed-pair set up to k = " + std::to_string(k_max));
}

std::vector<FieldElement> position_orbit(const PerronData& pd, const std::vector<SplitStep>& cycle) {
    const size_t m = cycle.size();
    if (m == 0) throw Error(ErrorKind::NoSplit, "empty orbit");
    const FieldElement& lam = pd.lambda;
    // s_1 (1 - lambda^m) = sum_i lambda^(m-1-i) delta_i
    FieldElement lam_pow = pd.field->one();
    std::vector<FieldElement> pows(m + 1, lam_pow);
    for (size_t i = 1; i <= m; ++i) pows[i] = pows[i - 1] * lam;
    FieldElement num = pd.field->zero();
    for (size_t i = 0; i < m; ++i) num = num + pows[m - 1 - i] * cycle[i].delta;
    FieldElement s0 = num / (pd.field->one() - pows[m]);

    std::vector<FieldElement> out;
    out.reserve(m);
    FieldElement s = s0;
    for (size_t i = 0; i < m; ++i) {
        if (s.compare_to_zero() == Ordering::Greater)
            throw Error(ErrorKind::PositivePosition,
                        "splitting position above the scaling centre (internal error)");
        out.push_back(s);
        s = lam * s + cycle[i].delta;
    }
    if (!(s == s0))
        throw Error(ErrorKind::NoSplit, "orbit positions fail to close (internal error)");
    return out;
}

PositionedPatch grow_tiling(const InflationRule& rule, const PerronData& pd,
                            const PositionedTiling& t, const FieldElement& radius) {
    PositionedPatch patch{t.seed, -t.origin_offset};
    if (patch.left_edge.compare_to_zero() != Ordering::Less ||
        patch.right_edge(pd).compare_to_zero() != Ordering::Greater)
        throw Error(ErrorKind::NoSplit, "seed does not straddle the scaling centre");

    // one inflation round must reproduce the seed inside its own span;
    // by induction every later round then extends the previous patch, so
    // the limit is a genuine fixed point of rho^period
    {
        Word grown = patch.word;
        FieldElement grown_left = patch.left_edge;
        for (int i = 0; i < t.period; ++i) {
            grown_left = grown_left * pd.lambda;
            grown = inflate(rule, grown);
        }
        FieldElement pos = grown_left;
        size_t j = 0;
        FieldElement seed_pos = patch.left_edge;
        for (size_t i = 0; i < grown.size() && j < patch.word.size(); ++i) {
            if (pos == seed_pos) {
                if (grown[i] != patch.word[j])
                    throw Error(ErrorKind::InconsistentPermutation,
                                "inflated patch does not extend its seed");
                seed_pos = seed_pos + pd.length(patch.word[j]);
                ++j;
            }
            pos = pos + pd.length(grown[i]);
        }
        if (j < patch.word.size())
            throw Error(ErrorKind::InconsistentPermutation,
                        "inflated patch does not extend its seed");
    }

    auto covered = [&] {
        return patch.left_edge.compare(-radius) != Ordering::Greater &&
               patch.right_edge(pd).compare(radius) != Ordering::Less;
    };
    while (!covered()) {
        for (int i = 0; i < t.period; ++i) {
            patch.left_edge = patch.left_edge * pd.lambda;
            patch.word = inflate(rule, patch.word);
        }
        // trim to a window still covering [-radius, radius]
        FieldElement pos = patch.left_edge;
        size_t first = 0, last = patch.word.size();
        bool first_set = false;
        FieldElement new_left = patch.left_edge;
        for (size_t i = 0; i < patch.word.size(); ++i) {
            FieldElement end = pos + pd.length(patch.word[i]);
            if (!first_set && end.compare(-radius) == Ordering::Greater) {
                first = i;
                new_left = pos;
                first_set = true;
            }
            if (pos.compare(radius) != Ordering::Less) {
                last = i;
                break;
            }
            pos = end;
        }
        patch.word = patch.word.substr(first, last - first);
        patch.left_edge = new_left;
    }
    return patch;
}

std::vector<WindowTile> central_window(const PerronData& pd, const PositionedPatch& patch,
                                       const FieldElement& radius) {
    std::vector<WindowTile> out;
    FieldElement pos = patch.left_edge;
    for (char c : patch.word) {
        FieldElement end = pos + pd.length(c);
        if (end.compare(-radius) == Ordering::Greater && pos.compare(radius) == Ordering::Less)
            out.push_back(WindowTile{c, pos});
        pos = end;
    }
    return out;
}

bool equal_tilings(const InflationRule& rule, const PerronData& pd, const PositionedTiling& t1,
                   const PositionedTiling& t2) {
    FieldElement radius = min_tile_length(pd);
    WindowKey k1{central_window(pd, grow_tiling(rule, pd, t1, radius), radius)};
    WindowKey k2{central_window(pd, grow_tiling(rule, pd, t2, radius), radius)};
    return compare_windows(k1, k2) == 0;
}

SidedData left_asymptotic_set(const InflationRule& rule, const PerronData& pd, int k_init,
                              int k_max) {
    if (k_init < 2) throw Error(ErrorKind::KTooSmall, "k_init must be >= 2");
    for (int k = k_init; k <= k_max; ++k) {
        auto side = try_left_side(rule, pd, k);
        if (side) return *side;
    }
    throw Error(ErrorKind::KExhausted,
                "no stable asymptotic seed set up to k = " + std::to_string(k_max));
}

std::vector<std::vector<int>> AsymptoticSignature::non_singleton(
    const std::vector<std::vector<int>>& part) const {
    std::vector<std::vector<int>> out;
    for (const auto& b : part)
        if (b.size() >= 2) out.push_back(b);
    return out;
}

AsymptoticSignature AsymptoticSignature::mirrored() const {
    AsymptoticSignature m = *this;
    std::swap(m.left_partition, m.right_partition);
    return m;
}

AsymptoticSignature signature(const InflationRule& rule, int k_init, int k_max) {
    PerronData pd = perron_data(rule);
    SidedData left = left_asymptotic_set(rule, pd, k_init, k_max);

    InflationRule rrule = reverse_rule(rule);
    PerronData rpd = perron_data(rrule);
    SidedData rside = left_asymptotic_set(rrule, rpd, k_init, k_max);

    // the right-asymptotic data of rho is the mirrored left data of the
    // reversed rule; mirroring reverses seeds and reflects offsets
    std::vector<PositionedTiling> right_tilings;
    right_tilings.reserve(rside.tilings.size());
    for (const auto& t : rside.tilings) {
        PositionedTiling m;
        m.seed = t.seed;
        std::reverse(m.seed.begin(), m.seed.end());
        m.origin_offset = rpd.word_length(t.seed) - t.origin_offset;
        m.period = t.period;
        right_tilings.push_back(std::move(m));
    }

    // merge S_L and S_R, identifying tilings that agree around the origin
    FieldElement radius = min_tile_length(pd);
    struct Entry {
        PositionedTiling tiling;
        WindowKey key;
        int side; // 0 = left, 1 = right
        int local;
    };
    std::vector<Entry> entries;
    for (size_t i = 0; i < left.tilings.size(); ++i) {
        PositionedPatch p = grow_tiling(rule, pd, left.tilings[i], radius);
        entries.push_back(Entry{left.tilings[i], WindowKey{central_window(pd, p, radius)}, 0,
                                static_cast<int>(i)});
    }
    for (size_t i = 0; i < right_tilings.size(); ++i) {
        PositionedPatch p = grow_tiling(rule, pd, right_tilings[i], radius);
        entries.push_back(Entry{right_tilings[i], WindowKey{central_window(pd, p, radius)}, 1,
                                static_cast<int>(i)});
    }
    std::vector<int> order(entries.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return compare_windows(entries[a].key, entries[b].key) < 0;
    });

    AsymptoticSignature sig;
    sig.pd = pd;
    sig.k_used = std::max(left.k_used, rside.k_used);
    std::vector<int> left_to_global(left.tilings.size(), -1);
    std::vector<int> right_to_global(right_tilings.size(), -1);
    for (size_t oi = 0; oi < order.size(); ++oi) {
        const Entry& e = entries[order[oi]];
        int id;
        if (oi > 0 && compare_windows(entries[order[oi - 1]].key, e.key) == 0) {
            const Entry& prev = entries[order[oi - 1]];
            id = prev.side == 0 ? left_to_global[prev.local] : right_to_global[prev.local];
        } else {
            id = static_cast<int>(sig.points.size());
            sig.points.push_back(e.tiling);
        }
        (e.side == 0 ? left_to_global : right_to_global)[e.local] = id;
    }
    sig.n = static_cast<int>(sig.points.size());

    // permutation on S, checked for consistency on the overlap
    sig.perm.assign(sig.n, -1);
    auto apply_perm = [&](const std::vector<int>& local_perm, const std::vector<int>& to_global) {
        for (size_t i = 0; i < local_perm.size(); ++i) {
            int from = to_global[i], to = to_global[local_perm[i]];
            if (sig.perm[from] != -1 && sig.perm[from] != to)
                throw Error(ErrorKind::InconsistentPermutation,
                            "left- and right-derived inflation actions disagree");
            sig.perm[from] = to;
        }
    };
    apply_perm(left.perm, left_to_global);
    apply_perm(rside.perm, right_to_global);
    for (int v : sig.perm)
        if (v < 0)
            throw Error(ErrorKind::InconsistentPermutation, "incomplete inflation action");

    // complete the one-sided partitions with singletons
    auto complete = [&](const std::vector<std::vector<int>>& local_blocks,
                        const std::vector<int>& to_global) {
        std::vector<std::vector<int>> blocks;
        std::vector<bool> covered(sig.n, false);
        for (const auto& b : local_blocks) {
            std::vector<int> g;
            for (int i : b) g.push_back(to_global[i]);
            std::sort(g.begin(), g.end());
            for (int x : g) covered[x] = true;
            blocks.push_back(std::move(g));
        }
        for (int i = 0; i < sig.n; ++i)
            if (!covered[i]) blocks.push_back({i});
        std::sort(blocks.begin(), blocks.end());
        return blocks;
    };
    sig.left_partition = complete(left.blocks, left_to_global);
    sig.right_partition = complete(rside.blocks, right_to_global);
    sig.orbits = cycles_of(sig.perm);

    // the inflation must map left blocks to left blocks and right blocks
    // to right blocks
    auto check_blocks = [&](const std::vector<std::vector<int>>& blocks) {
        std::set<std::vector<int>> block_set(blocks.begin(), blocks.end());
        for (const auto& b : blocks) {
            std::vector<int> img;
            for (int i : b) img.push_back(sig.perm[i]);
            std::sort(img.begin(), img.end());
            if (!block_set.count(img))
                throw Error(ErrorKind::InconsistentPermutation,
                            "inflation does not preserve an asymptotic partition");
        }
    };
    check_blocks(sig.left_partition);
    check_blocks(sig.right_partition);
    return sig;
}

} // namespace acomp
