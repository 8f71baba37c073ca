#pragma once

#include "acomp/field.hpp"
#include "acomp/rule.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace acomp {

/// Pair of legal k-patches agreeing on the first tile and disagreeing on
/// the second; stored with p < q lexicographically.
struct SeedPair {
    Word p, q;

    bool operator==(const SeedPair& o) const { return p == o.p && q == o.q; }
    bool operator<(const SeedPair& o) const { return std::tie(p, q) < std::tie(o.p, o.q); }
    static SeedPair make(Word a, Word b) {
        if (b < a) std::swap(a, b);
        return SeedPair{std::move(a), std::move(b)};
    }
};

/// One application of the induced map f on seed pairs. delta >= 0 is the
/// geometric gap between lambda times the old split position and the new
/// split position. slot_to[i] tells which slot of target the inflation of
/// source slot i lands in (0 = p, 1 = q). strict indicates that both
/// inflated patches kept at least k tiles to the right of the new split.
struct SplitStep {
    SeedPair source;
    SeedPair target;
    FieldElement delta;
    std::array<int, 2> slot_to{0, 1};
    bool strict = true;
};

/// A seed word anchored in space. origin_offset is the distance from the
/// seed's left edge to the scaling centre at 0 (so the left edge sits at
/// -origin_offset); the centre lies strictly inside the seed's span.
/// period is the smallest power of the inflation fixing the tiling.
struct PositionedTiling {
    Word seed;
    FieldElement origin_offset;
    int period = 1;
};

/// A finite patch with exact left-edge position.
struct PositionedPatch {
    Word word;
    FieldElement left_edge;

    FieldElement right_edge(const PerronData& pd) const;
};

/// A tile of a patch window: letter plus exact start position.
struct WindowTile {
    char letter;
    FieldElement start;
};

/// All unordered pairs of legal k-factors agreeing on the first letter and
/// disagreeing on the second.
std::set<SeedPair> initial_pairs(const InflationRule& rule, int k);

/// Inflates the pair and extracts the k-window around the left splitting
/// point of the inflated pair. Throws KTooSmall when either inflated word
/// has fewer than k tiles to the right of the new split.
SplitStep step_pair(const InflationRule& rule, const PerronData& pd, const SeedPair& pair);

struct StablePairs {
    int k_used = 0;
    std::vector<SeedPair> pairs; // W'_k in deterministic order
    std::map<SeedPair, SplitStep> steps;
};

/// Escalation loop: builds W_k, iterates the induced map to its stable
/// image W'_k on which f acts by permutation. Escalates k when the stable
/// image fails the k-tiles-to-the-right growth test.
StablePairs stable_pairs(const InflationRule& rule, const PerronData& pd, int k_init, int k_max);

/// Solves the return-map fixed point s_{i+1} = lambda s_i + delta_i around
/// an f-cycle; returns the split position of each step's source pair.
/// Throws PositivePosition if any position is > 0.
std::vector<FieldElement> position_orbit(const PerronData& pd, const std::vector<SplitStep>& cycle);

/// Repeatedly applies rho^period (scaling about the origin) until the
/// patch covers [-radius, radius]; the returned patch is trimmed to a
/// window slightly larger than the requested span.
PositionedPatch grow_tiling(const InflationRule& rule, const PerronData& pd,
                            const PositionedTiling& t, const FieldElement& radius);

/// Tiles of the patch meeting the open interval (-radius, radius).
std::vector<WindowTile> central_window(const PerronData& pd, const PositionedPatch& patch,
                                       const FieldElement& radius);

/// Tiling identity: agreement of tile sequences and exact offsets on a
/// window strictly containing the scaling centre.
bool equal_tilings(const InflationRule& rule, const PerronData& pd, const PositionedTiling& t1,
                   const PositionedTiling& t2);

/// Pair-level record of a left-asymptotic seed pair after positioning.
struct AsymptoticPair {
    SeedPair pair;
    FieldElement split_position;        // s <= 0
    std::array<int, 2> tiling_index{};  // indices of the two member tilings
};

/// Output of the one-sided algorithm.
struct SidedData {
    int k_used = 0;
    std::vector<PositionedTiling> tilings;  // deduplicated, canonically ordered
    std::vector<std::vector<int>> blocks;   // partition P' (non-trivial relations only)
    std::vector<int> perm;                  // induced action of the inflation
    std::vector<AsymptoticPair> pairs;
};

/// Seed-pair algorithm for the left-asymptotic side.
SidedData left_asymptotic_set(const InflationRule& rule, const PerronData& pd, int k_init = 4,
                              int k_max = 256);

/// The complete invariant: the set S of asymptotic inflation fixed points,
/// the partitions P_L and P_R (singletons included), the permutation by
/// which the inflation acts on S, and its orbits.
struct AsymptoticSignature {
    int n = 0;
    std::vector<std::vector<int>> left_partition;
    std::vector<std::vector<int>> right_partition;
    std::vector<int> perm;
    std::vector<std::vector<int>> orbits;

    std::vector<PositionedTiling> points;
    PerronData pd;
    int k_used = 0;

    std::vector<std::vector<int>> non_singleton(const std::vector<std::vector<int>>& part) const;
    /// Same point set and permutation with the two partitions exchanged.
    AsymptoticSignature mirrored() const;
};

AsymptoticSignature signature(const InflationRule& rule, int k_init = 4, int k_max = 256);

} // namespace acomp
