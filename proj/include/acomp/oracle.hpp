#pragma once

#include "acomp/composants.hpp"

#include <string>
#include <vector>

namespace acomp {

/// Result of the brute-force re-derivation of the asymptotic relations:
/// every point tiling is grown to a long window (at least 50 maximal tile
/// lengths per side) and the half-line relations, the distinctness of the
/// points, and the inflation action are read off the grown patches
/// directly, without the seed-pair machinery.
struct OracleResult {
    int n = 0;
    bool points_distinct = true;
    bool relations_transitive = true;
    std::vector<std::vector<int>> left_partition;
    std::vector<std::vector<int>> right_partition;
    std::vector<int> perm; // -1 where no unique inflation image was found

    bool matches(const AsymptoticSignature& sig) const;
    std::string describe() const;
};

OracleResult oracle_check(const InflationRule& rule, const AsymptoticSignature& sig);

} // namespace acomp
