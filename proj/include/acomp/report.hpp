#pragma once

#include "acomp/composants.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace acomp {

/// Everything the analyze front end prints for one rule.
struct Report {
    std::string rule;
    std::string minpoly;
    AsymptoticSignature sig;
    std::string canonical_key;
    double seconds = 0;
};

Report analyze(const InflationRule& rule, int k_init = 4, int k_max = 256);

/// Stable serialization; identical inputs give identical output except for
/// the "timing_seconds" key.
nlohmann::ordered_json report_json(const Report& r);

/// Rebuilds a report from its JSON form (decimal approximations are
/// recomputed, timing is dropped); used for the round-trip guarantee.
Report report_from_json(const nlohmann::ordered_json& j);

std::string report_text(const Report& r);

/// "(1,2)(3,4)" (1-based); "id" when the permutation is trivial.
std::string cycles_string(const std::vector<int>& perm);
/// "[1,2],[3,4]" (1-based, non-singleton blocks); "-" when empty.
std::string blocks_string(const std::vector<std::vector<int>>& blocks, bool skip_singletons = true);

/// Seeds of each asymptotic pair with one inflation step underneath;
/// solid marker at the scaling centre, dashed marker at the split.
void render_svg(const InflationRule& rule, bool left_side, std::ostream& out);

} // namespace acomp
