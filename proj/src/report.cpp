#include "acomp/report.hpp"

#include "acomp/error.hpp"
#include "acomp/invariants.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

namespace acomp {

std::string cycles_string(const std::vector<int>& perm) {
    std::string out;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == static_cast<int>(i)) continue;
        out += "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            out += (first ? "" : ",") + std::to_string(j + 1);
            first = false;
            j = perm[j];
        }
        out += ")";
    }
    return out.empty() ? "id" : out;
}

std::string blocks_string(const std::vector<std::vector<int>>& blocks, bool skip_singletons) {
    std::string out;
    for (const auto& b : blocks) {
        if (skip_singletons && b.size() < 2) continue;
        if (!out.empty()) out += ",";
        out += "[";
        for (size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i] + 1);
        out += "]";
    }
    return out.empty() ? "-" : out;
}

Report analyze(const InflationRule& rule, int k_init, int k_max) {
    auto t0 = std::chrono::steady_clock::now();
    Report r;
    r.rule = rule.to_string();
    r.sig = signature(rule, k_init, k_max);
    r.minpoly = r.sig.pd.field->minimal_polynomial().to_string();
    r.canonical_key = canonicalize(r.sig).encoding;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

namespace {

nlohmann::ordered_json blocks_json(const std::vector<std::vector<int>>& blocks) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& b : blocks) {
        nlohmann::ordered_json jb = nlohmann::ordered_json::array();
        for (int i : b) jb.push_back(i + 1);
        out.push_back(jb);
    }
    return out;
}

std::vector<std::vector<int>> blocks_from_json(const nlohmann::ordered_json& j) {
    std::vector<std::vector<int>> out;
    for (const auto& jb : j) {
        std::vector<int> b;
        for (const auto& v : jb) b.push_back(v.get<int>() - 1);
        out.push_back(std::move(b));
    }
    return out;
}

// partition restricted to one orbit: nonempty intersections
std::vector<std::vector<int>> restrict_blocks(const std::vector<std::vector<int>>& blocks,
                                              const std::vector<int>& orbit) {
    std::vector<std::vector<int>> out;
    for (const auto& b : blocks) {
        std::vector<int> cut;
        for (int i : b)
            if (std::find(orbit.begin(), orbit.end(), i) != orbit.end()) cut.push_back(i);
        if (!cut.empty()) out.push_back(std::move(cut));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

nlohmann::ordered_json report_json(const Report& r) {
    nlohmann::ordered_json j;
    j["rule"] = r.rule;
    j["minpoly"] = r.minpoly;
    j["n_points"] = r.sig.n;
    j["left_blocks"] = blocks_json(r.sig.left_partition);
    j["right_blocks"] = blocks_json(r.sig.right_partition);
    {
        nlohmann::ordered_json cycles = nlohmann::ordered_json::array();
        std::vector<bool> seen(r.sig.perm.size(), false);
        for (size_t i = 0; i < r.sig.perm.size(); ++i) {
            if (seen[i]) continue;
            nlohmann::ordered_json c = nlohmann::ordered_json::array();
            size_t k = i;
            while (!seen[k]) {
                seen[k] = true;
                c.push_back(k + 1);
                k = r.sig.perm[k];
            }
            cycles.push_back(c);
        }
        j["perm_cycles"] = cycles;
    }
    j["orbits"] = blocks_json(r.sig.orbits);
    {
        nlohmann::ordered_json per = nlohmann::ordered_json::array();
        for (const auto& orbit : r.sig.orbits) {
            nlohmann::ordered_json jo;
            jo["orbit"] = blocks_json({orbit})[0];
            jo["left_blocks"] = blocks_json(restrict_blocks(r.sig.left_partition, orbit));
            jo["right_blocks"] = blocks_json(restrict_blocks(r.sig.right_partition, orbit));
            per.push_back(jo);
        }
        j["per_orbit"] = per;
    }
    j["k_used"] = r.sig.k_used;
    {
        nlohmann::ordered_json seeds = nlohmann::ordered_json::array();
        for (const auto& t : r.sig.points) {
            nlohmann::ordered_json js;
            js["word"] = t.seed;
            nlohmann::ordered_json coords = nlohmann::ordered_json::array();
            for (const auto& c : t.origin_offset.coords()) coords.push_back(c.get_str());
            js["offset_coords"] = coords;
            js["offset_approx"] = t.origin_offset.approx(6);
            js["period"] = t.period;
            seeds.push_back(js);
        }
        j["seeds"] = seeds;
    }
    j["canonical_key"] = r.canonical_key;
    j["timing_seconds"] = r.seconds;
    return j;
}

Report report_from_json(const nlohmann::ordered_json& j) {
    Report r;
    r.rule = j.at("rule").get<std::string>();
    r.minpoly = j.at("minpoly").get<std::string>();
    r.canonical_key = j.at("canonical_key").get<std::string>();
    InflationRule rule = parse_rule(r.rule);
    r.sig.pd = perron_data(rule);
    if (r.sig.pd.field->minimal_polynomial().to_string() != r.minpoly)
        throw Error(ErrorKind::FieldMismatch, "minimal polynomial does not match the rule");
    r.sig.n = j.at("n_points").get<int>();
    r.sig.left_partition = blocks_from_json(j.at("left_blocks"));
    r.sig.right_partition = blocks_from_json(j.at("right_blocks"));
    r.sig.perm.assign(r.sig.n, -1);
    for (const auto& c : j.at("perm_cycles")) {
        std::vector<int> cyc;
        for (const auto& v : c) cyc.push_back(v.get<int>() - 1);
        for (size_t i = 0; i < cyc.size(); ++i) r.sig.perm[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    r.sig.orbits = blocks_from_json(j.at("orbits"));
    r.sig.k_used = j.at("k_used").get<int>();
    for (const auto& js : j.at("seeds")) {
        PositionedTiling t;
        t.seed = js.at("word").get<std::string>();
        std::vector<mpq_class> coords;
        for (const auto& c : js.at("offset_coords")) coords.emplace_back(c.get<std::string>());
        t.origin_offset = r.sig.pd.field->element(std::move(coords));
        t.period = js.at("period").get<int>();
        r.sig.points.push_back(std::move(t));
    }
    return r;
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    os << "rule:           " << r.rule << "\n";
    os << "minpoly:        " << r.minpoly << "\n";
    os << "points:         " << r.sig.n << "\n";
    os << "left blocks:    " << blocks_string(r.sig.left_partition) << "\n";
    os << "right blocks:   " << blocks_string(r.sig.right_partition) << "\n";
    os << "permutation:    " << cycles_string(r.sig.perm) << "\n";
    os << "orbits:         " << blocks_string(r.sig.orbits, false) << "\n";
    os << "k used:         " << r.sig.k_used << "\n";
    os << "canonical key:  " << r.canonical_key << "\n";
    os << "seeds:\n";
    for (size_t i = 0; i < r.sig.points.size(); ++i) {
        const auto& t = r.sig.points[i];
        os << "  " << i + 1 << ": " << t.seed << "  offset " << t.origin_offset.approx(6)
           << "  period " << t.period << "\n";
    }
    os << "time:           " << r.seconds << " s\n";
    return os.str();
}

namespace {

const char* tile_fill(char c) {
    static const char* palette[] = {"#9ecae1", "#a1d99b", "#fdae6b", "#bcbddc",
                                    "#fee08b", "#d9d9d9"};
    return palette[(c - 'a') % 6];
}

struct SvgRow {
    Word word;
    double left;
    double lambda_scale; // 1 for seed rows, lambda for inflated rows
};

} // namespace

void render_svg(const InflationRule& rule, bool left_side, std::ostream& out) {
    InflationRule work = left_side ? rule : reverse_rule(rule);
    PerronData pd = perron_data(work);
    SidedData side = left_asymptotic_set(work, pd);

    const double scale = 60.0;
    const double row_h = 26.0, row_gap = 6.0, pair_gap = 28.0, top = 20.0, label_w = 0.0;
    // mirror: x -> -x for the right-asymptotic side
    const double sgn = left_side ? 1.0 : -1.0;

    struct Rect {
        double x0, x1, y;
        char letter;
    };
    std::vector<Rect> rects;
    struct Marker {
        double x, y0, y1;
        bool dashed;
    };
    std::vector<Marker> markers;

    double y = top;
    double min_x = 0, max_x = 0;
    for (const auto& ap : side.pairs) {
        double split = sgn * ap.split_position.to_double() * scale;
        double y_start = y;
        for (int step = 0; step < 2; ++step) {
            for (int slot = 0; slot < 2; ++slot) {
                const PositionedTiling& t = side.tilings[ap.tiling_index[slot]];
                Word w = t.seed;
                double left = -t.origin_offset.to_double();
                if (step == 1) {
                    left *= pd.lambda.to_double();
                    w = inflate(work, w);
                }
                double pos = left;
                for (char c : w) {
                    double end = pos + pd.length(c).to_double();
                    double a = sgn * pos * scale, b = sgn * end * scale;
                    rects.push_back(Rect{std::min(a, b), std::max(a, b), y, c});
                    min_x = std::min(min_x, std::min(a, b));
                    max_x = std::max(max_x, std::max(a, b));
                    pos = end;
                }
                y += row_h + row_gap;
            }
        }
        markers.push_back(Marker{0.0, y_start - 4, y - row_gap + 4, false});
        markers.push_back(Marker{split, y_start - 4, y - row_gap + 4, true});
        y += pair_gap;
    }

    double shift = -min_x + 30.0 + label_w;
    double width = max_x - min_x + 60.0, height = y;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    for (const auto& r : rects) {
        out << "  <rect x=\"" << r.x0 + shift << "\" y=\"" << r.y << "\" width=\""
            << r.x1 - r.x0 << "\" height=\"" << row_h << "\" fill=\"" << tile_fill(r.letter)
            << "\" stroke=\"#333\"/>\n";
        out << "  <text x=\"" << (r.x0 + r.x1) / 2 + shift << "\" y=\"" << r.y + row_h / 2 + 4
            << "\" font-size=\"13\" text-anchor=\"middle\" font-family=\"sans-serif\">"
            << r.letter << "</text>\n";
    }
    for (const auto& m : markers) {
        out << "  <line x1=\"" << m.x + shift << "\" y1=\"" << m.y0 << "\" x2=\"" << m.x + shift
            << "\" y2=\"" << m.y1 << "\" stroke=\"" << (m.dashed ? "#c00" : "#000")
            << "\" stroke-width=\"1.5\"" << (m.dashed ? " stroke-dasharray=\"5,4\"" : "")
            << "/>\n";
    }
    out << "</svg>\n";
}

} // namespace acomp
