#include <CLI11.hpp>

#include "acomp/enumeration.hpp"
#include "acomp/error.hpp"
#include "acomp/invariants.hpp"
#include "acomp/oracle.hpp"
#include "acomp/report.hpp"
#include "acomp/tables.hpp"

#include <fstream>
#include <iostream>

using namespace acomp;

namespace {

// 2: malformed input (rules, polynomials, fixtures)
// 3: computation refused or failed (non-primitive, reducible, k exhausted, ...)
// 4: file I/O
int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::SyntaxError:
        case ErrorKind::UnknownLetter:
        case ErrorKind::EmptyImage:
        case ErrorKind::AlphabetMismatch:
        case ErrorKind::FixtureError:
        case ErrorKind::NotMonic:
            return 2;
        case ErrorKind::IoError:
            return 4;
        default:
            return 3;
    }
}

int run_analyze(const std::string& rule_text, int k_init, int k_max, const std::string& format) {
    Report r = analyze(parse_rule(rule_text), k_init, k_max);
    if (format == "json")
        std::cout << report_json(r).dump(2) << "\n";
    else
        std::cout << report_text(r);
    return 0;
}

void print_verdict(const Verdict& v) {
    if (v.obstructed) {
        std::cout << "obstruction_found: " << v.failed_condition << "\n";
    } else {
        std::cout << "no_obstruction\n";
        if (!v.witness.empty()) {
            std::cout << "witness:";
            for (size_t i = 0; i < v.witness.size(); ++i)
                std::cout << " " << i + 1 << "->" << v.witness[i] + 1;
            std::cout << "\n";
        }
    }
    if (!v.note.empty()) std::cout << "note: " << v.note << "\n";
}

int run_compare(const std::string& r1, const std::string& r2, const std::string& mode) {
    AsymptoticSignature a = signature(parse_rule(r1));
    AsymptoticSignature b = signature(parse_rule(r2));
    Verdict v = mode == "weak" ? isomorphic_weak(a, b) : isomorphic_strong(a, b);
    print_verdict(v);
    return v.obstructed ? 1 : 0;
}

int run_mirror(const std::string& rule_text, const std::string& mode) {
    Verdict v = mirror_test(parse_rule(rule_text),
                            mode == "weak" ? TestMode::Weak : TestMode::Strong);
    print_verdict(v);
    if (!v.obstructed)
        std::cout << "caution: absence of an obstruction is not a proof of mirror symmetry\n";
    return v.obstructed ? 1 : 0;
}

int run_enumerate(const std::string& charpoly, const std::string& matrix, long long max_entry,
                  bool group, const std::string& format) {
    std::vector<CountMatrix> mats;
    if (!charpoly.empty()) {
        IntPolynomial poly = IntPolynomial::parse(charpoly);
        if (max_entry <= 0) max_entry = default_max_entry(poly);
        for (const auto& cls : matrices_with_charpoly(poly, max_entry))
            mats.push_back(cls.representative);
    } else {
        mats.push_back(CountMatrix::parse(matrix));
    }

    std::vector<InflationRule> rules;
    for (const auto& m : mats) {
        auto r = rules_from_matrix(m);
        rules.insert(rules.end(), r.begin(), r.end());
    }

    if (format == "json") {
        nlohmann::ordered_json j;
        j["matrices"] = nlohmann::ordered_json::array();
        for (const auto& m : mats) j["matrices"].push_back(m.to_string());
        j["rules"] = nlohmann::ordered_json::array();
        for (const auto& r : rules) j["rules"].push_back(r.to_string());
        if (group) {
            ClassifyResult cr = classify(rules);
            j["classes"] = nlohmann::ordered_json::array();
            for (const auto& cls : cr.classes) {
                nlohmann::ordered_json jc;
                jc["key"] = cls.key;
                jc["mirror_partner_key"] = cls.mirror_partner_key;
                jc["self_mirror"] = cls.key == cls.mirror_partner_key;
                jc["members"] = nlohmann::ordered_json::array();
                for (const auto& r : cls.members) jc["members"].push_back(r.to_string());
                j["classes"].push_back(jc);
            }
            j["failures"] = nlohmann::ordered_json::array();
            for (const auto& [r, msg] : cr.failures) {
                nlohmann::ordered_json jf;
                jf["rule"] = r.to_string();
                jf["error"] = msg;
                j["failures"].push_back(jf);
            }
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& m : mats) std::cout << "matrix\t" << m.to_string() << "\n";
        if (group) {
            ClassifyResult cr = classify(rules);
            for (const auto& cls : cr.classes) {
                std::cout << "class\t" << cls.key << "\tmirror\t" << cls.mirror_partner_key
                          << (cls.key == cls.mirror_partner_key ? "\t(self)" : "") << "\t";
                for (size_t i = 0; i < cls.members.size(); ++i)
                    std::cout << (i ? " " : "") << cls.members[i].to_string();
                std::cout << "\n";
            }
            for (const auto& [r, msg] : cr.failures)
                std::cout << "skipped\t" << r.to_string() << "\t" << msg << "\n";
        } else {
            for (const auto& r : rules) std::cout << "rule\t" << r.to_string() << "\n";
        }
    }
    return 0;
}

int run_tables(const std::string& fixtures_path, int table_filter, const std::string& format) {
    TableFixture fx =
        fixtures_path.empty() ? parse_fixture(builtin_fixture_text()) : load_fixture(fixtures_path);
    bool all_explained = true;
    int n_pass = 0, n_flagged = 0, n_fail = 0;
    for (const auto& row : fx.rows) {
        if (table_filter > 0 && row.table != table_filter) continue;
        std::string status, detail;
        try {
            InflationRule rule = parse_rule(row.repr);
            AsymptoticSignature sig = signature(rule);
            Verdict v = isomorphic_strong(sig, row_signature(row));
            if (!v.obstructed) {
                status = "PASS";
                ++n_pass;
            } else {
                OracleResult orc = oracle_check(rule, sig);
                if (orc.matches(sig)) {
                    status = "PAPER-TYPO CANDIDATE";
                    detail = "printed row fails (" + v.failed_condition +
                             ") but the half-line oracle confirms the computed signature: " +
                             canonicalize(sig).encoding;
                    ++n_flagged;
                } else {
                    status = "FAIL";
                    detail = v.failed_condition + "; oracle: " + orc.describe();
                    all_explained = false;
                    ++n_fail;
                }
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::ReducibleSpectrum || e.kind() == ErrorKind::NotAperiodic) {
                // printed representative cannot carry the table's factor
                status = "PAPER-TYPO CANDIDATE";
                detail = std::string("representative rejected: ") + e.what();
                try {
                    auto cp = count_matrix(parse_rule(row.repr)).char_poly();
                    if (auto f = cp.find_rational_factor())
                        detail += " (factor " + f->to_string() + ")";
                } catch (const Error&) {
                }
                ++n_flagged;
            } else {
                status = "FAIL";
                detail = e.what();
                all_explained = false;
                ++n_fail;
            }
        }
        if (format == "tsv") {
            std::cout << row.table << "\t" << row.nr << "\t" << row.repr << "\t" << row.rank
                      << "\t" << row.osd << "\t" << row.ac_left << "\t" << row.ac_right << "\t"
                      << row.perm << "\t" << status << (detail.empty() ? "" : "\t" + detail)
                      << "\n";
        } else {
            std::cout << "table " << row.table << " row " << row.nr << "  " << row.repr << "  "
                      << status << (detail.empty() ? "" : "  [" + detail + "]") << "\n";
        }
    }
    std::cout << "summary: " << n_pass << " pass, " << n_flagged << " paper-typo candidates, "
              << n_fail << " unexplained\n";
    return all_explained ? 0 : 1;
}

int run_render(const std::string& rule_text, const std::string& side, const std::string& out_path) {
    InflationRule rule = parse_rule(rule_text);
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorKind::IoError, "cannot open output file: " + out_path);
    render_svg(rule, side != "right", out);
    if (!out.good()) throw Error(ErrorKind::IoError, "write failed: " + out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"asymptotic composants of primitive inflation rules"};
    app.require_subcommand(1);

    std::string rule_text, rule2_text, format = "text", mode = "strong";
    int k_init = 4, k_max = 256;

    auto* analyze_cmd = app.add_subcommand("analyze", "compute the asymptotic signature");
    analyze_cmd->add_option("--rule", rule_text)->required();
    analyze_cmd->add_option("--k-init", k_init);
    analyze_cmd->add_option("--k-max", k_max);
    analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* compare_cmd = app.add_subcommand("compare", "test two rules for an obstruction");
    compare_cmd->add_option("--rule1", rule_text)->required();
    compare_cmd->add_option("--rule2", rule2_text)->required();
    compare_cmd->add_option("--mode", mode)->check(CLI::IsMember({"strong", "weak"}));

    auto* mirror_cmd = app.add_subcommand("mirror", "test a rule against its mirror");
    mirror_cmd->add_option("--rule", rule_text)->required();
    mirror_cmd->add_option("--mode", mode)->check(CLI::IsMember({"strong", "weak"}));

    std::string charpoly, matrix;
    long long max_entry = 0;
    bool group = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "matrices and rules for a spectrum");
    auto* opt_cp = enum_cmd->add_option("--charpoly", charpoly);
    enum_cmd->add_option("--matrix", matrix)->excludes(opt_cp);
    enum_cmd->add_option("--max-entry", max_entry);
    enum_cmd->add_flag("--group", group);
    format = "text";
    enum_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "tsv", "text"}));

    std::string fixtures_path;
    int table_filter = 0;
    auto* tables_cmd = app.add_subcommand("tables", "reproduce the bundled atlas");
    tables_cmd->add_option("--fixtures", fixtures_path);
    tables_cmd->add_option("--table", table_filter);
    tables_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "tsv"}));

    std::string side = "left", out_path;
    auto* render_cmd = app.add_subcommand("render", "draw seed pairs as SVG");
    render_cmd->add_option("--rule", rule_text)->required();
    render_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
    render_cmd->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (app.got_subcommand(analyze_cmd)) return run_analyze(rule_text, k_init, k_max, format);
        if (app.got_subcommand(compare_cmd)) return run_compare(rule_text, rule2_text, mode);
        if (app.got_subcommand(mirror_cmd)) return run_mirror(rule_text, mode);
        if (app.got_subcommand(enum_cmd))
            return run_enumerate(charpoly, matrix, max_entry, group, format);
        if (app.got_subcommand(tables_cmd)) return run_tables(fixtures_path, table_filter, format);
        if (app.got_subcommand(render_cmd)) return run_render(rule_text, side, out_path);
    } catch (const Error& e) {
        std::cerr << "error (" << Error::kind_name(e.kind()) << "): " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
