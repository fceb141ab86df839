// Command line front end: every number it prints is computed by the library,
// exact rationals are rendered as "numerator/denominator", and each
// subcommand exposes one self-contained analysis. Exit codes: 0 success,
// 1 a computation or verification failed, 2 bad usage.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nlbox/bounds.hpp"
#include "nlbox/box.hpp"
#include "nlbox/errors.hpp"
#include "nlbox/fixtures.hpp"
#include "nlbox/invariant.hpp"
#include "nlbox/rational.hpp"
#include "nlbox/spaces.hpp"
#include "nlbox/symmetry.hpp"
#include "nlbox/version.hpp"

namespace {

using nlbox::BitVec;
using nlbox::Rational;
using ordered_json = nlohmann::ordered_json;

std::string find_data_file(const std::string& name)
{
    namespace fs = std::filesystem;
    const fs::path source = fs::path(NLBOX_SOURCE_DATA_DIR) / name;
    if (fs::exists(source))
        return source.string();
    const fs::path installed = fs::path(NLBOX_INSTALL_DATA_DIR) / name;
    if (fs::exists(installed))
        return installed.string();
    throw nlbox::Error("data file " + name + " found neither at " + source.string() + " nor " +
                       installed.string());
}

std::string rs(const Rational& r)
{
    return nlbox::rational_str(r);
}

ordered_json vector_list(const std::vector<BitVec>& vs)
{
    ordered_json arr = ordered_json::array();
    for (const BitVec& v : vs)
        arr.push_back(v.str());
    return arr;
}

void emit(const ordered_json& j)
{
    std::cout << j.dump(2) << "\n";
}

int usage_error(const std::string& message)
{
    std::cerr << "error: " << message << "\n";
    return 2;
}

// ---------------------------------------------------------------- inputs --

int run_inputs(int n, bool translations, bool as_json)
{
    const std::vector<BitVec> space =
        translations ? nlbox::enumerate_translations(n) : nlbox::enumerate_inputs(n);
    const char* kind = translations ? "translations" : "inputs";
    if (as_json) {
        ordered_json j;
        j["n"] = n;
        j["kind"] = kind;
        j["count"] = space.size();
        j["below_reference_regime"] = nlbox::below_reference_regime(n);
        j["vectors"] = vector_list(space);
        emit(j);
    } else {
        std::cout << "# n = " << n << " " << kind << ", " << space.size() << " vectors\n";
        if (nlbox::below_reference_regime(n))
            std::cout << "# note: below the reference regime (n < 6)\n";
        for (const BitVec& v : space)
            std::cout << v.str() << "\n";
    }
    return 0;
}

// ------------------------------------------------------------- partition --

int run_partition(int n, bool verify, bool as_json)
{
    const nlbox::Partition p = nlbox::partition_by_symmetry(n);
    std::vector<nlbox::CheckResult> checks;
    bool pass = true;
    if (verify) {
        checks = nlbox::verify_partition(p);
        for (const auto& c : checks)
            pass = pass && c.pass;
    }
    if (as_json) {
        ordered_json j;
        j["n"] = p.n;
        j["x_ref"] = p.x_ref.str();
        j["subsets"] = ordered_json::array();
        for (const auto& s : p.subsets) {
            ordered_json js;
            js["index"] = s.index;
            js["t"] = vector_list(s.T);
            js["x"] = vector_list(s.X);
            j["subsets"].push_back(js);
        }
        if (verify) {
            j["checks"] = ordered_json::array();
            for (const auto& c : checks)
                j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            j["pass"] = pass;
        }
        emit(j);
    } else {
        std::cout << "# n = " << p.n << " partition, " << p.subsets.size()
                  << " subsets, x_ref = " << p.x_ref.str() << "\n";
        for (const auto& s : p.subsets) {
            std::cout << "[subset " << s.index << "]\nT:\n";
            for (const BitVec& v : s.T)
                std::cout << v.str() << "\n";
            std::cout << "X:\n";
            for (const BitVec& v : s.X)
                std::cout << v.str() << "\n";
        }
        for (const auto& c : checks)
            std::cout << "# check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " ("
                      << c.detail << ")\n";
        if (verify)
            std::cout << "# overall: " << (pass ? "pass" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

// -------------------------------------------------------------- fixtures --

int run_fixtures(std::string file, bool verify, bool as_json)
{
    if (file.empty())
        file = find_data_file("n6_reference_clean.txt");
    const nlbox::FixtureSet set = nlbox::load_fixture_file(file);
    nlbox::FixtureReport report;
    if (verify)
        report = nlbox::verify_reference_fixture(set);

    if (as_json) {
        ordered_json j;
        j["file"] = file;
        j["n"] = set.n;
        j["inputs"] = set.inputs.size();
        j["translations"] = set.translations.size();
        j["subsets"] = set.subsets.size();
        j["notes"] = ordered_json::array();
        for (const auto& note : set.notes)
            j["notes"].push_back(
                {{"line", note.line}, {"section", note.section}, {"text", note.text}});
        if (verify) {
            j["checks"] = ordered_json::array();
            for (const auto& c : report.checks)
                j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            j["pass"] = report.pass;
        }
        emit(j);
    } else {
        std::cout << "file = " << file << "\n";
        std::cout << "n = " << set.n << ", " << set.inputs.size() << " inputs, "
                  << set.translations.size() << " translations, " << set.subsets.size()
                  << " subsets\n";
        for (const auto& note : set.notes)
            std::cout << "note line " << note.line << " [" << note.section << "] " << note.text
                      << "\n";
        for (const auto& c : report.checks)
            std::cout << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " ("
                      << c.detail << ")\n";
        if (verify)
            std::cout << "overall: " << (report.pass ? "pass" : "FAIL") << "\n";
    }
    return (!verify || report.pass) ? 0 : 1;
}

// -------------------------------------------------------------- tradeoff --

int run_tradeoff(int steps, const std::string& out, bool as_json)
{
    const std::vector<nlbox::TradeoffPoint> curve = nlbox::tradeoff_curve(steps);
    if (as_json) {
        ordered_json j;
        j["steps"] = steps;
        j["rows"] = ordered_json::array();
        for (const auto& pt : curve)
            j["rows"].push_back({{"e", rs(pt.e)},
                                 {"q_w0", rs(pt.q_w0)},
                                 {"p_w1", rs(pt.p_w1)},
                                 {"sum", rs(pt.sum)}});
        emit(j);
        return 0;
    }
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out.empty()) {
        file.open(out, std::ios::binary); // LF line ends on every platform
        if (!file)
            throw nlbox::Error("cannot open output file " + out);
        os = &file;
    }
    *os << "E,Q_W0,P_W1,sum\n";
    for (const auto& pt : curve)
        *os << nlbox::format_sig(nlbox::to_double(pt.e), 12) << ","
            << nlbox::format_sig(nlbox::to_double(pt.q_w0), 12) << ","
            << nlbox::format_sig(nlbox::to_double(pt.p_w1), 12) << ","
            << nlbox::format_sig(nlbox::to_double(pt.sum), 12) << "\n";
    return 0;
}

// ------------------------------------------------------------- tsirelson --

int run_tsirelson(bool as_json)
{
    const Rational t = nlbox::threshold_squared();
    const Rational q = (1 + 3 * t * t) / 4;
    const Rational p = (1 + t) * (1 + t) / 4;
    const bool exact = (q + p == 1);
    const double threshold = nlbox::consistency_threshold();
    if (as_json) {
        ordered_json j;
        j["threshold_squared"] = rs(t);
        j["threshold"] = threshold;
        j["q_w0"] = rs(q);
        j["p_w1"] = rs(p);
        j["sum_exact"] = exact;
        emit(j);
    } else {
        std::cout << "threshold_squared = " << rs(t) << "\n";
        std::cout << "threshold = " << nlbox::format_sig(threshold, 15) << "\n";
        std::cout << "q_w0 = " << rs(q) << "\n";
        std::cout << "p_w1 = " << rs(p) << "\n";
        std::cout << "Q+P=1 at threshold: " << (exact ? "exact" : "NOT EXACT") << "\n";
    }
    return exact ? 0 : 1;
}

// -------------------------------------------------------------- variance --

int run_variance(int n, std::string settings_file, bool as_json)
{
    nlbox::SettingsQuad quad;
    if (settings_file.empty()) {
        if (n != 6)
            return usage_error("the default settings are defined for n = 6; pass --settings");
        settings_file = find_data_file("chsh_settings_corrected.txt");
    }
    quad = nlbox::load_settings_file(settings_file);
    if (quad.x1.n() != n)
        return usage_error("settings are length " + std::to_string(quad.x1.n()) +
                           " but --n is " + std::to_string(n));

    const nlbox::MeanSquare ms = nlbox::mean_square_chsh(quad);
    const Rational s1 = nlbox::chsh_of_settings(quad, 1);
    const double bound = std::sqrt(nlbox::to_double(ms.mean_square));
    if (as_json) {
        ordered_json j;
        j["n"] = n;
        j["settings"] = {{"x1", quad.x1.str()},
                         {"x2", quad.x2.str()},
                         {"y1", quad.y1.str()},
                         {"y2", quad.y2.str()}};
        j["file"] = settings_file;
        j["s_at_p1"] = rs(s1);
        j["mean_square"] = rs(ms.mean_square);
        j["bound"] = bound;
        ordered_json h = ordered_json::object();
        for (const auto& [s2, count] : ms.histogram)
            h[std::to_string(s2)] = count;
        j["histogram"] = h;
        emit(j);
    } else {
        std::cout << "n = " << n << "\n";
        std::cout << "settings: x1=" << quad.x1.str() << " x2=" << quad.x2.str()
                  << " y1=" << quad.y1.str() << " y2=" << quad.y2.str() << "\n";
        std::cout << "S at p=1: " << rs(s1) << "\n";
        std::cout << "mean_square = " << rs(ms.mean_square) << "\n";
        std::cout << "bound = " << nlbox::format_sig(bound, 13) << "\n";
        std::cout << "histogram:";
        for (const auto& [s2, count] : ms.histogram)
            std::cout << " S^2=" << s2 << ":" << count;
        std::cout << "\n";
    }
    return 0;
}

// ----------------------------------------------------------- uncertainty --

int run_uncertainty(int n, bool as_json)
{
    const std::vector<BitVec> inputs = nlbox::enumerate_inputs(n);
    std::uint64_t triples = 0;
    std::uint64_t uniform = 0;
    Rational expected(2);
    bool all_uniform = true;
    std::string first_deviation;
    double zeta = 0.0;
    for (const BitVec& x : inputs)
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            if (nlbox::inner_product(x, inputs[i]) != 0 &&
                nlbox::inner_product(x, inputs[i]) != 1)
                continue; // unreachable; keeps the loop shape obvious
            for (std::size_t j = i + 1; j < inputs.size(); ++j) {
                if (nlbox::inner_product(x, inputs[i]) != nlbox::inner_product(x, inputs[j]))
                    continue;
                const nlbox::Zeta z = nlbox::fine_grained_zeta(x, inputs[i], inputs[j]);
                ++triples;
                zeta = z.zeta;
                if (z.g2 == expected)
                    ++uniform;
                else if (all_uniform) {
                    all_uniform = false;
                    first_deviation = "x=" + x.str() + " y1=" + inputs[i].str() +
                                      " y2=" + inputs[j].str() + " g2=" + rs(z.g2);
                }
            }
        }
    if (as_json) {
        ordered_json j;
        j["n"] = n;
        j["triples"] = triples;
        j["uniform_g2"] = rs(expected);
        j["all_uniform"] = all_uniform;
        if (!all_uniform)
            j["first_deviation"] = first_deviation;
        j["zeta"] = zeta;
        emit(j);
    } else {
        std::cout << "n = " << n << "\n";
        std::cout << "triples = " << triples << "\n";
        if (all_uniform)
            std::cout << "g2 = " << rs(expected) << " for all triples\n";
        else
            std::cout << "g2 deviates first at " << first_deviation << "\n";
        std::cout << "zeta = " << nlbox::format_sig(zeta, 15) << "\n";
    }
    return all_uniform ? 0 : 1;
}

// ------------------------------------------------------------ tripartite --

int run_tripartite(int n, const std::string& parameter, bool as_json)
{
    const nlbox::TripartiteSettings set = nlbox::default_tripartite_settings(n);
    if (parameter == "I") {
        const int e000 = nlbox::tripartite_parity(set.x0, set.y0, set.z0, set.c) ? -1 : 1;
        const int e011 = nlbox::tripartite_parity(set.x0, set.y1, set.z1, set.c) ? -1 : 1;
        const int e100 = nlbox::tripartite_parity(set.x1, set.y0, set.z0, set.c) ? -1 : 1;
        const int e111 = nlbox::tripartite_parity(set.x1, set.y1, set.z1, set.c) ? -1 : 1;
        const int value = nlbox::tripartite_bell_I(set);
        const nlbox::TriMean m = nlbox::mean_square_tripartite_I(set);
        const double bound = std::sqrt(nlbox::to_double(m.mean_square));
        if (as_json) {
            ordered_json j;
            j["n"] = n;
            j["parameter"] = "I";
            j["settings"] = {{"x0", set.x0.str()}, {"x1", set.x1.str()}, {"y0", set.y0.str()},
                             {"y1", set.y1.str()}, {"z0", set.z0.str()}, {"z1", set.z1.str()},
                             {"c", set.c.str()}};
            j["correlations"] = {{"e000", e000}, {"e011", e011}, {"e100", e100}, {"e111", e111}};
            j["value"] = value;
            j["mean_square"] = rs(m.mean_square);
            j["bound"] = bound;
            j["symmetry_reduced"] = m.symmetry_reduced;
            emit(j);
        } else {
            std::cout << "n = " << n << ", parameter = I\n";
            std::cout << "settings: x0=" << set.x0.str() << " x1=" << set.x1.str()
                      << " y0=" << set.y0.str() << " y1=" << set.y1.str()
                      << " z0=" << set.z0.str() << " z1=" << set.z1.str() << " c=" << set.c.str()
                      << "\n";
            std::cout << "correlations: E000=" << e000 << " E011=" << e011 << " E100=" << e100
                      << " E111=" << e111 << "\n";
            std::cout << "I = " << value << "\n";
            std::cout << "mean_square = " << rs(m.mean_square) << "\n";
            std::cout << "bound = " << nlbox::format_sig(bound, 15) << "\n";
            std::cout << "symmetry_reduced = " << (m.symmetry_reduced ? "yes" : "no") << "\n";
        }
        return 0;
    }

    // parameter == "J"
    const int at_reference = nlbox::tripartite_J_algebraic(set);
    const nlbox::JSearchResult r = nlbox::tripartite_bell_J_bound(n);
    if (as_json) {
        ordered_json j;
        j["n"] = n;
        j["parameter"] = "J";
        j["value_at_reference"] = at_reference;
        j["candidates"] = r.candidates;
        j["bounded_search"] = r.bounded_search;
        j["mean_square"] = rs(r.mean_square);
        j["bound"] = r.bound;
        j["witness"] = {{"x0", r.best.x0.str()}, {"x1", r.best.x1.str()},
                        {"y0", r.best.y0.str()}, {"y1", r.best.y1.str()},
                        {"z0", r.best.z0.str()}, {"z1", r.best.z1.str()},
                        {"c", r.best.c.str()}};
        j["witness_value"] = nlbox::tripartite_J_algebraic(r.best);
        emit(j);
    } else {
        std::cout << "n = " << n << ", parameter = J\n";
        std::cout << "J at reference settings = " << at_reference << "\n";
        std::cout << "search: candidates = " << r.candidates
                  << ", bounded = " << (r.bounded_search ? "yes" : "no") << "\n";
        std::cout << "mean_square = " << rs(r.mean_square) << "\n";
        std::cout << "bound = " << nlbox::format_sig(r.bound, 15) << "\n";
        std::cout << "witness: x1=" << r.best.x1.str() << " y1=" << r.best.y1.str()
                  << " z1=" << r.best.z1.str() << "\n";
        std::cout << "J at witness = " << nlbox::tripartite_J_algebraic(r.best) << "\n";
    }
    return 0;
}

// -------------------------------------------------------------------- mc --

int run_mc(const Rational& p, std::uint64_t trials, std::uint64_t seed, bool as_json)
{
    const nlbox::McEstimate est = nlbox::monte_carlo_tradeoff(p, trials, seed);
    // Three-sigma acceptance, kept exact: (hat - exact)^2 <= 9 var / trials.
    auto within = [&](const Rational& hat, const Rational& exact) {
        const Rational diff = hat - exact;
        return diff * diff * Rational(trials) <= 9 * exact * (1 - exact);
    };
    const bool q_ok = within(est.q_hat, est.q_exact);
    const bool p_ok = within(est.p_hat, est.p_exact);
    if (as_json) {
        ordered_json j;
        j["p"] = rs(est.p);
        j["trials"] = est.trials;
        j["seed"] = est.seed;
        j["algorithm"] = est.algorithm;
        j["q_hat"] = rs(est.q_hat);
        j["q_exact"] = rs(est.q_exact);
        j["q_within_3_sigma"] = q_ok;
        j["p_hat"] = rs(est.p_hat);
        j["p_exact"] = rs(est.p_exact);
        j["p_within_3_sigma"] = p_ok;
        j["pass"] = q_ok && p_ok;
        emit(j);
    } else {
        std::cout << "p = " << rs(est.p) << ", trials = " << est.trials
                  << ", seed = " << est.seed << ", algorithm = " << est.algorithm << "\n";
        std::cout << "q_hat = " << rs(est.q_hat) << " exact = " << rs(est.q_exact)
                  << " within 3 sigma: " << (q_ok ? "yes" : "NO") << "\n";
        std::cout << "p_hat = " << rs(est.p_hat) << " exact = " << rs(est.p_exact)
                  << " within 3 sigma: " << (p_ok ? "yes" : "NO") << "\n";
        std::cout << "verdict: " << (q_ok && p_ok ? "pass" : "FAIL") << "\n";
    }
    return (q_ok && p_ok) ? 0 : 1;
}

// ------------------------------------------------------------- invariant --

int run_invariant(int grid, const std::string& out, bool as_json)
{
    const nlbox::AngleScanRow best = nlbox::chsh_max_over_angles(grid);
    if (!out.empty()) {
        std::ofstream file(out, std::ios::binary);
        if (!file)
            throw nlbox::Error("cannot open output file " + out);
        file << "tx1,tx2,ty1,ty2,S\n";
        nlbox::scan_angles(grid, [&](const nlbox::AngleScanRow& row) {
            file << nlbox::format_sig(row.tx1, 12) << "," << nlbox::format_sig(row.tx2, 12)
                 << "," << nlbox::format_sig(row.ty1, 12) << "," << nlbox::format_sig(row.ty2, 12)
                 << "," << nlbox::format_sig(row.s, 12) << "\n";
        });
    }
    if (as_json) {
        ordered_json j;
        j["grid"] = grid;
        j["max_s"] = best.s;
        j["argmax"] = {{"tx1", best.tx1}, {"tx2", best.tx2}, {"ty1", best.ty1},
                       {"ty2", best.ty2}};
        if (!out.empty())
            j["out"] = out;
        emit(j);
    } else {
        std::cout << "grid = " << grid << "\n";
        std::cout << "max S = " << nlbox::format_sig(best.s, 15) << "\n";
        std::cout << "argmax: tx1=" << nlbox::format_sig(best.tx1, 15)
                  << " tx2=" << nlbox::format_sig(best.tx2, 15)
                  << " ty1=" << nlbox::format_sig(best.ty1, 15)
                  << " ty2=" << nlbox::format_sig(best.ty2, 15) << "\n";
        if (!out.empty())
            std::cout << "wrote " << out << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ chsh --

int run_chsh(const std::string& settings_file, const Rational& p, bool as_json)
{
    const nlbox::SettingsQuad quad = nlbox::load_settings_file(settings_file);
    nlbox::validate_quad(quad);
    const Rational e = 2 * p - 1;
    const BitVec* xs[2] = {&quad.x1, &quad.x2};
    const BitVec* ys[2] = {&quad.y1, &quad.y2};
    Rational corr[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            corr[i][j] =
                e * (nlbox::inner_product(*xs[i], *ys[j]) ? -1 : 1);
    const Rational s = nlbox::chsh_of_settings(quad, p);
    const int w = nlbox::symmetry_parameter_W(quad.x1, quad.x2, quad.y1, quad.y2);
    const bool degenerate = quad.x1 == quad.x2 || quad.y1 == quad.y2;
    if (as_json) {
        ordered_json j;
        j["file"] = settings_file;
        j["settings"] = {{"x1", quad.x1.str()},
                         {"x2", quad.x2.str()},
                         {"y1", quad.y1.str()},
                         {"y2", quad.y2.str()}};
        j["p"] = rs(p);
        j["correlations"] = {{"e11", rs(corr[0][0])},
                             {"e12", rs(corr[0][1])},
                             {"e21", rs(corr[1][0])},
                             {"e22", rs(corr[1][1])}};
        j["s"] = rs(s);
        j["w"] = w;
        j["degenerate"] = degenerate;
        emit(j);
    } else {
        std::cout << "settings: x1=" << quad.x1.str() << " x2=" << quad.x2.str()
                  << " y1=" << quad.y1.str() << " y2=" << quad.y2.str() << "\n";
        std::cout << "p = " << rs(p) << "\n";
        std::cout << "E11 = " << rs(corr[0][0]) << " E12 = " << rs(corr[0][1])
                  << " E21 = " << rs(corr[1][0]) << " E22 = " << rs(corr[1][1]) << "\n";
        std::cout << "S = " << rs(s) << "\n";
        std::cout << "W = " << w << "\n";
        if (degenerate)
            std::cout << "note: degenerate quad (a repeated setting)\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"nonlocal box symmetry toolkit"};
    app.set_version_flag("--version", nlbox::kVersion);
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON instead of text");

    int inputs_n = 6;
    bool inputs_translations = false;
    auto* c_inputs = app.add_subcommand("inputs", "dump an admissible input space");
    c_inputs->add_option("--n", inputs_n, "space length (even, 2..16)")->required();
    c_inputs->add_flag("--translations", inputs_translations,
                       "dump the translation space instead");

    int partition_n = 6;
    bool partition_verify = false;
    auto* c_partition =
        app.add_subcommand("partition", "partition the translation space by symmetry");
    c_partition->add_option("--n", partition_n, "space length (even, 6..12)")->required();
    c_partition->add_flag("--verify", partition_verify, "run the structural checks");

    std::string fixtures_file;
    bool fixtures_verify = false;
    auto* c_fixtures = app.add_subcommand("fixtures", "load the reference dataset");
    c_fixtures->add_option("--file", fixtures_file, "fixture file (default: installed dataset)");
    c_fixtures->add_flag("--verify", fixtures_verify, "run the full check battery");

    int tradeoff_steps = 101;
    std::string tradeoff_out;
    auto* c_tradeoff =
        app.add_subcommand("tradeoff", "exact nonlocality/symmetry trade-off curve");
    c_tradeoff->add_option("--steps", tradeoff_steps, "sample count (>= 2)")->required();
    c_tradeoff->add_option("--out", tradeoff_out, "write CSV here instead of stdout");

    auto* c_tsirelson =
        app.add_subcommand("tsirelson", "consistency threshold of the two bounds");

    int variance_n = 6;
    std::string variance_settings;
    auto* c_variance =
        app.add_subcommand("variance", "translation-ensemble mean square of S");
    c_variance->add_option("--n", variance_n, "space length")->capture_default_str();
    c_variance->add_option("--settings", variance_settings, "settings quad file");

    int uncertainty_n = 6;
    auto* c_uncertainty =
        app.add_subcommand("uncertainty", "fine-grained mean square over all setting triples");
    c_uncertainty->add_option("--n", uncertainty_n, "space length (6 or 8)")
        ->capture_default_str();

    int tripartite_n = 8;
    std::string tripartite_parameter = "I";
    auto* c_tripartite =
        app.add_subcommand("tripartite", "three-party combinations at the reference settings");
    c_tripartite->add_option("--n", tripartite_n, "space length (8)")->capture_default_str();
    c_tripartite->add_option("--parameter", tripartite_parameter, "I or J")
        ->capture_default_str();

    std::string mc_p = "3/4";
    std::uint64_t mc_trials = 100000;
    std::uint64_t mc_seed = 1;
    auto* c_mc = app.add_subcommand("mc", "Monte Carlo check of the closed forms");
    c_mc->add_option("--p", mc_p, "box strength in [0, 1], rational or decimal")->required();
    c_mc->add_option("--trials", mc_trials, "trial count per pass")->capture_default_str();
    c_mc->add_option("--seed", mc_seed, "generator seed")->capture_default_str();

    int invariant_grid = 8;
    std::string invariant_out;
    auto* c_invariant =
        app.add_subcommand("invariant", "angle-model scan of the CHSH combination");
    c_invariant->add_option("--grid", invariant_grid, "angles per setting (multiple of 8)")
        ->capture_default_str();
    c_invariant->add_option("--out", invariant_out, "write the full sweep as CSV");

    std::string chsh_settings;
    std::string chsh_p = "1";
    auto* c_chsh = app.add_subcommand("chsh", "S for a settings quad at box strength p");
    c_chsh->add_option("--settings", chsh_settings, "settings quad file")->required();
    c_chsh->add_option("--p", chsh_p, "box strength in [0, 1]")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_inputs) {
            if (inputs_n < 2 || inputs_n > 16 || inputs_n % 2 != 0)
                return usage_error("--n must be even and within [2, 16]");
            return run_inputs(inputs_n, inputs_translations, as_json);
        }
        if (*c_partition) {
            if (partition_n < 6 || partition_n > 12 || partition_n % 2 != 0)
                return usage_error("--n must be even and within [6, 12]");
            return run_partition(partition_n, partition_verify, as_json);
        }
        if (*c_fixtures)
            return run_fixtures(fixtures_file, fixtures_verify, as_json);
        if (*c_tradeoff) {
            if (tradeoff_steps < 2)
                return usage_error("--steps must be at least 2");
            return run_tradeoff(tradeoff_steps, tradeoff_out, as_json);
        }
        if (*c_tsirelson)
            return run_tsirelson(as_json);
        if (*c_variance)
            return run_variance(variance_n, variance_settings, as_json);
        if (*c_uncertainty) {
            if (uncertainty_n != 6 && uncertainty_n != 8)
                return usage_error("--n must be 6 or 8 for the exhaustive scan");
            return run_uncertainty(uncertainty_n, as_json);
        }
        if (*c_tripartite) {
            if (tripartite_n != 8)
                return usage_error("--n must be 8 for the reference settings");
            if (tripartite_parameter != "I" && tripartite_parameter != "J")
                return usage_error("--parameter must be I or J");
            return run_tripartite(tripartite_n, tripartite_parameter, as_json);
        }
        if (*c_mc) {
            Rational p;
            try {
                p = nlbox::parse_rational(mc_p);
            } catch (const nlbox::ParseError& e) {
                return usage_error(std::string("--p: ") + e.what());
            }
            if (p < 0 || p > 1)
                return usage_error("--p must lie in [0, 1]");
            if (mc_trials == 0)
                return usage_error("--trials must be positive");
            return run_mc(p, mc_trials, mc_seed, as_json);
        }
        if (*c_invariant) {
            if (invariant_grid < 8 || invariant_grid % 8 != 0)
                return usage_error("--grid must be a multiple of 8, at least 8");
            return run_invariant(invariant_grid, invariant_out, as_json);
        }
        if (*c_chsh) {
            Rational p;
            try {
                p = nlbox::parse_rational(chsh_p);
            } catch (const nlbox::ParseError& e) {
                return usage_error(std::string("--p: ") + e.what());
            }
            if (p < 0 || p > 1)
                return usage_error("--p must lie in [0, 1]");
            return run_chsh(chsh_settings, p, as_json);
        }
    } catch (const nlbox::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
