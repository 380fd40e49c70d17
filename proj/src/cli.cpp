#include "h2z/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "h2z/constants.hpp"
#include "h2z/gfactor.hpp"
#include "h2z/hfs.hpp"
#include "h2z/tables.hpp"
#include "h2z/zeeman.hpp"

#ifndef H2Z_DEFAULT_DATA_DIR
#define H2Z_DEFAULT_DATA_DIR "data"
#endif

namespace h2z {

namespace {

struct GlobalOptions {
    std::string data_dir;
    std::string constants_file;
    std::string orbital_file;
    std::string mixing_file;
    std::string format = "text";
    bool allow_extended = false;

    std::string resolved_data_dir() const {
        if (!data_dir.empty())
            return data_dir;
        if (const char* env = std::getenv("H2Z_DATA_DIR"); env && *env)
            return env;
        return H2Z_DEFAULT_DATA_DIR;
    }
};

TableFormat parse_format(const std::string& name) {
    if (name == "text")
        return TableFormat::Text;
    if (name == "csv")
        return TableFormat::Csv;
    if (name == "json")
        return TableFormat::Json;
    throw ParseError("unknown output format '" + name + "' (use text, csv or json)");
}

/// Loaded run state; every referenced file must exist and parse before any
/// computation runs.
struct Loaded {
    PhysicalConstants constants;
    OrbitalData orbital;
    MixingTable mixing;
    std::string data_dir;
    bool constants_overridden = false;

    GFactorContext ctx() const { return GFactorContext{constants, orbital, mixing}; }
};

Loaded load_run_config(const GlobalOptions& opts) {
    Loaded run;
    run.data_dir = opts.resolved_data_dir();
    if (!opts.constants_file.empty()) {
        run.constants = load_constants_file(opts.constants_file);
        run.constants_overridden = true;
    } else {
        run.constants = default_constants();
    }
    const std::string orbital_path =
        opts.orbital_file.empty() ? run.data_dir + "/orbital_elements.csv" : opts.orbital_file;
    const std::string mixing_path =
        opts.mixing_file.empty() ? run.data_dir + "/mixing_coefficients.csv" : opts.mixing_file;
    run.orbital = OrbitalData::load_file(orbital_path, opts.allow_extended);
    run.mixing = MixingTable::load_file(mixing_path);
    return run;
}

AngularMomentum parse_am(const std::string& text, const char* what) {
    try {
        return AngularMomentum::parse(text);
    } catch (const Error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

std::string level_hint(int v, int L) {
    std::ostringstream os;
    os << "valid levels of (v=" << v << ", L=" << L << "):";
    for (const HyperfineLevel& l : enumerate_levels(RovibLevel{v, L}))
        os << " (F=" << l.F.str() << ", J=" << l.J.str() << ")";
    return os.str();
}

std::string kind_name(LevelKind kind) {
    switch (kind) {
    case LevelKind::EvenL: return "pure";
    case LevelKind::OddPure: return "pure";
    case LevelKind::OddMixed: return "mixed";
    }
    return "?";
}

std::string num17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// --- subcommand bodies ------------------------------------------------------

int cmd_constants(const Loaded& run, TableFormat format, std::ostream& out) {
    const PhysicalConstants& c = run.constants;
    if (format == TableFormat::Json) {
        nlohmann::json doc{{"g_e", c.g_e},
                           {"g_p", c.g_p},
                           {"mass_ratio_me_mp", c.mass_ratio_me_mp},
                           {"bohr_magneton_hz_per_tesla", c.bohr_magneton_hz_per_tesla},
                           {"source", run.constants_overridden ? "override file" : "defaults"}};
        out << doc.dump(2) << '\n';
        return k_exit_ok;
    }
    save_constants(c, out);
    out << "# source: " << (run.constants_overridden ? "override file" : "built-in defaults")
        << '\n';
    return k_exit_ok;
}

Table gfactor_report(const Loaded& run, const std::vector<HyperfineLevel>& levels) {
    Table t;
    t.title = "hyperfine state g-factors";
    t.columns = {{"v", ColumnKind::Label},          {"L", ColumnKind::Label},
                 {"F", ColumnKind::Label},          {"J", ColumnKind::Label},
                 {"state", ColumnKind::Label},      {"g1_over_ge", ColumnKind::Rational},
                 {"g2_scaled", ColumnKind::Rational},
                 {"g1", ColumnKind::Numeric, 0, 7}, {"g2", ColumnKind::Numeric, 0, 7},
                 {"g3", ColumnKind::Numeric, 0, -1, true},
                 {"g_J", ColumnKind::Numeric, 0, 7}};
    for (const HyperfineLevel& level : levels) {
        const GFactorBreakdown b = g_total(level, run.constants, run.orbital, run.mixing);
        const bool pure = !b.mixed;
        t.rows.push_back({std::to_string(level.rovib.v), std::to_string(level.rovib.L),
                          level.F.str(), level.J.str(), kind_name(level.kind),
                          pure ? g1_over_ge(level.rovib.L, level.F, level.J).str() : "",
                          pure ? g2_scaled(level.rovib.L, level.F, level.J).str() : "",
                          num17(b.g1), num17(b.g2), num17(b.g3), num17(b.total)});
    }
    return t;
}

int cmd_gfactor(const Loaded& run, TableFormat format, int v, int L,
                const std::optional<std::string>& f_text,
                const std::optional<std::string>& j_text, std::ostream& out) {
    std::vector<HyperfineLevel> levels;
    if (f_text || j_text) {
        if (!f_text || !j_text)
            throw ParseError("--F and --J must be given together; " + level_hint(v, L));
        try {
            levels.push_back(
                make_level(v, L, parse_am(*f_text, "--F"), parse_am(*j_text, "--J")));
        } catch (const ValidationError& e) {
            throw ValidationError(std::string(e.what()) + "; " + level_hint(v, L));
        }
    } else {
        levels = enumerate_levels(make_rovib(v, L));
    }
    write_table(gfactor_report(run, levels), format, out);
    return k_exit_ok;
}

int cmd_grot(const Loaded& run, TableFormat format, int v, int L, std::ostream& out) {
    const double value = g_rot(v, L, run.orbital, run.constants);
    if (format == TableFormat::Json) {
        out << nlohmann::json{{"v", v}, {"L", L}, {"g_rot", value}}.dump(2) << '\n';
    } else {
        out << "g_rot(v=" << v << ", L=" << L << ") = " << num17(value) << '\n';
    }
    return k_exit_ok;
}

HyperfineLevel parse_level_spec(const std::string& spec) {
    // v,L,F,J  e.g.  "0,1,3/2,5/2"
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : spec) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4)
        throw ParseError("level spec must be v,L,F,J (e.g. 0,1,3/2,5/2): got '" + spec + "'");
    int v = 0, L = 0;
    try {
        v = std::stoi(parts[0]);
        L = std::stoi(parts[1]);
    } catch (const std::exception&) {
        throw ParseError("level spec '" + spec + "': bad v or L");
    }
    try {
        return make_level(v, L, parse_am(parts[2], "F"), parse_am(parts[3], "J"));
    } catch (const ValidationError& e) {
        throw ValidationError(std::string(e.what()) + "; " + level_hint(v, L));
    }
}

int cmd_ratio(const Loaded& run, TableFormat format, const std::string& spec_a,
              const std::string& spec_b, std::ostream& out) {
    const HyperfineLevel a = parse_level_spec(spec_a);
    const HyperfineLevel b = parse_level_spec(spec_b);
    const double r = g_ratio(a, b, run.constants, run.orbital, run.mixing);
    if (format == TableFormat::Json) {
        out << nlohmann::json{{"a", spec_a}, {"b", spec_b}, {"ratio", r}, {"abs_ratio", std::abs(r)}}
                   .dump(2)
            << '\n';
    } else {
        out << "g(" << spec_a << ") / g(" << spec_b << ") = " << num17(r)
            << "   |ratio| = " << num17(std::abs(r)) << '\n';
    }
    return k_exit_ok;
}

int cmd_zeeman(const Loaded& run, TableFormat format, int v0, int v1, int L,
               const std::string& f_text, const std::string& j_text, double b_tesla,
               const std::string& pol_text, std::ostream& out, std::ostream& err) {
    const MagneticField field = make_field(b_tesla);
    if (field.b_tesla > k_weak_field_warn_tesla)
        err << "warning: B = " << field.b_tesla
            << " T is beyond the weak-field regime (> " << k_weak_field_warn_tesla
            << " T); the linear hyperfine g_J model degrades there\n";

    Polarization pol;
    if (pol_text == "sigma+")
        pol = Polarization::SigmaPlus;
    else if (pol_text == "sigma-")
        pol = Polarization::SigmaMinus;
    else if (pol_text == "pi")
        pol = Polarization::Pi;
    else
        throw ParseError("--pol must be sigma+, sigma- or pi");

    AngularMomentum f = parse_am(f_text, "--F");
    AngularMomentum j = parse_am(j_text, "--J");
    TwoPhotonTransition t;
    try {
        t = homologous_transition(v0, v1, L, f, j);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string(e.what()) + "; " + level_hint(v0, L));
    }
    const GFactorContext ctx = run.ctx();
    const double g_lower = g_total(t.lower, run.constants, run.orbital, run.mixing).total;
    const double g_upper = g_total(t.upper, run.constants, run.orbital, run.mixing).total;
    const auto comps = components(t, field, pol, ctx);

    nlohmann::json doc{{"L", L},       {"F", f.str()},           {"J", j.str()},
                       {"v_lower", v0}, {"v_upper", v1},          {"B_tesla", field.b_tesla},
                       {"pol", pol_text}, {"g_lower", g_lower},   {"g_upper", g_upper}};
    nlohmann::json jcomps = nlohmann::json::array();
    for (const ZeemanComponent& comp : comps)
        jcomps.push_back({{"m_lower", comp.m_lower.str()},
                          {"m_upper", comp.m_upper.str()},
                          {"delta_nu_hz", comp.delta_nu_hz}});
    doc["components"] = std::move(jcomps);

    std::ostringstream text;
    text << "two-photon line (v=" << v0 << ",L=" << L << ",F=" << f.str() << ",J=" << j.str()
         << ") -> (v=" << v1 << ", same), B = " << field.b_tesla << " T, " << pol_text << '\n';
    text << "  g_lower = " << num17(g_lower) << ", g_upper = " << num17(g_upper) << '\n';

    if (pol == Polarization::Pi) {
        const double split = pi_splitting(t, field, ctx);
        doc["pi_splitting_hz"] = split;
        text << "  pi splitting (extreme M_J components) = " << split << " Hz  (+- "
             << 0.3 * (field.b_tesla / 5e-5) << " Hz)\n";
    } else {
        try {
            const double shift = sigma_line_center_shift(t, field, ctx, pol);
            doc["sigma_center_shift_hz"] = shift;
            text << "  line-centre shift = " << shift << " Hz  (+- " << 5e-5 * std::abs(shift)
                 << " Hz)\n";
        } catch (const ForbiddenTransitionError&) {
            doc["sigma_center_shift_hz"] = "*";
            text << "  * forbidden in circular polarization: no M_J -> M_J"
                 << (pol == Polarization::SigmaPlus ? "+2" : "-2") << " component exists\n";
        }
    }
    if (comps.empty())
        text << "  (no components)\n";
    else {
        text << "  components (M -> M'):\n";
        for (const ZeemanComponent& comp : comps)
            text << "    " << comp.m_lower.str() << " -> " << comp.m_upper.str() << " : "
                 << comp.delta_nu_hz << " Hz\n";
    }

    if (format == TableFormat::Json)
        out << doc.dump(2) << '\n';
    else
        out << text.str();
    return k_exit_ok;
}

int cmd_reproduce(const Loaded& run, TableFormat format, const std::string& table_text, bool diff,
                  double b_tesla, int ratio_v, std::ostream& out, std::ostream& err) {
    const TableId id = parse_table_id(table_text);
    TableOptions opts;
    opts.field = make_field(b_tesla);
    opts.ratio_v = ratio_v;
    if (id == TableId::Zeeman && diff && b_tesla != 5e-5)
        throw ParseError("reference table 5 is tabulated at B = 5e-5 T; --diff requires it");

    const Table computed = generate_table(id, run.ctx(), opts);
    write_table(computed, format, out);

    if (!diff)
        return k_exit_ok;
    const std::string path =
        run.data_dir + "/golden/table" + std::to_string(static_cast<int>(id)) + ".csv";
    const Table reference = load_table_csv_file(id, path);
    const DiffResult result = diff_tables(computed, reference);
    err << "diff vs " << path << ": " << result.cells_checked << " cells checked, max |dev| = "
        << result.max_abs_deviation << ", violations: " << result.violations.size() << '\n';
    for (const CellDiff& v : result.violations)
        err << "  row " << v.row << " column " << v.column << ": reference '" << v.reference
            << "' computed '" << v.computed << "' |dev| = " << v.deviation << " > tol " << v.tol
            << '\n';
    return result.ok() ? k_exit_ok : k_exit_diff;
}

} // namespace

std::string default_data_dir() {
    return GlobalOptions{}.resolved_data_dir();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hyperfine-state g-factors and two-photon Zeeman predictions for H2+"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    GlobalOptions opts;
    app.add_option("--data-dir", opts.data_dir, "data directory (default: $H2Z_DATA_DIR)");
    app.add_option("--constants-file", opts.constants_file, "constants override file");
    app.add_option("--orbital-data", opts.orbital_file, "orbital matrix element table");
    app.add_option("--mixing-table", opts.mixing_file, "mixing coefficient table");
    app.add_option("--format", opts.format, "output format: text, csv, json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_flag("--allow-extended", opts.allow_extended,
                 "accept orbital data rows outside v,L in 0..4");

    auto* constants_cmd = app.add_subcommand("constants", "show the effective constants");

    int v = 0, L = 0;
    std::optional<std::string> f_text, j_text;
    auto* gfactor_cmd = app.add_subcommand("gfactor", "g-factors of hyperfine levels");
    gfactor_cmd->add_option("--v", v, "vibrational quantum number")->required();
    gfactor_cmd->add_option("--L", L, "rotational quantum number")->required();
    gfactor_cmd->add_option("--F", f_text, "total spin F (e.g. 3/2)");
    gfactor_cmd->add_option("--J", j_text, "total angular momentum J (e.g. 5/2)");

    int grot_v = 0, grot_L = 0;
    auto* grot_cmd = app.add_subcommand("grot", "rotational g-factor of (v, L)");
    grot_cmd->add_option("--v", grot_v, "vibrational quantum number")->required();
    grot_cmd->add_option("--L", grot_L, "rotational quantum number")->required();

    std::string ratio_a, ratio_b;
    auto* ratio_cmd = app.add_subcommand("ratio", "ratio of two level g-factors");
    ratio_cmd->add_option("--a", ratio_a, "numerator level as v,L,F,J")->required();
    ratio_cmd->add_option("--b", ratio_b, "denominator level as v,L,F,J")->required();

    int z_v0 = 0, z_v1 = 1, z_L = 0;
    std::string z_f = "1/2", z_j = "1/2", z_pol = "sigma+";
    double z_b = 5e-5;
    auto* zeeman_cmd = app.add_subcommand("zeeman", "Zeeman structure of a two-photon line");
    zeeman_cmd->add_option("--v0", z_v0, "lower vibrational level (default 0)");
    zeeman_cmd->add_option("--v1", z_v1, "upper vibrational level (default 1)");
    zeeman_cmd->add_option("--L", z_L, "rotational quantum number")->required();
    zeeman_cmd->add_option("--F", z_f, "total spin F")->required();
    zeeman_cmd->add_option("--J", z_j, "total angular momentum J")->required();
    zeeman_cmd->add_option("--B", z_b, "magnetic field in tesla (default 5e-5)");
    zeeman_cmd->add_option("--pol", z_pol, "polarization: sigma+, sigma-, pi")
        ->check(CLI::IsMember({"sigma+", "sigma-", "pi"}));

    std::string table_text;
    bool diff = false;
    double r_b = 5e-5;
    int ratio_v = 4;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "regenerate a reference table");
    reproduce_cmd->add_option("table", table_text, "table number 1..5")->required();
    reproduce_cmd->add_flag("--diff", diff, "compare against the bundled reference values");
    reproduce_cmd->add_option("--B", r_b, "field for table 5 (tesla)");
    reproduce_cmd->add_option("--v", ratio_v, "vibrational level for table 4 (default 4)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("h2z");
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return k_exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return k_exit_usage;
    }

    try {
        const TableFormat format = parse_format(opts.format);
        const Loaded run = load_run_config(opts);
        if (constants_cmd->parsed())
            return cmd_constants(run, format, out);
        if (gfactor_cmd->parsed())
            return cmd_gfactor(run, format, v, L, f_text, j_text, out);
        if (grot_cmd->parsed())
            return cmd_grot(run, format, grot_v, grot_L, out);
        if (ratio_cmd->parsed())
            return cmd_ratio(run, format, ratio_a, ratio_b, out);
        if (zeeman_cmd->parsed())
            return cmd_zeeman(run, format, z_v0, z_v1, z_L, z_f, z_j, z_b, z_pol, out, err);
        if (reproduce_cmd->parsed())
            return cmd_reproduce(run, format, table_text, diff, r_b, ratio_v, out, err);
        err << "error: no subcommand\n";
        return k_exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return k_exit_usage;
    }
}

} // namespace h2z
