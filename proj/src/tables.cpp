#include "h2z/tables.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace h2z {

namespace {

std::string num_str(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fixed_str(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    return buf;
}

std::string sci_str(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", decimals, x);
    return buf;
}

double parse_num(const std::string& cell, const std::string& column) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(cell, &pos);
        if (pos != cell.size())
            throw std::invalid_argument(cell);
        return x;
    } catch (const std::exception&) {
        throw ParseError("column '" + column + "': bad number '" + cell + "'");
    }
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

struct RatioDef {
    int num_L, num_F2, num_J2;
    int den_L, den_F2, den_J2;
    const char* experiment;
};

// The measured ratio set this table tracks; experimental values quoted
// where available.
constexpr RatioDef k_ratio_defs[] = {
    {1, 1, 3, 1, 3, 5, "0.584(3)"},
    {1, 3, 3, 1, 3, 5, ""},
    {1, 1, 3, 3, 3, 9, ""},
};

} // namespace

TableId parse_table_id(const std::string& text) {
    if (text.size() == 1 && text[0] >= '1' && text[0] <= '5')
        return static_cast<TableId>(text[0] - '0');
    throw ParseError("table id must be 1..5, got '" + text + "'");
}

namespace {

std::vector<ColumnSpec> columns_for(TableId id) {
    using CK = ColumnKind;
    switch (id) {
    case TableId::Orbital:
        return {{"L", CK::Label, 0, -1},
                {"v", CK::Label, 0, -1},
                {"le_red", CK::Numeric, 0.0, -1},
                {"l1_red", CK::Numeric, 0.0, -1},
                {"ltot", CK::Numeric, 1e-7, -1, true},
                {"grot", CK::Numeric, 2e-4, 4}};
    case TableId::EvenL:
        return {{"L", CK::Label, 0, -1},
                {"v", CK::Label, 0, -1},
                {"twice_J", CK::Label, 0, -1},
                {"g1_over_ge", CK::Rational, 0, -1},
                {"g3", CK::Numeric, 1e-7, -1, true},
                {"g_total", CK::Numeric, 1e-7, 7}};
    case TableId::OddL:
        return {{"L", CK::Label, 0, -1},
                {"v", CK::Label, 0, -1},
                {"twice_F", CK::Label, 0, -1},
                {"twice_J", CK::Label, 0, -1},
                {"g1_over_ge", CK::Rational, 0, -1},
                {"g2_scaled", CK::Rational, 0, -1},
                {"g3", CK::Numeric, 1e-7, -1, true},
                {"g_total", CK::Numeric, 1e-7, 7},
                {"g1t_over_ge", CK::Numeric, 2e-6, 7},
                {"g2t_scaled", CK::Numeric, 2e-6, 7},
                {"g3t", CK::Numeric, 2e-6, -1, true},
                {"gt_total", CK::Numeric, 2e-6, 7}};
    case TableId::Ratios:
        return {{"num_L", CK::Label, 0, -1},
                {"num_twice_F", CK::Label, 0, -1},
                {"num_twice_J", CK::Label, 0, -1},
                {"den_L", CK::Label, 0, -1},
                {"den_twice_F", CK::Label, 0, -1},
                {"den_twice_J", CK::Label, 0, -1},
                {"ratio", CK::NumericRel, 0.01, 4},
                {"experiment", CK::Info, 0, -1}};
    case TableId::Zeeman:
        return {{"L", CK::Label, 0, -1},
                {"twice_F", CK::Label, 0, -1},
                {"twice_J", CK::Label, 0, -1},
                {"sigma_shift_hz", CK::StarOrNumeric, 2.0, 0},
                {"pi_splitting_hz", CK::Numeric, 0.3, 1}};
    }
    throw DomainError("unknown table id");
}

std::string table_title(TableId id) {
    switch (id) {
    case TableId::Orbital:
        return "Table 1: reduced orbital matrix elements, <||L_tot||> and g_rot";
    case TableId::EvenL:
        return "Table 2: g-factors of the hyperfine states, even L (0, 2, 4)";
    case TableId::OddL:
        return "Table 3: hyperfine g-factors with state mixing, odd L (1, 3)";
    case TableId::Ratios:
        return "Table 4: g-factor ratios of hyperfine states";
    case TableId::Zeeman:
        return "Table 5: Zeeman shift and splitting of two-photon lines";
    }
    return {};
}

Table generate_orbital(const GFactorContext& ctx) {
    Table t;
    t.id = TableId::Orbital;
    // single L = 0 row: both elements vanish for all v
    const OrbitalEntry& zero = ctx.orbital.at(0, 0);
    t.rows.push_back({"0", "", num_str(zero.le_red), num_str(zero.l1_red), num_str(0.0), ""});
    for (int L = 1; L <= 4; ++L) {
        for (int v = 0; v <= 4; ++v) {
            const OrbitalEntry& e = ctx.orbital.at(v, L);
            t.rows.push_back({std::to_string(L), std::to_string(v), num_str(e.le_red),
                              num_str(e.l1_red), num_str(l_tot(v, L, ctx.orbital, ctx.constants)),
                              num_str(g_rot(v, L, ctx.orbital, ctx.constants))});
        }
    }
    return t;
}

Table generate_even_l(const GFactorContext& ctx) {
    Table t;
    t.id = TableId::EvenL;
    const auto emit = [&](int L, int v, bool blank_v) {
        for (const HyperfineLevel& level : enumerate_levels(RovibLevel{v, L})) {
            const GFactorBreakdown b = g_total(level, ctx.constants, ctx.orbital, ctx.mixing);
            t.rows.push_back({std::to_string(L), blank_v ? "" : std::to_string(v),
                              std::to_string(level.J.twice()),
                              g1_over_ge(L, level.F, level.J).str(), num_str(b.g3),
                              num_str(b.total)});
        }
    };
    emit(0, 0, true); // v-independent: spins only, no orbital term
    for (int L = 2; L <= 4; L += 2)
        for (int v = 0; v <= 4; ++v)
            emit(L, v, false);
    return t;
}

Table generate_odd_l(const GFactorContext& ctx) {
    Table t;
    t.id = TableId::OddL;
    for (int L = 1; L <= 3; L += 2) {
        for (int v = 0; v <= 4; ++v) {
            for (const HyperfineLevel& level : enumerate_levels(RovibLevel{v, L})) {
                const double pure_g1 = g1_pure(L, level.F, level.J, ctx.constants);
                const double pure_g2 = g2_pure(L, level.F, level.J, ctx.constants);
                const double pure_g3 =
                    g3_pure(v, L, level.F, level.J, ctx.orbital, ctx.constants);
                const GFactorBreakdown b = g_total(level, ctx.constants, ctx.orbital, ctx.mixing);
                std::vector<std::string> row{
                    std::to_string(L),
                    std::to_string(v),
                    std::to_string(level.F.twice()),
                    std::to_string(level.J.twice()),
                    g1_over_ge(L, level.F, level.J).str(),
                    g2_scaled(L, level.F, level.J).str(),
                    num_str(pure_g3),
                    num_str(pure_g1 + pure_g2 + pure_g3),
                };
                if (b.mixed) {
                    row.push_back(num_str(b.g1 / ctx.constants.g_e));
                    row.push_back(
                        num_str(b.g2 / (ctx.constants.g_p * ctx.constants.mass_ratio_me_mp)));
                    row.push_back(num_str(b.g3));
                } else {
                    row.insert(row.end(), {"", "", ""});
                }
                row.push_back(num_str(b.total));
                t.rows.push_back(std::move(row));
            }
        }
    }
    return t;
}

Table generate_ratios(const GFactorContext& ctx, int ratio_v) {
    Table t;
    t.id = TableId::Ratios;
    for (const RatioDef& def : k_ratio_defs) {
        const HyperfineLevel num = make_level(ratio_v, def.num_L,
                                              AngularMomentum::from_twice(def.num_F2),
                                              AngularMomentum::from_twice(def.num_J2));
        const HyperfineLevel den = make_level(ratio_v, def.den_L,
                                              AngularMomentum::from_twice(def.den_F2),
                                              AngularMomentum::from_twice(def.den_J2));
        const double r = std::abs(g_ratio(num, den, ctx.constants, ctx.orbital, ctx.mixing));
        t.rows.push_back({std::to_string(def.num_L), std::to_string(def.num_F2),
                          std::to_string(def.num_J2), std::to_string(def.den_L),
                          std::to_string(def.den_F2), std::to_string(def.den_J2), num_str(r),
                          def.experiment});
    }
    t.notes.push_back("ratios computed at a single v=" + std::to_string(ratio_v) +
                      "; reference values average several higher vibrational states with "
                      "population weights not bundled here, hence the 1% comparison tolerance");
    return t;
}

Table generate_zeeman(const GFactorContext& ctx, MagneticField field) {
    Table t;
    t.id = TableId::Zeeman;
    for (const ZeemanLine& line : zeeman_line_table(field, ctx)) {
        t.rows.push_back({std::to_string(line.L), std::to_string(line.F.twice()),
                          std::to_string(line.J.twice()),
                          line.sigma_forbidden ? "*" : num_str(line.sigma_shift_hz),
                          num_str(line.pi_splitting_hz)});
    }
    std::ostringstream os;
    os << "B = " << field.b_tesla << " T; * marks lines forbidden in circular polarization";
    t.notes.push_back(os.str());
    return t;
}

} // namespace

Table generate_table(TableId id, const GFactorContext& ctx, const TableOptions& opts) {
    Table t;
    switch (id) {
    case TableId::Orbital: t = generate_orbital(ctx); break;
    case TableId::EvenL: t = generate_even_l(ctx); break;
    case TableId::OddL: t = generate_odd_l(ctx); break;
    case TableId::Ratios: t = generate_ratios(ctx, opts.ratio_v); break;
    case TableId::Zeeman: t = generate_zeeman(ctx, opts.field); break;
    }
    t.title = table_title(id);
    t.columns = columns_for(id);
    return t;
}

Table load_table_csv(TableId id, std::istream& in) {
    Table t;
    t.id = id;
    t.title = table_title(id);
    t.columns = columns_for(id);

    std::string expected_header;
    for (const ColumnSpec& col : t.columns)
        expected_header += (expected_header.empty() ? "" : ",") + col.name;

    std::string line;
    if (!std::getline(in, line) || line != expected_header)
        throw ParseError("table " + std::to_string(static_cast<int>(id)) + ": bad header '" +
                         line + "' (expected '" + expected_header + "')");
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto cells = split_csv(line);
        if (cells.size() != t.columns.size())
            throw ParseError("table " + std::to_string(static_cast<int>(id)) + ": row with " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(t.columns.size()));
        t.rows.push_back(std::move(cells));
    }
    return t;
}

Table load_table_csv_file(TableId id, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open reference table: " + path);
    return load_table_csv(id, in);
}

DiffResult diff_tables(const Table& computed, const Table& reference) {
    if (computed.id != reference.id)
        throw ValidationError("diff: table ids differ");
    if (computed.rows.size() != reference.rows.size())
        throw ValidationError("diff: row count mismatch (computed " +
                              std::to_string(computed.rows.size()) + ", reference " +
                              std::to_string(reference.rows.size()) + ")");
    DiffResult result;
    for (std::size_t r = 0; r < computed.rows.size(); ++r) {
        for (std::size_t c = 0; c < computed.columns.size(); ++c) {
            const ColumnSpec& col = computed.columns[c];
            const std::string& got = computed.rows[r][c];
            const std::string& want = reference.rows[r][c];
            const auto violation = [&](double dev) {
                result.violations.push_back(CellDiff{r, c, col.name, want, got, dev, col.tol});
            };
            switch (col.kind) {
            case ColumnKind::Info:
                break;
            case ColumnKind::Label:
            case ColumnKind::Rational:
                ++result.cells_checked;
                if (got != want)
                    violation(0);
                break;
            case ColumnKind::StarOrNumeric:
            case ColumnKind::Numeric:
            case ColumnKind::NumericRel: {
                ++result.cells_checked;
                const bool got_blankish = got.empty() || got == "*";
                const bool want_blankish = want.empty() || want == "*";
                if (got_blankish || want_blankish) {
                    if (got != want)
                        violation(0);
                    break;
                }
                const double a = parse_num(got, col.name);
                const double b = parse_num(want, col.name);
                double dev = std::abs(a - b);
                if (col.kind == ColumnKind::NumericRel)
                    dev = std::abs(b) > 0 ? dev / std::abs(b) : dev;
                result.max_abs_deviation = std::max(result.max_abs_deviation, dev);
                if (dev > col.tol)
                    violation(dev);
                break;
            }
            }
        }
    }
    return result;
}

namespace {

std::string display_cell(const std::string& cell, const ColumnSpec& col) {
    if (cell.empty() || cell == "*")
        return cell;
    if (!col.sci && col.text_precision < 0)
        return cell;
    switch (col.kind) {
    case ColumnKind::Numeric:
    case ColumnKind::NumericRel:
    case ColumnKind::StarOrNumeric: {
        const double x = parse_num(cell, col.name);
        return col.sci ? sci_str(x, 3) : fixed_str(x, col.text_precision);
    }
    default:
        return cell;
    }
}

void write_text(const Table& t, std::ostream& out) {
    out << t.title << '\n';
    std::vector<std::vector<std::string>> shown;
    shown.reserve(t.rows.size());
    for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (std::size_t c = 0; c < row.size(); ++c)
            cells.push_back(display_cell(row[c], t.columns[c]));
        shown.push_back(std::move(cells));
    }
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        width[c] = t.columns[c].name.size();
        for (const auto& row : shown)
            width[c] = std::max(width[c], row[c].size());
    }
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << t.columns[c].name;
    out << '\n';
    for (const auto& row : shown) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
        out << '\n';
    }
    for (const auto& note : t.notes)
        out << "note: " << note << '\n';
}

void write_csv(const Table& t, std::ostream& out) {
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        out << (c ? "," : "") << t.columns[c].name;
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << row[c];
        out << '\n';
    }
}

void write_json(const Table& t, std::ostream& out) {
    nlohmann::json doc;
    doc["table"] = static_cast<int>(t.id);
    doc["title"] = t.title;
    doc["notes"] = t.notes;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const ColumnSpec& col = t.columns[c];
            const std::string& cell = row[c];
            if (cell.empty())
                obj[col.name] = nullptr;
            else if ((col.kind == ColumnKind::Numeric || col.kind == ColumnKind::NumericRel ||
                      col.kind == ColumnKind::StarOrNumeric) &&
                     cell != "*")
                obj[col.name] = parse_num(cell, col.name);
            else
                obj[col.name] = cell;
        }
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

} // namespace

void write_table(const Table& table, TableFormat format, std::ostream& out) {
    switch (format) {
    case TableFormat::Text: write_text(table, out); break;
    case TableFormat::Csv: write_csv(table, out); break;
    case TableFormat::Json: write_json(table, out); break;
    }
}

} // namespace h2z
