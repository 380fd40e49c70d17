#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "h2z/zeeman.hpp"

namespace h2z {

/// The five reference tables the CLI can regenerate and diff.
enum class TableId {
    Orbital = 1, ///< reduced orbital elements, <||L_tot||>, g_rot
    EvenL = 2,   ///< g-factors, L = 0, 2, 4
    OddL = 3,    ///< hyperfine g-factors with mixing, L = 1 and 3
    Ratios = 4,  ///< measured g-factor ratios vs computed
    Zeeman = 5,  ///< two-photon line shifts and splittings
};

TableId parse_table_id(const std::string& text);

/// How a column participates in a diff.
enum class ColumnKind {
    Label,         ///< compared exactly as strings (quantum numbers)
    Rational,      ///< exact rational strings, compared verbatim
    Numeric,       ///< |computed - reference| <= tol
    NumericRel,    ///< |computed - reference| <= tol * |reference|
    StarOrNumeric, ///< "*" marker must match; otherwise Numeric
    Info,          ///< carried along, never diffed
};

struct ColumnSpec {
    std::string name;
    ColumnKind kind = ColumnKind::Label;
    double tol = 0;
    int text_precision = -1; ///< decimals in aligned text mode; -1: as-is
    bool sci = false;        ///< scientific notation in aligned text mode
};

/// A generated or loaded table: cells are canonical strings (numerics at
/// full round-trip precision), blank cells empty.
struct Table {
    TableId id = TableId::Orbital;
    std::string title;
    std::vector<ColumnSpec> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
};

struct TableOptions {
    MagneticField field{5e-5}; ///< table 5 only
    int ratio_v = 4;           ///< table 4 only
};

Table generate_table(TableId id, const GFactorContext& ctx, const TableOptions& opts = {});

/// Reads a table back from its delimited form (same schema the generator
/// emits and the bundled reference files use).
Table load_table_csv(TableId id, std::istream& in);
Table load_table_csv_file(TableId id, const std::string& path);

struct CellDiff {
    std::size_t row = 0;
    std::size_t col = 0;
    std::string column;
    std::string reference;
    std::string computed;
    double deviation = 0; ///< absolute (or relative for NumericRel)
    double tol = 0;
};

struct DiffResult {
    std::vector<CellDiff> violations;
    double max_abs_deviation = 0; ///< over all diffed numeric cells
    std::size_t cells_checked = 0;

    bool ok() const { return violations.empty(); }
};

/// Compares per the table's column kinds. Row sets must match.
DiffResult diff_tables(const Table& computed, const Table& reference);

enum class TableFormat { Text, Csv, Json };

void write_table(const Table& table, TableFormat format, std::ostream& out);

} // namespace h2z
