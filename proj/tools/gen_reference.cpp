// Regenerates the derived data files from the transcribed reference tables:
//   data/mixing_coefficients.csv  - inverted from the g1~/g_e column of table 3
//   data/golden/table5.csv        - line shifts/splittings from the reference
//                                   g-factors at B = 5e-5 T
// Run from anywhere: paths are resolved against the data directory.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "h2z/cli.hpp"
#include "h2z/constants.hpp"
#include "h2z/gfactor.hpp"
#include "h2z/hfs.hpp"
#include "h2z/tables.hpp"

using namespace h2z;

namespace {

struct Key {
    int v, L, f2, j2;
    auto operator<=>(const Key&) const = default;
};

int col_index(const Table& t, const std::string& name) {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        if (t.columns[i].name == name)
            return static_cast<int>(i);
    throw ConfigError("no column " + name);
}

} // namespace

int main(int argc, char** argv) {
    const std::string data_dir = argc > 1 ? argv[1] : default_data_dir();
    const Table t2 = load_table_csv_file(TableId::EvenL, data_dir + "/golden/table2.csv");
    const Table t3 = load_table_csv_file(TableId::OddL, data_dir + "/golden/table3.csv");

    // --- mixing coefficients from the g1~/g_e column -------------------------
    MixingTable mixing;
    const int c_l = col_index(t3, "L"), c_v = col_index(t3, "v"), c_f = col_index(t3, "twice_F"),
              c_j = col_index(t3, "twice_J"), c_g1t = col_index(t3, "g1t_over_ge");
    for (const auto& row : t3.rows) {
        if (row[c_f] != "1" || row[c_g1t].empty())
            continue; // recovery uses the Ftilde = 1/2 rows only
        const int v = std::stoi(row[c_v]);
        const int L = std::stoi(row[c_l]);
        const auto j = AngularMomentum::from_twice(std::stoi(row[c_j]));
        const MixingPair pair = recover_mixing(std::stod(row[c_g1t]), v, L, j);
        mixing.insert(pair.f_half);
        mixing.insert(pair.f_three_half);
    }
    {
        std::ofstream out(data_dir + "/mixing_coefficients.csv");
        if (!out) {
            std::cerr << "cannot write mixing_coefficients.csv\n";
            return 1;
        }
        mixing.save(out);
        std::cout << "wrote " << mixing.size() << " mixing entries\n";
    }

    // --- reference g-factors keyed by (v, L, 2F, 2J) -------------------------
    // Mixed rows use the final (mixed) column; pure rows the pure total,
    // which is the internally consistent one.
    std::map<Key, double> g;
    const int c_gt = col_index(t3, "gt_total"), c_gp = col_index(t3, "g_total");
    for (const auto& row : t3.rows) {
        const Key key{std::stoi(row[c_v]), std::stoi(row[c_l]), std::stoi(row[c_f]),
                      std::stoi(row[c_j])};
        g[key] = std::stod(row[c_g1t].empty() ? row[c_gp] : row[c_gt]);
    }
    const int e_l = col_index(t2, "L"), e_v = col_index(t2, "v"), e_j = col_index(t2, "twice_J"),
              e_g = col_index(t2, "g_total");
    for (const auto& row : t2.rows) {
        const int L = std::stoi(row[e_l]);
        const double value = std::stod(row[e_g]);
        if (row[e_v].empty()) { // L = 0: v-independent
            for (int v = 0; v <= 4; ++v)
                g[Key{v, L, 1, std::stoi(row[e_j])}] = value;
        } else {
            g[Key{std::stoi(row[e_v]), L, 1, std::stoi(row[e_j])}] = value;
        }
    }

    // --- table 5 --------------------------------------------------------------
    const PhysicalConstants c = default_constants();
    const double scale = c.bohr_magneton_hz_per_tesla * 5e-5;
    std::ofstream out(data_dir + "/golden/table5.csv");
    if (!out) {
        std::cerr << "cannot write golden/table5.csv\n";
        return 1;
    }
    out << "L,twice_F,twice_J,sigma_shift_hz,pi_splitting_hz\n";
    int rows = 0;
    for (int L = 0; L <= 3; ++L) {
        for (const HyperfineLevel& level : enumerate_levels(RovibLevel{0, L})) {
            const int f2 = level.F.twice(), j2 = level.J.twice();
            const double gl = g.at(Key{0, L, f2, j2});
            const double gu = g.at(Key{1, L, f2, j2});
            char sigma[32] = "*";
            if (j2 >= 2)
                std::snprintf(sigma, sizeof sigma, "%.0f", 0.5 * (gl + gu) * scale);
            char split[32];
            std::snprintf(split, sizeof split, "%.1f", 0.5 * j2 * (gu - gl) * scale);
            out << L << ',' << f2 << ',' << j2 << ',' << sigma << ',' << split << '\n';
            ++rows;
        }
    }
    std::cout << "wrote " << rows << " table5 rows\n";
    return 0;
}
