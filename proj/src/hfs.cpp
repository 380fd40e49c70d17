#include "h2z/hfs.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "h2z/gfactor.hpp"

namespace h2z {

namespace {

constexpr AngularMomentum k_half = AngularMomentum::from_twice(1);
constexpr AngularMomentum k_three_half = AngularMomentum::from_twice(3);

std::string level_name(int v, int L, int twice_F, int twice_J) {
    std::ostringstream os;
    os << "(v=" << v << ", L=" << L << ", F=" << HalfInt::from_twice(twice_F).str()
       << ", J=" << HalfInt::from_twice(twice_J).str() << ")";
    return os.str();
}

} // namespace

RovibLevel make_rovib(int v, int L) {
    if (v < 0 || L < 0)
        throw ValidationError("ro-vibrational level requires v >= 0 and L >= 0");
    return RovibLevel{v, L};
}

HyperfineLevel make_level(int v, int L, AngularMomentum f, AngularMomentum j) {
    const RovibLevel rv = make_rovib(v, L);
    const int f2 = f.twice();
    const int j2 = j.twice();
    if (L % 2 == 0) {
        if (f2 != 1 || (j2 != 2 * L + 1 && j2 != 2 * L - 1) || j2 < 1)
            throw ValidationError("no such even-L hyperfine level " + level_name(v, L, f2, j2));
        return HyperfineLevel{rv, AngularMomentum::whole(0), k_half, j, LevelKind::EvenL};
    }
    if (f2 == 1) {
        if (j2 != 2 * L + 1 && j2 != 2 * L - 1)
            throw ValidationError("no such odd-L hyperfine level " + level_name(v, L, f2, j2));
        return HyperfineLevel{rv, AngularMomentum::whole(1), k_half, j, LevelKind::OddMixed};
    }
    if (f2 == 3) {
        if (j2 == 2 * L + 3 || (j2 == 2 * L - 3 && j2 >= 1))
            return HyperfineLevel{rv, AngularMomentum::whole(1), k_three_half, j, LevelKind::OddPure};
        if (j2 == 2 * L + 1 || j2 == 2 * L - 1)
            return HyperfineLevel{rv, AngularMomentum::whole(1), k_three_half, j, LevelKind::OddMixed};
    }
    throw ValidationError("no such hyperfine level " + level_name(v, L, f2, j2));
}

std::vector<HyperfineLevel> enumerate_levels(RovibLevel rovib) {
    make_rovib(rovib.v, rovib.L);
    const int L = rovib.L;
    std::vector<HyperfineLevel> out;
    const auto add = [&](int f2, int j2) {
        out.push_back(make_level(rovib.v, L, AngularMomentum::from_twice(f2),
                                 AngularMomentum::from_twice(j2)));
    };
    if (L % 2 == 0) {
        if (L >= 1)
            add(1, 2 * L - 1);
        add(1, 2 * L + 1);
        return out;
    }
    // odd L, ordered by increasing F then increasing J
    add(1, 2 * L - 1);
    add(1, 2 * L + 1);
    if (2 * L - 3 >= 1)
        add(3, 2 * L - 3);
    add(3, 2 * L - 1);
    add(3, 2 * L + 1);
    add(3, 2 * L + 3);
    return out;
}

bool is_pure(const HyperfineLevel& level) {
    return level.kind != LevelKind::OddMixed;
}

MixingPair recover_mixing(double g1_tilde_over_ge, int v, int L, AngularMomentum j) {
    if (L % 2 == 0)
        throw DomainError("mixing exists only for odd L");
    const int j2 = j.twice();
    if (j2 != 2 * L + 1 && j2 != 2 * L - 1)
        throw DomainError("mixed states have J = L +- 1/2");

    const double a = g1_over_ge(L, k_half, j).to_double();
    const double b = g1_over_ge(L, k_three_half, j).to_double();
    const double cross = crossed_reduced(L, SpinOperator::ElectronSpin) / wigner_eckart_norm(j);

    // Quadratic form on the unit circle: with C1 = cos t, C3 = sin t,
    //   a C1^2 + b C3^2 + 2 X C1 C3 = mean + half cos 2t + X sin 2t.
    const double mean = 0.5 * (a + b);
    const double half = 0.5 * (a - b);
    const double radius = std::hypot(half, cross);
    double d = g1_tilde_over_ge - mean;
    if (std::abs(d) > radius) {
        if (std::abs(d) - radius > 1e-6) {
            std::ostringstream os;
            os << "no mixing coefficients reproduce g1~/g_e = " << g1_tilde_over_ge << " for (L="
               << L << ", J=" << j.str() << "): attainable range [" << mean - radius << ", "
               << mean + radius << "]";
            throw InversionError(os.str());
        }
        d = std::copysign(radius, d);
    }
    const double delta = std::atan2(cross, half);
    const double acos_d = std::acos(d / radius);

    // Two intersections of the level set with the unit circle; the second
    // root is spurious (it is not the orthogonal partner). The physical
    // Ftilde = 1/2 state is the C1-dominant one.
    double c1 = 0, c3 = 0;
    for (const double u : {delta + acos_d, delta - acos_d}) {
        double x = std::cos(0.5 * u);
        double y = std::sin(0.5 * u);
        if (x < 0) {
            x = -x;
            y = -y;
        }
        if (std::abs(x) >= std::abs(c1)) {
            c1 = x;
            c3 = y;
        }
    }

    MixingPair pair;
    pair.f_half = MixingEntry{v, L, j2, 1, c1, c3};
    double k1 = -c3, k3 = c1;
    if (k1 < 0) {
        k1 = -k1;
        k3 = -k3;
    }
    pair.f_three_half = MixingEntry{v, L, j2, 3, k1, k3};
    return pair;
}

void MixingTable::insert(const MixingEntry& entry) {
    if (entry.L % 2 == 0)
        throw ValidationError("mixing entries require odd L");
    if (entry.twice_F != 1 && entry.twice_F != 3)
        throw ValidationError("mixing entry Ftilde must be 1/2 or 3/2");
    if (entry.twice_J != 2 * entry.L + 1 && entry.twice_J != 2 * entry.L - 1)
        throw ValidationError("mixing entry requires J = L +- 1/2");
    const double norm = entry.c1 * entry.c1 + entry.c3 * entry.c3;
    if (std::abs(norm - 1.0) > 1e-8) {
        std::ostringstream os;
        os << "mixing entry " << level_name(entry.v, entry.L, entry.twice_F, entry.twice_J)
           << " violates C1^2 + C3^2 = 1 (got " << norm << ")";
        throw ValidationError(os.str());
    }
    const Key key{entry.v, entry.L, entry.twice_J, entry.twice_F};
    if (entries_.count(key))
        throw ConfigError("duplicate mixing entry for " +
                          level_name(entry.v, entry.L, entry.twice_F, entry.twice_J));
    // partner orthogonality, when the partner is already present
    const Key partner_key{entry.v, entry.L, entry.twice_J, entry.twice_F == 1 ? 3 : 1};
    if (const auto it = entries_.find(partner_key); it != entries_.end()) {
        const MixingEntry& p = it->second;
        if (std::abs(entry.c1 * p.c1 + entry.c3 * p.c3) > 1e-8)
            throw ValidationError("mixing entries for (v=" + std::to_string(entry.v) +
                                  ", L=" + std::to_string(entry.L) +
                                  ", J=" + HalfInt::from_twice(entry.twice_J).str() +
                                  ") are not orthogonal");
    }
    entries_.emplace(key, entry);
}

const MixingEntry* MixingTable::find(int v, int L, int twice_J, int twice_F) const {
    const auto it = entries_.find(Key{v, L, twice_J, twice_F});
    return it == entries_.end() ? nullptr : &it->second;
}

const MixingEntry& MixingTable::at(int v, int L, int twice_J, int twice_F) const {
    const MixingEntry* e = find(v, L, twice_J, twice_F);
    if (!e)
        throw ConfigError("no mixing entry for level " + level_name(v, L, twice_F, twice_J));
    return *e;
}

const MixingEntry& MixingTable::at(const HyperfineLevel& level) const {
    return at(level.rovib.v, level.rovib.L, level.J.twice(), level.F.twice());
}

std::vector<MixingEntry> MixingTable::entries() const {
    std::vector<MixingEntry> out;
    out.reserve(entries_.size());
    for (const auto& [key, entry] : entries_)
        out.push_back(entry);
    return out;
}

MixingTable MixingTable::load(std::istream& in) {
    MixingTable table;
    std::string line;
    if (!std::getline(in, line))
        return table; // empty document -> empty table
    if (line != "v,L,twice_J,twice_Ftilde,C1,C3")
        throw ParseError("mixing table: bad header '" + line + "'");
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::istringstream row(line);
        MixingEntry e;
        char comma = ',';
        if (!(row >> e.v >> comma >> e.L >> comma >> e.twice_J >> comma >> e.twice_F >> comma >>
              e.c1 >> comma >> e.c3))
            throw ParseError("mixing table line " + std::to_string(lineno) + ": bad row");
        table.insert(e);
    }
    return table;
}

MixingTable MixingTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open mixing table: " + path);
    return load(in);
}

void MixingTable::save(std::ostream& out) const {
    out.precision(std::numeric_limits<double>::max_digits10);
    out << "v,L,twice_J,twice_Ftilde,C1,C3\n";
    for (const auto& [key, e] : entries_)
        out << e.v << ',' << e.L << ',' << e.twice_J << ',' << e.twice_F << ',' << e.c1 << ','
            << e.c3 << '\n';
}

} // namespace h2z
