#include "h2z/gfactor.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace h2z {

namespace {

constexpr AngularMomentum k_half = AngularMomentum::from_twice(1);
constexpr AngularMomentum k_three_half = AngularMomentum::from_twice(3);
constexpr AngularMomentum k_one = AngularMomentum::from_twice(2);

std::string key_name(int v, int L) {
    return "(v=" + std::to_string(v) + ", L=" + std::to_string(L) + ")";
}

[[noreturn]] void bad_combo(int L, AngularMomentum f, AngularMomentum j) {
    std::ostringstream os;
    os << "invalid hyperfine combination (L=" << L << ", F=" << f.str() << ", J=" << j.str()
       << ")";
    throw DomainError(os.str());
}

int parity_sign(int exponent) {
    return ((exponent % 2) + 2) % 2 == 0 ? 1 : -1;
}

// (-1)^(J + L + 1/2): J is half-integral for every hyperfine level here.
int phase_jl_half(AngularMomentum j, int L) {
    return parity_sign((j.twice() + 2 * L + 1) / 2);
}

// Named branches of the closed forms: J relative to L in halves.
enum Branch { up3 = 3, up1 = 1, dn1 = -1, dn3 = -3 };

Branch branch_of(int L, AngularMomentum j) {
    switch (j.twice() - 2 * L) {
    case 3: return up3;
    case 1: return up1;
    case -1: return dn1;
    case -3: return dn3;
    default: bad_combo(L, k_three_half, j);
    }
}

void check_combo(int L, AngularMomentum f, AngularMomentum j) {
    if (j.twice() < 1)
        bad_combo(L, f, j);
    if (L % 2 == 0) {
        if (f != k_half || std::abs(j.twice() - 2 * L) != 1)
            bad_combo(L, f, j);
        return;
    }
    const int d = j.twice() - 2 * L;
    if (f == k_half) {
        if (std::abs(d) != 1)
            bad_combo(L, f, j);
        return;
    }
    if (f == k_three_half) {
        if (std::abs(d) != 1 && std::abs(d) != 3)
            bad_combo(L, f, j);
        return;
    }
    bad_combo(L, f, j);
}

} // namespace

// --- orbital data ---------------------------------------------------------

void OrbitalData::insert(int v, int L, const OrbitalEntry& entry) {
    if (v < 0 || L < 0)
        throw ValidationError("orbital entry requires v >= 0 and L >= 0");
    if (L == 0) {
        if (entry.le_red != 0.0 || entry.l1_red != 0.0)
            throw ValidationError("orbital entry " + key_name(v, L) + " must be exactly zero");
    } else {
        if (!(entry.le_red > 0) || !(entry.l1_red > 0))
            throw ValidationError("orbital entry " + key_name(v, L) + " must be positive");
        // l1_red is close to sqrt(L(L+1))/2 (one proton carries half the
        // rotation); reject transcription slips beyond 1%.
        const double nominal = std::sqrt(L * (L + 1.0)) / 2.0;
        if (std::abs(entry.l1_red - nominal) > 0.01 * nominal)
            throw ValidationError("orbital entry " + key_name(v, L) + ": l1_red " +
                                  std::to_string(entry.l1_red) + " implausibly far from " +
                                  std::to_string(nominal));
    }
    if (!entries_.emplace(std::make_pair(v, L), entry).second)
        throw ValidationError("duplicate orbital entry " + key_name(v, L));
}

const OrbitalEntry* OrbitalData::find(int v, int L) const {
    const auto it = entries_.find(std::make_pair(v, L));
    return it == entries_.end() ? nullptr : &it->second;
}

const OrbitalEntry& OrbitalData::at(int v, int L) const {
    const OrbitalEntry* e = find(v, L);
    if (!e)
        throw DataMissingError("no orbital matrix elements for " + key_name(v, L));
    return *e;
}

OrbitalData OrbitalData::load(std::istream& in, bool allow_extended) {
    OrbitalData data;
    std::string line;
    if (!std::getline(in, line) || line != "L,v,le_red,l1_red")
        throw ParseError("orbital data: bad header '" + line + "'");
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::istringstream row(line);
        int L = 0, v = 0;
        OrbitalEntry e;
        char comma = ',';
        if (!(row >> L >> comma >> v >> comma >> e.le_red >> comma >> e.l1_red))
            throw ParseError("orbital data line " + std::to_string(lineno) + ": bad row");
        if (!allow_extended && (L < 0 || L > 4 || v < 0 || v > 4))
            throw ValidationError("orbital data line " + std::to_string(lineno) + ": " +
                                  key_name(v, L) +
                                  " outside the bundled range (pass --allow-extended to accept)");
        data.insert(v, L, e);
    }
    return data;
}

OrbitalData OrbitalData::load_file(const std::string& path, bool allow_extended) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open orbital data: " + path);
    return load(in, allow_extended);
}

// --- pure-state closed forms -----------------------------------------------

Fraction g1_over_ge(int L, AngularMomentum f, AngularMomentum j) {
    check_combo(L, f, j);
    if (L % 2 == 0)
        return j.twice() > 2 * L ? Fraction(1, 2 * L + 1) : Fraction(-1, 2 * L + 1);
    if (f == k_half)
        return j.twice() > 2 * L ? Fraction(-1, 3 * (2 * L + 1)) : Fraction(1, 3 * (2 * L + 1));
    switch (branch_of(L, j)) {
    case up3: return Fraction(1, 2 * L + 3);
    case up1: return Fraction(2 * L + 9, 3 * (2 * L + 1) * (2 * L + 3));
    case dn1: return Fraction(-(2 * L - 7), 3 * (2 * L - 1) * (2 * L + 1));
    case dn3: return Fraction(-1, 2 * L - 1);
    }
    bad_combo(L, f, j);
}

Fraction g2_scaled(int L, AngularMomentum f, AngularMomentum j) {
    check_combo(L, f, j);
    if (L % 2 == 0)
        return Fraction(0);
    if (f == k_half)
        return j.twice() > 2 * L ? Fraction(-4, 3 * (2 * L + 1)) : Fraction(4, 3 * (2 * L + 1));
    switch (branch_of(L, j)) {
    case up3: return Fraction(-2, 2 * L + 3);
    case up1: return Fraction(-2 * (2 * L + 9), 3 * (2 * L + 1) * (2 * L + 3));
    case dn1: return Fraction(2 * (2 * L - 7), 3 * (2 * L - 1) * (2 * L + 1));
    case dn3: return Fraction(2, 2 * L - 1);
    }
    bad_combo(L, f, j);
}

double g1_pure(int L, AngularMomentum f, AngularMomentum j, const PhysicalConstants& c) {
    return g1_over_ge(L, f, j).to_double() * c.g_e;
}

double g2_pure(int L, AngularMomentum f, AngularMomentum j, const PhysicalConstants& c) {
    return g2_scaled(L, f, j).to_double() * c.g_p * c.mass_ratio_me_mp;
}

double l_tot(int v, int L, const OrbitalData& data, const PhysicalConstants& c) {
    const OrbitalEntry& e = data.at(v, L);
    return e.le_red - 2.0 * c.mass_ratio_me_mp * e.l1_red;
}

double g3_coefficient(int L, AngularMomentum f, AngularMomentum j) {
    check_combo(L, f, j);
    const double Ld = L;
    if (f == k_half || L % 2 == 0) {
        if (j.twice() > 2 * L)
            return L == 0 ? 0.0 : 2.0 * std::sqrt(Ld) / (std::sqrt(Ld + 1) * (2 * L + 1));
        return 2.0 * std::sqrt(Ld + 1) / (std::sqrt(Ld) * (2 * L + 1));
    }
    switch (branch_of(L, j)) {
    case up3:
        return 2.0 * std::sqrt(Ld) / (std::sqrt(Ld + 1) * (2 * L + 3));
    case up1:
        return 2.0 * (2 * Ld * Ld + 3 * Ld - 3) / (std::sqrt(Ld * (Ld + 1)) * (2 * L + 1) * (2 * L + 3));
    case dn1:
        return 2.0 * (2 * Ld * Ld + Ld - 4) / (std::sqrt(Ld * (Ld + 1)) * (2 * L - 1) * (2 * L + 1));
    case dn3:
        return 2.0 * std::sqrt(Ld + 1) / (std::sqrt(Ld) * (2 * L - 1));
    }
    bad_combo(L, f, j);
}

double g3_pure(int v, int L, AngularMomentum f, AngularMomentum j, const OrbitalData& data,
               const PhysicalConstants& c) {
    return g3_coefficient(L, f, j) * l_tot(v, L, data, c);
}

// --- crossed elements -------------------------------------------------------

double crossed_reduced(int L, SpinOperator op) {
    if (L % 2 == 0)
        throw DomainError("crossed reduced elements exist only for odd L (got L=" +
                          std::to_string(L) + ")");
    const double magnitude = std::sqrt(8.0) / 3.0 * std::sqrt(L * (L + 1.0)) / std::sqrt(2.0 * L + 1.0);
    return op == SpinOperator::ElectronSpin ? magnitude : -magnitude;
}

// --- Wigner-Eckart pipeline route --------------------------------------------

double g1_via_wigner(int L, AngularMomentum f, AngularMomentum j, const PhysicalConstants& c) {
    check_combo(L, f, j);
    const AngularMomentum cap_l = AngularMomentum::whole(L);
    if (L % 2 == 0) {
        // <L S J||S||L S J> = <S||S||S> (-1)^(J+L+S+1) (2J+1) {S 1 S; J L J}
        const int phase = parity_sign((j.twice() + 2 * L + 1 + 2) / 2);
        const double red = spin_reduced_element(k_half) * phase * (j.twice() + 1) *
                           wigner_6j(k_half, k_one, k_half, j, cap_l, j);
        return c.g_e * red / wigner_eckart_norm(j);
    }
    const double red = spin_reduced_element(k_half) * phase_jl_half(j, L) * (f.twice() + 1) *
                       (j.twice() + 1) * wigner_6j(k_half, k_one, k_half, f, k_one, f) *
                       wigner_6j(f, k_one, f, j, cap_l, j);
    return c.g_e * red / wigner_eckart_norm(j);
}

double g2_via_wigner(int L, AngularMomentum f, AngularMomentum j, const PhysicalConstants& c) {
    check_combo(L, f, j);
    if (L % 2 == 0)
        return 0.0;
    const AngularMomentum cap_l = AngularMomentum::whole(L);
    const double red = spin_reduced_element(k_one) * phase_jl_half(j, L) * (f.twice() + 1) *
                       (j.twice() + 1) * wigner_6j(k_one, k_one, k_one, f, k_half, f) *
                       wigner_6j(f, k_one, f, j, cap_l, j);
    return -c.g_p * c.mass_ratio_me_mp * red / wigner_eckart_norm(j);
}

double g3_coefficient_via_wigner(int L, AngularMomentum f, AngularMomentum j) {
    check_combo(L, f, j);
    const AngularMomentum cap_l = AngularMomentum::whole(L);
    const int phase = parity_sign((j.twice() + 2 * L + f.twice() + 2) / 2);
    return phase * (j.twice() + 1) * wigner_6j(cap_l, k_one, cap_l, j, f, j) *
           std::sqrt(2.0 * L + 1.0) / wigner_eckart_norm(j);
}

double crossed_reduced_via_wigner(int L, AngularMomentum j, SpinOperator op) {
    if (L % 2 == 0)
        throw DomainError("crossed reduced elements exist only for odd L");
    const AngularMomentum cap_l = AngularMomentum::whole(L);
    const AngularMomentum f = k_half, fp = k_three_half;
    const double alpha = std::sqrt((f.twice() + 1.0) * (fp.twice() + 1.0)) * (j.twice() + 1) *
                         wigner_6j(f, k_one, fp, j, cap_l, j);
    if (op == SpinOperator::ElectronSpin) {
        const int phase = parity_sign((j.twice() + 2 * L + 2 * fp.twice() + 3) / 2);
        return alpha * phase * wigner_6j(k_half, k_one, k_half, fp, k_one, f) *
               spin_reduced_element(k_half);
    }
    const int phase = parity_sign((j.twice() + 2 * L + 3) / 2);
    return alpha * phase * wigner_6j(k_one, k_one, k_one, fp, k_half, f) *
           spin_reduced_element(k_one);
}

// --- totals -------------------------------------------------------------------

GFactorBreakdown g_total(const HyperfineLevel& level, const PhysicalConstants& c,
                         const OrbitalData& data, const MixingTable& mixing) {
    const int L = level.rovib.L;
    const int v = level.rovib.v;
    GFactorBreakdown out;
    if (is_pure(level)) {
        out.g1 = g1_pure(L, level.F, level.J, c);
        out.g2 = g2_pure(L, level.F, level.J, c);
        out.g3 = g3_pure(v, L, level.F, level.J, data, c);
        out.mixed = false;
        out.total = out.g1 + out.g2 + out.g3;
        return out;
    }
    const MixingEntry& mix = mixing.at(level);
    const double c1 = mix.c1, c3 = mix.c3;
    const double norm = wigner_eckart_norm(level.J);
    const double w1 = c1 * c1, w3 = c3 * c3;

    out.g1 = w1 * g1_pure(L, k_half, level.J, c) + w3 * g1_pure(L, k_three_half, level.J, c) +
             2.0 * c1 * c3 * c.g_e * crossed_reduced(L, SpinOperator::ElectronSpin) / norm;
    out.g2 = w1 * g2_pure(L, k_half, level.J, c) + w3 * g2_pure(L, k_three_half, level.J, c) -
             2.0 * c1 * c3 * c.g_p * c.mass_ratio_me_mp *
                 crossed_reduced(L, SpinOperator::NuclearSpin) / norm;
    // no crossed term: the orbital operators cannot couple F=1/2 to F=3/2
    out.g3 = w1 * g3_pure(v, L, k_half, level.J, data, c) +
             w3 * g3_pure(v, L, k_three_half, level.J, data, c);
    out.mixed = true;
    out.total = out.g1 + out.g2 + out.g3;
    return out;
}

double g_rot(int v, int L, const OrbitalData& data, const PhysicalConstants& c) {
    if (L < 1)
        throw DomainError("rotational g-factor requires L >= 1");
    return -l_tot(v, L, data, c) / (c.mass_ratio_me_mp * std::sqrt(L * (L + 1.0)));
}

double g_ratio(const HyperfineLevel& a, const HyperfineLevel& b, const PhysicalConstants& c,
               const OrbitalData& data, const MixingTable& mixing) {
    const double gb = g_total(b, c, data, mixing).total;
    if (std::abs(gb) < 1e-15)
        throw DomainError("g-factor ratio denominator vanishes");
    return g_total(a, c, data, mixing).total / gb;
}

double v_average(std::span<const double> values, std::span<const double> weights) {
    if (values.size() != weights.size())
        throw DomainError("v_average: values and weights differ in length");
    double acc = 0, total = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (weights[i] < 0)
            throw DomainError("v_average: negative weight");
        acc += values[i] * weights[i];
        total += weights[i];
    }
    if (total <= 0)
        throw DomainError("v_average: zero total weight");
    return acc / total;
}

} // namespace h2z
