#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>

#include "h2z/angular.hpp"
#include "h2z/constants.hpp"
#include "h2z/fraction.hpp"
#include "h2z/hfs.hpp"

namespace h2z {

/// Reduced orbital matrix elements divided by sqrt(2L+1), dimensionless
/// (hbar = 1), keyed by (v, L). Entries with L = 0 are exactly zero.
struct OrbitalEntry {
    double le_red = 0; ///< <v,L||L_e||v,L> / sqrt(2L+1)
    double l1_red = 0; ///< <v,L||L_1||v,L> / sqrt(2L+1)
};

class OrbitalData {
public:
    void insert(int v, int L, const OrbitalEntry& entry);

    const OrbitalEntry* find(int v, int L) const;
    const OrbitalEntry& at(int v, int L) const; // DataMissingError naming (v,L)

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    /// Delimited text, header `L,v,le_red,l1_red`. Rows with v or L outside
    /// 0..4 are rejected unless allow_extended is set.
    static OrbitalData load(std::istream& in, bool allow_extended = false);
    static OrbitalData load_file(const std::string& path, bool allow_extended = false);

private:
    std::map<std::pair<int, int>, OrbitalEntry> entries_; // (v,L) -> entry
};

/// The three contributions to a level g-factor: electron spin (g1),
/// nuclear spin (g2), orbital momenta (g3). total == g1 + g2 + g3 by
/// construction.
struct GFactorBreakdown {
    double g1 = 0;
    double g2 = 0;
    double g3 = 0;
    double total = 0;
    bool mixed = false;
};

// --- pure-state closed forms -------------------------------------------

/// g1 / g_e as an exact rational, e.g. +1/5 (L=2, J=5/2), +5/9 (L=1,
/// F=3/2, J=1/2). Throws DomainError on an invalid (L,F,J) combination.
Fraction g1_over_ge(int L, AngularMomentum f, AngularMomentum j);

/// (m_p/m_e) g2 / g_p as an exact rational; exact 0 for even L (I = 0).
Fraction g2_scaled(int L, AngularMomentum f, AngularMomentum j);

double g1_pure(int L, AngularMomentum f, AngularMomentum j, const PhysicalConstants& c);
double g2_pure(int L, AngularMomentum f, AngularMomentum j, const PhysicalConstants& c);

/// <||L_tot||> = le_red - 2 (m_e/m_p) l1_red for (v, L).
double l_tot(int v, int L, const OrbitalData& data, const PhysicalConstants& c);

/// Geometric coefficient multiplying <||L_tot||> in g3.
double g3_coefficient(int L, AngularMomentum f, AngularMomentum j);

double g3_pure(int v, int L, AngularMomentum f, AngularMomentum j,
               const OrbitalData& data, const PhysicalConstants& c);

// --- state-mixing ingredients ------------------------------------------

enum class SpinOperator { ElectronSpin, NuclearSpin };

/// Crossed reduced matrix element <L,1/2,1,F=1/2,J || T || L,1/2,1,F=3/2,J>
/// for T = S_e or I: +-(sqrt(8)/3) sqrt(L(L+1)) / sqrt(2L+1), sign + for
/// the electron spin and - for the nuclear spin. Odd L only.
double crossed_reduced(int L, SpinOperator op);

// --- Wigner-Eckart pipeline route (same quantities through generic 6j
// --- recoupling; used to cross-check every closed form) -----------------

double g1_via_wigner(int L, AngularMomentum f, AngularMomentum j, const PhysicalConstants& c);
double g2_via_wigner(int L, AngularMomentum f, AngularMomentum j, const PhysicalConstants& c);
double g3_coefficient_via_wigner(int L, AngularMomentum f, AngularMomentum j);
double crossed_reduced_via_wigner(int L, AngularMomentum j, SpinOperator op);

// --- totals --------------------------------------------------------------

/// Full breakdown for a level. Pure levels sum the closed forms; mixed
/// levels use the (C1, C3) entry with crossed terms in g1 and g2 and none
/// in g3. Throws ConfigError when a mixed level has no mixing entry.
GFactorBreakdown g_total(const HyperfineLevel& level, const PhysicalConstants& c,
                         const OrbitalData& data, const MixingTable& mixing);

/// Rotational g-factor -(m_p/m_e) <||L_tot||> / sqrt(L(L+1)); L >= 1.
double g_rot(int v, int L, const OrbitalData& data, const PhysicalConstants& c);

/// g_total(a) / g_total(b). Throws DomainError when |g(b)| vanishes.
double g_ratio(const HyperfineLevel& a, const HyperfineLevel& b, const PhysicalConstants& c,
               const OrbitalData& data, const MixingTable& mixing);

/// Weight-normalized mean. Throws DomainError on length mismatch, a
/// negative weight, or zero total weight.
double v_average(std::span<const double> values, std::span<const double> weights);

} // namespace h2z
