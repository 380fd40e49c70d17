#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "h2z/angular.hpp"

namespace h2z {

/// Ro-vibrational level (v, L).
struct RovibLevel {
    int v = 0;
    int L = 0;

    friend bool operator==(const RovibLevel&, const RovibLevel&) = default;
};

RovibLevel make_rovib(int v, int L); // throws ValidationError when negative

/// Classification of hyperfine levels.
///
/// Even L: I = 0, J = L +- 1/2, no spin label beyond J.
/// Odd L:  I = 1; J = L +- 3/2 are pure F = 3/2 states; J = L +- 1/2 are
/// linear combinations of F = 1/2 and F = 3/2 labeled by the dominant
/// component Ftilde.
enum class LevelKind { EvenL, OddPure, OddMixed };

struct HyperfineLevel {
    RovibLevel rovib;
    AngularMomentum I;  ///< 0 for even L, 1 for odd L
    AngularMomentum F;  ///< S_e = 1/2 for even L; F or Ftilde for odd L
    AngularMomentum J;
    LevelKind kind = LevelKind::EvenL;

    friend bool operator==(const HyperfineLevel&, const HyperfineLevel&) = default;
};

/// Builds and classifies a level, validating the (L, F, J) combination.
HyperfineLevel make_level(int v, int L, AngularMomentum f, AngularMomentum j);

/// Complete, duplicate-free level list for (v, L), ordered by increasing F
/// then increasing J. Counts: 1 (L=0), 2 (even L>=2), 5 (L=1), 6 (odd L>=3).
std::vector<HyperfineLevel> enumerate_levels(RovibLevel rovib);

/// True for even-L levels and odd-L J = L +- 3/2 levels.
bool is_pure(const HyperfineLevel& level);

/// F = 1/2 <-> F = 3/2 mixing coefficients of one odd-L, J = L +- 1/2 state:
/// |v,L,Ftilde,J> = C1 |F=1/2,J> + C3 |F=3/2,J>, with C1^2 + C3^2 = 1.
/// Global phase fixed by C1 >= 0 on the Ftilde = 1/2 entry.
struct MixingEntry {
    int v = 0;
    int L = 0;
    int twice_J = 0;      ///< J = L +- 1/2
    int twice_F = 0;      ///< dominant-F label: 1 or 3
    double c1 = 0;
    double c3 = 0;

    int branch() const { return twice_J > 2 * L ? +1 : -1; }
};

/// The two orthogonal entries sharing (v, L, J).
struct MixingPair {
    MixingEntry f_half;        ///< Ftilde = 1/2 (|C1| >= |C3|)
    MixingEntry f_three_half;  ///< orthogonal complement, Ftilde = 3/2
};

/// Inverts the mixed electron-spin g-factor equation
///   C1^2 g1(L,1/2,J)/g_e + C3^2 g1(L,3/2,J)/g_e + 2 C1 C3 X(L,J) = g1_tilde/g_e
/// on the unit circle. Of the two roots, the one with |C1| >= |C3| is the
/// Ftilde = 1/2 state; its orthogonal complement is the Ftilde = 3/2 state.
/// Input is the Ftilde = 1/2 state's value. Throws InversionError when no
/// real solution exists within 1e-6, DomainError unless J = L +- 1/2.
MixingPair recover_mixing(double g1_tilde_over_ge, int v, int L, AngularMomentum j);

/// Mixing coefficients keyed by (v, L, 2J, 2Ftilde).
class MixingTable {
public:
    /// Throws ConfigError on duplicate key, ValidationError on a
    /// normalization or orthogonality violation.
    void insert(const MixingEntry& entry);

    const MixingEntry* find(int v, int L, int twice_J, int twice_F) const;
    const MixingEntry& at(int v, int L, int twice_J, int twice_F) const; // ConfigError when absent
    const MixingEntry& at(const HyperfineLevel& level) const;

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    std::vector<MixingEntry> entries() const;

    /// Delimited text, header `v,L,twice_J,twice_Ftilde,C1,C3`.
    static MixingTable load(std::istream& in);
    static MixingTable load_file(const std::string& path);
    void save(std::ostream& out) const;

private:
    using Key = std::tuple<int, int, int, int>;
    std::map<Key, MixingEntry> entries_;
};

} // namespace h2z
