#pragma once

#include <iosfwd>
#include <string>

#include "h2z/errors.hpp"

namespace h2z {

/// Physical constants entering the Zeeman Hamiltonian. Positive-g_e sign
/// convention; signs are written out explicitly in the g-factor formulas.
/// The proton magneton never appears separately: mu_p = mu_B * m_e/m_p.
struct PhysicalConstants {
    double g_e = 0;                       ///< electron g-factor, ~2.002
    double g_p = 0;                       ///< proton g-factor, ~5.586
    double mass_ratio_me_mp = 0;          ///< m_e / m_p
    double bohr_magneton_hz_per_tesla = 0; ///< mu_B / h in Hz/T
};

/// Reference values, pinned so the bundled g-factor tables reproduce to
/// their last printed digit.
PhysicalConstants default_constants();

/// Throws ValidationError (naming the offending field) when a value is
/// non-positive or outside its plausibility window.
void validate(const PhysicalConstants& c);

/// Flat key/value override document: lines of `key = value`, `#` comments.
/// Keys: g_e, g_p, mass_ratio_me_mp, bohr_magneton_hz_per_tesla. Fields
/// present override the defaults; the result is re-validated.
PhysicalConstants load_constants(std::istream& in);
PhysicalConstants load_constants_file(const std::string& path);

/// Writes all four keys with full round-trip precision.
void save_constants(const PhysicalConstants& c, std::ostream& out);

} // namespace h2z
