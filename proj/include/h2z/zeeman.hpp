#pragma once

#include <vector>

#include "h2z/gfactor.hpp"
#include "h2z/hfs.hpp"

namespace h2z {

/// Above this field the hyperfine-coupled linear g_J picture degrades;
/// callers should warn. The model itself stays strictly linear in B.
inline constexpr double k_weak_field_warn_tesla = 1e-2;

struct MagneticField {
    double b_tesla = 0;
};

MagneticField make_field(double b_tesla); // throws ValidationError when negative

enum class Polarization { SigmaPlus, SigmaMinus, Pi };

/// Everything needed to evaluate a level g-factor.
struct GFactorContext {
    const PhysicalConstants& constants;
    const OrbitalData& orbital;
    const MixingTable& mixing;
};

/// Two-photon line between hyperfine levels of (v,L) and (v',L) with the
/// same L. Homologous components have (F',J') = (F,J); anything else
/// requires the permissive flag.
struct TwoPhotonTransition {
    HyperfineLevel lower;
    HyperfineLevel upper;
};

TwoPhotonTransition make_transition(const HyperfineLevel& lower, const HyperfineLevel& upper,
                                    bool permissive = false);
TwoPhotonTransition homologous_transition(int v_lower, int v_upper, int L,
                                          AngularMomentum f, AngularMomentum j);

/// One Zeeman component M_J -> M'_J of a two-photon line; the two-photon
/// convention 2 h dnu = [M' g' - M g] mu_B B puts a factor 1/2 here.
struct ZeemanComponent {
    HalfInt m_lower;
    HalfInt m_upper;
    double delta_nu_hz = 0;
};

/// Linear Zeeman shift of one state in Hz: g * m * (mu_B/h) * B.
/// No two-photon factor; that lives in the transition-level operations.
double state_shift(double g, HalfInt m, MagneticField field, const PhysicalConstants& c);

/// All components allowed by the polarization selection rule
/// (M' - M = +2 / -2 / 0 for sigma+ / sigma- / pi), ordered by increasing
/// M. An empty list means the transition is forbidden (not an error).
std::vector<ZeemanComponent> components(const TwoPhotonTransition& t, MagneticField field,
                                        Polarization pol, const GFactorContext& ctx);

/// Line-centre shift of a circularly polarized two-photon line: the
/// M_J = -1 component for sigma+, [g_lower + g_upper] (mu_B/h) B / 2; the
/// sigma- centre is its negative (M_J = +1). Throws
/// ForbiddenTransitionError when no sigma component exists (J = 1/2), and
/// DomainError for pi.
double sigma_line_center_shift(const TwoPhotonTransition& t, MagneticField field,
                               const GFactorContext& ctx,
                               Polarization pol = Polarization::SigmaPlus);

/// Splitting between the extreme pi components, [g' - g] J (mu_B/h) B,
/// evaluated as the M = +J minus the M = -J component so it matches
/// components() bit for bit. Requires J = J'.
double pi_splitting(const TwoPhotonTransition& t, MagneticField field, const GFactorContext& ctx);

/// One line of the Zeeman prediction table for the (v=0,L) -> (v=1,L)
/// two-photon transitions.
struct ZeemanLine {
    int L = 0;
    AngularMomentum F;
    AngularMomentum J;
    double g_lower = 0;
    double g_upper = 0;
    bool sigma_forbidden = false;
    double sigma_shift_hz = 0; ///< valid when !sigma_forbidden
    double sigma_unc_hz = 0;
    double pi_splitting_hz = 0;
    double pi_unc_hz = 0;
};

/// All homologous (F,J) -> (F,J) lines of (v=0,L) -> (v'=1,L), L = 0..3.
std::vector<ZeemanLine> zeeman_line_table(MagneticField field, const GFactorContext& ctx);

} // namespace h2z
