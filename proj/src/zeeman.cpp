#include "h2z/zeeman.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace h2z {

namespace {

std::string line_name(const TwoPhotonTransition& t) {
    std::ostringstream os;
    os << "(v=" << t.lower.rovib.v << ",L=" << t.lower.rovib.L << ",F=" << t.lower.F.str()
       << ",J=" << t.lower.J.str() << ") -> (v=" << t.upper.rovib.v << ",L=" << t.upper.rovib.L
       << ",F=" << t.upper.F.str() << ",J=" << t.upper.J.str() << ")";
    return os.str();
}

double total_g(const HyperfineLevel& level, const GFactorContext& ctx) {
    return g_total(level, ctx.constants, ctx.orbital, ctx.mixing).total;
}

} // namespace

MagneticField make_field(double b_tesla) {
    if (b_tesla < 0)
        throw ValidationError("magnetic field must be non-negative");
    return MagneticField{b_tesla};
}

TwoPhotonTransition make_transition(const HyperfineLevel& lower, const HyperfineLevel& upper,
                                    bool permissive) {
    TwoPhotonTransition t{lower, upper};
    if (lower.rovib.L != upper.rovib.L)
        throw ValidationError("two-photon transition requires L' = L: " + line_name(t));
    if (!permissive && (lower.F != upper.F || lower.J != upper.J))
        throw ValidationError("transition is not homologous ((F',J') != (F,J)): " + line_name(t) +
                              " (use the permissive flag for cross components)");
    return t;
}

TwoPhotonTransition homologous_transition(int v_lower, int v_upper, int L, AngularMomentum f,
                                          AngularMomentum j) {
    return make_transition(make_level(v_lower, L, f, j), make_level(v_upper, L, f, j));
}

double state_shift(double g, HalfInt m, MagneticField field, const PhysicalConstants& c) {
    return g * m.value() * c.bohr_magneton_hz_per_tesla * field.b_tesla;
}

std::vector<ZeemanComponent> components(const TwoPhotonTransition& t, MagneticField field,
                                        Polarization pol, const GFactorContext& ctx) {
    const double g_lower = total_g(t.lower, ctx);
    const double g_upper = total_g(t.upper, ctx);
    const int dm2 = pol == Polarization::SigmaPlus ? 4 : pol == Polarization::SigmaMinus ? -4 : 0;

    std::vector<ZeemanComponent> out;
    for (int m2 = -t.lower.J.twice(); m2 <= t.lower.J.twice(); m2 += 2) {
        const int mu2 = m2 + dm2;
        if (std::abs(mu2) > t.upper.J.twice())
            continue;
        const HalfInt m = HalfInt::from_twice(m2);
        const HalfInt mu = HalfInt::from_twice(mu2);
        // 2 h dnu = [M' g' - M g] mu_B B
        const double dnu = 0.5 * (state_shift(g_upper, mu, field, ctx.constants) -
                                  state_shift(g_lower, m, field, ctx.constants));
        out.push_back(ZeemanComponent{m, mu, dnu});
    }
    return out;
}

double sigma_line_center_shift(const TwoPhotonTransition& t, MagneticField field,
                               const GFactorContext& ctx, Polarization pol) {
    if (pol == Polarization::Pi)
        throw DomainError("line-centre shift is defined for circular polarization; "
                          "use pi_splitting or components for pi");
    if (t.lower.J.twice() < 2 || t.upper.J.twice() < 2)
        throw ForbiddenTransitionError("transition " + line_name(t) +
                                       " is forbidden in circular polarization (J = 1/2)");
    const double g_lower = total_g(t.lower, ctx);
    const double g_upper = total_g(t.upper, ctx);
    // sigma+: the M_J = -1 component, dnu = (g + g') (mu_B/h) B / 2;
    // sigma-: its mirror image (M_J = +1), the exact negative.
    const double shift = 0.5 * (g_lower + g_upper) * ctx.constants.bohr_magneton_hz_per_tesla *
                         field.b_tesla;
    return pol == Polarization::SigmaPlus ? shift : -shift;
}

double pi_splitting(const TwoPhotonTransition& t, MagneticField field, const GFactorContext& ctx) {
    if (t.lower.J != t.upper.J)
        throw DomainError("pi splitting requires homologous J = J'; "
                          "enumerate components() for cross components");
    const auto comps = components(t, field, Polarization::Pi, ctx);
    // extreme components sit at M = +J and M = -J; [g'-g] J (mu_B/h) B
    return comps.back().delta_nu_hz - comps.front().delta_nu_hz;
}

std::vector<ZeemanLine> zeeman_line_table(MagneticField field, const GFactorContext& ctx) {
    std::vector<ZeemanLine> out;
    for (int L = 0; L <= 3; ++L) {
        for (const HyperfineLevel& lower : enumerate_levels(RovibLevel{0, L})) {
            const TwoPhotonTransition t =
                homologous_transition(0, 1, L, lower.F, lower.J);
            ZeemanLine line;
            line.L = L;
            line.F = lower.F;
            line.J = lower.J;
            line.g_lower = total_g(t.lower, ctx);
            line.g_upper = total_g(t.upper, ctx);
            try {
                line.sigma_shift_hz = sigma_line_center_shift(t, field, ctx);
                line.sigma_forbidden = false;
                line.sigma_unc_hz = 5e-5 * std::abs(line.sigma_shift_hz);
            } catch (const ForbiddenTransitionError&) {
                line.sigma_forbidden = true;
            }
            line.pi_splitting_hz = pi_splitting(t, field, ctx);
            line.pi_unc_hz = 0.3 * (field.b_tesla / 5e-5);
            out.push_back(line);
        }
    }
    return out;
}

} // namespace h2z
