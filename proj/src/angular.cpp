#include "h2z/angular.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace h2z {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using Float50 = boost::multiprecision::cpp_bin_float_50;

// Factorial cache is thread-local: concurrent callers never share state.
const cpp_int& factorial(int n) {
    thread_local std::vector<cpp_int> cache{1};
    while (static_cast<int>(cache.size()) <= n)
        cache.push_back(cache.back() * static_cast<int>(cache.size()));
    return cache[static_cast<std::size_t>(n)];
}

// All triad arithmetic is done on doubled quantum numbers.
bool triad_ok(int a2, int b2, int c2) {
    return (a2 + b2 + c2) % 2 == 0 && std::abs(a2 - b2) <= c2 && c2 <= a2 + b2;
}

// Squared triangle coefficient Delta(abc)^2 as an exact rational.
cpp_rational triangle_sq(int a2, int b2, int c2) {
    return cpp_rational(factorial((a2 + b2 - c2) / 2) * factorial((a2 - b2 + c2) / 2) *
                            factorial((-a2 + b2 + c2) / 2),
                        factorial((a2 + b2 + c2) / 2 + 1));
}

// value = sum * sqrt(radicand): evaluated as sign(sum) * sqrt(sum^2 * radicand)
// so the square root is the single floating-point step.
double signed_sqrt(const cpp_rational& sum, const cpp_rational& radicand) {
    if (sum == 0)
        return 0.0;
    const cpp_rational q = sum * sum * radicand;
    const double magnitude = sqrt(Float50(q)).convert_to<double>();
    return sum > 0 ? magnitude : -magnitude;
}

int parity_sign(int exponent) {
    return ((exponent % 2) + 2) % 2 == 0 ? 1 : -1;
}

} // namespace

HalfInt HalfInt::parse(std::string_view text) {
    const std::string s(text);
    if (s.empty())
        throw ParseError("empty angular momentum value");
    try {
        std::size_t pos = 0;
        if (s.find('/') != std::string::npos) {
            const long num = std::stol(s, &pos);
            if (pos >= s.size() || s[pos] != '/')
                throw ParseError("bad fraction: " + s);
            std::size_t pos2 = 0;
            const long den = std::stol(s.substr(pos + 1), &pos2);
            if (pos + 1 + pos2 != s.size() || (den != 1 && den != 2))
                throw ParseError("angular momenta must be integral or half-integral: " + s);
            return from_twice(static_cast<int>(den == 2 ? num : 2 * num));
        }
        if (s.find('.') != std::string::npos) {
            const double x = std::stod(s, &pos);
            if (pos != s.size())
                throw ParseError("bad number: " + s);
            const double t = 2 * x;
            const double r = std::round(t);
            if (std::abs(t - r) > 1e-9)
                throw ParseError("not a half-integer: " + s);
            return from_twice(static_cast<int>(r));
        }
        const long n = std::stol(s, &pos);
        if (pos != s.size())
            throw ParseError("bad number: " + s);
        return whole(static_cast<int>(n));
    } catch (const std::invalid_argument&) {
        throw ParseError("bad angular momentum value: " + s);
    } catch (const std::out_of_range&) {
        throw ParseError("angular momentum out of range: " + s);
    }
}

std::string HalfInt::str() const {
    if (twice_ % 2 == 0)
        return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

bool is_triangle(AngularMomentum a, AngularMomentum b, AngularMomentum c) {
    return triad_ok(a.twice(), b.twice(), c.twice());
}

double wigner_6j(const SixJArguments& args) {
    const int a = args.j1.twice(), b = args.j2.twice(), c = args.j3.twice();
    const int d = args.j4.twice(), e = args.j5.twice(), f = args.j6.twice();

    if (!triad_ok(a, b, c) || !triad_ok(a, e, f) || !triad_ok(d, b, f) || !triad_ok(d, e, c))
        return 0.0;

    // Racah single sum. The four triad sums and three opposite-pair sums
    // are invariant under the 24 classical symmetries, so symmetric
    // arguments take bit-identical paths through the exact arithmetic.
    const int alphas[4] = {(a + b + c) / 2, (a + e + f) / 2, (d + b + f) / 2, (d + e + c) / 2};
    const int betas[3] = {(a + b + d + e) / 2, (b + c + e + f) / 2, (c + a + f + d) / 2};

    const int kmin = *std::max_element(alphas, alphas + 4);
    const int kmax = *std::min_element(betas, betas + 3);

    cpp_rational sum = 0;
    for (int k = kmin; k <= kmax; ++k) {
        cpp_int den = 1;
        for (int al : alphas)
            den *= factorial(k - al);
        for (int be : betas)
            den *= factorial(be - k);
        cpp_rational term(factorial(k + 1), den);
        sum += (k % 2 == 0) ? term : -term;
    }

    const cpp_rational radicand =
        triangle_sq(a, b, c) * triangle_sq(a, e, f) * triangle_sq(d, b, f) * triangle_sq(d, e, c);
    return signed_sqrt(sum, radicand);
}

double wigner_6j(AngularMomentum j1, AngularMomentum j2, AngularMomentum j3,
                 AngularMomentum j4, AngularMomentum j5, AngularMomentum j6) {
    return wigner_6j(SixJArguments{j1, j2, j3, j4, j5, j6});
}

double wigner_3j(AngularMomentum j1, AngularMomentum j2, AngularMomentum j3,
                 HalfInt m1, HalfInt m2, HalfInt m3) {
    const int a = j1.twice(), b = j2.twice(), c = j3.twice();
    const int ma = m1.twice(), mb = m2.twice(), mc = m3.twice();

    if (ma + mb + mc != 0)
        return 0.0;
    if (!triad_ok(a, b, c))
        return 0.0;
    if (!valid_projection(j1, m1) || !valid_projection(j2, m2) || !valid_projection(j3, m3))
        return 0.0;

    const int kmin = std::max({0, (b - c - ma) / 2, (a - c + mb) / 2});
    const int kmax = std::min({(a + b - c) / 2, (a - ma) / 2, (b + mb) / 2});

    cpp_rational sum = 0;
    for (int k = kmin; k <= kmax; ++k) {
        cpp_int den = factorial(k);
        den *= factorial((a + b - c) / 2 - k);
        den *= factorial((a - ma) / 2 - k);
        den *= factorial((b + mb) / 2 - k);
        den *= factorial((c - b + ma) / 2 + k);
        den *= factorial((c - a - mb) / 2 + k);
        cpp_rational term(1, den);
        sum += (k % 2 == 0) ? term : -term;
    }
    if (sum == 0)
        return 0.0;

    cpp_rational radicand = triangle_sq(a, b, c);
    radicand *= factorial((a + ma) / 2) * factorial((a - ma) / 2);
    radicand *= factorial((b + mb) / 2) * factorial((b - mb) / 2);
    radicand *= factorial((c + mc) / 2) * factorial((c - mc) / 2);

    const int phase = parity_sign((a - b - mc) / 2);
    return phase * signed_sqrt(sum, radicand);
}

double clebsch_gordan(AngularMomentum j1, HalfInt m1, AngularMomentum j2, HalfInt m2,
                      AngularMomentum cap_j, HalfInt cap_m) {
    if ((m1 + m2).twice() != cap_m.twice())
        return 0.0;
    // phase exponent j1 - j2 + M must be integral for a nonzero coefficient
    const int e2 = j1.twice() - j2.twice() + cap_m.twice();
    if (e2 % 2 != 0)
        return 0.0;
    const double three_j = wigner_3j(j1, j2, cap_j, m1, m2, -cap_m);
    return parity_sign(e2 / 2) * std::sqrt(cap_j.twice() + 1.0) * three_j;
}

double spin_reduced_element(AngularMomentum s) {
    const double t = s.twice();
    // S(S+1)(2S+1) = t(t+2)(t+1)/4
    return std::sqrt(t * (t + 2) * (t + 1)) / 2.0;
}

double wigner_eckart_norm(AngularMomentum j) {
    const double t = j.twice();
    return std::sqrt(t * (t + 2) * (t + 1)) / 2.0;
}

} // namespace h2z
