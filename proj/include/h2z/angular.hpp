#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "h2z/errors.hpp"

namespace h2z {

/// Signed half-integer, stored as twice its value so that 3/2, -1/2, ...
/// stay exact. Used for projections m and for arithmetic on quantum numbers.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInt whole(int n) { return from_twice(2 * n); }

    /// Accepts "5/2", "-1/2", "2.5", "3". Throws ParseError otherwise.
    static HalfInt parse(std::string_view text);

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    double value() const { return 0.5 * twice_; }

    /// "5/2", "-1/2", "3", "0"
    std::string str() const;

    friend constexpr bool operator==(HalfInt, HalfInt) = default;
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }

private:
    int twice_ = 0;
};

/// Non-negative angular momentum quantum number (j = 0, 1/2, 1, ...).
class AngularMomentum {
public:
    constexpr AngularMomentum() = default;

    /// Implicit from HalfInt; throws ValidationError when negative.
    constexpr AngularMomentum(HalfInt j) : j_(j) {
        if (j.twice() < 0)
            throw ValidationError("angular momentum must be non-negative");
    }

    static constexpr AngularMomentum from_twice(int twice) {
        return AngularMomentum(HalfInt::from_twice(twice));
    }
    static constexpr AngularMomentum whole(int n) { return AngularMomentum(HalfInt::whole(n)); }
    static AngularMomentum parse(std::string_view text) { return AngularMomentum(HalfInt::parse(text)); }

    constexpr int twice() const { return j_.twice(); }
    constexpr bool is_integer() const { return j_.is_integer(); }
    double value() const { return j_.value(); }
    std::string str() const { return j_.str(); }

    constexpr operator HalfInt() const { return j_; }

    friend constexpr bool operator==(AngularMomentum, AngularMomentum) = default;
    friend constexpr auto operator<=>(AngularMomentum, AngularMomentum) = default;

private:
    HalfInt j_;
};

/// True iff m is a valid projection of j: |m| <= j and j+m integer.
constexpr bool valid_projection(AngularMomentum j, HalfInt m) {
    return std::abs(m.twice()) <= j.twice() && (j.twice() + m.twice()) % 2 == 0;
}

/// Arguments of a 6j symbol, arranged as two rows of three:
/// { j1 j2 j3 ; j4 j5 j6 }. The value is zero unless the four triads
/// (j1 j2 j3), (j1 j5 j6), (j4 j2 j6), (j4 j5 j3) are triangular with
/// integer sums.
struct SixJArguments {
    AngularMomentum j1, j2, j3, j4, j5, j6;
};

/// |a-b| <= c <= a+b and a+b+c integer.
bool is_triangle(AngularMomentum a, AngularMomentum b, AngularMomentum c);

/// 6j symbol via the Racah single-sum formula evaluated over exact big
/// integers; the only floating step is the final square root. Relative
/// error <= 1e-14. Invalid triads give exact 0.
double wigner_6j(const SixJArguments& args);
double wigner_6j(AngularMomentum j1, AngularMomentum j2, AngularMomentum j3,
                 AngularMomentum j4, AngularMomentum j5, AngularMomentum j6);

/// 3j symbol, same exact evaluation scheme. Zero when m1+m2+m3 != 0 or a
/// selection rule fails.
double wigner_3j(AngularMomentum j1, AngularMomentum j2, AngularMomentum j3,
                 HalfInt m1, HalfInt m2, HalfInt m3);

/// <j1 m1 j2 m2 | J M> through the 3j symbol.
double clebsch_gordan(AngularMomentum j1, HalfInt m1, AngularMomentum j2, HalfInt m2,
                      AngularMomentum cap_j, HalfInt cap_m);

/// sqrt(S(S+1)(2S+1)), the reduced matrix element <S||S||S> of a spin.
double spin_reduced_element(AngularMomentum s);

/// sqrt(J(J+1)(2J+1)) — the Wigner-Eckart denominator used throughout.
double wigner_eckart_norm(AngularMomentum j);

} // namespace h2z
