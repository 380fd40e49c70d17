#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "h2z/errors.hpp"

namespace h2z {

/// Exact rational with the printing convention used by the g-factor
/// tables: explicit sign, no denominator when integral ("+4/9", "-22/45",
/// "+1", "0").
class Fraction {
public:
    constexpr Fraction() = default;
    Fraction(std::int64_t num, std::int64_t den = 1);

    static Fraction parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend Fraction operator-(const Fraction& f) { return Fraction(-f.num_, f.den_); }
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend Fraction operator+(const Fraction& a, const Fraction& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace h2z
