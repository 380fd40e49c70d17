#include "h2z/fraction.hpp"

#include <numeric>

namespace h2z {

Fraction::Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0)
        throw DomainError("fraction with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0)
        den_ = 1;
}

Fraction Fraction::parse(std::string_view text) {
    std::string s(text);
    if (s.empty())
        throw ParseError("empty fraction");
    try {
        std::size_t pos = 0;
        const long long num = std::stoll(s, &pos);
        if (pos == s.size())
            return Fraction(num);
        if (s[pos] != '/')
            throw ParseError("bad fraction: " + s);
        std::size_t pos2 = 0;
        const long long den = std::stoll(s.substr(pos + 1), &pos2);
        if (pos + 1 + pos2 != s.size())
            throw ParseError("bad fraction: " + s);
        return Fraction(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad fraction: " + s);
    } catch (const std::out_of_range&) {
        throw ParseError("fraction out of range: " + s);
    }
}

std::string Fraction::str() const {
    if (num_ == 0)
        return "0";
    std::string s = num_ > 0 ? "+" : "-";
    s += std::to_string(num_ < 0 ? -num_ : num_);
    if (den_ != 1) {
        s += '/';
        s += std::to_string(den_);
    }
    return s;
}

Fraction operator*(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Fraction operator+(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

} // namespace h2z
