#include "h2z/constants.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace h2z {

PhysicalConstants default_constants() {
    // Pinned so the bundled tables reproduce to their last printed digit:
    // g_e from the L=0 total, g_p and the mass ratio from the nuclear-spin
    // columns, mu_B/h from the line-shift table.
    PhysicalConstants c;
    c.g_e = 2.00231930436;
    c.g_p = 5.5856946893;
    c.mass_ratio_me_mp = 5.446170218e-4;
    c.bohr_magneton_hz_per_tesla = 1.3996245e10;
    return c;
}

void validate(const PhysicalConstants& c) {
    const auto fail = [](const std::string& field, double value, const std::string& window) {
        std::ostringstream os;
        os << "constant " << field << " = " << value << " outside valid range " << window;
        throw ValidationError(os.str());
    };
    if (!(c.g_e > 1.9 && c.g_e < 2.1))
        fail("g_e", c.g_e, "(1.9, 2.1)");
    if (!(c.g_p > 5.0 && c.g_p < 6.0))
        fail("g_p", c.g_p, "(5.0, 6.0)");
    if (!(c.mass_ratio_me_mp > 5e-4 && c.mass_ratio_me_mp < 6e-4))
        fail("mass_ratio_me_mp", c.mass_ratio_me_mp, "(5e-4, 6e-4)");
    if (!(c.bohr_magneton_hz_per_tesla > 0))
        fail("bohr_magneton_hz_per_tesla", c.bohr_magneton_hz_per_tesla, "(0, inf)");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

} // namespace

PhysicalConstants load_constants(std::istream& in) {
    PhysicalConstants c = default_constants();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto sep = line.find('=');
        if (sep == std::string::npos)
            sep = line.find(':');
        if (sep == std::string::npos)
            throw ParseError("constants line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, sep));
        const std::string value_text = trim(line.substr(sep + 1));
        double value = 0;
        try {
            std::size_t pos = 0;
            value = std::stod(value_text, &pos);
            if (pos != value_text.size())
                throw std::invalid_argument(value_text);
        } catch (const std::exception&) {
            throw ParseError("constants line " + std::to_string(lineno) + ": bad number '" +
                             value_text + "'");
        }
        if (key == "g_e")
            c.g_e = value;
        else if (key == "g_p")
            c.g_p = value;
        else if (key == "mass_ratio_me_mp")
            c.mass_ratio_me_mp = value;
        else if (key == "bohr_magneton_hz_per_tesla")
            c.bohr_magneton_hz_per_tesla = value;
        else
            throw ParseError("constants line " + std::to_string(lineno) + ": unknown key '" + key +
                             "'");
    }
    validate(c);
    return c;
}

PhysicalConstants load_constants_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open constants file: " + path);
    return load_constants(in);
}

void save_constants(const PhysicalConstants& c, std::ostream& out) {
    out.precision(std::numeric_limits<double>::max_digits10);
    out << "g_e = " << c.g_e << '\n'
        << "g_p = " << c.g_p << '\n'
        << "mass_ratio_me_mp = " << c.mass_ratio_me_mp << '\n'
        << "bohr_magneton_hz_per_tesla = " << c.bohr_magneton_hz_per_tesla << '\n';
}

} // namespace h2z
