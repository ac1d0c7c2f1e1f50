#include "yangirr/rational.hpp"
#include "yangirr/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace yangirr {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::EmptyModule: return "EmptyModule";
        case ErrorKind::IdenticallyZero: return "IdenticallyZero";
        case ErrorKind::NotSimultaneouslyDiagonalizable: return "NotSimultaneouslyDiagonalizable";
        case ErrorKind::BadIndexSequence: return "BadIndexSequence";
        case ErrorKind::PoleAtEqualArguments: return "PoleAtEqualArguments";
        case ErrorKind::NotRectangular: return "NotRectangular";
        case ErrorKind::ShapeNotSpecial: return "ShapeNotSpecial";
        case ErrorKind::NotSingular: return "NotSingular";
        case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
        case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

static bool valid_int(const std::string& s, std::size_t b, std::size_t e, bool allow_sign) {
    if (b < e && allow_sign && (s[b] == '-' || s[b] == '+')) ++b;
    if (b >= e) return false;
    for (std::size_t i = b; i < e; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(s, 0, s.size(), true)) throw std::invalid_argument("bad rational: '" + s + "'");
    } else {
        if (!valid_int(s, 0, slash, true) || !valid_int(s, slash + 1, s.size(), false))
            throw std::invalid_argument("bad rational: '" + s + "'");
    }
    std::string t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    Rat r;
    if (r.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Rat dot(const Vec& a, const Vec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace yangirr
