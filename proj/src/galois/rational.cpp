#include "conductor/rational.hpp"

#include <stdexcept>

namespace conductor {

std::string format_rational(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& s) {
    try {
        std::size_t slash = s.find('/');
        std::size_t used = 0;
        if (slash == std::string::npos) {
            std::int64_t n = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return Rational(n);
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        std::int64_t n = std::stoll(num, &used);
        if (used != num.size()) throw std::invalid_argument(s);
        std::int64_t d = std::stoll(den, &used);
        if (used != den.size()) throw std::invalid_argument(s);
        return Rational(n, d);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

}  // namespace conductor
