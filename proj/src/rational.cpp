#include "ricci/rational.hpp"

#include "ricci/errors.hpp"

namespace ricci {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("rational: empty string");
    auto check_int = [&](const std::string& part, const char* what) {
        if (part.empty()) throw ParseError(std::string("rational: missing ") + what);
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) throw ParseError("rational: sign without digits");
        for (std::size_t i = start; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw ParseError("rational: invalid character in '" + text + "'");
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        check_int(text, "numerator");
        return Rational(Integer(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_int(num, "numerator");
    check_int(den, "denominator");
    Integer d(den);
    if (d == 0) throw ParseError("rational: zero denominator in '" + text + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_approx(const Rational& q, int digits) {
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Integer num = q.get_num() * scale;
    Integer den = q.get_den();
    Integer quotient = num / den;
    Integer rem = num % den;
    // round half away from zero
    if (2 * abs(rem) >= den) quotient += (num < 0 ? -1 : 1);
    bool negative = quotient < 0;
    Integer magnitude = negative ? Integer(-quotient) : quotient;
    std::string s = magnitude.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (negative ? "-" : "") + s;
}

}  // namespace ricci
