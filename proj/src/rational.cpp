#include "specnorm/rational.hpp"

#include <cctype>

namespace specnorm {

std::string Bound::str() const {
    switch (kind_) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "inf";
        default: return format_rational(value_);
    }
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    bool negative = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        pos = 1;
    }
    std::string body = s.substr(pos);
    if (body.empty()) throw std::invalid_argument("malformed rational: " + text);

    Rational result;
    try {
        auto slash = body.find('/');
        auto dot = body.find('.');
        if (slash != std::string::npos) {
            std::string num = body.substr(0, slash);
            std::string den = body.substr(slash + 1);
            if (num.empty() || den.empty())
                throw std::invalid_argument("malformed rational: " + text);
            Integer n(num), d(den);
            if (d == 0) throw std::invalid_argument("zero denominator: " + text);
            result = Rational(n, d);
        } else if (dot != std::string::npos) {
            std::string whole = body.substr(0, dot);
            std::string frac = body.substr(dot + 1);
            if (whole.empty() && frac.empty())
                throw std::invalid_argument("malformed rational: " + text);
            Integer n(whole.empty() ? "0" : whole);
            Integer scale = 1;
            for (char c : frac) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw std::invalid_argument("malformed rational: " + text);
                n = n * 10 + (c - '0');
                scale *= 10;
            }
            result = Rational(n, scale);
        } else {
            result = Rational(Integer(body));
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
    if (negative) result = -result;
    return result;
}

std::string format_rational(const Rational& v) {
    Integer num = numerator(v);
    Integer den = denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace specnorm
