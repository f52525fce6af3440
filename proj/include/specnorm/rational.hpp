#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace specnorm {

// Exact rational action values. No floating point anywhere: spectral
// invariants are infima over a discrete spectrum and must be reproduced
// exactly.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Extended rational used for filtration window endpoints.
class Bound {
public:
    Bound() : Bound(Kind::NegInf, 0) {}
    static Bound neg_inf() { return Bound(Kind::NegInf, 0); }
    static Bound pos_inf() { return Bound(Kind::PosInf, 0); }
    static Bound finite(Rational v) { return Bound(Kind::Finite, std::move(v)); }

    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_finite() const { return kind_ == Kind::Finite; }

    const Rational& value() const {
        if (!is_finite()) throw std::logic_error("Bound::value on infinite bound");
        return value_;
    }

    friend bool operator==(const Bound& a, const Bound& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.value_ == b.value_;
    }
    friend bool operator!=(const Bound& a, const Bound& b) { return !(a == b); }
    friend bool operator<(const Bound& a, const Bound& b) {
        if (a.kind_ == Kind::NegInf) return b.kind_ != Kind::NegInf;
        if (a.kind_ == Kind::PosInf) return false;
        if (b.kind_ == Kind::NegInf) return false;
        if (b.kind_ == Kind::PosInf) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Bound& a, const Bound& b) { return a < b || a == b; }
    friend bool operator>(const Bound& a, const Bound& b) { return b < a; }
    friend bool operator>=(const Bound& a, const Bound& b) { return b <= a; }

    bool contains_strictly(const Rational& v) const {
        // treats *this as a lower bound when used as such; helper below is clearer
        return is_neg_inf() || (is_finite() && value_ < v);
    }

    std::string str() const;

private:
    enum class Kind { NegInf, Finite, PosInf };
    Bound(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}
    Kind kind_;
    Rational value_;
};

// Parses "p/q", "p", "-p/q" or exact decimal strings like "0.25".
Rational parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string format_rational(const Rational& v);

}  // namespace specnorm
