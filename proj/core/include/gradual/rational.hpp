#ifndef GRADUAL_RATIONAL_HPP
#define GRADUAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "gradual/errors.hpp"

namespace gradual {

// Exact arbitrary-precision rational; the only number type used in the core.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
    return Rational(num, den);
}

inline std::string to_string(const Rational& r) {
    return r.str();
}

// Accepts "p", "p/q", and signed variants.
inline Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw BadGrade("not a rational: '" + text + "'");
    }
}

// A membership degree in [0,1].
class Grade {
public:
    Grade() = default;
    explicit Grade(Rational v) : value_(std::move(v)) {
        if (value_ < 0 || value_ > 1)
            throw BadGrade("grade out of [0,1]: " + to_string(value_));
    }
    const Rational& value() const { return value_; }
    friend bool operator==(const Grade& a, const Grade& b) { return a.value_ == b.value_; }
    friend bool operator<(const Grade& a, const Grade& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Grade& a, const Grade& b) { return a.value_ <= b.value_; }

private:
    Rational value_{0};
};

// A level in (0,1].
class Level {
public:
    Level() : value_(1) {}
    explicit Level(Rational v) : value_(std::move(v)) {
        if (value_ <= 0 || value_ > 1)
            throw BadGrade("level out of (0,1]: " + to_string(value_));
    }
    const Rational& value() const { return value_; }
    friend bool operator==(const Level& a, const Level& b) { return a.value_ == b.value_; }
    friend bool operator<(const Level& a, const Level& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Level& a, const Level& b) { return a.value_ <= b.value_; }

private:
    Rational value_;
};

} // namespace gradual

#endif
