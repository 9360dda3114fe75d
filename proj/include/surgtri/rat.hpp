#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

#include "surgtri/errors.hpp"

namespace surgtri {

using Int = boost::multiprecision::cpp_int;

/**
 * Exact rational scalar.
 *
 * Every quantity in the library -- holonomy coordinates, perturbation
 * breakpoints, Dedekind sums, surgery invariants -- is a Rat.  No floating
 * point enters any computation; doubles appear only when formatting output.
 *
 * Stored reduced with positive denominator (the backing cpp_rational
 * maintains both invariants).
 */
class Rat {
public:
    Rat() = default;
    Rat(int v) : value_(v) {}
    Rat(long long v) : value_(v) {}
    Rat(const Int& v) : value_(v) {}
    Rat(const Int& num, const Int& den) {
        if (den == 0) throw precondition_error("Rat: zero denominator");
        value_ = backing(num) / backing(den); // normalizes sign and gcd
    }

    static Rat parse(const std::string& text);

    Int num() const { return boost::multiprecision::numerator(value_); }
    Int den() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return den() == 1; }
    bool is_negative() const { return value_.sign() < 0; }
    int sign() const { return value_.sign(); }

    // Largest integer <= *this.
    Int floor() const;

    Rat abs() const { return is_negative() ? Rat(-*this) : *this; }

    // "n" for integers, "n/d" otherwise.
    std::string str() const;

    // Decimal approximation for display only.
    double approx() const { return value_.convert_to<double>(); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(backing(a.value_ + b.value_), from_backing{}); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(backing(a.value_ - b.value_), from_backing{}); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(backing(a.value_ * b.value_), from_backing{}); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw precondition_error("Rat: division by zero");
        return Rat(backing(a.value_ / b.value_), from_backing{});
    }
    Rat operator-() const { return Rat(backing(-value_), from_backing{}); }

    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.value_ >= b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    using backing = boost::multiprecision::cpp_rational;
    struct from_backing {};
    Rat(backing v, from_backing) : value_(std::move(v)) {}
    backing value_;
};

// x reduced into [0, m) for a positive modulus m.
Rat mod_reduce(const Rat& x, const Rat& m);

} // namespace surgtri
