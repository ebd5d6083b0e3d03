#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace odt {

// num / 2^log2_den, kept with the smallest non-negative exponent.
struct Dyadic {
    std::int64_t num = 0;
    int log2_den = 0;

    Dyadic() = default;
    Dyadic(std::int64_t n, int e = 0);

    bool is_zero() const { return num == 0; }
    double to_double() const;

    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const;
    Dyadic operator*(const Dyadic& o) const;
    Dyadic operator-() const;

    bool operator==(const Dyadic&) const = default;
    std::strong_ordering operator<=>(const Dyadic& o) const;
};

// a + b*sqrt(2) with dyadic a, b.
class Coefficient {
public:
    Coefficient() = default;
    Coefficient(std::int64_t integer) : a_(integer) {}
    Coefficient(Dyadic a, Dyadic b) : a_(a), b_(b) {}

    static Coefficient one() { return Coefficient(1); }
    static Coefficient inv_sqrt2() { return {Dyadic(0), Dyadic(1, 1)}; }
    static Coefficient sqrt2() { return {Dyadic(0), Dyadic(1)}; }

    const Dyadic& rational_part() const { return a_; }
    const Dyadic& sqrt2_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_ == Dyadic(1) && b_.is_zero(); }
    bool is_unit_sign() const;   // +-1
    bool is_scaled_sign() const; // +-1/sqrt2
    int sign_of_unit() const;    // sign for the two cases above
    double to_double() const;

    Coefficient operator+(const Coefficient& o) const { return {a_ + o.a_, b_ + o.b_}; }
    Coefficient operator-(const Coefficient& o) const { return {a_ - o.a_, b_ - o.b_}; }
    Coefficient operator*(const Coefficient& o) const;
    Coefficient operator-() const { return {-a_, -b_}; }
    Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }

    bool operator==(const Coefficient&) const = default;
    auto operator<=>(const Coefficient&) const = default;

    std::string to_string() const;

private:
    Dyadic a_;
    Dyadic b_;
};

} // namespace odt
