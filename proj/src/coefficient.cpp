#include "odt/coefficient.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace odt {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("coefficient overflow");
    return r;
}

std::int64_t checked_shl(std::int64_t x, int s) {
    if (s >= 63) {
        if (x == 0) return 0;
        throw std::overflow_error("coefficient overflow");
    }
    return checked_mul(x, std::int64_t{1} << s);
}

} // namespace

Dyadic::Dyadic(std::int64_t n, int e) : num(n), log2_den(e) {
    if (num == 0) {
        log2_den = 0;
        return;
    }
    while (log2_den > 0 && num % 2 == 0) {
        num /= 2;
        --log2_den;
    }
    while (log2_den < 0) {
        num = checked_mul(num, 2);
        ++log2_den;
    }
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(num), -log2_den); }

Dyadic Dyadic::operator+(const Dyadic& o) const {
    int e = std::max(log2_den, o.log2_den);
    return Dyadic(checked_add(checked_shl(num, e - log2_den), checked_shl(o.num, e - o.log2_den)), e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
    return Dyadic(checked_mul(num, o.num), log2_den + o.log2_den);
}

Dyadic Dyadic::operator-() const {
    if (num == INT64_MIN) throw std::overflow_error("coefficient overflow");
    Dyadic r;
    r.num = -num;
    r.log2_den = log2_den;
    return r;
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
    int e = std::max(log2_den, o.log2_den);
    return checked_shl(num, e - log2_den) <=> checked_shl(o.num, e - o.log2_den);
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
    // (a + b r2)(c + d r2) = (ac + 2bd) + (ad + bc) r2
    Dyadic two(2);
    return {a_ * o.a_ + two * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
}

bool Coefficient::is_unit_sign() const {
    return b_.is_zero() && a_.log2_den == 0 && (a_.num == 1 || a_.num == -1);
}

bool Coefficient::is_scaled_sign() const {
    return a_.is_zero() && b_.log2_den == 1 && (b_.num == 1 || b_.num == -1);
}

int Coefficient::sign_of_unit() const {
    if (is_unit_sign()) return static_cast<int>(a_.num);
    if (is_scaled_sign()) return static_cast<int>(b_.num);
    throw std::logic_error("coefficient is not a signed unit");
}

double Coefficient::to_double() const {
    return a_.to_double() + b_.to_double() * std::numbers::sqrt2;
}

std::string Coefficient::to_string() const {
    std::ostringstream os;
    auto dy = [&](const Dyadic& d) {
        os << d.num;
        if (d.log2_den) os << "/2^" << d.log2_den;
    };
    dy(a_);
    os << " + ";
    dy(b_);
    os << "*sqrt2";
    return os.str();
}

} // namespace odt
