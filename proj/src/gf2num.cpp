#include "odt/gf2num.hpp"

#include <bit>
#include <stdexcept>

namespace odt {

namespace {
std::uint64_t mask(unsigned w) { return w >= 64 ? ~0ULL : ((1ULL << w) - 1); }
} // namespace

BitWord::BitWord(std::uint64_t v, unsigned w) : value(v), width(w) {
    if (w > 63 || v > mask(w))
        throw std::invalid_argument("BitWord value does not fit width");
}

BitWord BitWord::operator^(BitWord o) const {
    unsigned w = std::max(width, o.width);
    return {value ^ o.value, w};
}

BitWord BitWord::operator&(BitWord o) const {
    unsigned w = std::max(width, o.width);
    return {value & o.value, w};
}

unsigned hamming_weight(std::uint64_t x) { return static_cast<unsigned>(std::popcount(x)); }

BitWord twos_complement(BitWord x) {
    return {((1ULL << x.width) - x.value) & mask(x.width), x.width};
}

BitWord ones_complement(BitWord x) { return {mask(x.width) - x.value, x.width}; }

unsigned width_for(std::uint64_t x) { return static_cast<unsigned>(std::bit_width(x)); }

bool is_pow2(std::uint64_t x) { return std::has_single_bit(x); }

int log2_exact(std::uint64_t x) {
    if (!is_pow2(x)) return -1;
    return std::countr_zero(x);
}

int rho(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("rho: n must be positive");
    int a = std::countr_zero(n);
    int c = a / 4, d = a % 4;
    return 8 * c + (1 << d);
}

std::uint64_t nu(int n) {
    if (n < 1) throw std::invalid_argument("nu: n must be positive");
    int s = (n - 1) / 8;
    int r = n - 8 * s; // 1..8
    int delta;
    if (r == 1) delta = 4 * s;
    else if (r == 2) delta = 4 * s + 1;
    else if (r <= 4) delta = 4 * s + 2;
    else delta = 4 * s + 3;
    if (delta > 62) throw std::overflow_error("nu: delay exceeds 64-bit range");
    return 1ULL << delta;
}

// Lucas: C(p,i) is odd iff the bits of i are a subset of those of p.
bool binomial_is_odd(std::uint64_t p, std::uint64_t i) { return i <= p && (i & ~p) == 0; }

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > ~0ULL) throw std::overflow_error("binomial overflow");
    }
    return static_cast<std::uint64_t>(r);
}

int hopf_stiefel(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("hopf_stiefel: arguments must be positive");
    for (int p = std::max(n, k); p <= n + k; ++p) {
        bool vanishes = true;
        for (int i = 0; i <= p && vanishes; ++i)
            if (binomial_is_odd(p, i) && i < n && p - i < k) vanishes = false;
        if (vanishes) return p;
    }
    throw std::logic_error("hopf_stiefel: search exceeded n+k");
}

LiangBounds liang_bounds(int n) {
    if (n < 2) throw std::invalid_argument("liang_bounds: n must be at least 2");
    int a = (n + 1) / 2;
    if (2 * a > 60) throw std::overflow_error("liang_bounds: n too large");
    LiangBounds b;
    b.rate = Rational(1, 2) + Rational(1, 2 * a);
    b.delay = binomial(2 * a, a - 1);
    if (n % 4 == 2) b.delay *= 2;
    return b;
}

bool cod_delay_infeasible(int n, int x) {
    if (n < 2 || x < 1) throw std::invalid_argument("cod_delay_infeasible: bad arguments");
    return 4 * x < hopf_stiefel(2 * n, 2 * x);
}

std::uint64_t rate_half_delay_lower_bound(int n) {
    int x = 1;
    while (cod_delay_infeasible(n, x)) ++x;
    return 2ULL * static_cast<std::uint64_t>(x);
}

BoundsReport bounds_report(int n) {
    BoundsReport r;
    r.n = n;
    r.nu = nu(n);
    r.rho_of_nu = rho(r.nu);
    r.rho_nu_consistent = r.rho_of_nu >= n;
    LiangBounds lb = liang_bounds(n);
    r.liang_rate = lb.rate;
    r.liang_delay = lb.delay;
    r.dr_delay = r.nu;
    r.tjc_delay = 2 * r.nu;
    r.dr_rate = Rational(1, 2);
    r.tjc_rate = Rational(1, 2);
    return r;
}

} // namespace odt
