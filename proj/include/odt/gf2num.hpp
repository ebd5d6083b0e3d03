#pragma once

#include <cstdint>
#include <boost/rational.hpp>

namespace odt {

using Rational = boost::rational<std::int64_t>;

// An element of F_2^width, stored as its integer label.
struct BitWord {
    std::uint64_t value = 0;
    unsigned width = 0;

    BitWord() = default;
    BitWord(std::uint64_t v, unsigned w);

    BitWord operator^(BitWord o) const;
    BitWord operator&(BitWord o) const;
    bool operator==(const BitWord&) const = default;
};

unsigned hamming_weight(std::uint64_t x);
inline unsigned hamming_weight(BitWord x) { return hamming_weight(x.value); }

// 2^a - x mod 2^a
BitWord twos_complement(BitWord x);
// 2^a - 1 - x
BitWord ones_complement(BitWord x);

// smallest a with x < 2^a
unsigned width_for(std::uint64_t x);
bool is_pow2(std::uint64_t x);
// log2 of a power of two, -1 otherwise
int log2_exact(std::uint64_t x);

// Hurwitz-Radon number: n = 2^(4c+d) * odd gives 8c + 2^d.
int rho(std::uint64_t n);
// minimal delay of a rate-1 ROD on n columns
std::uint64_t nu(int n);

bool binomial_is_odd(std::uint64_t p, std::uint64_t i);
std::uint64_t binomial(unsigned n, unsigned k);

int hopf_stiefel(int n, int k);

struct LiangBounds {
    Rational rate;
    std::uint64_t delay = 0;
};
LiangBounds liang_bounds(int n);

// A [2x, n, x] COD cannot exist when 4x < (2n) o (2x).
bool cod_delay_infeasible(int n, int x);
// 2x for the smallest x not ruled out above; lower-bound evidence only.
std::uint64_t rate_half_delay_lower_bound(int n);

struct BoundsReport {
    int n = 0;
    std::uint64_t nu = 0;
    int rho_of_nu = 0;
    bool rho_nu_consistent = false;
    Rational liang_rate;
    std::uint64_t liang_delay = 0;
    std::uint64_t tjc_delay = 0;
    std::uint64_t dr_delay = 0;
    Rational dr_rate;
    Rational tjc_rate;
};
BoundsReport bounds_report(int n);

} // namespace odt
