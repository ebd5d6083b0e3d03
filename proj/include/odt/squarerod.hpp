#pragma once

#include <utility>
#include <vector>

#include "odt/design.hpp"
#include "odt/maps.hpp"

namespace odt {

// B(i,j) = (-1)^{|i . psi(i^j)|} x_{gamma^-1(i^j)} when i^j is in the image.
// Refuses a family failing the odd condition unless force is set.
Design build_from_maps(const MapFamily& fam, bool force = false);

// the square ODs of order 1, 2, 4, 8
Design base_K(int t);

using SignMatrix = std::vector<std::vector<int>>;

SignMatrix identity_signs(int n);
SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b);
// numeric (x) symbolic and symbolic (x) numeric
Design kronecker(const SignMatrix& a, const Design& b);
Design kronecker(const Design& a, const SignMatrix& b);

SignMatrix sign_I2(int k);
SignMatrix sign_I4(int k);
SignMatrix sign_I8(int k);

// y0 I4 + y1 I4^1 and y2 I8 + y3 I8^1 + y4 I8^2 + y5 I8^3 with given variable indices;
// negate_first flips the identity term
Design T4(int y0, int y1, int k, bool negate_first = false);
Design T8(const std::vector<int>& ys, int k, bool negate_first = false);

struct RLadder {
    Design r2n, r4n, r8n, r16n;
};
// the four doubling steps from a square R_n with rho(n) variables
RLadder recursive_R_ladder(const Design& rn);
Design recursive_R(int t);

// left and right quaternion blocks
std::pair<Design, Design> quaternion_blocks();

Design recursive_alp_octonion(int t);
Design recursive_alp_quaternion(int t);
Design recursive_gp(int t);

} // namespace odt
