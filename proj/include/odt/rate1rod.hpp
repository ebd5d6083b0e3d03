#pragma once

#include "odt/design.hpp"
#include "odt/maps.hpp"

namespace odt {

// [nu(n), n, nu(n)] rate-1 RODs; fam must live on t = nu(n).
// W(i,j)  = (-1)^{|i . psi(gamma(j))|} y_{i ^ gamma(j)}
// W^(i,j) = (-1)^{|(i ^ gamma(j)) . psi(gamma(j))|} y_{i ^ gamma(j)}
Design build_W(int n, const MapFamily& fam);
Design build_W_hat(int n, const MapFamily& fam);
Design build_W(int n);
Design build_W_hat(int n);

// column j of the result holds y_k at row i where B(i,k) = +-z_j
Design extract_from_square(const Design& b, int n);

struct Rate1Pair {
    Design w;
    Design w_hat;
    MapFamily source_family;
};
Rate1Pair rate1_pair(int n, const MapFamily& fam);

} // namespace odt
