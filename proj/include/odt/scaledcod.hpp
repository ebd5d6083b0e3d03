#pragma once

#include "odt/design.hpp"
#include "odt/gf2num.hpp"

namespace odt {

struct BlockLibrary {
    Design a; // [8,8,4] in x0..x3
    Design b; // [8,8,4] in x4..x7
    Design c; // 8x1 scaled column in x0..x3
};
BlockLibrary block_library();

// A(2i) = A(x_{8i..8i+3}), A(2i+1) = B(x_{8i+4..8i+7}); k is the variable count of the result
Design indexed_A(int i, int k);
// C(x_{4i..4i+3})
Design indexed_A_bar(int i, int k);

struct DRMatrix {
    int n = 0;
    Design design;
    // block decomposition, empty for n <= 8
    Design e8, o8, h, h_hat;
};

// rate-1/2 scaled COD of size [nu(n), n, nu(n)/2]; n >= 5
DRMatrix build_DR(int n);

// the rate-1 ROD stacked by build_TJC: W_n with row 0 and y_0 negated
Design tjc_rate1_rod(int n);
// [2 nu(n), n, nu(n)], every column scaled
Design build_TJC(int n);

CoeffMatrix papr_matrix(int n);
Design apply_papr_reduction(const DRMatrix& dr);

BoundsReport table_row(int n);

} // namespace odt
