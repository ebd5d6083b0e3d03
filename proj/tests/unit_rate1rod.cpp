#include <doctest.h>

#include "odt/gf2num.hpp"
#include "odt/rate1rod.hpp"
#include "odt/squarerod.hpp"
#include "test_util.hpp"

using namespace odt;

TEST_CASE("W displays") {
    CHECK(test::same_cells(build_W(9), test::fixture("w9")));
    CHECK(test::same_cells(build_W(10), test::fixture("w10")));
    Design w9 = build_W(9);
    CHECK(w9.at(8, 0) == Entry::var(8));
    CHECK(w9.at(8, 1) == Entry::var(9, -1));
    CHECK(w9.at(8, 8) == Entry::var(0, -1));
    // row 0 of W^9 from the sign law; the display differs in columns 3, 5, 6
    Design wh9 = build_W_hat(9);
    Design shown = test::fixture("what9");
    MapFamily f = family_main(16);
    for (int j = 0; j < 9; ++j) {
        int g = f.gamma[j];
        int sign = hamming_weight(static_cast<std::uint64_t>(g & f.psi[g])) % 2 ? -1 : 1;
        CHECK(wh9.at(0, j) == Entry::var(g, sign));
        CHECK((wh9.at(0, j) == shown.at(0, j)) == (j != 3 && j != 5 && j != 6));
    }
}

TEST_CASE("one column") {
    Design w = build_W(1), wh = build_W_hat(1);
    CHECK(w.rows() == 1);
    CHECK(w.at(0, 0) == Entry::var(0));
    CHECK(wh.at(0, 0) == Entry::var(0));
}

TEST_CASE("rate-1 designs") {
    for (int n = 1; n <= 16; ++n) {
        CAPTURE(n);
        int t = static_cast<int>(nu(n));
        for (const Design& d : {build_W(n), build_W_hat(n)}) {
            CHECK(d.rows() == t);
            CHECK(d.num_vars() == t);
            CHECK(d.cols() == n);
            CHECK(verify_orthogonal(d).ok);
            CHECK(numeric_gram_check(d, 11) < 1e-9);
            for (const auto& col : column_occurrence_profile(d)) {
                CHECK(static_cast<int>(col.size()) == t);
                for (auto [v, c] : col) CHECK(c == 1);
            }
        }
    }
}

TEST_CASE("sign relation between W and W-hat") {
    for (int n = 1; n <= 16; ++n) {
        MapFamily f = family_main(static_cast<int>(nu(n)));
        Design w = build_W(n), wh = build_W_hat(n);
        for (int i = 0; i < w.rows(); ++i)
            for (int j = 0; j < n; ++j) {
                const Term& s = w.at(i, j).front();
                const Term& sh = wh.at(i ^ f.gamma[j], j).front();
                CHECK(s.coeff == sh.coeff);
                CHECK(sh.var == i);
            }
    }
}

TEST_CASE("column extraction equals the closed form") {
    for (int n = 1; n <= 16; ++n) {
        CAPTURE(n);
        MapFamily f = family_main(static_cast<int>(nu(n)));
        CHECK(extract_from_square(build_from_maps(f), n) == build_W(n));
    }
}

TEST_CASE("other families give rate-1 designs too") {
    for (FamilyId id : {FamilyId::alp_octonion, FamilyId::alp_quaternion, FamilyId::geramita_pullman})
        for (int n : {9, 10, 12}) {
            MapFamily f = family(id, static_cast<int>(nu(n)));
            Rate1Pair p = rate1_pair(n, f);
            CHECK(verify_orthogonal(p.w).ok);
            CHECK(verify_orthogonal(p.w_hat).ok);
        }
}
