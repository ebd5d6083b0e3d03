#include <doctest.h>

#include "odt/gf2num.hpp"
#include "odt/squarerod.hpp"
#include "test_util.hpp"

using namespace odt;

namespace {

const FamilyId kFamilies[] = {FamilyId::main, FamilyId::alp_octonion, FamilyId::alp_quaternion,
                              FamilyId::geramita_pullman};

std::vector<Entry> row_of(const Design& d, int i) {
    std::vector<Entry> r;
    for (int j = 0; j < d.cols(); ++j) r.push_back(d.at(i, j));
    return r;
}

} // namespace

TEST_CASE("base square designs") {
    Design x0(1, 1, 1, VarKind::real);
    x0.at(0, 0) = Entry::var(0);
    CHECK(base_K(1) == x0);
    CHECK(build_from_maps(family_main(1)) == x0);
    Design k2 = base_K(2);
    CHECK(k2.at(0, 0) == Entry::var(0));
    CHECK(k2.at(0, 1) == Entry::var(1));
    CHECK(k2.at(1, 0) == Entry::var(1, -1));
    CHECK(k2.at(1, 1) == Entry::var(0));
    std::vector<Entry> want = {Entry::var(1, -1), Entry::var(0),     Entry::var(3, -1), Entry::var(2),
                               Entry::var(5, -1), Entry::var(4),     Entry::var(7),     Entry::var(6, -1)};
    CHECK(row_of(base_K(8), 1) == want);
    for (int t : {1, 2, 4, 8}) {
        CHECK(verify_orthogonal(base_K(t)).ok);
        CHECK(build_from_maps(family_main(t)) == base_K(t));
    }
}

TEST_CASE("kronecker products of sign matrices") {
    CHECK(kronecker(sign_I2(3), sign_I2(2)) == sign_I4(1));
    CHECK(kronecker(identity_signs(1), base_K(4)) == base_K(4));
    Design blk = kronecker(identity_signs(2), base_K(2));
    CHECK(blk.rows() == 4);
    CHECK(blk.at(2, 2) == Entry::var(0));
    CHECK(blk.at(3, 2) == Entry::var(1, -1));
    CHECK(blk.at(0, 2).is_zero());
    CHECK(sign_I8(1) == kronecker(sign_I2(0), sign_I4(1)));
    CHECK(sign_I8(2) == kronecker(kronecker(sign_I2(3), sign_I2(1)), sign_I2(2)));
    CHECK(sign_I8(3) == kronecker(kronecker(sign_I2(3), sign_I2(2)), sign_I2(0)));
}

TEST_CASE("quaternion blocks") {
    auto [l4, r4] = quaternion_blocks();
    CHECK(row_of(l4, 1) == std::vector<Entry>{Entry::var(1, -1), Entry::var(0), Entry::var(3, -1), Entry::var(2)});
    CHECK(row_of(r4, 1) == std::vector<Entry>{Entry::var(5, -1), Entry::var(4), Entry::var(7), Entry::var(6, -1)});
}

TEST_CASE("map-built square designs") {
    for (FamilyId id : kFamilies)
        for (int t = 1; t <= 256; t *= 2) {
            Design d = build_from_maps(family(id, t));
            CAPTURE(family_name(id));
            CAPTURE(t);
            CHECK(d.num_vars() == rho(t));
            CHECK(verify_orthogonal(d).ok);
            CHECK(verify_rod_structural(d).ok);
            CHECK(numeric_gram_check(d, static_cast<std::uint64_t>(t)) < 1e-9);
            bool anti = true, support = true;
            for (int i = 0; i < t; ++i) {
                int nz = 0;
                anti = anti && d.at(i, i) == Entry::var(0);
                for (int j = 0; j < t; ++j) {
                    nz += !d.at(i, j).is_zero();
                    if (i != j) {
                        const Entry& a = d.at(i, j);
                        const Entry& b = d.at(j, i);
                        anti = anti && (a.is_zero() ? b.is_zero() : b == -a);
                    }
                }
                support = support && nz == rho(t);
            }
            CHECK(anti);
            CHECK(support);
        }
}

TEST_CASE("builder refuses families failing the odd condition") {
    MapFamily f = family_main(16);
    f.psi[1] = 14;
    CHECK_THROWS(build_from_maps(f));
    CHECK_FALSE(verify_orthogonal(build_from_maps(f, true)).ok);
}

TEST_CASE("square displays") {
    CHECK(build_from_maps(family_main(16)) == test::fixture("r16"));
    CHECK(build_from_maps(family_main(32)) == test::fixture("r32"));
    CHECK(build_from_maps(family_geramita_pullman(16)) == build_from_maps(family_main(16)));
    CHECK(test::same_cells(recursive_gp(32), test::fixture("gp32")));
}

TEST_CASE("recursive constructions equal the map-built ones") {
    for (int t = 16; t <= 512; t *= 2) {
        CAPTURE(t);
        CHECK(recursive_R(t) == build_from_maps(family_main(t)));
    }
    for (int t : {16, 32, 64, 256}) {
        CAPTURE(t);
        CHECK(recursive_alp_octonion(t) == build_from_maps(family_alp_octonion(t)));
        CHECK(recursive_alp_quaternion(t) == build_from_maps(family_alp_quaternion(t)));
        CHECK(recursive_gp(t) == build_from_maps(family_geramita_pullman(t)));
    }
}

TEST_CASE("recursion ladder intermediates") {
    RLadder l = recursive_R_ladder(base_K(8));
    CHECK(l.r2n.rows() == 16);
    CHECK(l.r2n.num_vars() == 9);
    CHECK(l.r4n.num_vars() == 10);
    CHECK(l.r8n.num_vars() == 12);
    CHECK(l.r16n.num_vars() == 16);
    for (const Design* d : {&l.r2n, &l.r4n, &l.r8n, &l.r16n}) CHECK(verify_orthogonal(*d).ok);
    CHECK(T4(0, 1, 2).rows() == 4);
    CHECK(verify_orthogonal(T4(0, 1, 2)).ok);
    CHECK(verify_orthogonal(T8({0, 1, 2, 3}, 4)).ok);
}
