#include <doctest.h>

#include <random>

#include "odt/coefficient.hpp"
#include "odt/design.hpp"
#include "odt/io.hpp"
#include "odt/scaledcod.hpp"
#include "odt/squarerod.hpp"
#include "test_util.hpp"

using namespace odt;

namespace {

Coefficient random_coeff(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-40, 40), den(0, 3);
    return {Dyadic(num(rng), den(rng)), Dyadic(num(rng), den(rng))};
}

Design alamouti() {
    Design g(2, 2, 2, VarKind::complex);
    g.at(0, 0) = Entry::var(0);
    g.at(0, 1) = Entry::var(1);
    g.at(1, 0) = Entry::var(1, -1, true);
    g.at(1, 1) = Entry::var(0, 1, true);
    return g;
}

} // namespace

TEST_CASE("coefficient ring") {
    Coefficient h = Coefficient::inv_sqrt2();
    CHECK(h * h == Coefficient(Dyadic(1, 1), Dyadic(0)));
    CHECK(Coefficient::sqrt2() * h == Coefficient::one());
    Coefficient a{Dyadic(3), Dyadic(2)}, b{Dyadic(5), Dyadic(-1)};
    // (3+2r)(5-r) = 15-4 + (-3+10) r
    CHECK(a * b == Coefficient(Dyadic(11), Dyadic(7)));
    CHECK(Dyadic(2, 2) == Dyadic(1, 1));
    CHECK(h.is_scaled_sign());
    CHECK((-h).sign_of_unit() == -1);
    CHECK(Coefficient(-1).is_unit_sign());

    std::mt19937_64 rng(42);
    for (int i = 0; i < 10000; ++i) {
        Coefficient x = random_coeff(rng), y = random_coeff(rng), z = random_coeff(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK(x + y == y + x);
        CHECK(x - x == Coefficient());
        CHECK(doctest::Approx((x * y).to_double()).epsilon(1e-9) == x.to_double() * y.to_double());
    }
}

TEST_CASE("entries canonicalize") {
    Entry e = Entry::var(3) + Entry::var(1, -1, true) + Entry::var(3);
    REQUIRE(e.terms().size() == 2);
    CHECK(e.terms()[0].var == 1);
    CHECK(e.terms()[1].coeff == Coefficient(2));
    CHECK((Entry::var(2) + Entry::var(2, -1)).is_zero());
    CHECK(Entry::var(2).conjugated() == Entry::var(2, 1, true));
}

TEST_CASE("conjugate transpose") {
    Design x(1, 1, 1, VarKind::complex);
    x.at(0, 0) = Entry::var(0);
    CHECK(conj_transpose(x).at(0, 0) == Entry::var(0, 1, true));
    Design g = alamouti();
    Design gh = conj_transpose(g);
    CHECK(gh.at(0, 1) == Entry::var(1, -1));
    CHECK(gh.at(1, 0) == Entry::var(1, 1, true));
    CHECK(conj_transpose(gh) == g);
}

TEST_CASE("gram and exact verification") {
    GramMatrix gm = gram(alamouti());
    CHECK(gm.at(0, 1).empty());
    CHECK(gm.at(0, 0).size() == 2);
    CHECK(verify_orthogonal(alamouti()).ok);

    Design z = zero_design(3, 2, 1, VarKind::real);
    GramMatrix gz = gram(z);
    for (const auto& c : gz.cells) CHECK(c.empty());

    Design x(1, 1, 1, VarKind::real);
    x.at(0, 0) = Entry::var(0);
    CHECK(verify_orthogonal(x).ok);

    // the 4-antenna stacked design needs the 1/2 terms to merge
    CHECK(verify_orthogonal(build_TJC(4)).ok);
}

TEST_CASE("witness for a single sign flip") {
    Design a = block_library().a;
    REQUIRE(verify_orthogonal(a).ok);
    a.at(0, 0) = -a.at(0, 0);
    OrthogonalityReport r = verify_orthogonal(a);
    CHECK_FALSE(r.ok);
    REQUIRE(r.witness);
    CHECK(r.witness->row == 0);
    CHECK((r.witness->col == 0 || r.witness->col == 1));
    CHECK(numeric_gram_check(a, 3) > 1e-3);
}

TEST_CASE("structural check") {
    CHECK(verify_rod_structural(base_K(4)).ok);
    Design bad(2, 2, 2, VarKind::real);
    bad.at(0, 0) = Entry::var(0);
    bad.at(0, 1) = Entry::var(1);
    bad.at(1, 0) = Entry::var(1);
    bad.at(1, 1) = Entry::var(0);
    CHECK_FALSE(verify_rod_structural(bad).ok);
    CHECK_FALSE(verify_orthogonal(bad).ok);
    Design two(1, 1, 2, VarKind::real);
    two.at(0, 0) = Entry::var(0) + Entry::var(1);
    CHECK_THROWS_AS(verify_rod_structural(two), std::invalid_argument);
}

TEST_CASE("structural check agrees with the Gram check on mutations of K8") {
    const Design k8 = base_K(8);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> cell(0, 7), var(0, 7), coin(0, 1);
    int rejected = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        Design m = k8;
        int i = cell(rng), j = cell(rng);
        if (coin(rng)) m.at(i, j) = -m.at(i, j);
        else m.at(i, j) = Entry::var(var(rng), coin(rng) ? 1 : -1);
        bool orth = verify_orthogonal(m).ok;
        CHECK(verify_rod_structural(m).ok == orth);
        rejected += !orth;
    }
    CHECK(rejected > 500);
}

TEST_CASE("transpose of a square ROD negates all variables but the first") {
    CHECK(negate_vars_except_first(base_K(2)) == transpose(base_K(2)));
    Design r16 = test::fixture("r16");
    CHECK(negate_vars_except_first(r16) == transpose(r16));
    Design x(1, 1, 1, VarKind::real);
    x.at(0, 0) = Entry::var(0);
    CHECK(negate_vars_except_first(x) == x);
}

TEST_CASE("numeric Gram oracle") {
    CHECK(numeric_gram_check(base_K(8), 1) < 1e-9);
    CHECK(numeric_gram_check(build_TJC(9), 2) < 1e-9);
    Design k = base_K(8);
    k.at(3, 5) = -k.at(3, 5);
    CHECK(numeric_gram_check(k, 1) > 1e-3);
}

TEST_CASE("zero counts and occurrence profiles") {
    CHECK(count_zeros(build_DR(12).design).fraction == Rational(1, 3));
    CHECK(count_zeros(block_library().c).count == 0);
    CHECK(count_zeros(zero_design(2, 2, 1, VarKind::real)).fraction == Rational(1));

    Design dr9 = build_DR(9).design;
    auto prof = column_occurrence_profile(dr9);
    REQUIRE(prof.size() == 9);
    CHECK(prof[8].size() == 8);
    for (auto [v, c] : prof[8]) CHECK(c == 2);
    CHECK(prof[0].size() == 8);
    for (auto [v, c] : prof[0]) CHECK(c == 1);
    CHECK(scaled_profile_ok(dr9));
    CHECK(column_occurrence_profile(zero_design(2, 1, 1, VarKind::real))[0].empty());
}

TEST_CASE("scaled designs have rate at most one half") {
    for (int n = 9; n <= 16; ++n) {
        Design d = build_DR(n).design;
        REQUIRE_FALSE(d.scaled_columns().empty());
        CHECK(scaled_profile_ok(d));
        CHECK(2 * d.num_vars() <= d.rows());
    }
    for (int n = 2; n <= 12; ++n) CHECK(build_TJC(n).rate() <= Rational(1, 2));
}

TEST_CASE("multiply by a coefficient matrix") {
    CoeffMatrix q = papr_matrix(9);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            Coefficient s;
            for (int l = 0; l < 9; ++l) s += q[l][i] * q[l][j];
            CHECK(s == (i == j ? Coefficient::one() : Coefficient()));
        }
    Design d = multiply(base_K(8), std::vector<std::vector<Coefficient>>(8, std::vector<Coefficient>(1, 1)));
    CHECK(d.cols() == 1);
    CHECK(d.at(0, 0).terms().size() == 8);
}
