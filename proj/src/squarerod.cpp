#include "odt/squarerod.hpp"

#include <stdexcept>

#include "odt/gf2num.hpp"

namespace odt {

namespace {

// entries encoded as sign * (var + 1), 0 for empty
Design from_codes(const std::vector<std::vector<int>>& codes, int k) {
    int p = static_cast<int>(codes.size()), n = static_cast<int>(codes[0].size());
    Design d(p, n, k, VarKind::real);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < n; ++j) {
            int c = codes[i][j];
            if (c) d.at(i, j) = Entry::var(std::abs(c) - 1, c > 0 ? 1 : -1);
        }
    return d;
}

Design scalar_identity(int var, int n, int k, int sign = 1) {
    Design d(n, n, k, VarKind::real);
    for (int i = 0; i < n; ++i) d.at(i, i) = Entry::var(var, sign);
    return d;
}

Design with_k(Design d, int k) {
    d.set_num_vars(k);
    return d;
}

Design block2(const Design& a, const Design& b, const Design& c, const Design& d) {
    return vstack({hstack({a, b}), hstack({c, d})});
}

Design signs_as_design(const SignMatrix& s, int var, int k) {
    Design d(static_cast<int>(s.size()), static_cast<int>(s[0].size()), k, VarKind::real);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s[i].size(); ++j)
            if (s[i][j]) d.at(static_cast<int>(i), static_cast<int>(j)) = Entry::var(var, s[i][j]);
    return d;
}

Design add(const Design& a, const Design& b) {
    Design r = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) += b.at(i, j);
    return r;
}

} // namespace

Design build_from_maps(const MapFamily& fam, bool force) {
    if (!force && !validate_odd_condition(fam).ok)
        throw std::invalid_argument("map family fails the odd-overlap condition");
    const int t = fam.t;
    Design d(t, t, fam.size(), VarKind::real);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            int x = i ^ j;
            if (!fam.in_image(x)) continue;
            int s = hamming_weight(static_cast<std::uint64_t>(i & fam.psi[x])) % 2 ? -1 : 1;
            d.at(i, j) = Entry::var(fam.gamma_inv[x], s);
        }
    return d;
}

Design base_K(int t) {
    switch (t) {
    case 1: return from_codes({{1}}, 1);
    case 2: return from_codes({{1, 2}, {-2, 1}}, 2);
    case 4: return from_codes({{1, 2, 3, 4}, {-2, 1, -4, 3}, {-3, 4, 1, -2}, {-4, -3, 2, 1}}, 4);
    case 8:
        return from_codes({{1, 2, 3, 4, 5, 6, 7, 8},
                           {-2, 1, -4, 3, -6, 5, 8, -7},
                           {-3, 4, 1, -2, -7, -8, 5, 6},
                           {-4, -3, 2, 1, -8, 7, -6, 5},
                           {-5, 6, 7, 8, 1, -2, -3, -4},
                           {-6, -5, 8, -7, 2, 1, 4, -3},
                           {-7, -8, -5, 6, 3, -4, 1, 2},
                           {-8, 7, -6, -5, 4, 3, -2, 1}},
                          8);
    default: throw std::invalid_argument("base_K: t must be 1, 2, 4 or 8");
    }
}

SignMatrix identity_signs(int n) {
    SignMatrix s(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) s[i][i] = 1;
    return s;
}

SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b) {
    std::size_t ra = a.size(), ca = a[0].size(), rb = b.size(), cb = b[0].size();
    SignMatrix r(ra * rb, std::vector<int>(ca * cb, 0));
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ca; ++j)
            for (std::size_t k = 0; k < rb; ++k)
                for (std::size_t l = 0; l < cb; ++l) r[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
    return r;
}

Design kronecker(const SignMatrix& a, const Design& b) {
    int ra = static_cast<int>(a.size()), ca = static_cast<int>(a[0].size());
    Design r(ra * b.rows(), ca * b.cols(), b.num_vars(), b.kind());
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < ca; ++j) {
            if (!a[i][j]) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = b.at(k, l).scaled(Coefficient(a[i][j]));
        }
    return r;
}

Design kronecker(const Design& a, const SignMatrix& b) {
    int rb = static_cast<int>(b.size()), cb = static_cast<int>(b[0].size());
    Design r(a.rows() * rb, a.cols() * cb, a.num_vars(), a.kind());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < rb; ++k)
                for (int l = 0; l < cb; ++l)
                    if (b[k][l]) r.at(i * rb + k, j * cb + l) = a.at(i, j).scaled(Coefficient(b[k][l]));
        }
    return r;
}

SignMatrix sign_I2(int k) {
    switch (k) {
    case 0: return {{1, 0}, {0, 1}};
    case 1: return {{1, 0}, {0, -1}};
    case 2: return {{0, 1}, {1, 0}};
    // transpose of the commonly printed form; required for the ladder to match the map construction
    case 3: return {{0, 1}, {-1, 0}};
    default: throw std::out_of_range("sign_I2");
    }
}

SignMatrix sign_I4(int k) {
    if (k == 0) return identity_signs(4);
    if (k == 1) return kronecker(sign_I2(3), sign_I2(2));
    throw std::out_of_range("sign_I4");
}

SignMatrix sign_I8(int k) {
    switch (k) {
    case 0: return identity_signs(8);
    case 1: return kronecker(sign_I2(0), sign_I4(1));
    case 2: return kronecker(kronecker(sign_I2(3), sign_I2(1)), sign_I2(2));
    case 3: return kronecker(kronecker(sign_I2(3), sign_I2(2)), sign_I2(0));
    default: throw std::out_of_range("sign_I8");
    }
}

Design T4(int y0, int y1, int k, bool negate_first) {
    SignMatrix id = sign_I4(0);
    if (negate_first)
        for (auto& r : id)
            for (auto& v : r) v = -v;
    return add(signs_as_design(id, y0, k), signs_as_design(sign_I4(1), y1, k));
}

Design T8(const std::vector<int>& ys, int k, bool negate_first) {
    if (ys.size() != 4) throw std::invalid_argument("T8 takes four variables");
    SignMatrix id = sign_I8(0);
    if (negate_first)
        for (auto& r : id)
            for (auto& v : r) v = -v;
    Design d = signs_as_design(id, ys[0], k);
    for (int i = 1; i < 4; ++i) d = add(d, signs_as_design(sign_I8(i), ys[i], k));
    return d;
}

RLadder recursive_R_ladder(const Design& rn) {
    const int n = rn.rows(), r = rn.num_vars();
    RLadder L;
    int k = r + 1;
    Design a = with_k(rn, k);
    L.r2n = block2(a, scalar_identity(r, n, k), scalar_identity(r, n, k, -1), negate_vars_except_first(a));

    k = r + 2;
    a = with_k(L.r2n, k);
    L.r4n = block2(a, scalar_identity(r + 1, 2 * n, k), scalar_identity(r + 1, 2 * n, k, -1),
                   negate_vars_except_first(a));

    auto y = [&](int i) { return r + 2 + i; };
    k = r + 4;
    a = with_k(L.r4n, k);
    SignMatrix In = identity_signs(n);
    L.r8n = block2(a, kronecker(T4(y(0), y(1), k), In), kronecker(T4(y(0), y(1), k, true), In),
                   negate_vars_except_first(a));

    k = r + 8;
    a = with_k(L.r8n, k);
    std::vector<int> ys{y(2), y(3), y(4), y(5)};
    L.r16n = block2(a, kronecker(T8(ys, k), In), kronecker(T8(ys, k, true), In), negate_vars_except_first(a));
    return L;
}

Design recursive_R(int t) {
    int a = log2_exact(static_cast<std::uint64_t>(t));
    if (a < 0) throw std::invalid_argument("recursive_R: t must be a power of two");
    if (t <= 8) return base_K(t);
    // anchor n = 2^(4l-1) strictly below t
    int l = (a + 1) / 4;
    int e = 4 * l - 1;
    if (e == a) e -= 4;
    int n = 1 << e;
    RLadder L = recursive_R_ladder(recursive_R(n));
    switch (t / n) {
    case 2: return L.r2n;
    case 4: return L.r4n;
    case 8: return L.r8n;
    case 16: return L.r16n;
    default: throw std::logic_error("recursive_R: bad anchor");
    }
}

std::pair<Design, Design> quaternion_blocks() {
    Design l = from_codes({{1, 2, 3, 4}, {-2, 1, -4, 3}, {-3, 4, 1, -2}, {-4, -3, 2, 1}}, 8);
    Design r = from_codes({{5, 6, 7, 8}, {-6, 5, 8, -7}, {-7, -8, 5, 6}, {-8, 7, -6, 5}}, 8);
    return {l, r};
}

namespace {

void require_16n(int t) {
    if (log2_exact(static_cast<std::uint64_t>(t)) < 0) throw std::invalid_argument("t must be a power of two");
}

} // namespace

Design recursive_alp_octonion(int t) {
    require_16n(t);
    if (t <= 8) return base_K(t);
    int n = t / 16;
    Design on = recursive_alp_octonion(n);
    int k = on.num_vars() + 8;
    Design y = shift_vars(on, 8, k);
    Design k8 = with_k(base_K(8), k);
    SignMatrix I8 = identity_signs(8), In = identity_signs(n);
    return block2(kronecker(In, k8), kronecker(y, I8), scale(kronecker(transpose(y), I8), Coefficient(-1)),
                  kronecker(In, transpose(k8)));
}

Design recursive_alp_quaternion(int t) {
    require_16n(t);
    if (t <= 8) return base_K(t);
    int n = t / 16;
    Design on = recursive_alp_quaternion(n);
    int k = on.num_vars() + 8;
    Design y = shift_vars(on, 8, k);
    auto [l4, r4] = quaternion_blocks();
    l4 = with_k(l4, k);
    r4 = with_k(r4, k);
    SignMatrix I4 = identity_signs(4), In = identity_signs(n);
    Design z(4 * n, 4 * n, k, VarKind::real);
    auto neg = [](const Design& d) { return scale(d, Coefficient(-1)); };
    Design yI = kronecker(y, I4), ytI = kronecker(transpose(y), I4);
    return vstack({
        hstack({kronecker(In, l4), z, kronecker(In, r4), yI}),
        hstack({z, kronecker(In, l4), neg(ytI), kronecker(In, transpose(r4))}),
        hstack({neg(kronecker(In, transpose(r4))), yI, kronecker(In, transpose(l4)), z}),
        hstack({neg(ytI), neg(kronecker(In, r4)), z, kronecker(In, transpose(l4))}),
    });
}

Design recursive_gp(int t) {
    require_16n(t);
    if (t <= 8) return base_K(t);
    int n = t / 16;
    Design on = recursive_gp(n);
    int k = on.num_vars() + 8;
    Design y = shift_vars(on, 8, k);
    Design k8 = with_k(base_K(8), k);
    SignMatrix I8 = identity_signs(8), In = identity_signs(n);
    return block2(kronecker(k8, In), kronecker(I8, y), kronecker(I8, transpose(scale(y, Coefficient(-1)))),
                  kronecker(transpose(k8), In));
}

} // namespace odt
