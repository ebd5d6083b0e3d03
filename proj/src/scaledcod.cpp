#include "odt/scaledcod.hpp"

#include <stdexcept>

#include "odt/io.hpp"
#include "odt/rate1rod.hpp"

namespace odt {

namespace {

Design from_tokens(const std::vector<std::vector<const char*>>& rows, int k) {
    int p = static_cast<int>(rows.size()), n = static_cast<int>(rows[0].size());
    Design d(p, n, k, VarKind::complex);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < n; ++j) d.at(i, j) = parse_entry(rows[i][j]);
    return d;
}

Design relabel_block(const Design& d, int from, int to, int count, int k) {
    std::map<int, VarImage> img;
    for (int v = 0; v < count; ++v) img[from + v] = {to + v, 1};
    return relabel(d, img, k);
}

} // namespace

BlockLibrary block_library() {
    BlockLibrary lib;
    lib.a = from_tokens({{"x0", "-x1*", "-x2*", "0", "-x3*", "0", "0", "0"},
                         {"x1", "x0*", "0", "-x2*", "0", "-x3*", "0", "0"},
                         {"x2", "0", "x0*", "x1*", "0", "0", "-x3*", "0"},
                         {"0", "x2", "-x1", "x0", "0", "0", "0", "-x3*"},
                         {"x3", "0", "0", "0", "x0*", "x1*", "x2*", "0"},
                         {"0", "x3", "0", "0", "-x1", "x0", "0", "x2*"},
                         {"0", "0", "x3", "0", "-x2", "0", "x0", "-x1*"},
                         {"0", "0", "0", "x3", "0", "-x2", "x1", "x0*"}},
                        4);
    lib.b = from_tokens({{"x4", "-x5*", "-x6*", "-x7*", "0", "0", "0", "0"},
                         {"x5", "x4*", "0", "0", "-x6*", "-x7*", "0", "0"},
                         {"x6", "0", "x4*", "0", "x5*", "0", "-x7*", "0"},
                         {"0", "x6", "-x5", "0", "x4", "0", "0", "-x7*"},
                         {"x7", "0", "0", "x4*", "0", "x5*", "x6*", "0"},
                         {"0", "x7", "0", "-x5", "0", "x4", "0", "x6*"},
                         {"0", "0", "x7", "-x6", "0", "0", "x4", "-x5*"},
                         {"0", "0", "0", "0", "x7", "-x6", "x5", "x4*"}},
                        8);
    lib.c = from_tokens({{"-x3*/s2"}, {"x2*/s2"}, {"-x1*/s2"}, {"-x0/s2"}, {"x0*/s2"}, {"-x1/s2"}, {"-x2/s2"}, {"-x3/s2"}},
                        4);
    lib.c.set_scaled_columns({0});
    return lib;
}

Design indexed_A(int i, int k) {
    if (i < 0) throw std::invalid_argument("indexed_A: negative index");
    static const BlockLibrary lib = block_library();
    int base = 8 * (i / 2);
    if (i % 2 == 0) return relabel_block(lib.a, 0, base, 4, k);
    return relabel_block(lib.b, 4, base + 4, 4, k);
}

Design indexed_A_bar(int i, int k) {
    if (i < 0) throw std::invalid_argument("indexed_A_bar: negative index");
    static const BlockLibrary lib = block_library();
    return relabel_block(lib.c, 0, 4 * i, 4, k);
}

namespace {

// replace each +-y_f of a rate-1 ROD by +-(8x1 column chosen by f)
template <class Pick>
Design substitute_columns(const Design& w, int k, Pick pick) {
    Design out(8 * w.rows(), w.cols(), k, VarKind::complex);
    for (int i = 0; i < w.rows(); ++i)
        for (int j = 0; j < w.cols(); ++j) {
            const Term& t = w.at(i, j).front();
            Design col = pick(t.var);
            for (int r = 0; r < 8; ++r) out.at(8 * i + r, j) = col.at(r, 0).scaled(t.coeff);
        }
    std::set<int> all;
    for (int j = 0; j < w.cols(); ++j) all.insert(j);
    out.set_scaled_columns(all);
    return out;
}

} // namespace

DRMatrix build_DR(int n) {
    if (n < 5) throw std::invalid_argument("(DR)_n needs n >= 5");
    DRMatrix dr;
    dr.n = n;
    if (n <= 8) {
        dr.design = take_columns(block_library().a, n);
        return dr;
    }
    const int t = n - 8;
    const int nt = static_cast<int>(nu(t));
    const int N = static_cast<int>(nu(n));
    if (16 * nt != N) throw std::logic_error("nu(n) != 16 nu(n-8)");
    const int u = N / 8, k = N / 2;

    std::vector<Design> even, odd;
    for (int i = 0; i < u; i += 2) {
        even.push_back(indexed_A(i, k));
        odd.push_back(indexed_A(i + 1, k));
    }
    dr.e8 = vstack(even);
    dr.o8 = vstack(odd);
    dr.h = substitute_columns(build_W(t), k, [&](int f) { return indexed_A_bar(2 * f + 1, k); });
    dr.h_hat = substitute_columns(build_W_hat(t), k, [&](int f) { return indexed_A_bar(2 * f, k); });

    Design top = hstack({dr.e8, dr.h});
    Design bottom = hstack({dr.o8, dr.h_hat});
    dr.design = vstack({top, bottom});
    return dr;
}

Design tjc_rate1_rod(int n) {
    Design w = build_W(n);
    for (int j = 0; j < w.cols(); ++j) w.at(0, j) = -w.at(0, j);
    std::map<int, VarImage> img{{0, {0, -1}}};
    return relabel(w, img, w.num_vars());
}

Design build_TJC(int n) {
    if (n < 2) throw std::invalid_argument("TJC_n needs n >= 2");
    Design r = tjc_rate1_rod(n);
    r.set_kind(VarKind::complex);
    Design top = scale(r, Coefficient::inv_sqrt2());
    Design bottom(r.rows(), r.cols(), r.num_vars(), VarKind::complex);
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) bottom.at(i, j) = top.at(i, j).conjugated();
    Design d = vstack({top, bottom});
    std::set<int> all;
    for (int j = 0; j < n; ++j) all.insert(j);
    d.set_scaled_columns(all);
    return d;
}

CoeffMatrix papr_matrix(int n) {
    if (n < 8) throw std::invalid_argument("Q_n needs n >= 8");
    CoeffMatrix q(n, std::vector<Coefficient>(n));
    const Coefficient h = Coefficient::inv_sqrt2();
    for (int i = 0; i < 8; ++i) {
        q[i][i] = i < 4 ? h : -h;
        q[i][7 - i] = h;
    }
    for (int i = 8; i < n; ++i) q[i][i] = Coefficient::one();
    return q;
}

Design apply_papr_reduction(const DRMatrix& dr) {
    if (dr.n < 8) throw std::invalid_argument("PAPR reduction needs n >= 8");
    Design d = multiply(dr.design, papr_matrix(dr.n));
    d.set_scaled_columns({});
    return d;
}

BoundsReport table_row(int n) { return bounds_report(n); }

} // namespace odt
