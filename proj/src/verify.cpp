#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "odt/design.hpp"

namespace odt {

QuadMonomial QuadMonomial::make(int v1, bool c1, int v2, bool c2) {
    if (std::pair(v2, c2) < std::pair(v1, c1)) {
        std::swap(v1, v2);
        std::swap(c1, c2);
    }
    return {v1, c1, v2, c2};
}

std::string QuadMonomial::to_string() const {
    std::ostringstream os;
    os << 'x' << left_var << (left_conj ? "*" : "") << " x" << right_var << (right_conj ? "*" : "");
    return os.str();
}

std::string GramWitness::to_string() const {
    std::ostringstream os;
    os << "gram(" << row << "," << col << ") monomial " << monomial.to_string() << ": got "
       << actual.to_string() << ", expected " << expected.to_string();
    return os.str();
}

GramMatrix gram(const Design& d) {
    GramMatrix g;
    g.n = d.cols();
    g.cells.resize(static_cast<std::size_t>(g.n) * g.n);
    bool cx = d.is_complex();
    std::vector<int> nz;
    for (int r = 0; r < d.rows(); ++r) {
        nz.clear();
        for (int j = 0; j < d.cols(); ++j)
            if (!d.at(r, j).is_zero()) nz.push_back(j);
        for (int a : nz)
            for (int b : nz) {
                QuadForm& cell = g.at(a, b);
                for (const auto& s : d.at(r, a).terms())
                    for (const auto& t : d.at(r, b).terms()) {
                        bool sc = cx ? !s.conj : false;
                        bool tc = cx ? t.conj : false;
                        auto key = QuadMonomial::make(s.var, sc, t.var, tc);
                        Coefficient c = cell[key] + s.coeff * t.coeff;
                        if (c.is_zero()) cell.erase(key);
                        else cell[key] = c;
                    }
            }
    }
    return g;
}

OrthogonalityReport verify_orthogonal(const Design& d) {
    GramMatrix g = gram(d);
    QuadForm diag;
    for (int v = 0; v < d.num_vars(); ++v)
        diag[d.is_complex() ? QuadMonomial::make(v, true, v, false) : QuadMonomial::make(v, false, v, false)] =
            Coefficient::one();
    const QuadForm empty;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            const QuadForm& want = a == b ? diag : empty;
            const QuadForm& got = g.at(a, b);
            auto gi = got.begin();
            auto wi = want.begin();
            while (gi != got.end() || wi != want.end()) {
                GramWitness w{a, b, {}, {}, {}};
                if (wi == want.end() || (gi != got.end() && gi->first < wi->first)) {
                    w.monomial = gi->first;
                    w.actual = gi->second;
                } else if (gi == got.end() || wi->first < gi->first) {
                    w.monomial = wi->first;
                    w.expected = wi->second;
                } else {
                    if (gi->second == wi->second) {
                        ++gi;
                        ++wi;
                        continue;
                    }
                    w.monomial = gi->first;
                    w.actual = gi->second;
                    w.expected = wi->second;
                }
                return {false, w};
            }
        }
    return {true, std::nullopt};
}

StructuralReport verify_rod_structural(const Design& d) {
    if (d.is_complex()) throw std::invalid_argument("structural check needs a real design");
    const int p = d.rows(), n = d.cols(), k = d.num_vars();
    // var index and sign per cell, -1 for zero
    std::vector<int> var(static_cast<std::size_t>(p) * n, -1), sgn(var.size(), 0);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < n; ++j) {
            const Entry& e = d.at(i, j);
            if (e.is_zero()) continue;
            if (!e.single() || !e.front().coeff.is_unit_sign())
                throw std::invalid_argument("structural check needs single-term +-x entries");
            var[i * n + j] = e.front().var;
            sgn[i * n + j] = e.front().coeff.sign_of_unit();
        }
    auto V = [&](int i, int j) { return var[static_cast<std::size_t>(i) * n + j]; };
    auto S = [&](int i, int j) { return sgn[static_cast<std::size_t>(i) * n + j]; };

    // (i) once per column, at most once per row
    std::vector<int> row_of(static_cast<std::size_t>(n) * k, -1);
    for (int j = 0; j < n; ++j) {
        std::vector<int> seen(k, 0);
        for (int i = 0; i < p; ++i)
            if (V(i, j) >= 0) {
                ++seen[V(i, j)];
                row_of[static_cast<std::size_t>(j) * k + V(i, j)] = i;
            }
        for (int v = 0; v < k; ++v)
            if (seen[v] != 1) {
                std::ostringstream os;
                os << "x" << v << " appears " << seen[v] << " times in column " << j;
                return {false, os.str()};
            }
    }
    for (int i = 0; i < p; ++i) {
        std::vector<int> seen(k, 0);
        for (int j = 0; j < n; ++j)
            if (V(i, j) >= 0 && ++seen[V(i, j)] > 1) {
                std::ostringstream os;
                os << "x" << V(i, j) << " repeated in row " << i;
                return {false, os.str()};
            }
    }
    // (ii) and (iii): the partner row i' holding |M(i,j')| in column j is unique by (i)
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < n; ++j) {
            if (V(i, j) < 0) continue;
            for (int jp = 0; jp < n; ++jp) {
                if (jp == j || V(i, jp) < 0) continue;
                int ip = row_of[static_cast<std::size_t>(j) * k + V(i, jp)];
                if (V(ip, jp) != V(i, j)) {
                    std::ostringstream os;
                    os << "pairing fails at row " << i << ", columns " << j << "," << jp;
                    return {false, os.str()};
                }
                if (S(i, j) * S(i, jp) + S(ip, j) * S(ip, jp) != 0) {
                    std::ostringstream os;
                    os << "proper submatrix rows " << i << "," << ip << " columns " << j << "," << jp
                       << " is not orthogonal";
                    return {false, os.str()};
                }
            }
        }
    return {true, {}};
}

double numeric_gram_check(const Design& d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<std::complex<double>> x(d.num_vars());
    for (auto& v : x) v = d.is_complex() ? std::complex<double>(nd(rng), nd(rng)) : nd(rng);

    const int p = d.rows(), n = d.cols();
    std::vector<std::complex<double>> m(static_cast<std::size_t>(p) * n);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> s = 0;
            for (const auto& t : d.at(i, j).terms())
                s += t.coeff.to_double() * (t.conj ? std::conj(x[t.var]) : x[t.var]);
            m[static_cast<std::size_t>(i) * n + j] = s;
        }
    double norm = 0;
    for (const auto& v : x) norm += std::norm(v);
    double dev = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::complex<double> s = 0;
            for (int i = 0; i < p; ++i)
                s += std::conj(m[static_cast<std::size_t>(i) * n + a]) * m[static_cast<std::size_t>(i) * n + b];
            if (a == b) s -= norm;
            dev = std::max(dev, std::abs(s));
        }
    return dev;
}

} // namespace odt
