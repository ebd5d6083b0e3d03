#include "odt/rate1rod.hpp"

#include <stdexcept>

#include "odt/gf2num.hpp"

namespace odt {

namespace {

Design build(int n, const MapFamily& fam, bool hat) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const int t = static_cast<int>(nu(n));
    if (fam.t != t) throw std::invalid_argument("map family must be defined on t = nu(n)");
    if (fam.size() < n) throw std::invalid_argument("map family has fewer than n indices");
    Design d(t, n, t, VarKind::real);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < n; ++j) {
            int g = fam.gamma[j];
            int f = i ^ g;
            int mask = (hat ? f : i) & fam.psi[g];
            d.at(i, j) = Entry::var(f, hamming_weight(static_cast<std::uint64_t>(mask)) % 2 ? -1 : 1);
        }
    return d;
}

} // namespace

Design build_W(int n, const MapFamily& fam) { return build(n, fam, false); }
Design build_W_hat(int n, const MapFamily& fam) { return build(n, fam, true); }
Design build_W(int n) { return build_W(n, family_main(static_cast<int>(nu(n)))); }
Design build_W_hat(int n) { return build_W_hat(n, family_main(static_cast<int>(nu(n)))); }

Design extract_from_square(const Design& b, int n) {
    if (b.rows() != b.cols()) throw std::invalid_argument("extract_from_square: square design expected");
    if (b.num_vars() < n) throw std::invalid_argument("extract_from_square: too few variables");
    const int t = b.rows();
    Design d(t, n, t, VarKind::real);
    for (int i = 0; i < t; ++i)
        for (int k = 0; k < t; ++k) {
            const Entry& e = b.at(i, k);
            if (e.is_zero()) continue;
            if (!e.single() || !e.front().coeff.is_unit_sign())
                throw std::invalid_argument("extract_from_square: entries must be +-z_j");
            int j = e.front().var;
            if (j < n) {
                if (!d.at(i, j).is_zero()) throw std::invalid_argument("extract_from_square: repeated variable in row");
                d.at(i, j) = Entry::var(k, e.front().coeff.sign_of_unit());
            }
        }
    return d;
}

Rate1Pair rate1_pair(int n, const MapFamily& fam) { return {build_W(n, fam), build_W_hat(n, fam), fam}; }

} // namespace odt
