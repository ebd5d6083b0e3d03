#include "odt/maps.hpp"

#include <array>
#include <stdexcept>

#include "odt/gf2num.hpp"

namespace odt {

namespace {

constexpr std::array<int, 8> kPhi1{0, 1, 2, 3, 4, 7, 5, 6};
constexpr std::array<int, 8> kGammaHat{1, 2, 4, 7, 8, 11, 13, 14};
// 11 -> 14: the value satisfying both phi2 parity statements
constexpr std::array<int, 8> kPhi2{1, 2, 4, 6, 8, 14, 10, 12};
constexpr std::array<int, 4> kChi4Prime{0, 1, 3, 2};

int pc(std::uint64_t x) { return static_cast<int>(hamming_weight(x)); }

void require_pow2(int t) {
    if (t < 1 || !is_pow2(static_cast<std::uint64_t>(t))) throw std::invalid_argument("t must be a power of two");
}

// exact num / den, asserting integrality
std::int64_t exact(std::int64_t num, std::int64_t den) {
    if (den == 0 || num % den != 0) throw std::logic_error("map closed form is not integral");
    return num / den;
}

std::int64_t pow_i(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// chi_e for e in {1,2,4,8}
int chi_small(int e, int m) { return psi_hat(log2_exact(static_cast<std::uint64_t>(e)), m); }

} // namespace

std::string family_name(FamilyId id) {
    switch (id) {
    case FamilyId::main: return "main";
    case FamilyId::alp_octonion: return "alp-octonion";
    case FamilyId::alp_quaternion: return "alp-quaternion";
    case FamilyId::geramita_pullman: return "geramita-pullman";
    case FamilyId::custom: return "custom";
    }
    return "?";
}

std::optional<FamilyId> parse_family(const std::string& s) {
    if (s == "main") return FamilyId::main;
    if (s == "alp-octonion" || s == "alpo" || s == "alp_octonion") return FamilyId::alp_octonion;
    if (s == "alp-quaternion" || s == "alpq" || s == "alp_quaternion") return FamilyId::alp_quaternion;
    if (s == "geramita-pullman" || s == "gp" || s == "geramita_pullman") return FamilyId::geramita_pullman;
    return std::nullopt;
}

MapFamily make_family(FamilyId id, int t, std::vector<int> gamma, std::vector<int> chi) {
    require_pow2(t);
    if (gamma.size() != chi.size()) throw std::invalid_argument("gamma/chi size mismatch");
    MapFamily f;
    f.id = id;
    f.t = t;
    f.a = log2_exact(static_cast<std::uint64_t>(t));
    f.gamma = std::move(gamma);
    f.psi.assign(t, -1);
    f.gamma_inv.assign(t, -1);
    std::vector<char> used(t, 0);
    for (int i = 0; i < f.size(); ++i) {
        int g = f.gamma[i], c = chi[i];
        if (g < 0 || g >= t || c < 0 || c >= t) throw std::invalid_argument("map value outside Z_t");
        if (f.gamma_inv[g] >= 0) throw std::invalid_argument("gamma is not injective");
        if (used[c]) throw std::invalid_argument("psi is not injective");
        used[c] = 1;
        f.gamma_inv[g] = i;
        f.psi[g] = c;
    }
    return f;
}

int phi1(int x) {
    if (x < 0 || x > 7) throw std::out_of_range("phi1: argument outside Z_8");
    return kPhi1[x];
}

int psi_hat(int a, int x) {
    if (a < 0 || a > 3 || x < 0 || x >= (1 << a)) throw std::out_of_range("psi_hat: bad argument");
    return static_cast<int>(twos_complement(BitWord(phi1(x), a)).value);
}

bool in_F(int x) {
    for (int f : kGammaHat)
        if (f == x) return true;
    return false;
}

int phi2(int x) {
    for (int i = 0; i < 8; ++i)
        if (kGammaHat[i] == x) return kPhi2[i];
    throw std::out_of_range("phi2: argument outside F");
}

int gamma_main(int t, int i) {
    require_pow2(t);
    if (i < 0 || i >= rho(t)) throw std::out_of_range("gamma_main: index outside Z_rho(t)");
    if (i < 8) return i;
    int l = i / 8, m = i % 8;
    return (1 << (4 * l - 1)) * kGammaHat[m];
}

int psi_main(int t, int x) {
    require_pow2(t);
    int a = log2_exact(static_cast<std::uint64_t>(t));
    int r = rho(t);
    for (int i = 0; i < r; ++i) {
        if (gamma_main(t, i) != x) continue;
        int phi = i < 8 ? phi1(i) : (1 << (4 * (i / 8) - 1)) * phi2(kGammaHat[i % 8]);
        return static_cast<int>(twos_complement(BitWord(static_cast<std::uint64_t>(phi), a)).value);
    }
    throw std::out_of_range("psi_main: not in the image of gamma");
}

MapFamily family_main(int t) {
    require_pow2(t);
    int r = rho(t);
    std::vector<int> g(r), c(r);
    for (int i = 0; i < r; ++i) {
        g[i] = gamma_main(t, i);
        c[i] = psi_main(t, g[i]);
    }
    return make_family(FamilyId::main, t, g, c);
}

MapFamily family_alp_octonion(int t) {
    require_pow2(t);
    int a = log2_exact(t), c = a / 4, d = a % 4, r = rho(t);
    std::vector<int> g(r), ch(r);
    for (int i = 0; i < r; ++i) {
        int l = i / 8, m = i % 8;
        g[i] = static_cast<int>(t - exact(t, pow_i(2, l)) + pow_i(8, l) * m);
        std::int64_t x;
        if (l == 0 && m == 0) x = 0;
        else if (m == 0) x = exact(t, pow_i(2, l));
        else if (l == c) x = pow_i(8, l) * chi_small(1 << d, m);
        else x = exact(t, pow_i(2, l + 1)) + pow_i(8, l) * chi_small(8, m);
        ch[i] = static_cast<int>(x);
    }
    return make_family(FamilyId::alp_octonion, t, g, ch);
}

MapFamily family_alp_quaternion(int t) {
    require_pow2(t);
    int a = log2_exact(t), c = a / 4, d = a % 4, r = rho(t);
    std::vector<int> g(r), ch(r);
    for (int i = 0; i < r; ++i) {
        int l = i / 8, m = i % 8;
        std::int64_t q = pow_i(2, 2 * l);
        if (m <= 3) g[i] = static_cast<int>(t - exact(t, q) + q * m);
        else g[i] = static_cast<int>(t - exact(t, 2 * q) + q * (m - 4));
        std::int64_t x;
        if (l == 0 && m == 0) x = 0;
        else if (l != 0 && m == 0) x = exact(t, q);
        else if (m == 4 && (l != 0 || c != 0)) x = exact(t, 2 * q);
        else if (l == c) x = q * chi_small(1 << d, m);
        else if (m <= 3) x = exact(t, 2 * q) + q * chi_small(4, m);
        else x = exact(t, 4 * q) + q * kChi4Prime[m - 4];
        ch[i] = static_cast<int>(x);
    }
    return make_family(FamilyId::alp_quaternion, t, g, ch);
}

MapFamily family_geramita_pullman(int t) {
    require_pow2(t);
    int a = log2_exact(t), c = a / 4, d = a % 4, r = rho(t);
    std::vector<int> g(r), ch(r);
    for (int i = 0; i < r; ++i) {
        int l = i / 8, m = i % 8;
        std::int64_t s = pow_i(16, l);
        // (8t/15)(1 - 16^-l)
        std::int64_t base = exact(8LL * t * (s - 1), 15 * s);
        g[i] = static_cast<int>(l < c ? base + exact(static_cast<std::int64_t>(t) * m, 16 * s) : base + m);
        std::int64_t x;
        if (l == 0 && m == 0) x = 0;
        else if (m == 0) x = exact(t, 2 * pow_i(16, l - 1));
        else if (l == c) x = chi_small(1 << d, m);
        else x = exact(t, 2 * s) + exact(static_cast<std::int64_t>(t) * chi_small(8, m), 16 * s);
        ch[i] = static_cast<int>(x);
    }
    return make_family(FamilyId::geramita_pullman, t, g, ch);
}

MapFamily family(FamilyId id, int t) {
    switch (id) {
    case FamilyId::main: return family_main(t);
    case FamilyId::alp_octonion: return family_alp_octonion(t);
    case FamilyId::alp_quaternion: return family_alp_quaternion(t);
    case FamilyId::geramita_pullman: return family_geramita_pullman(t);
    case FamilyId::custom: break;
    }
    throw std::invalid_argument("no closed form for a custom family");
}

OddConditionReport validate_odd_condition(const MapFamily& fam) {
    for (int i = 0; i < fam.size(); ++i)
        for (int j = i + 1; j < fam.size(); ++j) {
            int x = fam.gamma[i], y = fam.gamma[j];
            if (pc(static_cast<std::uint64_t>((fam.psi[x] ^ fam.psi[y]) & (x ^ y))) % 2 == 0)
                return {false, x, y};
        }
    return {};
}

std::optional<PairWitness> psi_hat_counterexample() {
    for (int a = 0; a <= 3; ++a)
        for (int x = 0; x < (1 << a); ++x)
            for (int y = 0; y < (1 << a); ++y)
                if (x != y && pc(static_cast<std::uint64_t>((psi_hat(a, x) ^ psi_hat(a, y)) & (x ^ y))) % 2 == 0)
                    return PairWitness{a, x, y};
    return std::nullopt;
}

std::optional<PairWitness> phi2_counterexample() {
    auto comp = [](int v) { return (16 - v) % 16; };
    for (int x : kGammaHat) {
        if (pc(static_cast<std::uint64_t>(comp(phi2(x)) & x)) % 2 == 0) return PairWitness{4, x, x};
        for (int y : kGammaHat)
            if (x != y &&
                (pc(static_cast<std::uint64_t>(comp(phi2(x)) & y)) + pc(static_cast<std::uint64_t>(comp(phi2(y)) & x))) %
                        2 ==
                    0)
                return PairWitness{4, x, y};
    }
    return std::nullopt;
}

} // namespace odt
