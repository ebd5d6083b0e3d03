#pragma once

#include <optional>
#include <string>
#include <vector>

namespace odt {

enum class FamilyId { main, alp_octonion, alp_quaternion, geramita_pullman, custom };

std::string family_name(FamilyId id);
// accepts main, alp-octonion/alpo, alp-quaternion/alpq, geramita-pullman/gp
std::optional<FamilyId> parse_family(const std::string& s);

// gamma: Z_rho(t) -> Z_t and psi on the image of gamma
struct MapFamily {
    FamilyId id = FamilyId::main;
    int t = 1;
    int a = 0; // log2 t
    std::vector<int> gamma;
    std::vector<int> psi;       // indexed by x in Z_t, -1 off the image
    std::vector<int> gamma_inv; // indexed by x in Z_t, -1 off the image

    int size() const { return static_cast<int>(gamma.size()); }
    bool in_image(int x) const { return x >= 0 && x < t && gamma_inv[x] >= 0; }
    int chi(int i) const { return psi[gamma[i]]; }
};

// builds the lookup tables; throws unless gamma and psi are injective
MapFamily make_family(FamilyId id, int t, std::vector<int> gamma, std::vector<int> chi);

int phi1(int x);
int psi_hat(int a, int x);
// defined on F = {1,2,4,7,8,11,13,14}
int phi2(int x);
bool in_F(int x);

int gamma_main(int t, int i);
int psi_main(int t, int x);

MapFamily family_main(int t);
MapFamily family_alp_octonion(int t);
MapFamily family_alp_quaternion(int t);
MapFamily family_geramita_pullman(int t);
MapFamily family(FamilyId id, int t);

struct OddConditionReport {
    bool ok = true;
    int x = -1, y = -1;
};

// |(psi(x) xor psi(y)) . (x xor y)| odd for all distinct x, y in the image
OddConditionReport validate_odd_condition(const MapFamily& fam);

struct PairWitness {
    int a = 0;
    int x = 0, y = 0;
};

// psi_hat over widths 0..3; first failing pair if any
std::optional<PairWitness> psi_hat_counterexample();
// phi2 statements (i) and (ii); y == x marks a failure of (i)
std::optional<PairWitness> phi2_counterexample();

} // namespace odt
