#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "odt/coefficient.hpp"
#include "odt/gf2num.hpp"

namespace odt {

struct Term {
    Coefficient coeff = Coefficient::one();
    int var = 0;
    bool conj = false;

    bool operator==(const Term&) const = default;
};

// Formal sum of terms; the empty sum is zero.
class Entry {
public:
    Entry() = default;
    static Entry var(int v, int sign = 1, bool conj = false);
    static Entry term(Coefficient c, int v, bool conj = false);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    bool single() const { return terms_.size() == 1; }
    const Term& front() const { return terms_.front(); }

    void add(const Term& t);
    Entry& operator+=(const Entry& o);
    Entry operator+(const Entry& o) const;
    Entry operator-() const;
    Entry scaled(const Coefficient& c) const;
    Entry conjugated() const;

    bool operator==(const Entry&) const = default;

private:
    std::vector<Term> terms_; // sorted by (var, conj)
};

enum class VarKind { real, complex };

class Design {
public:
    Design() = default;
    Design(int p, int n, int k, VarKind kind);

    int rows() const { return p_; }
    int cols() const { return n_; }
    int num_vars() const { return k_; }
    VarKind kind() const { return kind_; }
    bool is_complex() const { return kind_ == VarKind::complex; }

    void set_num_vars(int k) { k_ = k; }
    void set_kind(VarKind kind) { kind_ = kind; }

    Entry& at(int i, int j) { return cells_[static_cast<std::size_t>(i) * n_ + j]; }
    const Entry& at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }

    const std::set<int>& scaled_columns() const { return scaled_; }
    void set_scaled_columns(std::set<int> s) { scaled_ = std::move(s); }

    Rational rate() const { return Rational(k_, p_); }

    // throws on a variable index >= k or conjugates in a real design
    void validate() const;

    bool operator==(const Design&) const = default;

private:
    int p_ = 0, n_ = 0, k_ = 0;
    VarKind kind_ = VarKind::real;
    std::vector<Entry> cells_;
    std::set<int> scaled_;
};

// ---- structural helpers ----

Design conj_transpose(const Design& d);
Design transpose(const Design& d);
Design negate_vars_except_first(const Design& d);
Design scale(const Design& d, const Coefficient& c);
Design hstack(const std::vector<Design>& parts);
Design vstack(const std::vector<Design>& parts);
Design take_columns(const Design& d, int ncols);
Design zero_design(int p, int n, int k, VarKind kind);

// x_v -> sign * x_{map(v)}; unmapped variables keep their index.
struct VarImage {
    int var = 0;
    int sign = 1;
};
Design relabel(const Design& d, const std::map<int, VarImage>& image, int new_k);
Design shift_vars(const Design& d, int offset, int new_k);

// sum over m of D(i,m) * Q(m,j); Q is a numeric coefficient matrix
using CoeffMatrix = std::vector<std::vector<Coefficient>>;
Design multiply(const Design& d, const CoeffMatrix& q);

// ---- verification ----

// x^{lc}_{lv} * x^{rc}_{rv}, ordered so that commuted products coincide
struct QuadMonomial {
    int left_var = 0;
    bool left_conj = false;
    int right_var = 0;
    bool right_conj = false;

    static QuadMonomial make(int v1, bool c1, int v2, bool c2);
    auto operator<=>(const QuadMonomial&) const = default;
    std::string to_string() const;
};

using QuadForm = std::map<QuadMonomial, Coefficient>;

struct GramMatrix {
    int n = 0;
    std::vector<QuadForm> cells;
    const QuadForm& at(int a, int b) const { return cells[static_cast<std::size_t>(a) * n + b]; }
    QuadForm& at(int a, int b) { return cells[static_cast<std::size_t>(a) * n + b]; }
};

GramMatrix gram(const Design& d);

struct GramWitness {
    int row = 0, col = 0;
    QuadMonomial monomial;
    Coefficient actual;
    Coefficient expected;
    std::string to_string() const;
};

struct OrthogonalityReport {
    bool ok = false;
    std::optional<GramWitness> witness;
};

OrthogonalityReport verify_orthogonal(const Design& d);

struct StructuralReport {
    bool ok = false;
    std::string reason;
};

// The proper-2x2-submatrix characterization; real single-term unscaled entries only.
StructuralReport verify_rod_structural(const Design& d);

double numeric_gram_check(const Design& d, std::uint64_t seed);

struct ZeroCount {
    std::size_t count = 0;
    Rational fraction;
};
ZeroCount count_zeros(const Design& d);

// per column: variable -> number of occurrences (conjugated or not)
std::vector<std::map<int, int>> column_occurrence_profile(const Design& d);

// scaled columns hold every variable exactly twice, the rest at most once
bool scaled_profile_ok(const Design& d);

} // namespace odt
