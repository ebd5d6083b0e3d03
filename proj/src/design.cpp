#include "odt/design.hpp"

#include <algorithm>
#include <stdexcept>

namespace odt {

Entry Entry::var(int v, int sign, bool conj) {
    Entry e;
    e.terms_.push_back({Coefficient(sign), v, conj});
    return e;
}

Entry Entry::term(Coefficient c, int v, bool conj) {
    Entry e;
    if (!c.is_zero()) e.terms_.push_back({c, v, conj});
    return e;
}

void Entry::add(const Term& t) {
    if (t.coeff.is_zero()) return;
    auto key = [](const Term& x) { return std::pair(x.var, x.conj); };
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                               [&](const Term& a, const Term& b) { return key(a) < key(b); });
    if (it != terms_.end() && key(*it) == key(t)) {
        it->coeff += t.coeff;
        if (it->coeff.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, t);
    }
}

Entry& Entry::operator+=(const Entry& o) {
    for (const auto& t : o.terms_) add(t);
    return *this;
}

Entry Entry::operator+(const Entry& o) const {
    Entry r = *this;
    r += o;
    return r;
}

Entry Entry::operator-() const { return scaled(Coefficient(-1)); }

Entry Entry::scaled(const Coefficient& c) const {
    Entry r;
    for (const auto& t : terms_) r.add({t.coeff * c, t.var, t.conj});
    return r;
}

Entry Entry::conjugated() const {
    Entry r;
    for (const auto& t : terms_) r.add({t.coeff, t.var, !t.conj});
    return r;
}

Design::Design(int p, int n, int k, VarKind kind)
    : p_(p), n_(n), k_(k), kind_(kind), cells_(static_cast<std::size_t>(p) * n) {
    if (p < 0 || n < 0 || k < 0) throw std::invalid_argument("negative design dimension");
}

void Design::validate() const {
    for (const auto& e : cells_)
        for (const auto& t : e.terms()) {
            if (t.var < 0 || t.var >= k_) throw std::invalid_argument("variable index out of range");
            if (t.conj && kind_ == VarKind::real)
                throw std::invalid_argument("conjugate in a real design");
        }
    for (int c : scaled_)
        if (c < 0 || c >= n_) throw std::invalid_argument("scaled column out of range");
}

Design conj_transpose(const Design& d) {
    Design r(d.cols(), d.rows(), d.num_vars(), d.kind());
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            r.at(j, i) = d.is_complex() ? d.at(i, j).conjugated() : d.at(i, j);
    return r;
}

Design transpose(const Design& d) {
    Design r(d.cols(), d.rows(), d.num_vars(), d.kind());
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j) r.at(j, i) = d.at(i, j);
    return r;
}

Design negate_vars_except_first(const Design& d) {
    if (d.is_complex()) throw std::invalid_argument("negate_vars_except_first needs a real design");
    Design r = d;
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j) {
            Entry e;
            for (const auto& t : d.at(i, j).terms())
                e.add({t.var == 0 ? t.coeff : -t.coeff, t.var, t.conj});
            r.at(i, j) = e;
        }
    return r;
}

Design scale(const Design& d, const Coefficient& c) {
    Design r = d;
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j) r.at(i, j) = d.at(i, j).scaled(c);
    return r;
}

Design hstack(const std::vector<Design>& parts) {
    if (parts.empty()) return {};
    int p = parts[0].rows(), n = 0, k = 0;
    VarKind kind = VarKind::real;
    for (const auto& d : parts) {
        if (d.rows() != p) throw std::invalid_argument("hstack: row mismatch");
        n += d.cols();
        k = std::max(k, d.num_vars());
        if (d.is_complex()) kind = VarKind::complex;
    }
    Design r(p, n, k, kind);
    std::set<int> scaled;
    int off = 0;
    for (const auto& d : parts) {
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < d.cols(); ++j) r.at(i, off + j) = d.at(i, j);
        for (int c : d.scaled_columns()) scaled.insert(off + c);
        off += d.cols();
    }
    r.set_scaled_columns(scaled);
    return r;
}

Design vstack(const std::vector<Design>& parts) {
    if (parts.empty()) return {};
    int n = parts[0].cols(), p = 0, k = 0;
    VarKind kind = VarKind::real;
    for (const auto& d : parts) {
        if (d.cols() != n) throw std::invalid_argument("vstack: column mismatch");
        p += d.rows();
        k = std::max(k, d.num_vars());
        if (d.is_complex()) kind = VarKind::complex;
    }
    Design r(p, n, k, kind);
    int off = 0;
    for (const auto& d : parts) {
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < n; ++j) r.at(off + i, j) = d.at(i, j);
        off += d.rows();
    }
    r.set_scaled_columns(parts[0].scaled_columns());
    return r;
}

Design take_columns(const Design& d, int ncols) {
    if (ncols > d.cols()) throw std::invalid_argument("take_columns: too many columns");
    Design r(d.rows(), ncols, d.num_vars(), d.kind());
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < ncols; ++j) r.at(i, j) = d.at(i, j);
    std::set<int> s;
    for (int c : d.scaled_columns())
        if (c < ncols) s.insert(c);
    r.set_scaled_columns(s);
    return r;
}

Design zero_design(int p, int n, int k, VarKind kind) { return Design(p, n, k, kind); }

Design relabel(const Design& d, const std::map<int, VarImage>& image, int new_k) {
    Design r(d.rows(), d.cols(), new_k, d.kind());
    r.set_scaled_columns(d.scaled_columns());
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j) {
            Entry e;
            for (const auto& t : d.at(i, j).terms()) {
                auto it = image.find(t.var);
                if (it == image.end()) e.add(t);
                else e.add({t.coeff * Coefficient(it->second.sign), it->second.var, t.conj});
            }
            r.at(i, j) = e;
        }
    return r;
}

Design shift_vars(const Design& d, int offset, int new_k) {
    std::map<int, VarImage> image;
    for (int v = 0; v < d.num_vars(); ++v) image[v] = {v + offset, 1};
    return relabel(d, image, new_k);
}

Design multiply(const Design& d, const CoeffMatrix& q) {
    if (static_cast<int>(q.size()) != d.cols()) throw std::invalid_argument("multiply: size mismatch");
    int m = q.empty() ? 0 : static_cast<int>(q[0].size());
    Design r(d.rows(), m, d.num_vars(), d.kind());
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < m; ++j) {
            Entry e;
            for (int l = 0; l < d.cols(); ++l)
                if (!q[l][j].is_zero()) e += d.at(i, l).scaled(q[l][j]);
            r.at(i, j) = e;
        }
    return r;
}

ZeroCount count_zeros(const Design& d) {
    ZeroCount z;
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (d.at(i, j).is_zero()) ++z.count;
    std::int64_t total = static_cast<std::int64_t>(d.rows()) * d.cols();
    z.fraction = total ? Rational(static_cast<std::int64_t>(z.count), total) : Rational(0);
    return z;
}

std::vector<std::map<int, int>> column_occurrence_profile(const Design& d) {
    std::vector<std::map<int, int>> prof(d.cols());
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            for (const auto& t : d.at(i, j).terms()) ++prof[j][t.var];
    return prof;
}

bool scaled_profile_ok(const Design& d) {
    auto prof = column_occurrence_profile(d);
    for (int j = 0; j < d.cols(); ++j) {
        bool scaled = d.scaled_columns().count(j) > 0;
        if (scaled) {
            for (int v = 0; v < d.num_vars(); ++v) {
                auto it = prof[j].find(v);
                if (it == prof[j].end() || it->second != 2) return false;
            }
        } else {
            for (const auto& [v, c] : prof[j])
                if (c > 1) return false;
        }
    }
    return true;
}

} // namespace odt
