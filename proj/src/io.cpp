#include "odt/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace odt {

using nlohmann::json;

nlohmann::json to_json(const Design& d) {
    json j;
    j["p"] = d.rows();
    j["n"] = d.cols();
    j["k"] = d.num_vars();
    j["kind"] = d.is_complex() ? "complex" : "real";
    j["scaled_columns"] = json::array();
    for (int c : d.scaled_columns()) j["scaled_columns"].push_back(c);
    json rows = json::array();
    for (int i = 0; i < d.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < d.cols(); ++c) {
            json cell = json::array();
            for (const auto& t : d.at(i, c).terms()) {
                const Dyadic& a = t.coeff.rational_part();
                const Dyadic& b = t.coeff.sqrt2_part();
                cell.push_back({{"a_num", a.num},
                                {"a_log2_den", a.log2_den},
                                {"b_num", b.num},
                                {"b_log2_den", b.log2_den},
                                {"var", t.var},
                                {"conj", t.conj}});
            }
            row.push_back(cell);
        }
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

Design design_from_json(const nlohmann::json& j) {
    try {
        int p = j.at("p").get<int>(), n = j.at("n").get<int>(), k = j.at("k").get<int>();
        std::string kind = j.at("kind").get<std::string>();
        if (kind != "real" && kind != "complex") throw ParseError("kind must be real or complex");
        if (p < 0 || n < 0 || k < 0) throw ParseError("negative dimension");
        Design d(p, n, k, kind == "complex" ? VarKind::complex : VarKind::real);
        std::set<int> scaled;
        for (const auto& c : j.at("scaled_columns")) scaled.insert(c.get<int>());
        d.set_scaled_columns(scaled);
        const json& rows = j.at("entries");
        if (!rows.is_array() || static_cast<int>(rows.size()) != p) throw ParseError("entries: wrong row count");
        for (int i = 0; i < p; ++i) {
            const json& row = rows[i];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw ParseError("entries: wrong column count");
            for (int c = 0; c < n; ++c) {
                Entry e;
                for (const auto& t : row[c]) {
                    int ea = t.at("a_log2_den").get<int>(), eb = t.at("b_log2_den").get<int>();
                    if (ea < 0 || eb < 0) throw ParseError("negative log2 denominator");
                    Coefficient co(Dyadic(t.at("a_num").get<std::int64_t>(), ea),
                                   Dyadic(t.at("b_num").get<std::int64_t>(), eb));
                    if (co.is_zero()) throw ParseError("zero coefficient in term");
                    e.add({co, t.at("var").get<int>(), t.at("conj").get<bool>()});
                }
                d.at(i, c) = e;
            }
        }
        d.validate();
        return d;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& ex) {
        throw ParseError(std::string("invalid design document: ") + ex.what());
    }
}

std::string emit_json(const Design& d) { return to_json(d).dump() + "\n"; }

Design parse_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& ex) {
        throw ParseError(std::string("malformed JSON: ") + ex.what());
    }
    return design_from_json(j);
}

namespace {

// common-denominator form (A + B r2) / 2^d
void general_form(const Coefficient& c, std::int64_t& A, std::int64_t& B, int& d) {
    const Dyadic& a = c.rational_part();
    const Dyadic& b = c.sqrt2_part();
    d = std::max(a.log2_den, b.log2_den);
    A = a.num << (d - a.log2_den);
    B = b.num << (d - b.log2_den);
}

std::string var_text(const Term& t) {
    return "x" + std::to_string(t.var) + (t.conj ? "*" : "");
}

} // namespace

std::string format_entry(const Entry& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : e.terms()) {
        const Coefficient& c = t.coeff;
        if (c.is_unit_sign() || c.is_scaled_sign()) {
            int s = c.sign_of_unit();
            if (s < 0) out += "-";
            else if (!first) out += "+";
            out += var_text(t);
            if (c.is_scaled_sign()) out += "/s2";
        } else {
            std::int64_t A, B;
            int d;
            general_form(c, A, B, d);
            if (!first) out += "+";
            out += "(" + std::to_string(A) + (B < 0 ? "-" : "+") + std::to_string(B < 0 ? -B : B) + " r2)/2^" +
                   std::to_string(d) + "*" + var_text(t);
        }
        first = false;
    }
    return out;
}

std::string emit_text(const Design& d) {
    std::vector<std::string> cells;
    std::size_t w = 1;
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j) {
            cells.push_back(format_entry(d.at(i, j)));
            w = std::max(w, cells.back().size());
        }
    std::ostringstream os;
    for (int i = 0; i < d.rows(); ++i) {
        for (int j = 0; j < d.cols(); ++j) {
            const std::string& c = cells[static_cast<std::size_t>(i) * d.cols() + j];
            if (j) os << ", ";
            os << std::string(w - c.size(), ' ') << c;
        }
        os << '\n';
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat(const std::string& lit) {
        if (s.compare(i, lit.size(), lit) == 0) {
            i += lit.size();
            return true;
        }
        return false;
    }
    std::int64_t integer(bool allow_sign) {
        std::size_t start = i;
        if (allow_sign && (peek() == '-' || peek() == '+')) ++i;
        std::size_t digits = i;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++i;
        if (i == digits) throw ParseError("expected a number in '" + s + "'");
        try {
            return std::stoll(s.substr(start, i - start));
        } catch (const std::exception&) {
            throw ParseError("number out of range in '" + s + "'");
        }
    }
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

Entry parse_entry(const std::string& token) {
    std::string s = trim(token);
    if (s.empty()) throw ParseError("empty entry");
    if (s == "0") return {};
    Cursor c{s};
    Entry e;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        if (c.eat('-')) sign = -1;
        else if (!c.eat('+') && !first) throw ParseError("expected + or - between terms in '" + s + "'");
        Coefficient coeff(sign);
        if (c.eat('(')) {
            std::int64_t A = c.integer(true);
            int bs = 1;
            if (c.eat('-')) bs = -1;
            else if (!c.eat('+')) throw ParseError("bad coefficient in '" + s + "'");
            std::int64_t B = c.integer(false);
            if (!c.eat(" r2)/2^")) throw ParseError("bad coefficient in '" + s + "'");
            std::int64_t d = c.integer(false);
            if (!c.eat('*') || d > 62) throw ParseError("bad coefficient in '" + s + "'");
            coeff = coeff * Coefficient(Dyadic(A, static_cast<int>(d)), Dyadic(bs * B, static_cast<int>(d)));
        }
        if (!c.eat('x')) throw ParseError("expected variable in '" + s + "'");
        std::int64_t v = c.integer(false);
        if (v > 1'000'000) throw ParseError("variable index too large");
        bool conj = c.eat('*');
        if (c.eat("/s2")) coeff = coeff * Coefficient::inv_sqrt2();
        if (coeff.is_zero()) throw ParseError("zero coefficient in '" + s + "'");
        e.add({coeff, static_cast<int>(v), conj});
        first = false;
    }
    return e;
}

Design parse_text(const std::string& text, int k) {
    std::vector<std::vector<Entry>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (trim(line).empty()) continue;
        std::vector<Entry> row;
        std::stringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) row.push_back(parse_entry(tok));
        if (!rows.empty() && row.size() != rows[0].size()) throw ParseError("ragged rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("no rows");
    int maxv = -1;
    bool cx = false;
    for (const auto& r : rows)
        for (const auto& e : r)
            for (const auto& t : e.terms()) {
                maxv = std::max(maxv, t.var);
                cx = cx || t.conj;
            }
    int p = static_cast<int>(rows.size()), n = static_cast<int>(rows[0].size());
    Design d(p, n, k < 0 ? maxv + 1 : k, cx ? VarKind::complex : VarKind::real);
    std::set<int> scaled;
    for (int j = 0; j < n; ++j) {
        bool all = true, any = false;
        for (int i = 0; i < p; ++i)
            for (const auto& t : rows[i][j].terms()) {
                any = true;
                all = all && t.coeff.is_scaled_sign();
            }
        if (any && all) scaled.insert(j);
    }
    d.set_scaled_columns(scaled);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < n; ++j) d.at(i, j) = rows[i][j];
    try {
        d.validate();
    } catch (const std::exception& ex) {
        throw ParseError(ex.what());
    }
    return d;
}

namespace {

std::string latex_var(const Term& t) {
    return "x_{" + std::to_string(t.var) + "}" + (t.conj ? "^*" : "");
}

std::string latex_entry(const Entry& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : e.terms()) {
        const Coefficient& c = t.coeff;
        if (c.is_unit_sign() || c.is_scaled_sign()) {
            int s = c.sign_of_unit();
            if (s < 0) out += "-";
            else if (!first) out += "+";
            out += c.is_scaled_sign() ? "\\frac{" + latex_var(t) + "}{\\sqrt{2}}" : latex_var(t);
        } else {
            std::int64_t A, B;
            int d;
            general_form(c, A, B, d);
            if (!first) out += "+";
            out += "\\frac{" + std::to_string(A) + (B < 0 ? "-" : "+") + std::to_string(B < 0 ? -B : B) +
                   "\\sqrt{2}}{2^{" + std::to_string(d) + "}}" + latex_var(t);
        }
        first = false;
    }
    return out;
}

} // namespace

std::string emit_latex(const Design& d) {
    std::ostringstream os;
    os << "\\left[\\begin{array}{" << std::string(static_cast<std::size_t>(d.cols()), 'r') << "}\n";
    for (int i = 0; i < d.rows(); ++i) {
        os << "  ";
        for (int j = 0; j < d.cols(); ++j) {
            if (j) os << " & ";
            os << latex_entry(d.at(i, j));
        }
        os << (i + 1 < d.rows() ? " \\\\\n" : "\n");
    }
    os << "\\end{array}\\right]\n";
    return os.str();
}

} // namespace odt
