#include "odt/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "odt/gf2num.hpp"
#include "odt/io.hpp"
#include "odt/maps.hpp"
#include "odt/rate1rod.hpp"
#include "odt/scaledcod.hpp"
#include "odt/squarerod.hpp"

namespace odt {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string rational_text(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string render(const Design& d, const std::string& format) {
    if (format == "json") return emit_json(d);
    if (format == "latex") return emit_latex(d);
    if (format == "text") return emit_text(d);
    throw UsageError("unknown format '" + format + "'");
}

int require_pow2_arg(int t) {
    if (t < 1 || !is_pow2(static_cast<std::uint64_t>(t))) throw UsageError("t must be a power of two");
    return t;
}

MapFamily family_arg(const std::string& name, int t) {
    auto id = parse_family(name);
    if (!id) throw UsageError("unknown family '" + name + "'");
    return family(*id, require_pow2_arg(t));
}

Design generate(const std::string& kind, int n, int t, const std::string& fam, bool recursive) {
    auto need_t = [&] {
        if (t < 1) throw UsageError("--t is required for this design");
        return require_pow2_arg(t);
    };
    auto need_n = [&](int lo) {
        if (n < lo) throw UsageError("--n must be at least " + std::to_string(lo) + " for this design");
        return n;
    };
    if (kind == "R" || kind == "A" || kind == "Ahat" || kind == "P") {
        int tt = need_t();
        if (t > 4096) throw UsageError("t too large");
        if (recursive) {
            if (kind == "R") return recursive_R(tt);
            if (kind == "A") return recursive_alp_octonion(tt);
            if (kind == "Ahat") return recursive_alp_quaternion(tt);
            return recursive_gp(tt);
        }
        FamilyId id = kind == "R" ? FamilyId::main
                      : kind == "A" ? FamilyId::alp_octonion
                      : kind == "Ahat" ? FamilyId::alp_quaternion
                                       : FamilyId::geramita_pullman;
        return build_from_maps(family(id, tt));
    }
    if (kind == "W" || kind == "What") {
        int nn = need_n(1);
        if (nn > 24) throw UsageError("n too large");
        MapFamily f = family_arg(fam, static_cast<int>(nu(nn)));
        return kind == "W" ? build_W(nn, f) : build_W_hat(nn, f);
    }
    if (kind == "DR") {
        int nn = need_n(5);
        if (nn > 24) throw UsageError("n too large");
        return build_DR(nn).design;
    }
    if (kind == "DR-papr") {
        int nn = need_n(8);
        if (nn > 24) throw UsageError("n too large");
        return apply_papr_reduction(build_DR(nn));
    }
    if (kind == "TJC") {
        int nn = need_n(2);
        if (nn > 24) throw UsageError("n too large");
        return build_TJC(nn);
    }
    throw UsageError("unknown design '" + kind + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text;
}

nlohmann::json verify_report(const Design& d, bool numeric, std::uint64_t seed) {
    nlohmann::json r;
    OrthogonalityReport o = verify_orthogonal(d);
    r["orthogonal"] = o.ok;
    if (o.witness) r["witness"] = o.witness->to_string();
    r["rate"] = d.rows() ? rational_text(d.rate()) : "0";
    r["delay"] = d.rows();
    r["columns"] = d.cols();
    r["variables"] = d.num_vars();
    r["kind"] = d.is_complex() ? "complex" : "real";
    r["zeros"] = count_zeros(d).count;
    r["scaled_profile_ok"] = scaled_profile_ok(d);
    if (!d.is_complex()) {
        try {
            r["rod_structural"] = verify_rod_structural(d).ok;
        } catch (const std::invalid_argument&) {
            r["rod_structural"] = nullptr;
        }
    }
    if (numeric) r["numeric_dev"] = numeric_gram_check(d, seed);
    else r["numeric_dev"] = nullptr;
    return r;
}

} // namespace

std::string format_table(int from, int to, bool csv) {
    if (from > to) return "";
    std::vector<BoundsReport> cols;
    for (int n = from; n <= to; ++n) cols.push_back(table_row(n));
    std::vector<std::pair<std::string, std::vector<std::string>>> rows = {
        {"n", {}},           {"DR delay", {}}, {"TJC delay", {}}, {"Liang delay", {}},
        {"DR rate", {}},     {"TJC rate", {}}, {"Liang rate", {}}};
    for (const auto& c : cols) {
        rows[0].second.push_back(std::to_string(c.n));
        rows[1].second.push_back(std::to_string(c.dr_delay));
        rows[2].second.push_back(std::to_string(c.tjc_delay));
        rows[3].second.push_back(std::to_string(c.liang_delay));
        rows[4].second.push_back(rational_text(c.dr_rate));
        rows[5].second.push_back(rational_text(c.tjc_rate));
        rows[6].second.push_back(rational_text(c.liang_rate));
    }
    std::ostringstream os;
    for (const auto& [label, vals] : rows) {
        if (csv) {
            os << label;
            for (const auto& v : vals) os << ',' << v;
        } else {
            os << std::left << std::setw(12) << label;
            for (const auto& v : vals) os << std::right << std::setw(7) << v;
        }
        os << '\n';
    }
    return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct and verify real and complex orthogonal designs", "odt"};
    app.require_subcommand(1);

    std::string design, family_name_opt = "main", format = "text", output;
    int n = 0, t = 0;
    bool recursive = false;
    auto* gen = app.add_subcommand("generate", "build a design");
    gen->add_option("--design", design, "R, A, Ahat, P, W, What, DR, TJC or DR-papr")->required();
    gen->add_option("--n", n, "number of columns");
    gen->add_option("--t", t, "order of a square design");
    gen->add_option("--family", family_name_opt, "map family for W and What");
    gen->add_option("--format", format, "json, latex or text");
    gen->add_option("--output,-o", output, "output file");
    gen->add_flag("--recursive", recursive, "use the recursive builder for square designs");

    std::string input;
    std::uint64_t seed = 0;
    bool numeric = false;
    auto* ver = app.add_subcommand("verify", "verify a JSON design document");
    ver->add_option("input", input, "design file")->required();
    auto* num_opt = ver->add_option("--numeric", seed, "run the floating-point Gram check with this seed");

    int from = 5, to = 16;
    bool csv = false;
    auto* tab = app.add_subcommand("table", "delay and rate table");
    tab->add_option("--from", from);
    tab->add_option("--to", to);
    tab->add_flag("--csv", csv);

    bool check = false;
    auto* maps = app.add_subcommand("maps", "dump and check a map family");
    maps->add_option("--family", family_name_opt);
    maps->add_option("--t", t)->required();
    maps->add_flag("--check", check);

    int hs_k = 0;
    auto* bnd = app.add_subcommand("bounds", "number-theoretic bounds for n antennas");
    bnd->add_option("--n", n)->required();
    bnd->add_option("--hs", hs_k, "also print n o k for this k");

    std::string exp_format = "text";
    auto* exp = app.add_subcommand("export", "convert a JSON design document");
    exp->add_option("input", input)->required();
    exp->add_option("--format", exp_format, "json, latex or text");
    exp->add_option("--output,-o", output);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    numeric = num_opt->count() > 0;

    try {
        if (*gen) {
            Design d = generate(design, n, t, family_name_opt, recursive);
            write_output(render(d, format), output, out);
            return exit_ok;
        }
        if (*ver) {
            std::string text = read_file(input);
            Design d;
            try {
                d = parse_json(text);
            } catch (const ParseError& e) {
                err << "error: " << e.what() << '\n';
                return exit_parse;
            }
            nlohmann::json r = verify_report(d, numeric, seed);
            out << r.dump(2) << '\n';
            return r["orthogonal"].get<bool>() ? exit_ok : exit_verify_failed;
        }
        if (*tab) {
            if (from < 5) throw UsageError("--from must be at least 5");
            if (to > 40) throw UsageError("--to must be at most 40");
            out << format_table(from, to, csv);
            return exit_ok;
        }
        if (*maps) {
            MapFamily f = family_arg(family_name_opt, t);
            nlohmann::json j;
            j["family"] = family_name(f.id);
            j["t"] = f.t;
            j["gamma"] = f.gamma;
            nlohmann::json psi = nlohmann::json::object();
            for (int g : f.gamma) psi[std::to_string(g)] = f.psi[g];
            j["psi"] = psi;
            bool ok = true;
            if (check) {
                OddConditionReport r = validate_odd_condition(f);
                nlohmann::json c;
                c["odd_condition"] = r.ok;
                if (!r.ok) c["witness"] = {r.x, r.y};
                bool l3 = !psi_hat_counterexample().has_value();
                bool l4 = !phi2_counterexample().has_value();
                c["psi_hat_suite"] = l3;
                c["phi2_suite"] = l4;
                j["check"] = c;
                ok = r.ok && l3 && l4;
            }
            out << j.dump(2) << '\n';
            return ok ? exit_ok : exit_verify_failed;
        }
        if (*bnd) {
            if (n < 2 || n > 40) throw UsageError("--n must be in 2..40");
            BoundsReport b = bounds_report(n);
            nlohmann::json j;
            j["n"] = b.n;
            j["rho_of_nu"] = b.rho_of_nu;
            j["nu"] = b.nu;
            j["dr_delay"] = b.dr_delay;
            j["tjc_delay"] = b.tjc_delay;
            j["liang_delay"] = b.liang_delay;
            j["liang_rate"] = rational_text(b.liang_rate);
            j["rate_half_delay_lower_bound"] = rate_half_delay_lower_bound(n);
            if (hs_k > 0) j["hopf_stiefel"] = hopf_stiefel(n, hs_k);
            out << j.dump(2) << '\n';
            return exit_ok;
        }
        if (*exp) {
            std::string text = read_file(input);
            Design d;
            try {
                d = parse_json(text);
            } catch (const ParseError& e) {
                err << "error: " << e.what() << '\n';
                return exit_parse;
            }
            write_output(render(d, exp_format), output, out);
            return exit_ok;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace odt
