// Command-line surface for the H3 Cherednik-algebra library: group and
// representation dumps, lowest weights, contravariant-form ranks, the
// Grothendieck-group solver, the closed-form decomposition tables, parabolic
// induction, and the verification suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <h3/verify.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace h3;

namespace {

size_t env_budget() {
    const char* v = std::getenv("H3_BUDGET");
    if (!v) return 1000;
    long n = std::atol(v);
    return n > 0 ? (size_t)n : 1000;
}

Rat require_rat(const std::string& s) {
    auto r = parse_rat(s);
    if (!r) throw CLI::ValidationError("--c", "expected a rational like 1/2, got '" + s + "'");
    return *r;
}

int require_tau(const std::string& s) {
    const auto& labels = irrep_labels();
    for (int t = 0; t < 10; ++t)
        if (labels[t] == s) return t;
    throw CLI::ValidationError("--tau", "unknown label '" + s + "' (use 1+, 1-, 3+, 3-, 3~+, 3~-, 4+, 4-, 5+, 5-)");
}

// Nonzero coefficients ordered by ascending lowest weight (ties by label
// index), the order the published rows use.
std::vector<int> row_order(const VirtualCharacter& v) {
    std::vector<int> idx;
    for (int t = 0; t < 10; ++t)
        if (v.n[t] != 0) idx.push_back(t);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return h_weight(v.c, a) < h_weight(v.c, b);
    });
    return idx;
}

std::string render_row(const VirtualCharacter& v) {
    std::string out;
    for (int t : row_order(v)) {
        long a = v.n[t];
        if (out.empty())
            out += (a < 0 ? "-" : "");
        else
            out += (a < 0 ? " - " : " + ");
        long m = a < 0 ? -a : a;
        if (m != 1) out += std::to_string(m) + " ";
        out += "M(" + irrep_labels()[t] + ")";
    }
    return out.empty() ? "0" : out;
}

json coeffs_json(const VirtualCharacter& v) {
    json c = json::object();
    for (int t : row_order(v)) c[irrep_labels()[t]] = v.n[t];
    return c;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_group(bool as_json) {
    const Group& g = h3_group();
    if (as_json) {
        json doc;
        doc["order"] = g.size();
        doc["reflections"] = g.reflections.size();
        json classes = json::array();
        for (const auto& cl : g.classes)
            classes.push_back({{"label", cl.label},
                               {"size", cl.size},
                               {"order", g.elements[cl.rep].order}});
        doc["classes"] = classes;
        emit(doc);
        return 0;
    }
    std::cout << "H3: " << g.size() << " elements, " << g.reflections.size()
              << " reflections, " << g.classes.size() << " conjugacy classes\n";
    for (const auto& cl : g.classes)
        std::cout << "  " << cl.label << ": size " << cl.size << ", element order "
                  << g.elements[cl.rep].order << "\n";
    return 0;
}

int cmd_reps(bool as_json) {
    const Group& g = h3_group();
    const auto& table = character_table(g);
    if (as_json) {
        json doc;
        doc["irreps"] = irrep_labels();
        json classes = json::array();
        for (const auto& cl : g.classes) classes.push_back(cl.label);
        doc["classes"] = classes;
        json rows = json::array();
        for (int t = 0; t < 10; ++t) {
            json row = json::array();
            for (int c = 0; c < 10; ++c) row.push_back(render_qs5(table[t][c]));
            rows.push_back(row);
        }
        doc["characters"] = rows;
        emit(doc);
        return 0;
    }
    for (int t = 0; t < 10; ++t) {
        std::cout << irrep_labels()[t] << ":";
        for (int c = 0; c < 10; ++c) std::cout << " " << render_qs5(table[t][c]);
        std::cout << "\n";
    }
    return 0;
}

int cmd_decompose(const std::string& tau, const std::string& with, bool as_json) {
    const Group& g = h3_group();
    const auto& table = character_table(g);
    int a = require_tau(tau), b = require_tau(with);
    auto prod = tensor_decompose(g, table[a], table[b]);
    if (as_json) {
        json doc;
        doc["factors"] = {tau, with};
        json terms = json::object();
        for (const auto& [t, m] : prod) terms[irrep_labels()[t]] = m;
        doc["decomposition"] = terms;
        emit(doc);
        return 0;
    }
    std::cout << tau << " (x) " << with << " =";
    bool first = true;
    for (const auto& [t, m] : prod) {
        std::cout << (first ? " " : " + ");
        if (m != 1) std::cout << m << " ";
        std::cout << irrep_labels()[t];
        first = false;
    }
    std::cout << "\n";
    return 0;
}

int cmd_hweights(const std::string& cs, bool as_json) {
    Rat c = require_rat(cs);
    auto h = h_weights(c);
    if (as_json) {
        json doc;
        doc["c"] = render_rat(c);
        json w = json::object();
        for (int t = 0; t < 10; ++t) w[irrep_labels()[t]] = render_rat(h[t]);
        doc["hweights"] = w;
        emit(doc);
        return 0;
    }
    for (int t = 0; t < 10; ++t)
        std::cout << "h_c(" << irrep_labels()[t] << ") = " << render_rat(h[t]) << "\n";
    return 0;
}

int cmd_rank(const std::string& cs, const std::string& taus, int deg, bool as_json) {
    Rat c = require_rat(cs);
    int tau = require_tau(taus);
    StandardModule& m = standard_module(tau);
    if (m.dim(deg) > env_budget()) {
        std::cerr << "error: slice dimension " << m.dim(deg) << " exceeds H3_BUDGET "
                  << env_budget() << "\n";
        return 1;
    }
    const SliceRank& r = m.rank_and_kernel(c, deg);
    if (as_json) {
        json doc;
        doc["c"] = render_rat(c);
        doc["tau"] = taus;
        doc["degree"] = deg;
        doc["dim"] = r.dim;
        doc["rank"] = r.rank;
        if (r.kernel_known) {
            json k = json::array();
            for (int t = 0; t < 10; ++t)
                for (long j = 0; j < r.kernel[t]; ++j) k.push_back(irrep_labels()[t]);
            doc["kernel"] = k;
        } else {
            doc["kernel"] = nullptr;
        }
        emit(doc);
        return 0;
    }
    std::cout << "B_" << deg << "(c = " << render_rat(c) << ", " << taus << "): dim "
              << r.dim << ", rank " << r.rank;
    if (r.kernel_known) {
        std::cout << ", kernel =";
        bool any = false;
        for (int t = 0; t < 10; ++t)
            for (long j = 0; j < r.kernel[t]; ++j) {
                std::cout << (any ? " + " : " ") << irrep_labels()[t];
                any = true;
            }
        if (!any) std::cout << " 0";
    } else {
        std::cout << " (kernel character not computed: modular rank only)";
    }
    std::cout << "\n";
    return 0;
}

int cmd_solve(const std::string& cs, const std::string& taus, bool as_json) {
    Rat c = require_rat(cs);
    int tau = require_tau(taus);
    SolveOptions opts;
    opts.max_query_dim = std::min(opts.max_query_dim, env_budget());
    Decomposition d = solve_decomposition(c, tau, opts);
    if (as_json) {
        json doc;
        doc["c"] = render_rat(c);
        doc["tau"] = taus;
        doc["coeffs"] = coeffs_json(d.value);
        doc["finite"] = d.finite.finite;
        if (d.finite.finite && d.finite.dim)
            doc["dim"] = d.finite.dim->get_str();
        else
            doc["dim"] = nullptr;
        json cert = json::array();
        for (const auto& r : d.certificate) cert.push_back({{"kind", r.kind}, {"note", r.note}});
        doc["certificate"] = cert;
        emit(doc);
        return 0;
    }
    std::cout << "[L_{" << render_rat(c) << "}(" << taus << ")] = " << render_row(d.value)
              << "\n";
    if (!d.determined) {
        std::cout << "  (underdetermined within the current budget; free coefficients:";
        for (int u : d.unresolved) std::cout << " " << irrep_labels()[u];
        std::cout << ")\n";
    }
    std::cout << (d.finite.finite && d.finite.dim
                      ? "  finite dimensional, dim " + d.finite.dim->get_str()
                      : "  infinite dimensional")
              << "\n";
    for (const auto& r : d.certificate)
        std::cout << "  [" << r.kind << "] " << r.note << "\n";
    return 0;
}

int cmd_formula(const std::string& cs, const std::string& taus, bool inverse,
                bool as_json) {
    Rat c = require_rat(cs);
    int tau = require_tau(taus);
    VirtualCharacter v = theorem_formula(c, tau, inverse);
    if (as_json) {
        json doc;
        doc["c"] = render_rat(c);
        doc["tau"] = taus;
        doc["coeffs"] = coeffs_json(v);
        doc["basis"] = inverse ? "L" : "M";
        emit(doc);
        return 0;
    }
    std::string lhs = inverse ? "M" : "L";
    std::string rhs = render_row(v);
    if (inverse) {
        // render in the L basis instead
        rhs.clear();
        for (int t : row_order(v)) {
            long a = v.n[t];
            if (rhs.empty())
                rhs += (a < 0 ? "-" : "");
            else
                rhs += (a < 0 ? " - " : " + ");
            long m = a < 0 ? -a : a;
            if (m != 1) rhs += std::to_string(m) + " ";
            rhs += "L(" + irrep_labels()[t] + ")";
        }
        if (rhs.empty()) rhs = "0";
    }
    std::cout << "[" << lhs << "_{" << render_rat(c) << "}(" << taus << ")] = " << rhs
              << "\n";
    return 0;
}

int cmd_support(const std::string& cs, bool as_json) {
    Rat c = require_rat(cs);
    int d = support_dim(c);
    if (as_json) {
        emit(json{{"c", render_rat(c)}, {"support_dim", d}});
        return 0;
    }
    std::cout << "dim supp L_{" << render_rat(c) << "}(1+) = " << d << "\n";
    return 0;
}

int cmd_induct(const std::string& name, const std::string& cs,
               const std::string& coeff_str, bool as_json) {
    const Group& g = h3_group();
    Rat c = require_rat(cs);
    Parabolic p = build_parabolic(g, name);
    std::vector<long> coeffs;
    if (coeff_str.empty()) {
        // default to the displayed alternating-sum identities
        coeffs.assign(p.irrep_labels.size(), 0);
        if (name == "Z2xZ2")
            coeffs = {1, -1, -1, 1};
        else
            coeffs = {1, -1, 0};
    } else {
        std::stringstream ss(coeff_str);
        std::string tok;
        while (std::getline(ss, tok, ',')) coeffs.push_back(std::atol(tok.c_str()));
        if (coeffs.size() != p.irrep_labels.size())
            throw CLI::ValidationError("--coeffs", "expected " +
                                                       std::to_string(p.irrep_labels.size()) +
                                                       " comma-separated integers");
    }
    VirtualCharacter ind = kgroup_induct(g, p, c, coeffs);
    if (as_json) {
        json doc;
        doc["parabolic"] = name;
        doc["c"] = render_rat(c);
        json in = json::object(), hw = json::object();
        for (size_t xi = 0; xi < p.irrep_labels.size(); ++xi) {
            in[p.irrep_labels[xi]] = coeffs[xi];
            hw[p.irrep_labels[xi]] = render_rat(parabolic_h_weight(p, c, xi));
        }
        doc["coeffs"] = in;
        doc["hweights"] = hw;
        doc["induced"] = coeffs_json(ind);
        emit(doc);
        return 0;
    }
    std::cout << "parabolic " << name << " at c = " << render_rat(c) << "\n";
    for (size_t xi = 0; xi < p.irrep_labels.size(); ++xi)
        std::cout << "  h'_c(" << p.irrep_labels[xi]
                  << ") = " << render_rat(parabolic_h_weight(p, c, xi)) << "\n";
    std::cout << "Ind = " << render_row(ind) << "\n";
    return 0;
}

int cmd_verify(const std::string& filter, bool extended, const std::string& json_path) {
    VerifyOptions opts;
    opts.filter = filter;
    opts.extended = extended;
    opts.budget = env_budget();
    auto records = run_suite(opts);
    std::cout << emit_report(records, "text");
    if (!json_path.empty()) {
        std::string doc = emit_report(records, "json");
        if (json_path == "-") {
            std::cout << doc;
        } else {
            std::ofstream out(json_path);
            out << doc;
        }
    }
    return all_passed(records) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact representation theory of the rational Cherednik algebra of H3"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "cap internal parallelism (current code is serial)");

    bool as_json = false;
    std::string cs = "1/2", taus = "1+", with = "3-", inverse_tau;
    int deg = 1;
    bool inverse = false;
    std::string filter, json_path, parabolic = "Z2xZ2", coeff_str;
    bool extended = false;

    auto add_json = [&](CLI::App* sub) {
        sub->add_flag("--json", as_json, "machine-readable output");
    };

    CLI::App* c_group = app.add_subcommand("group", "the group H3 and its classes");
    add_json(c_group);
    CLI::App* c_reps = app.add_subcommand("reps", "character table of the ten irreducibles");
    add_json(c_reps);
    CLI::App* c_dec = app.add_subcommand("decompose", "tensor-product decomposition");
    c_dec->add_option("--tau", taus, "first factor")->required();
    c_dec->add_option("--with", with, "second factor (default 3-)");
    add_json(c_dec);
    CLI::App* c_hw = app.add_subcommand("hweights", "lowest weights h_c(tau)");
    c_hw->add_option("--c", cs, "parameter, as p/q")->required();
    add_json(c_hw);
    CLI::App* c_rank = app.add_subcommand("rank", "rank and kernel of the contravariant form on a slice");
    c_rank->add_option("--c", cs)->required();
    c_rank->add_option("--tau", taus)->required();
    c_rank->add_option("--deg", deg, "slice degree")->required();
    add_json(c_rank);
    CLI::App* c_solve = app.add_subcommand("solve", "decompose L_c(tau) in the Grothendieck group");
    c_solve->add_option("--c", cs)->required();
    c_solve->add_option("--tau", taus)->required();
    add_json(c_solve);
    CLI::App* c_form = app.add_subcommand("formula", "closed-form decomposition tables");
    c_form->add_option("--c", cs)->required();
    c_form->add_option("--tau", taus)->required();
    c_form->add_flag("--inverse", inverse, "express M in terms of L instead");
    add_json(c_form);
    CLI::App* c_supp = app.add_subcommand("support", "dimension of the support of L_c(1+)");
    c_supp->add_option("--c", cs)->required();
    add_json(c_supp);
    CLI::App* c_ind = app.add_subcommand("induct", "parabolic K-group induction");
    c_ind->add_option("--parabolic", parabolic, "Z2xZ2 or S3");
    c_ind->add_option("--c", cs);
    c_ind->add_option("--coeffs", coeff_str, "comma-separated virtual coefficients");
    add_json(c_ind);
    CLI::App* c_ver = app.add_subcommand("verify", "run the verification suite");
    c_ver->add_option("--filter", filter, "comma-separated check groups");
    c_ver->add_flag("--extended", extended, "include long-running confirmations");
    c_ver->add_option("--json", json_path, "write the JSON report to this path ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*c_group) return cmd_group(as_json);
        if (*c_reps) return cmd_reps(as_json);
        if (*c_dec) return cmd_decompose(taus, with, as_json);
        if (*c_hw) return cmd_hweights(cs, as_json);
        if (*c_rank) return cmd_rank(cs, taus, deg, as_json);
        if (*c_solve) return cmd_solve(cs, taus, as_json);
        if (*c_form) return cmd_formula(cs, taus, inverse, as_json);
        if (*c_supp) return cmd_support(cs, as_json);
        if (*c_ind) return cmd_induct(parabolic, cs, coeff_str, as_json);
        if (*c_ver) return cmd_verify(filter, extended, json_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
