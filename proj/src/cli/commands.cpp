#include "cobord/cli.hpp"

#include "cobord/duality.hpp"
#include "cobord/flag_chow.hpp"
#include "report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>

namespace cobord::cli {

namespace {

struct Options {
    std::string format = "json";
    std::string group;
    std::string datum_path;
    std::string law = "universal";
    std::string what = "ranks";
    std::string invert;
    int max_degree = -1;
    int order = -1;
    int degree = -1;
    int rank = -1;
    int slack = 2;
    long n_series = 0;
    long components = 1;
    bool no_stability = false;
};

struct Outcome {
    json result;
    json warnings = json::array();
    int exit_code = 0;
};

void require(bool ok, const std::string& message) {
    if (!ok)
        throw UsageError(message);
}

RootDatum resolve_datum(const Options& o) {
    require(o.group.empty() != o.datum_path.empty(), "exactly one of --group or --root-datum is required");
    if (!o.group.empty())
        return root_datum_preset(o.group);
    std::ifstream in(o.datum_path);
    require(static_cast<bool>(in), "cannot read root datum file " + o.datum_path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed root datum JSON: ") + e.what());
    }
    return root_datum_from_json(j);
}

json tuple_json(const std::vector<int>& m) { return json(m); }

Outcome cmd_lazard(const Options& o) {
    require(o.max_degree >= 1, "--max-degree must be >= 1");
    LazardBasis L(o.max_degree);
    Outcome out;
    if (o.what == "ranks") {
        json ranks = json::array();
        for (int n = 0; n <= o.max_degree; ++n)
            ranks.push_back(L.rank(n));
        out.result["ranks"] = ranks;
    } else if (o.what == "basis") {
        json basis = json::array();
        for (int n = 0; n <= o.max_degree; ++n) {
            json elems = json::array();
            for (int i = 0; i < L.rank(n); ++i)
                elems.push_back(L.basis_element(n, static_cast<std::size_t>(i)).to_string());
            basis.push_back({{"degree", n}, {"elements", elems}});
        }
        out.result["basis"] = basis;
    } else if (o.what == "coefficients") {
        json coeffs = json::array();
        for (const auto& [ij, a] : L.law_coefficients())
            coeffs.push_back({{"i", ij.first}, {"j", ij.second}, {"value", a.to_string()}});
        out.result["coefficients"] = coeffs;
    } else if (o.what == "pn") {
        json pn = json::array();
        for (int n = 0; n <= o.max_degree; ++n) {
            Poly p = pn_class(L, n);
            json coords = n == 0 ? json::array({1}) : vector_json(*L.coordinates(p, n));
            pn.push_back({{"degree", n}, {"class", p.to_string()}, {"coordinates", coords}});
        }
        out.result["pn"] = pn;
    } else {
        throw UsageError("--what must be one of ranks, basis, coefficients, pn");
    }
    return out;
}

FormalGroupLaw make_law(const std::string& law, int order) {
    if (law == "additive")
        return fgl_additive(order);
    if (law == "multiplicative")
        return fgl_multiplicative(order);
    if (law == "universal")
        return fgl_universal(std::max(order - 1, 1));
    throw UsageError("--law must be one of additive, multiplicative, universal");
}

Outcome cmd_fgl(const Options& o) {
    require(o.order >= 1, "--order must be >= 1");
    FormalGroupLaw F = make_law(o.law, o.order);
    Outcome out;
    out.result["law"] = to_string(F.kind());
    out.result["order"] = F.order();
    out.result["series"] = F.law().poly().to_string();
    out.result["inverse"] = F.inverse_series().poly().to_string();
    json coeffs = json::array();
    for (int s = 2; s <= F.order(); ++s)
        for (int i = 1; 2 * i <= s; ++i) {
            Poly a = F.coefficient(i, s - i);
            if (!a.is_zero())
                coeffs.push_back({{"i", i}, {"j", s - i}, {"value", a.to_string()}});
        }
    out.result["coefficients"] = coeffs;
    out.result["axioms_hold"] = law_residuals(F, F.order()).all_zero();
    if (o.n_series != 0) {
        RingPtr rx = series_ring_over(F, {"x"});
        Series x = Series::variable(rx, "x", F.order());
        out.result["n_series"] = {{"n", o.n_series}, {"series", n_series(F, o.n_series, x).poly().to_string()}};
    }
    return out;
}

Outcome cmd_weyl(const Options& o) {
    RootDatum rd = resolve_datum(o);
    WeylGroup W = weyl_enumerate(rd);
    Outcome out;
    out.result["datum"] = to_json(rd);
    out.result["order"] = W.size();
    out.result["length_polynomial"] = W.length_polynomial();
    out.result["cartan_matrix"] = rd.cartan_matrix();
    out.result["num_positive_roots"] = W[W.longest()].length;
    json elems = json::array();
    for (const auto& e : W.elements()) {
        json rows = json::array();
        for (std::size_t i = 0; i < e.matrix.dim(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < e.matrix.dim(); ++j)
                row.push_back(e.matrix(i, j));
            rows.push_back(row);
        }
        json word = json::array();
        for (std::size_t s : e.word)
            word.push_back(s + 1);
        elems.push_back({{"length", e.length}, {"word", word}, {"matrix", rows}});
    }
    out.result["elements"] = elems;
    return out;
}

Outcome cmd_torsion(const Options& o) {
    RootDatum rd = resolve_datum(o);
    require(o.components >= 1, "--components must be >= 1");
    TorsionIndexReport rep = torsion_index_report(rd);
    Outcome out;
    out.result["torsion_index"] = integer_json(rep.torsion_index * Integer(o.components));
    if (o.components != 1)
        out.result["identity_component_torsion_index"] = integer_json(rep.torsion_index);
    out.result["top_degree"] = rep.top_degree;
    out.result["top_degree_exponent"] = integer_json(rep.top_degree_exponent);
    json per = json::array();
    for (std::size_t k = 0; k < rep.per_degree.size(); ++k)
        per.push_back({{"degree", k},
                       {"free_rank", rep.per_degree[k].free_rank},
                       {"divisors", vector_json(rep.per_degree[k].elementary_divisors)}});
    out.result["per_degree"] = per;
    return out;
}

Outcome cmd_twisted(const Options& o) {
    RootDatum rd = resolve_datum(o);
    require(o.order >= 1, "--order must be >= 1");
    int D = o.max_degree;
    // Room for comparing each block with the cut raised by two.
    const int extra = o.no_stability ? 0 : 2;
    std::unique_ptr<CoefficientLattice> coeffs;
    std::optional<FormalGroupLaw> law;
    if (o.law == "additive") {
        require(D <= 0, "the additive law has coefficients in degree 0 only");
        D = 0;
        law = fgl_additive(o.order + extra);
        coeffs = std::make_unique<IntegerLattice>();
    } else if (o.law == "multiplicative") {
        D = std::max(D, 0);
        law = fgl_multiplicative(o.order + extra);
        coeffs = std::make_unique<LaurentLattice>(o.order + D + extra);
    } else if (o.law == "universal") {
        if (D < 0)
            D = o.order;
        require(D >= 1, "--max-degree must be >= 1 for the universal law");
        law = fgl_universal(std::max(D, o.order) + extra);
        coeffs = std::make_unique<LazardBasis>(D + extra);
    } else {
        throw UsageError("--law must be one of additive, multiplicative, universal");
    }
    TwistedContext ctx(*law, rd, o.order + extra);
    Outcome out;
    json blocks = json::array();
    for (const auto& b : invariants_truncated(ctx, *coeffs, o.order, D, !o.no_stability)) {
        json jb{{"total_degree", b.block.total_degree},
                {"cut", b.block.cut},
                {"dim", b.block.dim()},
                {"rank", b.kernel.rows()},
                {"graded_ranks", b.graded_ranks}};
        if (b.stable) {
            jb["stable"] = *b.stable;
            if (!*b.stable)
                out.warnings.push_back("invariants of total degree " + std::to_string(b.block.total_degree) +
                                       " change when the cut is raised");
        } else {
            jb["stable"] = nullptr;
        }
        blocks.push_back(jb);
    }
    out.result["law"] = to_string(law->kind());
    out.result["order"] = o.order;
    out.result["max_degree"] = D;
    out.result["weyl_order"] = ctx.weyl().size();
    out.result["invariants"] = blocks;
    return out;
}

Outcome cmd_btpair(const Options& o) {
    std::size_t r = 0;
    if (o.rank >= 0) {
        require(o.group.empty() && o.datum_path.empty(), "--rank excludes --group/--root-datum");
        r = static_cast<std::size_t>(o.rank);
    } else {
        r = resolve_datum(o).rank;
    }
    require(o.max_degree >= 1, "--max-degree must be >= 1");
    BTContext ctx(r, o.max_degree);
    std::vector<Tuple> tuples;
    for (int n = 0; n <= o.max_degree; ++n)
        for (auto& m : tuples_of_weight(r, n))
            tuples.push_back(std::move(m));
    json rows = json::array();
    bool unitriangular = true, dual_ok = true;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < tuples.size(); ++j) {
            BTClass p = ctx.basis_class(tuples[j]);
            Poly v = pairing(ctx, ctx.t_monomial(tuples[i]), p);
            row.push_back(v.to_string());
            if (j < i && !v.is_zero())
                unitriangular = false;
            if (j == i && !(v == Poly::constant(ctx.coefficient_ring(), 1)))
                unitriangular = false;
            Poly d = pairing(ctx, ctx.dual(tuples[i]), p);
            if (!(d == Poly::constant(ctx.coefficient_ring(), i == j ? 1 : 0)))
                dual_ok = false;
        }
        rows.push_back(row);
    }
    json dual = json::array();
    for (const auto& m : tuples)
        dual.push_back({{"m", tuple_json(m)}, {"series", ctx.dual(m).poly().to_string()}});
    Outcome out;
    out.result["rank"] = r;
    out.result["max_degree"] = o.max_degree;
    out.result["tuples"] = tuples;
    out.result["pairing"] = rows;
    out.result["unitriangular"] = unitriangular;
    out.result["dual_basis"] = dual;
    out.result["dual_basis_ok"] = dual_ok;
    if (!unitriangular || !dual_ok)
        out.exit_code = 2;
    return out;
}

json coinvariants_json(const BTContext& ctx, const CoinvariantsReport& rep) {
    BTLattice lat = bt_lattice(ctx, rep.degree);
    json lifts = json::array();
    for (std::size_t i = 0; i < rep.lifts.rows(); ++i)
        lifts.push_back(bt_element(ctx, lat, rep.lifts.row(i)).to_string());
    return {{"degree", rep.degree},
            {"lattice_rank", rep.lattice_rank},
            {"relation_rank", rep.relation_rank},
            {"free_rank", rep.free_rank},
            {"torsion", vector_json(rep.torsion)},
            {"quotient_basis", matrix_json(rep.quotient_basis)},
            {"lifts", lifts},
            {"stable", rep.stable}};
}

Outcome cmd_coinv(const Options& o) {
    RootDatum rd = resolve_datum(o);
    require(o.degree >= 0, "--degree must be >= 0");
    BTContext ctx(rd.rank, std::max(o.degree, 1));
    WeylGroup W = weyl_enumerate(rd);
    Outcome out;
    out.result = coinvariants_json(ctx, coinvariants(ctx, W, o.degree));
    return out;
}

Outcome cmd_verify(const Options& o) {
    RootDatum rd = resolve_datum(o);
    require(o.max_degree >= 0, "--max-degree must be >= 0");
    require(o.components >= 1, "--components must be >= 1");
    require(o.slack >= 0, "--slack must be >= 0");
    DualityOptions opts;
    opts.slack = o.slack;
    if (!o.invert.empty()) {
        Integer v;
        require(v.set_str(o.invert, 10) == 0 && v >= 0, "--invert-tau expects a non-negative integer");
        opts.invert = v;
    } else if (o.components != 1) {
        opts.invert = torsion_index(rd) * Integer(o.components);
    }
    DualityReport rep = duality_check(rd, o.max_degree, opts);
    Outcome out;
    json degrees = json::array();
    for (const auto& d : rep.degrees) {
        degrees.push_back({{"degree", d.degree},
                           {"verdict", d.verdict},
                           {"free_rank", d.coinvariants.free_rank},
                           {"torsion", vector_json(d.coinvariants.torsion)},
                           {"stable", d.stable},
                           {"invariant_rows", d.invariant_rows},
                           {"pairing_rank", d.pairing_rank},
                           {"pairing_divisors", vector_json(d.pairing_divisors)},
                           {"relations_pair_trivially", d.relations_pair_trivially},
                           {"null_space_matches", d.null_space_matches},
                           {"indecomposable_rank", d.indecomposable_rank},
                           {"indecomposable_torsion", vector_json(d.indecomposable_torsion)},
                           {"leading_rank", d.leading_rank},
                           {"leading_divisors", vector_json(d.leading_divisors)},
                           {"rational_ok", d.rational_ok},
                           {"integral_ok", d.integral_ok}});
        if (!d.stable)
            out.warnings.push_back("degree " + std::to_string(d.degree) +
                                   ": truncated invariants unstable, verdict limited to rational-only");
    }
    out.result["datum"] = to_json(rep.datum);
    out.result["torsion_index"] = integer_json(rep.torsion_index);
    out.result["inverted"] = integer_json(rep.inverted);
    out.result["max_degree"] = rep.max_degree;
    out.result["degrees"] = degrees;
    out.result["passed"] = rep.passed();
    out.exit_code = rep.passed() ? 0 : 2;
    return out;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with formal group laws, Weyl groups and torus cobordism"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

    auto group_opts = [&](CLI::App* s) {
        s->add_option("--group", o.group, "Preset: Torus(r), SL(n), GL(n), PGL(2), Sp(4), G2");
        s->add_option("--root-datum", o.datum_path, "Root datum JSON file");
    };

    std::map<CLI::App*, std::pair<std::string, std::function<Outcome(const Options&)>>> handlers;
    auto add = [&](const char* name, const char* help, std::function<Outcome(const Options&)> fn) {
        CLI::App* s = app.add_subcommand(name, help);
        handlers[s] = {name, std::move(fn)};
        return s;
    };

    auto* lazard = add("lazard", "Lazard ring lattice in low degrees", cmd_lazard);
    lazard->add_option("--max-degree", o.max_degree)->required();
    lazard->add_option("--what", o.what, "ranks | basis | coefficients | pn");

    auto* fgl = add("fgl", "Formal group law coefficients and axioms", cmd_fgl);
    fgl->add_option("--law", o.law, "additive | multiplicative | universal");
    fgl->add_option("--order", o.order)->required();
    fgl->add_option("--n-series", o.n_series, "Also print [n](x)");

    auto* weyl = add("weyl", "Weyl group enumeration", cmd_weyl);
    group_opts(weyl);

    auto* torsion = add("torsion-index", "Torsion index via divided differences", cmd_torsion);
    group_opts(torsion);
    torsion->add_option("--components", o.components, "Number of connected components (multiplies the index)");

    auto* twisted = add("twisted", "Truncated Weyl invariants of the twisted group algebra", cmd_twisted);
    group_opts(twisted);
    twisted->add_option("--law", o.law, "additive | multiplicative | universal");
    twisted->add_option("--order", o.order, "Filtration cut")->required();
    twisted->add_option("--max-degree", o.max_degree, "Coefficient degree bound");
    twisted->add_flag("--no-stability", o.no_stability, "Skip the raised-cut comparison");

    auto* btpair = add("btpair", "Pairing matrix and dual basis of the torus module", cmd_btpair);
    group_opts(btpair);
    btpair->add_option("--rank", o.rank, "Torus rank (instead of a group)");
    btpair->add_option("--max-degree", o.max_degree)->required();

    auto* coinv = add("coinv", "Weyl coinvariants of the torus module in one degree", cmd_coinv);
    group_opts(coinv);
    coinv->add_option("--degree", o.degree)->required();

    auto* verify = add("verify-duality", "Check the invariant/coinvariant duality degree by degree", cmd_verify);
    group_opts(verify);
    verify->add_option("--max-degree", o.max_degree)->required();
    verify->add_option("--invert-tau", o.invert, "Integer to invert (default: the torsion index; 0 = rationally)");
    verify->add_option("--components", o.components, "Multiply the inverted torsion index by this count");
    verify->add_option("--slack", o.slack, "Extra filtration for the invariant computation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    for (auto& [sub, h] : handlers) {
        if (!sub->parsed())
            continue;
        json command{{"subcommand", h.first}};
        for (const CLI::Option* opt : sub->get_options()) {
            if (opt->count() == 0 || opt->get_name() == "--help")
                continue;
            std::string key = opt->get_name();
            while (!key.empty() && key.front() == '-')
                key.erase(key.begin());
            command[key] = opt->as<std::string>();
        }
        try {
            Outcome res = h.second(o);
            json report = make_report(command, res.result, res.warnings);
            out << render(report, o.format == "text" ? Format::Text : Format::Json);
            return res.exit_code;
        } catch (const UsageError& e) {
            err << "error: " << e.what() << "\n\n" << sub->help();
            return 1;
        } catch (const InternalError& e) {
            err << "internal check failed: " << e.what() << "\n";
            return 2;
        } catch (const AlgebraError& e) {
            err << "error: " << e.what() << "\n";
            return 1;
        }
    }
    err << app.help();
    return 1;
}

} // namespace cobord::cli
