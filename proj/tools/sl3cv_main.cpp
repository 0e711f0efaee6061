// Command-line front end: every subcommand prints one JSON document to stdout
// with the echoed command, normalized input, output payload, and a list of
// named certificates. Diagnostics go to stderr. Exit codes: 0 success,
// 1 validation error, 2 numeric non-convergence.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "sl3cv/acceptance.hpp"
#include "sl3cv/affine_cone.hpp"
#include "sl3cv/betti.hpp"
#include "sl3cv/character_variety.hpp"
#include "sl3cv/higgs.hpp"
#include "sl3cv/integral_points.hpp"
#include "sl3cv/json_io.hpp"
#include "sl3cv/tzitzeica.hpp"

using nlohmann::json;
using namespace sl3cv;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

CharacterPoint parse_point(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 3) throw ValidationError("--point expects x,y,z");
    return {rat_parse(parts[0]), rat_parse(parts[1]), rat_parse(parts[2])};
}

Mat3 parse_mat3(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 9) throw ValidationError("matrix expects 9 comma-separated rationals");
    Mat3 m;
    for (int k = 0; k < 9; ++k) m.e[k] = rat_parse(parts[k]);
    return m;
}

GaussianRational parse_complex(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() == 1) return GaussianRational(rat_parse(parts[0]));
    if (parts.size() == 2) return {rat_parse(parts[0]), rat_parse(parts[1])};
    throw ValidationError("complex value expects re or re,im");
}

std::pair<long, long> parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) throw ValidationError("range expects a..b");
    return {std::stol(s.substr(0, pos)), std::stol(s.substr(pos + 2))};
}

json result_doc(const std::string& command, json input, json output, json certificates) {
    return {{"schema_version", 1},
            {"command", command},
            {"input", std::move(input)},
            {"output", std::move(output)},
            {"certificates", std::move(certificates)}};
}

void emit(const json& doc) {
    std::cout << doc.dump(2) << "\n";
}

json cert(const std::string& name, bool pass) {
    return {{"name", name}, {"pass", pass}};
}

json rep_certificates(const RepPair& r) {
    CharacterPoint ch = character_map(r);
    return json::array({cert("generators_unipotent", true),  // enforced on construction
                        cert("character_on_surface", on_surface(ch)),
                        cert("integral", is_integral(r))});
}

struct HiggsArgs {
    std::string type;
    std::string alpha = "1", beta = "-1/2", xi = "1", q = "0";

    HiggsFamily family() const {
        if (type == "genI") return HiggsFamily::gen1(parse_complex(alpha), parse_complex(beta));
        if (type == "genII") return HiggsFamily::gen2(parse_complex(xi));
        if (type == "genIII") return HiggsFamily::gen3(parse_complex(xi));
        if (type == "genIV") return HiggsFamily::gen4(parse_complex(xi));
        if (type == "cyclic") return HiggsFamily::cyclic(parse_complex(q));
        throw ValidationError("unknown family type: " + type);
    }
    json input_json() const {
        return {{"type", type}, {"alpha", alpha}, {"beta", beta}, {"xi", xi}, {"q", q}};
    }
};

void add_higgs_options(CLI::App* cmd, HiggsArgs& args) {
    cmd->add_option("--type", args.type, "genI|genII|genIII|genIV|cyclic")->required();
    cmd->add_option("--alpha", args.alpha, "genI first parameter (re or re,im)");
    cmd->add_option("--beta", args.beta, "genI second parameter");
    cmd->add_option("--xi", args.xi, "genII-genIV parameter");
    cmd->add_option("--q", args.q, "cyclic family cubic coefficient");
}

json residues_json(const ResidueData& d) {
    return {{"r1", json_mat(d.r1)}, {"r2", json_mat(d.r2)}, {"r3", json_mat(d.r3)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"character varieties, integral monodromy, and affine-sphere metrics"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global flags after the subcommand too
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    unsigned seed = 1;
    app.add_option("--threads", threads, "worker threads for batch scans");
    app.add_option("--seed", seed, "seed for the reality-check fallback combination");

    // ---- surface ----
    auto* surface = app.add_subcommand("surface", "cubic surface of trace coordinates");
    std::string point_arg, s_arg, t_arg, x_arg, y_arg;

    auto* s_eval = surface->add_subcommand("eval", "evaluate the defining cubic");
    s_eval->add_option("--point", point_arg)->required();
    s_eval->callback([&] {
        CharacterPoint p = parse_point(point_arg);
        Rational v = lawton_eval(p);
        emit(result_doc("surface eval", {{"point", json_point(p)}}, {{"P", rat_str(v)}},
                        json::array({cert("on_surface", v == 0)})));
    });

    auto* s_param = surface->add_subcommand("param", "birational parameterization");
    s_param->add_option("--s", s_arg)->required();
    s_param->add_option("--t", t_arg)->required();
    s_param->callback([&] {
        ParamPoint p{rat_parse(s_arg), rat_parse(t_arg)};
        CharacterPoint q = psi(p);
        emit(result_doc("surface param", {{"s", rat_str(p.s)}, {"t", rat_str(p.t)}},
                        {{"point", json_point(q)}},
                        json::array({cert("on_surface", on_surface(q))})));
    });

    auto* s_solve = surface->add_subcommand("solve-z", "rational roots of the fiber quadratic");
    s_solve->add_option("--x", x_arg)->required();
    s_solve->add_option("--y", y_arg)->required();
    s_solve->callback([&] {
        Rational x = rat_parse(x_arg), y = rat_parse(y_arg);
        auto roots = solve_z(x, y);
        json out = json::array();
        bool all_on = true;
        for (const auto& z : roots) {
            out.push_back(rat_str(z));
            all_on = all_on && on_surface({x, y, z});
        }
        emit(result_doc("surface solve-z", {{"x", rat_str(x)}, {"y", rat_str(y)}},
                        {{"z", out}}, json::array({cert("roots_on_surface", all_on)})));
    });

    auto* s_classify = surface->add_subcommand("classify", "real component of an on-surface point");
    s_classify->add_option("--point", point_arg)->required();
    s_classify->callback([&] {
        CharacterPoint p = parse_point(point_arg);
        ComponentLabel c = classify_component(p);
        emit(result_doc("surface classify", {{"point", json_point(p)}},
                        {{"component", to_string(c)}},
                        json::array({cert("on_surface", true)})));
    });

    // ---- rep ----
    auto* rep = app.add_subcommand("rep", "representations of the thrice-punctured sphere");
    std::string a1_arg, a2_arg, m2_arg;

    auto* r_char = rep->add_subcommand("char", "character of a generator pair");
    r_char->add_option("--a1", a1_arg)->required();
    r_char->add_option("--a2", a2_arg)->required();
    r_char->callback([&] {
        RepPair r(SL3Matrix(parse_mat3(a1_arg)), SL3Matrix(parse_mat3(a2_arg)));
        CharacterPoint ch = character_map(r);
        emit(result_doc("rep char",
                        {{"a1", json_mat(r.a1().mat())}, {"a2", json_mat(r.a2().mat())}},
                        {{"character", json_point(ch)}}, rep_certificates(r)));
    });

    auto* r_invert = rep->add_subcommand("invert", "representation with a given character");
    r_invert->add_option("--point", point_arg)->required();
    r_invert->callback([&] {
        CharacterPoint p = parse_point(point_arg);
        RepPair r = invert_character(p);
        json certs = rep_certificates(r);
        certs.push_back(cert("round_trip", character_map(r) == p));
        emit(result_doc("rep invert", {{"point", json_point(p)}}, json_pair(r), certs));
    });

    auto* r_norm = rep->add_subcommand("normalize", "conjugate a pair into normal form");
    r_norm->add_option("--a1", a1_arg)->required();
    r_norm->add_option("--a2", a2_arg)->required();
    r_norm->callback([&] {
        RepPair r(SL3Matrix(parse_mat3(a1_arg)), SL3Matrix(parse_mat3(a2_arg)));
        NormalForm nf = normalize_pair(r);
        json out = {{"case", nf.kind == NormalFormCase::Generic ? "generic" : "degenerate"},
                    {"conjugator", json_mat(nf.conjugator)},
                    {"pair", json_pair(nf.pair)}};
        if (nf.b21) out["b21"] = rat_str(*nf.b21);
        json certs = json::array(
            {cert("character_preserved", character_map(nf.pair) == character_map(r)),
             cert("conjugator_invertible", true)});
        emit(result_doc("rep normalize",
                        {{"a1", json_mat(r.a1().mat())}, {"a2", json_mat(r.a2().mat())}}, out,
                        certs));
    });

    auto* r_unif = rep->add_subcommand("uniformization", "hyperbolic-structure monodromy");
    r_unif->callback([&] {
        RepPair r = uniformization_rep();
        CharacterPoint ch = character_map(r);
        json certs = rep_certificates(r);
        certs.push_back(cert("character_is_35_35_323", ch == CharacterPoint{35, 35, 323}));
        json out = json_pair(r);
        out["character"] = json_point(ch);
        emit(result_doc("rep uniformization", json::object(), out, certs));
    });

    auto* r_sym2 = rep->add_subcommand("sym2", "symmetric square of a 2x2 matrix");
    r_sym2->add_option("--m", m2_arg)->required();
    r_sym2->callback([&] {
        auto parts = split(m2_arg, ',');
        if (parts.size() != 4) throw ValidationError("--m expects 4 comma-separated rationals");
        Mat2 m;
        for (int k = 0; k < 4; ++k) m.e[k] = rat_parse(parts[k]);
        SL3Matrix s = sym_square(m);
        emit(result_doc("rep sym2", {{"m", m2_arg}}, {{"sym2", json_mat(s.mat())}},
                        json::array({cert("det_one", true)})));
    });

    // ---- integral ----
    auto* integral = app.add_subcommand("integral", "integral representation families");
    long n_arg = 1;
    std::string triple_arg, xr_arg, yr_arg;
    bool csv = false, allow_large = false;

    auto* i_c1 = integral->add_subcommand("c1", "family in the trivial component");
    i_c1->add_option("--n", n_arg)->required();
    i_c1->add_flag("--csv", csv);
    i_c1->callback([&] {
        IntegralWitness w = c1_family(n_arg);
        if (csv) {
            std::cout << "s,t,x,y,z,gamma1,gamma2\n"
                      << n_arg << "," << n_arg * n_arg << "," << rat_str(w.character.x) << ","
                      << rat_str(w.character.y) << "," << rat_str(w.character.z) << ",\""
                      << json_mat(w.rep.a1().mat()).dump() << "\",\""
                      << json_mat(w.rep.a2().mat()).dump() << "\"\n";
            return;
        }
        emit(result_doc("integral c1", {{"n", n_arg}}, json_witness(w),
                        json::array({cert("integral", is_integral(w.rep)),
                                     cert("on_surface", on_surface(w.character)),
                                     cert("component_C1", w.component == ComponentLabel::C1)})));
    });

    auto* i_c2 = integral->add_subcommand("c2", "family in the Hitchin component");
    i_c2->add_option("--n", n_arg, "recursion index");
    i_c2->add_option("--triple", triple_arg, "explicit k,l,m");
    i_c2->add_flag("--csv", csv);
    i_c2->add_flag("--allow-large", allow_large, "lift the default n <= 16 cap");
    i_c2->callback([&] {
        DiophantineTriple t;
        json input;
        if (!triple_arg.empty()) {
            auto parts = split(triple_arg, ',');
            if (parts.size() != 3) throw ValidationError("--triple expects k,l,m");
            t = {int_parse(parts[0]), int_parse(parts[1]), int_parse(parts[2])};
            if (!verify_diophantine(t.k, t.l, t.m))
                throw ValidationError("triple fails the Diophantine constraint");
            input = {{"triple", triple_arg}};
        } else {
            if (n_arg < 1 || (n_arg > 16 && !allow_large))
                throw ValidationError("recursion index must be in [1,16]; use --allow-large");
            t = hitchin_recursion(static_cast<unsigned>(n_arg));
            input = {{"n", n_arg}};
        }
        IntegralWitness w = c2_rep(t);
        if (csv) {
            std::cout << "s,t,x,y,z,gamma1,gamma2\n"
                      << "1/" << t.k.get_str() << "," << t.l.get_str() << "/" << t.k.get_str()
                      << "," << rat_str(w.character.x) << "," << rat_str(w.character.y) << ","
                      << rat_str(w.character.z) << ",\"" << json_mat(w.rep.a1().mat()).dump()
                      << "\",\"" << json_mat(w.rep.a2().mat()).dump() << "\"\n";
            return;
        }
        emit(result_doc("integral c2", input, json_witness(w),
                        json::array({cert("integral", is_integral(w.rep)),
                                     cert("on_surface", on_surface(w.character)),
                                     cert("component_C2", w.component == ComponentLabel::C2)})));
    });

    auto* i_scan = integral->add_subcommand("scan", "integer points of the surface in a box");
    i_scan->add_option("--x", xr_arg, "x range a..b")->required();
    i_scan->add_option("--y", yr_arg, "y range a..b")->required();
    i_scan->add_flag("--csv", csv);
    i_scan->callback([&] {
        auto [xlo, xhi] = parse_range(xr_arg);
        auto [ylo, yhi] = parse_range(yr_arg);
        auto points = scan_integer_points(xlo, xhi, ylo, yhi, static_cast<int>(threads));
        if (csv) {
            std::cout << "x,y,z,component\n";
            for (const auto& [p, c] : points)
                std::cout << rat_str(p.x) << "," << rat_str(p.y) << "," << rat_str(p.z) << ","
                          << to_string(c) << "\n";
            return;
        }
        json rows = json::array();
        for (const auto& [p, c] : points)
            rows.push_back({{"point", json_point(p)}, {"component", to_string(c)}});
        emit(result_doc("integral scan", {{"x", xr_arg}, {"y", yr_arg}},
                        {{"points", rows}, {"count", points.size()}},
                        json::array({cert("all_on_surface", true)})));
    });

    // ---- higgs ----
    auto* higgs = app.add_subcommand("higgs", "parabolic residue normal forms");
    HiggsArgs higgs_args;
    std::string q1_arg, q2_arg;

    auto* h_family = higgs->add_subcommand("family", "residue data of a family member");
    add_higgs_options(h_family, higgs_args);
    h_family->callback([&] {
        ResidueData d = build_family(higgs_args.family());
        auto reports = check_nilpotency(d);
        json certs = json::array();
        bool sum_zero = (d.r1 + d.r2 + d.r3).is_zero();
        certs.push_back(cert("residue_sum_zero", sum_zero));
        for (int i = 0; i < 3; ++i) {
            certs.push_back({{"name", "r" + std::to_string(i + 1) + "_nilpotent"},
                             {"pass", reports[i].index > 0 && reports[i].traces_vanish},
                             {"index", reports[i].index}});
        }
        emit(result_doc("higgs family", higgs_args.input_json(), residues_json(d), certs));
    });

    auto* h_real = higgs->add_subcommand("real-check", "reality criterion for the residues");
    add_higgs_options(h_real, higgs_args);
    h_real->callback([&] {
        ResidueData d = build_family(higgs_args.family());
        auto g = real_criterion(d, seed);
        json out = {{"real", g.has_value()}};
        json certs = json::array();
        if (g) {
            out["g"] = json_mat(*g);
            out["det_g"] = to_string(g->det());
            bool sym = true;
            for (const Mat3c* r : {&d.r1, &d.r2, &d.r3})
                sym = sym && (*g * *r == r->transpose() * *g);
            certs.push_back(cert("intertwines_all_residues", sym));
            certs.push_back(cert("nonsingular", !g->det().is_zero()));
        } else {
            certs.push_back(cert("no_invertible_solution", true));
        }
        emit(result_doc("higgs real-check", higgs_args.input_json(), out, certs));
    });

    auto* h_ray = higgs->add_subcommand("ray", "isometry-class invariant of the cyclic family");
    h_ray->add_option("--q1", q1_arg)->required();
    h_ray->add_option("--q2", q2_arg)->required();
    h_ray->callback([&] {
        GaussianRational q1 = parse_complex(q1_arg), q2 = parse_complex(q2_arg);
        bool same = cyclic_ray_invariant(q1, q2);
        emit(result_doc("higgs ray", {{"q1", q1_arg}, {"q2", q2_arg}},
                        {{"same_isometry_class", same}},
                        json::array({cert("norm_compared_exactly", true)})));
    });

    // ---- tzitzeica ----
    auto* tz = app.add_subcommand("tzitzeica", "conformal-factor equation solver");
    auto* t_solve = tz->add_subcommand("solve", "damped Newton solve on a disk");
    std::string bg_arg = "flat", csv_path;
    double q_sq_arg = 0.0, radius_arg = 1.0, tol_arg = 1e-10, boundary_arg = 0.0;
    int grid_arg = 65, max_iters_arg = 50, h_sign = +1;
    t_solve->add_option("--background", bg_arg, "flat|hyperbolic");
    t_solve->add_option("--q-sq", q_sq_arg, "constant |q|^2");
    t_solve->add_option("--radius", radius_arg);
    t_solve->add_option("--grid", grid_arg, "odd, >= 17");
    t_solve->add_option("--tol", tol_arg);
    t_solve->add_option("--max-iters", max_iters_arg);
    t_solve->add_option("--boundary", boundary_arg, "constant boundary value");
    t_solve->add_option("--H", h_sign, "+1 only (hyperbolic affine spheres)");
    t_solve->add_option("--csv", csv_path, "dump x,y,u,blaschke grid to a file");
    t_solve->callback([&] {
        TzitzeicaProblem p;
        if (bg_arg == "flat")
            p.background = Background::FlatLocal;
        else if (bg_arg == "hyperbolic")
            p.background = Background::HyperbolicDisk;
        else
            throw ValidationError("--background must be flat or hyperbolic");
        p.mean_curvature_sign = h_sign;
        p.radius = radius_arg;
        p.grid_n = grid_arg;
        p.q_sq = constant_fn(q_sq_arg);
        p.boundary = constant_fn(boundary_arg);
        TzitzeicaSolution s = solve(p, tol_arg, max_iters_arg);
        double umin = s.u[0], umax = s.u[0];
        for (double v : s.u) {
            umin = std::min(umin, v);
            umax = std::max(umax, v);
        }
        if (!csv_path.empty()) {
            std::ofstream f(csv_path);
            auto factor = blaschke_factor(p, s);
            f << "x,y,u,blaschke\n";
            for (int i = 0; i < s.grid_n; ++i)
                for (int j = 0; j < s.grid_n; ++j)
                    f << grid_x(p, j) << "," << grid_y(p, i) << "," << s.u[i * s.grid_n + j]
                      << "," << factor[i * s.grid_n + j] << "\n";
        }
        emit(result_doc(
            "tzitzeica solve",
            {{"background", bg_arg}, {"q_sq", q_sq_arg}, {"radius", radius_arg},
             {"grid", grid_arg}, {"tol", tol_arg}, {"boundary", boundary_arg}},
            {{"residual_inf", s.residual_inf}, {"newton_iters", s.newton_iters},
             {"u_min", umin}, {"u_max", umax}},
            json::array({cert("residual_below_tol", s.residual_inf < tol_arg)})));
    });

    // ---- cone ----
    auto* cone = app.add_subcommand("cone", "Monge-Ampere cone metric");
    int cone_n = 2, cone_H = 1, r_samples = 100;
    double cone_r = 0.5;
    std::string base_arg;

    auto* c_verify = cone->add_subcommand("verify", "det = 1 identity on an r sweep");
    c_verify->add_option("--n", cone_n);
    c_verify->add_option("--H", cone_H);
    c_verify->add_option("--r-samples", r_samples);
    c_verify->callback([&] {
        double worst = 0;
        for (int i = 0; i < r_samples; ++i) {
            double r = (i + 1) / (r_samples + 1.0);
            if (cone_H == -1) r *= 2.0;
            worst = std::max(worst, verify_monge_ampere({cone_n, cone_H, r}));
        }
        emit(result_doc("cone verify",
                        {{"n", cone_n}, {"H", cone_H}, {"r_samples", r_samples}},
                        {{"max_residual", worst}},
                        json::array({cert("residual_below_1e-12", worst < 1e-12)})));
    });

    auto* c_pot = cone->add_subcommand("potential", "convex potential and derivatives");
    c_pot->add_option("--r", cone_r)->required();
    c_pot->add_option("--n", cone_n);
    c_pot->add_option("--H", cone_H);
    c_pot->callback([&] {
        ConeGeometry c{cone_n, cone_H, cone_r};
        MaCoeffs mc = ma_metric_coeffs(c);
        emit(result_doc("cone potential", {{"n", cone_n}, {"H", cone_H}, {"r", cone_r}},
                        {{"phi", phi(c)},
                         {"phi_prime", phi_derivative(c)},
                         {"phi_second", phi_second_derivative(c)},
                         {"c_rr", mc.c_rr},
                         {"c_base", mc.c_base}},
                        json::array({cert("convex", phi_second_derivative(c) > 0)})));
    });

    auto* c_semi = cone->add_subcommand("semiflat", "block metric and complex structure");
    c_semi->add_option("--base", base_arg, "row-major entries of an SPD matrix")->required();
    c_semi->callback([&] {
        auto parts = split(base_arg, ',');
        int n = static_cast<int>(std::lround(std::sqrt(double(parts.size()))));
        if (n * n != static_cast<int>(parts.size()))
            throw ValidationError("--base needs a square count of entries");
        Eigen::MatrixXd base(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) base(i, j) = std::stod(parts[i * n + j]);
        SemiFlatSample s = semiflat_assemble(base);
        bool j_sq = (s.J * s.J + Eigen::MatrixXd::Identity(2 * n, 2 * n)).norm() == 0;
        bool compat = (s.J.transpose() * s.g * s.J - s.g).norm() == 0;
        json gj = json::array(), jj = json::array();
        for (int i = 0; i < 2 * n; ++i)
            for (int j = 0; j < 2 * n; ++j) {
                gj.push_back(s.g(i, j));
                jj.push_back(s.J(i, j));
            }
        emit(result_doc("cone semiflat", {{"base", base_arg}}, {{"g", gj}, {"J", jj}},
                        json::array({cert("J_squared_minus_identity", j_sq),
                                     cert("metric_J_compatible", compat)})));
    });

    // ---- verify-all ----
    auto* verify_all = app.add_subcommand("verify-all", "run the full acceptance battery");
    verify_all->callback([&] {
        auto results = run_acceptance();
        json rows = json::array();
        bool all = true;
        for (const auto& r : results) {
            std::cerr << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " — "
                      << r.detail << "\n";
            rows.push_back(
                {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            all = all && r.pass;
        }
        emit(result_doc("verify-all", json::object(), {{"criteria", rows}},
                        json::array({cert("all_criteria", all)})));
        if (!all) std::exit(1);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const NonConvergenceError& e) {
        std::cerr << "non-convergence: " << e.what() << " (residual " << e.residual << " after "
                  << e.iters << " iterations)\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
