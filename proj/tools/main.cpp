#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "experiments.hpp"

int main(int argc, char** argv) {
    using namespace backorb::cli;
    CLI::App app{"exact arithmetic for backward orbits, heights, and relative S-integrality on P^1(Q)"};
    app.require_subcommand(1);

    GlobalOpts g;
    std::string config_path;
    app.add_flag("--json", g.json, "emit the machine-readable JSON document");
    app.add_option("--threads", g.cfg.threads, "worker threads for row-parallel sweeps");
    app.add_option("--degree-cap", g.cfg.degree_cap, "max fiber polynomial degree");
    app.add_option("--tol", g.cfg.tol, "numeric tolerance for heights");
    app.add_option("--config", config_path, "key=value config file");

    // factor
    std::string poly_text;
    auto* c_factor = app.add_subcommand("factor", "factor a polynomial over Q");
    c_factor->add_option("poly", poly_text, "polynomial in z")->required();

    // capelli
    unsigned long cap_n = 0;
    std::string beta_text;
    auto* c_capelli = app.add_subcommand("capelli", "factor z^n - beta by the binomial fast path");
    c_capelli->add_option("--n", cap_n, "exponent n")->required();
    c_capelli->add_option("--beta", beta_text, "rational beta")->required();

    // mu-table
    std::string map_text, mt_beta;
    unsigned long mt_nmax = 6;
    auto* c_mu = app.add_subcommand("mu-table", "Galois-orbit counts of phi^{-n}(beta)");
    c_mu->add_option("--map", map_text, "rational map, e.g. \"z^2-1\" or \"(z^2+1)/z\"")->required();
    c_mu->add_option("--beta", mt_beta, "rational beta")->required();
    c_mu->add_option("--nmax", mt_nmax, "max level");

    // orbit
    std::string orbit_map, orbit_point;
    unsigned long orbit_steps = 8;
    auto* c_orbit = app.add_subcommand("orbit", "forward orbit, preperiodicity, pullback divisor");
    c_orbit->add_option("--map", orbit_map)->required();
    c_orbit->add_option("--point", orbit_point)->required();
    c_orbit->add_option("--steps", orbit_steps);

    // heights
    std::string h_point, h_minpoly, h_map;
    auto* c_heights = app.add_subcommand("heights", "absolute, class, and canonical heights");
    c_heights->add_option("--point", h_point, "rational point or inf");
    c_heights->add_option("--minpoly", h_minpoly, "minimal polynomial of a class");
    c_heights->add_option("--map", h_map, "map for canonical height / Lehmer ratio");

    // chebyshev
    long cheb_d = 2;
    auto* c_cheb = app.add_subcommand("chebyshev", "the normalized Chebyshev polynomial T_d");
    c_cheb->add_option("--d", cheb_d)->required();

    // integral family
    auto* c_int = app.add_subcommand("integral", "relative S-integrality tests and searches");
    c_int->require_subcommand(1);
    std::string i_gamma, i_alpha, i_beta, i_S = "";
    unsigned long i_depth = 6, i_mmax = 100, i_nmax = 8;
    long i_from = 0, i_to = 10;

    auto* t_test = c_int->add_subcommand("test", "is gamma S-integral relative to alpha?");
    t_test->add_option("--gamma", i_gamma, "rational, minpoly in z, or inf")->required();
    t_test->add_option("--alpha", i_alpha, "rational, minpoly in z, or inf")->required();
    t_test->add_option("--S", i_S, "finite primes, e.g. \"2,7\"");

    auto* t_back = c_int->add_subcommand("backward", "integral classes in the backward orbit");
    t_back->add_option("--map", map_text)->required();
    t_back->add_option("--beta", i_beta)->required();
    t_back->add_option("--alpha", i_alpha)->required();
    t_back->add_option("--S", i_S);
    t_back->add_option("--depth", i_depth);

    auto* t_fwd = c_int->add_subcommand("forward", "integral points in the forward orbit");
    t_fwd->add_option("--map", map_text)->required();
    t_fwd->add_option("--beta", i_beta)->required();
    t_fwd->add_option("--alpha", i_alpha)->required();
    t_fwd->add_option("--S", i_S);
    t_fwd->add_option("--steps", i_depth);

    auto* t_rou = c_int->add_subcommand("roots-of-unity", "S-integral roots of unity");
    t_rou->add_option("--alpha", i_alpha)->required();
    t_rou->add_option("--S", i_S);
    t_rou->add_option("--mmax", i_mmax);

    auto* t_pow = c_int->add_subcommand("powers", "S-integral powers alpha^m");
    t_pow->add_option("--alpha", i_alpha)->required();
    t_pow->add_option("--beta", i_beta)->required();
    t_pow->add_option("--S", i_S);
    t_pow->add_option("--from", i_from);
    t_pow->add_option("--to", i_to);

    auto* t_bir = c_int->add_subcommand("bir", "the z^(2^n)(z-2)-1 family");
    t_bir->add_option("--nmax", i_nmax);

    // experiments
    auto* c_exp = app.add_subcommand("experiments", "reproduction sweeps");
    c_exp->require_subcommand(1);
    unsigned long exp_depth = 10, exp_nmax = 10, lehmer_nmax = 12;
    std::string exp_map = "z^2", exp_beta = "2";
    auto* e_jones = c_exp->add_subcommand("jones", "quadratic families: mu <= 2");
    (void)e_jones;
    auto* e_bir = c_exp->add_subcommand("bir", "integral family with heights tending to 0");
    e_bir->add_option("--nmax", exp_nmax);
    auto* e_lehmer = c_exp->add_subcommand("lehmer-table", "mu and implied Lehmer bounds");
    e_lehmer->add_option("--map", exp_map);
    e_lehmer->add_option("--beta", exp_beta);
    e_lehmer->add_option("--nmax", lehmer_nmax);
    auto* e_tour = c_exp->add_subcommand("paper-tour", "every reproduced check in one run");
    e_tour->add_option("--depth", exp_depth, "backward search depth");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            Config file_cfg = load_config(config_path);
            // explicit command-line options win over the file
            if (!app.count("--threads")) g.cfg.threads = file_cfg.threads;
            if (!app.count("--degree-cap")) g.cfg.degree_cap = file_cfg.degree_cap;
            if (!app.count("--tol")) g.cfg.tol = file_cfg.tol;
            g.cfg.seed = file_cfg.seed;
        }

        if (*c_factor) return cmd_factor(poly_text, g);
        if (*c_capelli) return cmd_capelli(cap_n, beta_text, g);
        if (*c_mu) return cmd_mu_table(map_text, mt_beta, mt_nmax, g);
        if (*c_orbit) return cmd_orbit(orbit_map, orbit_point, orbit_steps, g);
        if (*c_heights) return cmd_heights(h_point, h_minpoly, h_map, g.cfg.tol, g);
        if (*c_cheb) return cmd_chebyshev(cheb_d, g);
        if (*t_test) return cmd_integral_test(i_gamma, i_alpha, i_S, g);
        if (*t_back) return cmd_integral_backward(map_text, i_beta, i_alpha, i_S, i_depth, g);
        if (*t_fwd) return cmd_integral_forward(map_text, i_beta, i_alpha, i_S, i_depth, g);
        if (*t_rou) return cmd_integral_roots_of_unity(i_alpha, i_S, i_mmax, g);
        if (*t_pow) return cmd_integral_powers(i_alpha, i_beta, i_S, i_from, i_to, g);
        if (*t_bir) return cmd_integral_bir(i_nmax, g);
        if (*e_jones) return experiment_jones(g);
        if (*e_bir) return experiment_bir(exp_nmax, g);
        if (*e_lehmer) return experiment_lehmer_table(exp_map, exp_beta, lehmer_nmax, g);
        if (*e_tour) return experiment_paper_tour(exp_depth, g);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    std::cerr << "no subcommand selected\n";
    return 2;
}
