#include "commands.hpp"

#include <iostream>

#include "backorb/dynamics/chebyshev.hpp"
#include "backorb/dynamics/divisor.hpp"
#include "backorb/dynamics/orbit.hpp"
#include "backorb/exactnum/serialize.hpp"
#include "backorb/factor/mu.hpp"
#include "backorb/heights/mahler.hpp"
#include "backorb/integrality/searches.hpp"
#include "report.hpp"

namespace backorb::cli {

using namespace backorb::exactnum;
using namespace backorb::dynamics;
using namespace backorb::integrality;
using json = nlohmann::ordered_json;

namespace {

std::string point_str(const ProjPoint& P) {
    if (P.is_infinity()) return "inf";
    return rat_to_string(P.to_rational());
}

json factorization_json(const factor::Factorization& fac) {
    json out = json::object();
    out["unit"] = rat_to_string(fac.unit);
    out["factors"] = json::array();
    for (const auto& t : fac.factors) {
        json f;
        f["poly"] = poly_to_json(t.poly);
        f["display"] = poly_to_display(t.poly);
        f["multiplicity"] = t.multiplicity;
        out["factors"].push_back(f);
    }
    return out;
}

json verdict_json(const IntegralityVerdict& v) {
    json out;
    out["integral"] = v.integral;
    if (v.witness) {
        json w;
        w["prime"] = v.witness->prime.get_str();
        w["branch"] = v.witness->branch;
        w["slope"] = rat_to_string(v.witness->slope);
        w["prime_certified"] = v.witness->prime_certified;
        out["witness"] = w;
    }
    return out;
}

ProjClass parse_proj_class(const std::string& text) {
    std::string t = text;
    if (t == "inf" || t == "oo" || t == "infinity") return ProjClass::infinity();
    if (t.find('z') != std::string::npos)
        return ProjClass(ConjugateClass::from_minpoly(parse_poly(t)));
    return ProjClass::rational(parse_rat(t));
}

void emit(const json& payload, const TextTable& table, const GlobalOpts& g) {
    if (g.json) {
        std::cout << payload.dump(2) << "\n";
    } else {
        table.print(std::cout);
    }
}

}  // namespace

int cmd_factor(const std::string& poly_text, const GlobalOpts& g) {
    IntPoly f = parse_poly(poly_text);
    auto t0 = std::chrono::steady_clock::now();
    auto fac = factor::factor_over_Q(f);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    json out;
    out["input"] = poly_to_display(f);
    out["result"] = factorization_json(fac);
    out["timings"] = {{"factor_ms", ms}};
    TextTable table({"factor", "multiplicity", "degree"});
    for (const auto& t : fac.factors)
        table.add({poly_to_display(t.poly), std::to_string(t.multiplicity),
                   std::to_string(t.poly.degree())});
    if (!g.json) std::cout << poly_to_display(f) << "  (unit " << rat_to_string(fac.unit) << ")\n";
    emit(out, table, g);
    return 0;
}

int cmd_capelli(unsigned long n, const std::string& beta_text, const GlobalOpts& g) {
    Rat beta = parse_rat(beta_text);
    auto t0 = std::chrono::steady_clock::now();
    auto [fac, trace] = factor::capelli_factor(n, beta);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    json out;
    out["input"] = {{"n", n}, {"beta", rat_to_string(beta)}};
    out["result"] = factorization_json(fac);
    json steps = json::array();
    for (const auto& s : trace.steps) {
        json e;
        e["kind"] = s.kind;
        if (s.prime) e["prime"] = s.prime;
        e["root"] = rat_to_string(s.root);
        e["residual"] = s.residual;
        steps.push_back(e);
    }
    out["trace"] = steps;
    out["timings"] = {{"capelli_ms", ms}};
    TextTable table({"factor", "degree"});
    for (const auto& t : fac.factors)
        table.add({poly_to_display(t.poly), std::to_string(t.poly.degree())});
    if (!g.json) {
        std::cout << "z^" << n << " - (" << rat_to_string(beta) << "), "
                  << fac.factors.size() << " irreducible factor(s), trace depth "
                  << trace.steps.size() << "\n";
    }
    emit(out, table, g);
    return 0;
}

int cmd_mu_table(const std::string& map_text, const std::string& beta_text, unsigned long n_max,
                 const GlobalOpts& g) {
    auto phi = parse_map(map_text);
    Rat beta = parse_rat(beta_text);
    auto table = factor::mu_table(phi, beta, n_max, g.cfg.degree_cap, g.cfg.threads);
    json out;
    out["input"] = {{"map", map_text}, {"beta", rat_to_string(beta)}, {"n_max", n_max}};
    json rows = json::array();
    for (auto& r : table.rows) rows.push_back({{"n", r.n}, {"mu", r.mu}});
    out["rows"] = rows;
    out["nondecreasing"] = table.nondecreasing;
    out["stabilizes_at"] = table.stabilizes_at;
    TextTable tt({"n", "mu"});
    for (auto& r : table.rows) tt.add({std::to_string(r.n), std::to_string(r.mu)});
    emit(out, tt, g);
    if (!g.json)
        std::cout << (table.nondecreasing ? "nondecreasing" : "not monotone") << ", stable from n="
                  << table.stabilizes_at << "\n";
    return 0;
}

int cmd_orbit(const std::string& map_text, const std::string& point_text, unsigned long steps,
              const GlobalOpts& g) {
    auto phi = parse_map(map_text);
    auto P = parse_point(point_text);
    auto orbit = forward_orbit(phi, P, steps);
    auto pp = is_preperiodic(phi, P);
    auto div = pullback_divisor(phi, P);
    json out;
    out["input"] = {{"map", map_text}, {"point", point_str(P)}, {"steps", steps}};
    json orb = json::array();
    for (auto& Q : orbit) orb.push_back(point_str(Q));
    out["orbit"] = orb;
    out["preperiodic"] = pp.preperiodic;
    if (pp.preperiodic) {
        json tail = json::array(), cyc = json::array();
        for (auto& Q : pp.tail) tail.push_back(point_str(Q));
        for (auto& Q : pp.cycle) cyc.push_back(point_str(Q));
        out["tail"] = tail;
        out["cycle"] = cyc;
    } else {
        out["escape"] = {{"level", pp.escape_level},
                         {"height", pp.escape_height},
                         {"threshold", pp.escape_threshold}};
    }
    json divisor = json::array();
    for (auto& t : div.terms())
        divisor.push_back({{"class", t.cls.is_infinity() ? "inf" : poly_to_display(t.cls.cls().minpoly())},
                           {"mult", t.mult}});
    out["pullback_divisor"] = divisor;
    TextTable tt({"n", "phi^n(P)"});
    for (size_t i = 0; i < orbit.size(); ++i) tt.add({std::to_string(i), point_str(orbit[i])});
    emit(out, tt, g);
    if (!g.json) {
        std::cout << (pp.preperiodic ? "preperiodic (tail " + std::to_string(pp.tail.size()) +
                                           ", cycle " + std::to_string(pp.cycle.size()) + ")"
                                     : "wandering: h(phi^" + std::to_string(pp.escape_level) +
                                           " P) = " + fmt_double(pp.escape_height) +
                                           " > C/(d-1) = " + fmt_double(pp.escape_threshold))
                  << "\n";
        std::cout << "pullback divisor degree " << div.degree() << "\n";
    }
    return 0;
}

int cmd_heights(const std::string& point_text, const std::string& minpoly_text,
                const std::string& map_text, double tol, const GlobalOpts& g) {
    json out;
    TextTable tt({"quantity", "value", "error_bound", "n_used"});
    if (!minpoly_text.empty()) {
        auto cls = ConjugateClass::from_minpoly(parse_poly(minpoly_text));
        auto h = heights::height_class(cls, tol);
        out["class"] = poly_to_display(cls.minpoly());
        out["height"] = h.value;
        out["error_bound"] = h.error_bound;
        tt.add({"h(class)", fmt_double(h.value), fmt_double(h.error_bound), "-"});
        if (!map_text.empty()) {
            auto phi = parse_map(map_text);
            double lr = heights::lehmer_ratio(cls, phi, tol);
            out["lehmer_ratio"] = lr;
            tt.add({"deg * hhat", fmt_double(lr), fmt_double(cls.degree() * h.error_bound), "-"});
        }
    } else {
        auto P = parse_point(point_text);
        auto h = heights::height_point(P);
        out["point"] = point_str(P);
        out["height"] = h.value;
        out["error_bound"] = h.error_bound;
        tt.add({"h(P)", fmt_double(h.value), "0", "-"});
        if (!map_text.empty()) {
            auto phi = parse_map(map_text);
            double C = heights::height_commute_bound(phi);
            auto ch = heights::canonical_height(phi, P, tol);
            // recover n from the error bound formula
            unsigned long n = 0;
            if (C > 0) {
                double dn = C / (ch.error_bound * (phi.degree() - 1));
                n = static_cast<unsigned long>(std::lround(std::log(dn) / std::log(phi.degree())));
            }
            out["commute_bound"] = C;
            out["canonical_height"] = ch.value;
            out["canonical_error"] = ch.error_bound;
            out["n_used"] = n;
            tt.add({"C(phi)", fmt_double(C), "-", "-"});
            tt.add({"hhat(P)", fmt_double(ch.value), fmt_double(ch.error_bound),
                    std::to_string(n)});
        }
    }
    emit(out, tt, g);
    return 0;
}

int cmd_chebyshev(long d, const GlobalOpts& g) {
    auto T = chebyshev(d);
    json out;
    out["d"] = d;
    out["poly"] = poly_to_json(T);
    out["display"] = poly_to_display(T);
    TextTable tt({"d", "T_d"});
    tt.add({std::to_string(d), poly_to_display(T)});
    emit(out, tt, g);
    return 0;
}

int cmd_integral_test(const std::string& gamma_text, const std::string& alpha_text,
                      const std::string& S_text, const GlobalOpts& g) {
    auto gamma = parse_proj_class(gamma_text);
    auto alpha = parse_proj_class(alpha_text);
    auto S = PlaceSet::parse(S_text);
    auto v = is_S_integral(gamma, alpha, S);
    json out;
    out["gamma"] = gamma_text;
    out["alpha"] = alpha_text;
    out["S"] = S.to_string();
    out["verdict"] = verdict_json(v);
    TextTable tt({"gamma", "alpha", "S", "integral", "witness"});
    tt.add({gamma_text, alpha_text, S.to_string(), v.integral ? "yes" : "no",
            v.witness ? "p=" + v.witness->prime.get_str() + " (" + v.witness->branch + ")" : "-"});
    emit(out, tt, g);
    return v.integral ? 0 : 1;
}

int cmd_integral_backward(const std::string& map_text, const std::string& beta_text,
                          const std::string& alpha_text, const std::string& S_text,
                          unsigned long depth, const GlobalOpts& g) {
    auto phi = parse_map(map_text);
    Rat beta = parse_rat(beta_text);
    Rat alpha = parse_rat(alpha_text);
    auto S = PlaceSet::parse(S_text);
    auto res = integral_backward_orbit(phi, beta, alpha, S, depth, g.cfg.degree_cap);
    json out;
    out["input"] = {{"map", map_text},
                    {"beta", rat_to_string(beta)},
                    {"alpha", rat_to_string(alpha)},
                    {"S", S.to_string()},
                    {"depth", depth}};
    if (res.alpha_preperiodic_warning)
        out["warning"] = "alpha is preperiodic: the finiteness hypothesis fails";
    out["capelli_path"] = res.capelli_path_used;
    json hits = json::array();
    TextTable tt({"level", "class", "degree"});
    for (auto& h : res.hits) {
        std::string cs = h.cls.is_infinity() ? "inf" : poly_to_display(h.cls.cls().minpoly());
        hits.push_back({{"level", h.level}, {"class", cs}, {"degree", h.cls.degree()}});
        tt.add({std::to_string(h.level), cs, std::to_string(h.cls.degree())});
    }
    out["integral_classes"] = hits;
    emit(out, tt, g);
    if (!g.json && res.alpha_preperiodic_warning)
        std::cout << "warning: alpha is preperiodic; the conjecture's hypothesis fails\n";
    return 0;
}

int cmd_integral_forward(const std::string& map_text, const std::string& beta_text,
                         const std::string& alpha_text, const std::string& S_text,
                         unsigned long steps, const GlobalOpts& g) {
    auto phi = parse_map(map_text);
    auto beta = parse_point(beta_text);
    auto alpha = parse_point(alpha_text);
    auto S = PlaceSet::parse(S_text);
    auto res = forward_integral_points(phi, beta, alpha, S, steps);
    json out;
    out["input"] = {{"map", map_text},
                    {"beta", point_str(beta)},
                    {"alpha", point_str(alpha)},
                    {"S", S.to_string()},
                    {"steps", steps}};
    if (res.alpha_exceptional_warning)
        out["warning"] = "alpha is exceptional: Silverman's hypothesis fails";
    json hits = json::array();
    TextTable tt({"n", "point"});
    for (auto& [n, P] : res.hits) {
        hits.push_back({{"n", n}, {"point", point_str(P)}});
        tt.add({std::to_string(n), point_str(P)});
    }
    out["integral_points"] = hits;
    emit(out, tt, g);
    if (!g.json && res.alpha_exceptional_warning)
        std::cout << "warning: alpha is exceptional; Silverman's hypothesis fails\n";
    return 0;
}

int cmd_integral_roots_of_unity(const std::string& alpha_text, const std::string& S_text,
                                unsigned long m_max, const GlobalOpts& g) {
    Rat alpha = parse_rat(alpha_text);
    auto S = PlaceSet::parse(S_text);
    auto ms = integral_roots_of_unity(alpha, S, m_max);
    json out;
    out["input"] = {{"alpha", rat_to_string(alpha)}, {"S", S.to_string()}, {"m_max", m_max}};
    out["orders"] = json::array();
    TextTable tt({"m", "status"});
    for (auto m : ms) {
        out["orders"].push_back(m);
        tt.add({std::to_string(m), "S-integral"});
    }
    emit(out, tt, g);
    return 0;
}

int cmd_integral_powers(const std::string& alpha_text, const std::string& beta_text,
                        const std::string& S_text, long from, long to, const GlobalOpts& g) {
    Rat alpha = parse_rat(alpha_text);
    auto beta_cls = parse_proj_class(beta_text);
    if (beta_cls.is_infinity()) throw std::invalid_argument("beta must be a finite class");
    auto S = PlaceSet::parse(S_text);
    auto ms = integral_powers(alpha, beta_cls.cls(), S, from, to);
    json out;
    out["input"] = {{"alpha", rat_to_string(alpha)},
                    {"beta", beta_text},
                    {"S", S.to_string()},
                    {"range", {from, to}}};
    out["exponents"] = json::array();
    TextTable tt({"m", "alpha^m"});
    for (auto m : ms) {
        out["exponents"].push_back(m);
        Rat am(1);
        for (long i = 0; i < std::abs(m); ++i) am = m >= 0 ? Rat(am * alpha) : Rat(am / alpha);
        tt.add({std::to_string(m), rat_to_string(am)});
    }
    emit(out, tt, g);
    return 0;
}

int cmd_integral_bir(unsigned long n_max, const GlobalOpts& g) {
    json rows = json::array();
    TextTable tt({"n", "degree", "integral", "f_n(2)=+-1", "class height", "error"});
    bool all = true;
    double prev = 1e300;
    for (unsigned long n = 1; n <= n_max; ++n) {
        auto rep = bir_family_check(n);
        all = all && rep.integral && rep.resultant_shortcut_ok;
        rows.push_back({{"n", n},
                        {"degree", rep.poly.degree()},
                        {"integral", rep.integral},
                        {"shortcut_ok", rep.resultant_shortcut_ok},
                        {"class_height", rep.class_height},
                        {"height_error", rep.height_error},
                        {"decreasing", rep.class_height < prev}});
        tt.add({std::to_string(n), std::to_string(rep.poly.degree()), rep.integral ? "yes" : "NO",
                rep.resultant_shortcut_ok ? "yes" : "NO", fmt_double(rep.class_height, 6),
                fmt_double(rep.height_error, 3)});
        prev = rep.class_height;
    }
    json out;
    out["input"] = {{"n_max", n_max}, {"alpha", "2"}, {"S", "{inf}"}};
    out["rows"] = rows;
    out["all_integral"] = all;
    emit(out, tt, g);
    return all ? 0 : 1;
}

}  // namespace backorb::cli
