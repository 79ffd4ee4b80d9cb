#pragma once

#include <string>

#include "parse.hpp"

namespace backorb::cli {

struct GlobalOpts {
    bool json = false;
    Config cfg;
};

int cmd_factor(const std::string& poly_text, const GlobalOpts& g);
int cmd_capelli(unsigned long n, const std::string& beta_text, const GlobalOpts& g);
int cmd_mu_table(const std::string& map_text, const std::string& beta_text, unsigned long n_max,
                 const GlobalOpts& g);
int cmd_orbit(const std::string& map_text, const std::string& point_text, unsigned long steps,
              const GlobalOpts& g);
int cmd_heights(const std::string& point_text, const std::string& minpoly_text,
                const std::string& map_text, double tol, const GlobalOpts& g);
int cmd_chebyshev(long d, const GlobalOpts& g);

int cmd_integral_test(const std::string& gamma_text, const std::string& alpha_text,
                      const std::string& S_text, const GlobalOpts& g);
int cmd_integral_backward(const std::string& map_text, const std::string& beta_text,
                          const std::string& alpha_text, const std::string& S_text,
                          unsigned long depth, const GlobalOpts& g);
int cmd_integral_forward(const std::string& map_text, const std::string& beta_text,
                         const std::string& alpha_text, const std::string& S_text,
                         unsigned long steps, const GlobalOpts& g);
int cmd_integral_roots_of_unity(const std::string& alpha_text, const std::string& S_text,
                                unsigned long m_max, const GlobalOpts& g);
int cmd_integral_powers(const std::string& alpha_text, const std::string& beta_text,
                        const std::string& S_text, long from, long to, const GlobalOpts& g);
int cmd_integral_bir(unsigned long n_max, const GlobalOpts& g);

}  // namespace backorb::cli
