#pragma once

#include "commands.hpp"

namespace backorb::cli {

int experiment_jones(const GlobalOpts& g);
int experiment_bir(unsigned long n_max, const GlobalOpts& g);
int experiment_lehmer_table(const std::string& map_text, const std::string& beta_text,
                            unsigned long n_max, const GlobalOpts& g);
int experiment_paper_tour(unsigned long backward_depth, const GlobalOpts& g);

}  // namespace backorb::cli
