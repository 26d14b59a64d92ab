#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace plancalc::cli {

struct Options {
  std::string output;
  std::uint64_t seed = 1;
  std::vector<std::string> files;
  int at = 1;
  RingSpec ring;
  std::string instance = "tl-quotient";
  std::string model;
  std::string color = "2+";
  std::vector<std::string> inputs;  // matchings, one per internal disc
  bool quotient = false;
  std::string labels;
  int max_k = 6;
  int truncation = 8;
  int budget = 128;
  std::string outer, inner;
  int kmax = 3;
  int pmax = 10, pbound = 5;
  bool require_stable = false;
};

// Each returns an exit code and writes its artifact through write_output.
int cmd_validate(const Options& o, std::ostream& out);
int cmd_compose(const Options& o, std::ostream& out);
int cmd_star(const Options& o, std::ostream& out);
int cmd_canon(const Options& o, std::ostream& out);
int cmd_tl(const std::string& mode, const Options& o, std::ostream& out);
int cmd_pivotal_eval(const Options& o, std::ostream& out);
int cmd_depth(const Options& o, std::ostream& out);
int cmd_affine(const std::string& mode, const Options& o, std::ostream& out);
int cmd_render(const Options& o, std::ostream& out);

}  // namespace plancalc::cli
