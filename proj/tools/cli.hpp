#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "plancalc/planar_algebra.hpp"
#include "plancalc/tl.hpp"

namespace plancalc::cli {

// Process exit codes. Each failure prints one line "plancalc: <tag>: <reason>".
enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kInvalid = 2,      // tangle fails validation
  kUnstable = 3,     // --require-stable and the truncation is not stable
  kUnreadable = 4,   // input file missing or unreadable
  kSchema = 5,       // malformed JSON or wrong wire schema
  kRing = 6,         // scalars from different rings
  kCompute = 7,      // a computation refused its input
};

struct CliError : std::runtime_error {
  CliError(Exit code, std::string tag, const std::string& msg)
      : std::runtime_error(msg), code(code), tag(std::move(tag)) {}
  Exit code;
  std::string tag;
};

// Runs one invocation; writes artifacts to out (or the -o file) and the
// failure line to err. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Shared helpers for the command implementations.
std::string read_file(const std::string& path);
void write_output(const std::string& path, const std::string& text, std::ostream& out);

struct RingSpec {
  std::string delta;        // "generic", "sqrtN", a rational, or empty
  std::string delta_plus;   // rational, "dp" or "dm"
  std::string delta_minus;
  std::string minpoly;      // "c0,c1,...,1", low degree first
  std::string root;         // "lo,hi" isolating interval for minpoly
};
std::shared_ptr<TLAlgebra> make_tl(const RingSpec& r);
// Instance names: tl, tl-quotient, model (with model_path).
std::shared_ptr<const PlanarAlgebra> make_instance(const std::string& name, const RingSpec& r,
                                                   const std::string& model_path);
Color parse_color(const std::string& s);  // "2+" or "2,-"

}  // namespace plancalc::cli
