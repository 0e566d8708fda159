#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nullstrata/repchar.hpp"

namespace nullstrata::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalidInput = 2, kCapacity = 3 };

struct JobSpec {
  std::string subcommand;
  std::string type = "A1";
  std::string module = "adjoint";
  std::vector<int> eval;       // prime powers at which to evaluate polynomials
  std::string format = "json";  // json | tsv
  int threads = 1;
  bool memo = true;
  int subset_bound = 0;         // 0: lattice rank
  std::string lattice = "sc";   // sc | adjoint
  std::string support;          // blade: weight indices into the character listing
  std::string suite = "all";    // verify: sl2 | sl3 | binary | torus | all
  std::vector<int> q;           // verify: field sizes

  /// Argument vector (without program name) that parses back to this spec.
  std::vector<std::string> to_args() const;
  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

/// Parses argv[1..]; throws InputError on bad grammar. Returns a spec with an
/// empty subcommand when only help was requested (help text goes to `out`).
JobSpec parse_job(const std::vector<std::string>& args, std::ostream& out);

/// Builds the module character named by a module spec:
///   adjoint | dual-adjoint | hw:<coeffs> | dual-hw:<coeffs> | weights:<w>;<w>;...
/// Highest-weight coefficients are fundamental-weight coordinates filled in
/// from the first simple factor; '/' separates per-factor groups, with an
/// optional trailing group for the central torus.
ModuleCharacter build_module(const DatumPtr& datum, const std::string& spec);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nullstrata::cli
