#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "typespace/symmetric_set.hpp"

namespace typespace::cli {

struct CommandConfig {
  std::string command;    // build, info, check-theory, check-bc, check-vibrant, check-model,
                          // stability, cohomology, quotient, export-dot
  std::string stability;  // order-property, indiscernible, divides

  std::string builtin;     // builtin theory name
  std::string theory;      // builtin name or functor JSON path
  std::string structure;   // structure JSON path
  std::string functor;     // functor JSON path
  std::string map_file;    // simplicial map JSON
  std::string base_map;    // map into a decalage, for cohomology

  std::optional<int> max_dim;
  std::optional<int> bound;
  std::string mode = "saturated";
  std::optional<std::string> phi;
  int N = 3;
  int n = 1;
  int L = 3;
  int k = 2;
  int m = 1;
  std::string p;
  std::string relation;
  int max_degree = 1;

  std::string format = "json";
  std::size_t cap = kDefaultSizeCap;
  int workers = 1;
  std::string output;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFail = 2;

/// Parses argv with CLI11. Returns nullopt after printing help or a usage
/// error (exit code stored in *exit_code).
std::optional<CommandConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                        int* exit_code);

/// Executes one command. Reports go to `out` (or the --output file),
/// diagnostics to `err`.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Maps shorthand like "<", "x=y", "x≠y" onto builtin labels.
std::string normalize_label(const std::string& text);

}  // namespace typespace::cli
