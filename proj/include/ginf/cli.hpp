#ifndef GINF_CLI_HPP
#define GINF_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ginf/cayley.hpp"
#include "ginf/oracle.hpp"
#include "ginf/simplicial.hpp"

namespace ginf::cli {

inline constexpr std::string_view kSchemaVersion = "1";

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInputError = 2,
  kExitContradiction = 3,
  kExitBudget = 4,
};

struct Budgets {
  std::size_t orbit = 200000;
  std::size_t element_cap = kDefaultElementCap;
  std::size_t tietze = kDefaultTietzeBudget;
};

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Oracle specifications:
///   z:n  free:n  cyclic:m  dihedral:m
///   coxeter:<file>#<group>  raag:<file>#<group>  gp:<file>#<group>
///   direct(<spec>, <spec>, ...)  freeprod(<spec>, <spec>, ...)
/// `gp` accepts graph products whose vertex groups are finite cyclic or Z.
/// Throws InputError.
OraclePtr parse_oracle_spec(std::string_view spec, const Budgets &budgets = {});

/// Runs one subcommand; `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`. Returns an ExitCode.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ginf::cli

#endif // GINF_CLI_HPP
