#ifndef DIVDMT_CLI_HPP
#define DIVDMT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace divdmt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. args excludes the program name. CSV goes to --out or
/// `out`; diagnostics, and the JSON summary when neither --out nor --summary
/// is given, go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace divdmt::cli

#endif  // DIVDMT_CLI_HPP
