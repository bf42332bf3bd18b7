#ifndef HCMINOR_CLI_HPP
#define HCMINOR_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hcminor::cli {

inline constexpr std::uint64_t kDefaultSeed = 20250101;

// Exit codes: 0 success, 1 negative verification, 2 parse/validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace hcminor::cli

#endif  // HCMINOR_CLI_HPP
