#ifndef HYPERSIMP_CLI_HPP_
#define HYPERSIMP_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hypersimp/hypergraph.hpp"

namespace hypersimp {

/// Reads a hypergraph in any supported input format: json, edgelist,
/// contacts-csv or friendship-csv. "-" reads standard input.
Hypergraph load_input(const std::string& path, const std::string& format, std::int64_t min_contact_seconds = 40);

/// Entry point of the `hypersimp` tool. Returns the process exit code:
/// 0 on success, 1 on input or runtime errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypersimp

#endif  // HYPERSIMP_CLI_HPP_
