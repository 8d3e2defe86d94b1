/**
 * @file cli.hpp
 * @brief The orbifano command line: rr | hilbert | basket | count | verify |
 *        search. In-process entry point so tests can drive the exact
 *        production path.
 */
#ifndef ORBIFANO_CLI_HPP
#define ORBIFANO_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace orbifano::cli {

/// Exit statuses: 0 success, 1 check failure, 2 usage/parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Dispatches argv (without the program name) to a subcommand. Results go to
/// `out`, diagnostics to `err`. Honors ORBIFANO_TRUNCATE for the default
/// truncation order.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Re-renders a --json payload emitted by `command` into exactly the text the
/// same invocation prints without --json. Both outputs encode the same data;
/// the round-trip test holds dispatch to that.
std::string render_human_from_json(const std::string& command, const std::string& json_text);

} // namespace orbifano::cli

#endif
