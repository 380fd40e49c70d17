#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace h2z {

/// Exit codes: 0 success, 1 usage/data error, 2 reference diff failure.
inline constexpr int k_exit_ok = 0;
inline constexpr int k_exit_usage = 1;
inline constexpr int k_exit_diff = 2;

/// Runs the command line given argv-style arguments (without argv[0]).
/// All output goes to the supplied streams; nothing else is touched.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory holding the bundled data files: --data-dir flag if given,
/// else $H2Z_DATA_DIR, else the compiled-in default.
std::string default_data_dir();

} // namespace h2z
