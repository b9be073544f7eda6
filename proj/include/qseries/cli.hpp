#ifndef QSERIES_CLI_HPP
#define QSERIES_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

namespace qseries::cli {

enum class Command { list, verify, inequality, expand };
enum class Format { text, json };

struct RunConfig {
    Command command = Command::list;
    std::optional<std::string> id_filter; // exact id or glob
    std::optional<long> order;            // record default when unset
    long max_n = 2000;
    int parallelism = 1;
    Format format = Format::text;
    std::optional<std::string> output_path;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// 0 when every check passed, 1 on a mismatch or violated inequality,
/// 2 on usage or builder errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses flags and dispatches to run().
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qseries::cli

#endif
