#pragma once

// Command-line front end. The binary in tools/ is a thin wrapper around
// run_cli so every command can be exercised in-process.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>

namespace recip::cli {

enum class Command { mtable, ntable, coeffs, verify, symmetries, sets, ext, zn };
enum class Format { csv, json };

inline constexpr int exit_ok = 0;
inline constexpr int exit_counterexample = 1;
inline constexpr int exit_usage = 2;

struct RunConfig {
    Command command = Command::ntable;
    std::optional<std::uint64_t> p;
    std::optional<std::uint64_t> n;
    std::optional<int> k;
    std::optional<std::uint64_t> max_p;
    unsigned jobs = 1;
    /// Unset means the command's default: JSON for coeffs and symmetries, CSV otherwise.
    std::optional<Format> format;
    std::optional<std::filesystem::path> cache_dir;
    bool trust_cache = false;
};

/// Thrown for invalid parameter combinations; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses argv (argv[0] is the program name). Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs one parsed configuration. Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace recip::cli
