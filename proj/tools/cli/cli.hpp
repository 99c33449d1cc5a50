#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfcli {

enum class Format { human, json };

struct Caps {
  std::size_t max_generators = 16;  ///< DF_MAX_S
  std::size_t ball_length = 8;      ///< DF_BALL_L
  int ball_radius = 6;              ///< DF_BALL_R
  std::size_t samples = 10'000;
  std::size_t max_pairs = 400'000;
};

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  Caps caps;
  std::string output;  ///< empty: standard output
  Format format = Format::human;
  std::uint64_t seed = 20240601;

  // complex / davis / gamma / census selections; none selected means all
  std::vector<std::string> actions;
  std::string word;                 ///< gamma --member
  std::optional<int> crystal;       ///< census --crystal n
  std::string mid;                  ///< structset --mid
  long long n = 0;                  ///< structset / example32
  int m = 3;                        ///< example32
  std::string vertex;               ///< example32
  bool selftest = false;            ///< heisenberg
};

/// Applies DF_MAX_S, DF_BALL_L and DF_BALL_R to the defaults.
Caps caps_from_environment();

/// Parses argv into a config. Returns nullopt after printing help; throws
/// dfcli::UsageError on bad arguments.
std::optional<RunConfig> parse_arguments(int argc, const char* const* argv, std::ostream& out);

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Runs one subcommand and writes its report. Returns 0 when every verdict
/// passes, 1 on a property violation, 2 on usage, input or cap errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Command-line entry point.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dfcli
