#pragma once

// Command-line front end. Commands read a whitespace-separated list of signed
// decimal integers ('#' starts a comment line) and write a JSON document:
//
//   {"schema_version": 1, "command": ..., "modulus": ..., <payload>}
//
// Big integers are emitted as decimal strings. Exit codes: 0 success or
// verified true, 1 verified false or counterexample found, 2 could not run.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "equisub/conjecture.hpp"
#include "equisub/core.hpp"
#include "equisub/equitable.hpp"
#include "equisub/counting.hpp"

namespace equisub::cli {

enum class Command { extract, count, verify, search };
enum class OutputFormat { text, json };

struct CommandConfig {
    Command command = Command::count;
    std::int64_t modulus = 0;
    std::optional<std::string> input_path;  // stdin when absent
    bool include_empty = true;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t budget = 1000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    OutputFormat output = OutputFormat::json;
};

inline constexpr int schema_version = 1;

class ParseError : public Error { public: using Error::Error; };

/// Parses the textual sequence format. Throws ParseError on malformed tokens.
[[nodiscard]] IntSequence parse_sequence(std::istream& in);

[[nodiscard]] nlohmann::ordered_json to_json(const EquitableCertificate& cert);
[[nodiscard]] nlohmann::ordered_json to_json(const PropertyReport& report);
[[nodiscard]] nlohmann::ordered_json to_json(const CountReport& report);
[[nodiscard]] nlohmann::ordered_json to_json(const ConjectureReport& report);

/// 0 when every instance had a witness, 1 when any counterexample was found.
[[nodiscard]] int search_exit_code(const ConjectureReport& report);

/// Runs one command. `in` is used when config.input_path is empty.
int run(const CommandConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (args[0] is the program name) and runs.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace equisub::cli
