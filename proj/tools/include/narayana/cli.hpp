#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end and its serialization helpers.
 */

#include "narayana/dyck.hpp"
#include "narayana/qpoly.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace narayana::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Bumped whenever cached tables could change.
inline constexpr const char* kCodeVersion = "1";

/// Integers fitting in 64 signed bits become JSON numbers, larger ones
/// decimal strings.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// Ascending coefficient array, index = exponent.
Json qpoly_to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);

Json subset_to_json(RankSubset s);
RankSubset subset_from_json(const Json& j);

/// Quotes a field per RFC 4180 when needed.
std::string csv_field(const std::string& s);

struct Report {
    std::string command;
    Json parameters = Json::object();
    std::string verdict;  // "pass", "fail" or "value"
    Json payload = Json::object();
    std::vector<std::string> witnesses;
    std::optional<double> timing_ms;

    friend bool operator==(const Report&, const Report&) = default;
};

Json report_to_json(const Report& r);
Report report_from_json(const Json& j);

/// Runs the tool on argv[1..]; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace narayana::cli
