#ifndef PIERCING_IO_HPP
#define PIERCING_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "piercing/errors.hpp"
#include "piercing/oracle.hpp"

namespace piercing {

constexpr int kInstanceVersion = 1;

/// Instance JSON:
///   {"version": 1,
///    "template": {"normals": [[a, b], ...], "reference_offsets": ["p/q", ...]},
///    "members": [{"offsets": {"<dir index>": "p/q", ...}}, ...]}
std::string serialize_instance(const Family& f);

/// Parses and validates an instance (template validity, index range, member
/// nonemptiness). Duplicate direction keys collapse to the tightest offset.
/// Throws InvalidInput with every problem found.
Family parse_instance(std::string_view text);

/// Output of one algorithm run.
struct ResultFile {
    std::string algorithm;                   // "t1", "t2" or "oracle"
    std::vector<Point> points;
    std::vector<std::size_t> assignment;     // member -> point index
    std::string bound;                       // decimal integer
    std::size_t initial_type_count = 0;
    bool verified = false;
    std::string trace;                       // compact JSON text
    std::optional<double> elapsed_ms;        // only when timing was requested

    friend bool operator==(const ResultFile&, const ResultFile&) = default;
};

ResultFile make_result_file(const PiercingResult& r, bool verified);
ResultFile make_oracle_file(const OracleResult& r, std::size_t member_count, bool verified);

std::string serialize_result(const ResultFile& r);
ResultFile parse_result(std::string_view text);

/// Reads the "points" array of any JSON document (result files included).
std::vector<Point> parse_points(std::string_view text);

/// Self-contained, replayable record of a failed construction step.
std::string serialize_counterexample(const Family& f, const std::string& algorithm, const ClaimViolation& v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace piercing

#endif
