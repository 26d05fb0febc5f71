#pragma once

// Text formats. Lines starting with '#' and blank lines are ignored on
// input. Hex values are lowercase with bit 0 in the last digit.
//
//   graph:       "n m", then m lines "u v"; edge id = line order
//   assignment:  "m d", then m lines of hex vectors or "-" (unassigned)
//   code:        "n m count", then count lines of hex edge masks
//   family:      "t s", then s lines of hex edge masks

#include <iosfwd>
#include <string>

#include "graphcode/bounds.hpp"
#include "graphcode/codes.hpp"
#include "graphcode/construct.hpp"

#include <json.hpp>

namespace graphcode {

Graph read_graph(std::istream& in, bool allow_multigraph = false);
void write_graph(std::ostream& out, const Graph& h);

EdgeAssignment read_assignment(std::istream& in);
void write_assignment(std::ostream& out, const EdgeAssignment& a);

/// Members are read as given; the generator is not recoverable from a code
/// file.
ConnectivityCode read_code(std::istream& in);
/// Lazy codes are materialized member by member.
void write_code(std::ostream& out, const ConnectivityCode& c);

/// Certificate for a failed verification: '#' comment lines describing the
/// cut, followed by a two-member code file whose difference is the
/// disconnected subgraph. `graphcode verify --code` on it fails again.
void write_certificate(std::ostream& out, const Graph& h, const EdgeSubset& first,
                       const EdgeSubset& second, const CutCertificate& cut, const std::string& note);

/// Sets are read against `host`, which the family then carries.
DisconnectingFamily read_family(std::istream& in, const Graph& host);
void write_family(std::ostream& out, const DisconnectingFamily& f);

Graph load_graph_file(const std::string& path, bool allow_multigraph = false);
EdgeAssignment load_assignment_file(const std::string& path);
ConnectivityCode load_code_file(const std::string& path);
DisconnectingFamily load_family_file(const std::string& path, const Graph& host);
/// Writes `text` to `path`, or to stdout when path is "-".
void save_text(const std::string& path, const std::string& text);

inline constexpr const char* kReportSchema = "graphcode-report/1";
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::ordered_json trace_to_json(const ConstructTrace& t);
nlohmann::ordered_json cut_to_json(const CutCertificate& c);
nlohmann::ordered_json bound_report_to_json(const BoundReport& r);

}  // namespace graphcode
