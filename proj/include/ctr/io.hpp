// Channel/polygon file parsing and deterministic JSON/CSV/SVG emission.
#ifndef CTR_IO_HPP
#define CTR_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include "ctr/channels.hpp"
#include "ctr/optimize.hpp"
#include "ctr/oracle.hpp"
#include "ctr/regions.hpp"

namespace ctr {

using ChannelInput = std::variant<GbcChannel, GicChannel>;

// {"type":"gbc","h1":x,"h2":x,"P":x} or {"type":"gic","a":x,"b":x,"P1":x,"P2":x}.
// swap_users relabels user 1 <-> user 2 before validation.
ChannelInput parse_channel_file(const std::string& path, bool swap_users = false);

// {"points":[[r1,r2],...]} ordered from the r2-axis end to the r1-axis end.
std::vector<RatePair> parse_polygon_file(const std::string& path);

// Decimal with 12 significant digits; non-finite values become null.
std::string json_number(double v);

std::string ctr_to_json(const CTRegion& ctr);
std::string solver_result_to_json(const SolverResult& r);
std::string report_to_json(const CompareReport& rep);
std::string certificate_to_json(const NonconvexityCertificate& cert);

// Header "d1,d2" and one row per point, '\n' line endings.
std::string boundary_to_csv(const std::vector<CompletionTimePair>& points);

// Boundary polyline plus the two rays, nothing else.
std::string ctr_to_svg(const CTRegion& ctr, std::size_t samples);

// Writes via a temporary file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace ctr

#endif
