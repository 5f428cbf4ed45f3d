#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ac/sim.hpp"

namespace ac::cli {

// All floating-point output uses 9 significant digits so files diff cleanly.
std::string g9(double v);

inline constexpr const char* kResultsHeader =
    "scheme,alpha,p_fail,n,d,replicate,iterations,total_cost_attempted,"
    "total_cost_survived,converged,cost_ratio,time_ratio";
inline constexpr const char* kTraceHeader = "t,disagreement,spread,links_selected,links_survived";

void write_results_csv(std::ostream& out, const std::vector<SweepPoint>& points);
void write_aggregates_csv(std::ostream& out, const std::vector<SweepPoint>& points);
void write_trace_csv(std::ostream& out, const RunResult& result);

void save_results_csv(const std::string& path, const std::vector<SweepPoint>& points);
void save_aggregates_csv(const std::string& path, const std::vector<SweepPoint>& points);
void save_trace_csv(const std::string& path, const RunResult& result);

// One summary line per grid point, averaged over replicates.
struct ReportLine {
    std::string scheme;
    double alpha = 0.0;
    double p_fail = 0.0;
    int n = 0;
    double d = 0.0;
    int replicates = 0;
    double iterations_mean = 0.0;
    double cost_mean = 0.0;
    double cost_ratio_mean = 0.0;
    double time_ratio_mean = 0.0;
};

// Reads either a per-replicate results file or an aggregate file (detected
// by header) and reduces it to report lines. Malformed input raises
// SpecParseError.
std::vector<ReportLine> read_results(const std::string& path);

// Sorted by (scheme, alpha, n, d, p_fail); fixed-width human-readable table.
void print_report(std::ostream& out, std::vector<ReportLine> lines);

// "results.csv" -> "results.agg.csv" / "results.trace.csv"
std::string derived_path(const std::string& out_path, const std::string& tag);

}  // namespace ac::cli
