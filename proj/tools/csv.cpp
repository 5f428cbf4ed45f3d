#include "csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "experiment_spec.hpp"

namespace ac::cli {
namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

double field_double(const std::vector<std::string>& fields, std::size_t idx) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(fields.at(idx), &pos);
        if (pos != fields[idx].size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw SpecParseError("results: bad numeric field '" + fields.at(idx) + "'");
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    return out;
}

void key_columns(std::ostream& out, const SimConfig& config) {
    out << to_string(config.scheme) << ',' << g9(config.alpha) << ',' << g9(config.p_fail) << ','
        << effective_n(config) << ',' << g9(config.topology.d);
}

}  // namespace

std::string g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void write_results_csv(std::ostream& out, const std::vector<SweepPoint>& points) {
    out << kResultsHeader << '\n';
    for (const SweepPoint& point : points) {
        for (const ReplicateRow& row : point.rows) {
            key_columns(out, point.config);
            out << ',' << row.replicate << ',' << row.iterations << ','
                << g9(row.total_cost_attempted) << ',' << g9(row.total_cost_survived) << ','
                << (row.converged ? 1 : 0) << ',' << g9(row.cost_ratio) << ','
                << g9(row.time_ratio) << '\n';
        }
    }
}

void write_aggregates_csv(std::ostream& out, const std::vector<SweepPoint>& points) {
    out << "scheme,alpha,p_fail,n,d,replicates"
        << ",iterations_mean,iterations_sd"
        << ",total_cost_attempted_mean,total_cost_attempted_sd"
        << ",total_cost_survived_mean,total_cost_survived_sd"
        << ",converged_mean,converged_sd"
        << ",cost_ratio_mean,cost_ratio_sd"
        << ",time_ratio_mean,time_ratio_sd" << '\n';
    for (const SweepPoint& point : points) {
        const Aggregate& a = point.aggregate;
        key_columns(out, point.config);
        out << ',' << a.replicates;
        for (const MeanSd& m : {a.iterations, a.total_cost_attempted, a.total_cost_survived,
                                a.converged, a.cost_ratio, a.time_ratio})
            out << ',' << g9(m.mean) << ',' << g9(m.sd);
        out << '\n';
    }
}

void write_trace_csv(std::ostream& out, const RunResult& result) {
    out << kTraceHeader << '\n';
    for (const TraceRow& row : result.trace) {
        out << row.t << ',' << g9(row.disagreement) << ',' << g9(row.spread) << ','
            << row.links_selected << ',' << row.links_survived << '\n';
    }
}

void save_results_csv(const std::string& path, const std::vector<SweepPoint>& points) {
    auto out = open_out(path);
    write_results_csv(out, points);
}

void save_aggregates_csv(const std::string& path, const std::vector<SweepPoint>& points) {
    auto out = open_out(path);
    write_aggregates_csv(out, points);
}

void save_trace_csv(const std::string& path, const RunResult& result) {
    auto out = open_out(path);
    write_trace_csv(out, result);
}

std::vector<ReportLine> read_results(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecParseError("results: cannot open " + path);
    std::string header;
    if (!std::getline(in, header)) throw SpecParseError("results: empty file " + path);
    if (!header.empty() && header.back() == '\r') header.pop_back();

    const bool per_replicate = header == kResultsHeader;
    const bool aggregate = header.rfind("scheme,alpha,p_fail,n,d,replicates,", 0) == 0;
    if (!per_replicate && !aggregate)
        throw SpecParseError("results: unrecognized header in " + path);

    using Key = std::tuple<std::string, double, double, int, double>;
    struct Sums {
        int count = 0;
        double iters = 0, cost = 0;
        int ratio_count = 0;
        double cost_ratio = 0, time_ratio = 0;
    };
    std::map<Key, Sums> groups;
    std::vector<ReportLine> lines;

    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (per_replicate) {
            if (f.size() != 12) throw SpecParseError("results: bad field count in " + path);
            Key key{f[0], field_double(f, 1), field_double(f, 2),
                    static_cast<int>(field_double(f, 3)), field_double(f, 4)};
            Sums& s = groups[key];
            ++s.count;
            s.iters += field_double(f, 6);
            s.cost += field_double(f, 7);
            const double cr = field_double(f, 10);
            const double tr = field_double(f, 11);
            if (!std::isnan(cr) && !std::isnan(tr)) {
                ++s.ratio_count;
                s.cost_ratio += cr;
                s.time_ratio += tr;
            }
        } else {
            if (f.size() != 18) throw SpecParseError("results: bad field count in " + path);
            ReportLine rl;
            rl.scheme = f[0];
            rl.alpha = field_double(f, 1);
            rl.p_fail = field_double(f, 2);
            rl.n = static_cast<int>(field_double(f, 3));
            rl.d = field_double(f, 4);
            rl.replicates = static_cast<int>(field_double(f, 5));
            rl.iterations_mean = field_double(f, 6);
            rl.cost_mean = field_double(f, 8);
            rl.cost_ratio_mean = field_double(f, 14);
            rl.time_ratio_mean = field_double(f, 16);
            lines.push_back(rl);
        }
    }

    if (per_replicate) {
        for (const auto& [key, s] : groups) {
            ReportLine rl;
            rl.scheme = std::get<0>(key);
            rl.alpha = std::get<1>(key);
            rl.p_fail = std::get<2>(key);
            rl.n = std::get<3>(key);
            rl.d = std::get<4>(key);
            rl.replicates = s.count;
            rl.iterations_mean = s.iters / s.count;
            rl.cost_mean = s.cost / s.count;
            rl.cost_ratio_mean = s.ratio_count ? s.cost_ratio / s.ratio_count : NAN;
            rl.time_ratio_mean = s.ratio_count ? s.time_ratio / s.ratio_count : NAN;
            lines.push_back(rl);
        }
    }
    return lines;
}

void print_report(std::ostream& out, std::vector<ReportLine> lines) {
    std::sort(lines.begin(), lines.end(), [](const ReportLine& a, const ReportLine& b) {
        return std::tie(a.scheme, a.alpha, a.n, a.d, a.p_fail) <
               std::tie(b.scheme, b.alpha, b.n, b.d, b.p_fail);
    });
    char buf[200];
    std::snprintf(buf, sizeof(buf), "%-9s %-7s %-7s %-5s %-5s %-5s %-10s %-12s %-11s %-11s",
                  "scheme", "alpha", "p_fail", "n", "d", "reps", "iters", "cost", "cost_ratio",
                  "time_ratio");
    out << buf << '\n';
    for (const ReportLine& l : lines) {
        std::snprintf(buf, sizeof(buf),
                      "%-9s %-7.3g %-7.3g %-5d %-5g %-5d %-10.6g %-12.6g %-11.4g %-11.4g",
                      l.scheme.c_str(), l.alpha, l.p_fail, l.n, l.d, l.replicates,
                      l.iterations_mean, l.cost_mean, l.cost_ratio_mean, l.time_ratio_mean);
        out << buf << '\n';
    }
}

std::string derived_path(const std::string& out_path, const std::string& tag) {
    const auto dot = out_path.find_last_of('.');
    const auto slash = out_path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return out_path + "." + tag;
    return out_path.substr(0, dot) + "." + tag + out_path.substr(dot);
}

}  // namespace ac::cli
