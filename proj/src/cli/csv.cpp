#include <cstdio>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "triwalk/cli.hpp"

namespace triwalk::cli {

namespace {

constexpr const char* kDistributionHeader = "n,p_total,p_L,p_0,p_R";

double parse_field(const std::string& field) {
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (field.empty() || end != field.c_str() + field.size()) {
        throw std::runtime_error("bad CSV number '" + field + "'");
    }
    return v;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_distribution_csv(std::ostream& os, std::span<const SiteProbability> rows) {
    os << kDistributionHeader << '\n';
    for (const auto& r : rows) {
        os << r.n << ',' << format_double(r.total) << ',' << format_double(r.l) << ','
           << format_double(r.zero) << ',' << format_double(r.r) << '\n';
    }
}

std::vector<SiteProbability> read_distribution_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kDistributionHeader) {
        throw std::runtime_error("missing distribution header");
    }
    std::vector<SiteProbability> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 5) throw std::runtime_error("expected 5 columns: " + line);
        SiteProbability p;
        p.n = std::stoll(fields[0]);
        p.total = parse_field(fields[1]);
        p.l = parse_field(fields[2]);
        p.zero = parse_field(fields[3]);
        p.r = parse_field(fields[4]);
        rows.push_back(p);
    }
    return rows;
}

void write_trace_csv(std::ostream& os, std::span<const double> p0) {
    os << "t,p0\n";
    for (std::size_t t = 0; t < p0.size(); ++t) os << t << ',' << format_double(p0[t]) << '\n';
}

void write_table_csv(std::ostream& os, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
        os << '\n';
    }
}

}  // namespace triwalk::cli
