#include "dimcheck/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace dimcheck {

std::string format_double(double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return {buf, p};
}

void write_trajectory_csv(std::ostream& os, const growth::Trajectory& traj,
                          const growth::Params& p) {
    growth::DerivedSeries d = growth::derived_series(traj, p);
    os << "t,k,c,y,r,w,mu\n";
    for (std::size_t i = 0; i < traj.size(); ++i) {
        os << format_double(traj.t(i)) << ',' << format_double(traj.k[i]) << ','
           << format_double(traj.c[i]) << ',' << format_double(d.y[i]) << ','
           << format_double(d.r[i]) << ',' << format_double(d.w[i]) << ','
           << format_double(d.mu[i]) << '\n';
    }
}

void write_phase_field_csv(std::ostream& os, const growth::PhaseGrid& grid) {
    os << "k,c,kdot,cdot\n";
    for (const auto& pt : grid.field) {
        os << format_double(pt.k) << ',' << format_double(pt.c) << ',' << format_double(pt.kdot)
           << ',' << format_double(pt.cdot) << '\n';
    }
}

void write_nullcline_csv(std::ostream& os,
                         const std::vector<std::pair<double, double>>& points,
                         const std::string& which) {
    os << "k,c,which\n";
    for (const auto& [k, c] : points) {
        os << format_double(k) << ',' << format_double(c) << ',' << which << '\n';
    }
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_cell(const std::string& cell, std::size_t row) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || p != cell.data() + cell.size()) {
        throw CsvError("row " + std::to_string(row) + ": bad numeric cell '" + cell + "'");
    }
    return v;
}

}  // namespace

growth::Trajectory read_trajectory_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw CsvError("empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> header = split_csv_row(line);
    int t_col = -1, k_col = -1, c_col = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "t") t_col = static_cast<int>(i);
        if (header[i] == "k") k_col = static_cast<int>(i);
        if (header[i] == "c") c_col = static_cast<int>(i);
    }
    if (t_col < 0 || k_col < 0 || c_col < 0) {
        throw CsvError("header must contain t, k and c columns");
    }

    std::vector<double> t, k, c;
    std::size_t row = 1;
    while (std::getline(is, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells = split_csv_row(line);
        if (cells.size() != header.size()) {
            throw CsvError("row " + std::to_string(row) + ": expected " +
                           std::to_string(header.size()) + " cells, got " +
                           std::to_string(cells.size()));
        }
        t.push_back(parse_cell(cells[static_cast<std::size_t>(t_col)], row));
        k.push_back(parse_cell(cells[static_cast<std::size_t>(k_col)], row));
        c.push_back(parse_cell(cells[static_cast<std::size_t>(c_col)], row));
    }
    if (t.size() < 2) throw CsvError("need at least two data rows");

    double h = t[1] - t[0];
    if (!(h > 0.0)) throw CsvError("time column must be strictly increasing");
    for (std::size_t i = 1; i < t.size(); ++i) {
        double step = t[i] - t[i - 1];
        if (std::abs(step - h) > 1e-9 * std::max(1.0, std::abs(h))) {
            throw CsvError("time grid is not uniform at row " + std::to_string(i + 2));
        }
    }

    growth::Trajectory traj;
    traj.t0 = t[0];
    traj.h = h;
    traj.k = std::move(k);
    traj.c = std::move(c);
    return traj;
}

}  // namespace dimcheck
