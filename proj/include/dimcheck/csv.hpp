#pragma once

#include "dimcheck/growth.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace dimcheck {

struct CsvError : std::runtime_error {
    explicit CsvError(const std::string& what) : std::runtime_error(what) {}
};

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

/// Header "t,k,c,y,r,w,mu", one row per grid point, full double precision.
void write_trajectory_csv(std::ostream& os, const growth::Trajectory& traj,
                          const growth::Params& p);

/// Header "k,c,kdot,cdot".
void write_phase_field_csv(std::ostream& os, const growth::PhaseGrid& grid);

/// Header "k,c,which" with `which` naming the nullcline.
void write_nullcline_csv(std::ostream& os,
                         const std::vector<std::pair<double, double>>& points,
                         const std::string& which);

/// Read a trajectory written by write_trajectory_csv (any CSV with t, k and c
/// columns works). Throws CsvError on malformed input, including non-uniform
/// time grids.
growth::Trajectory read_trajectory_csv(std::istream& is);

}  // namespace dimcheck
