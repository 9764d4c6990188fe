#include "dimcheck/csv.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace dimcheck;

TEST_CASE("doubles print in shortest round-trip form") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(3.0) == "3");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
    double v = 5.2750804835059951;
    CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("trajectory CSV round-trips through write and read") {
    growth::Params p;
    growth::Trajectory traj = growth::integrate({2.0, 1.0}, p, 0.5, 5.0);
    std::stringstream ss;
    write_trajectory_csv(ss, traj, p);

    std::string header;
    std::getline(ss, header);
    CHECK(header == "t,k,c,y,r,w,mu");

    ss.clear();
    ss.seekg(0);
    growth::Trajectory back = read_trajectory_csv(ss);
    REQUIRE(back.size() == traj.size());
    CHECK(back.h == traj.h);
    for (std::size_t i = 0; i < traj.size(); ++i) {
        CHECK(back.k[i] == traj.k[i]);  // bit-exact via shortest round-trip
        CHECK(back.c[i] == traj.c[i]);
    }
}

TEST_CASE("malformed trajectory files are rejected") {
    auto reject = [](const std::string& text) {
        std::stringstream ss(text);
        CHECK_THROWS_AS(read_trajectory_csv(ss), CsvError);
    };
    reject("");
    reject("a,b\n1,2\n");                       // missing required columns
    reject("t,k,c\n0,1\n");                     // ragged row
    reject("t,k,c\n0,1,1\n");                   // single data row
    reject("t,k,c\nx,1,1\n0.5,1,1\n");          // bad number
    reject("t,k,c\n0,1,1\n0.1,1,1\n0.3,1,1\n"); // non-uniform grid
}

TEST_CASE("phase CSVs carry the documented headers") {
    growth::Params p;
    growth::PhaseGrid grid = growth::phase_grid(p, 1.0, 2.0, 0.5, 1.0, 2, 2);
    std::stringstream field;
    write_phase_field_csv(field, grid);
    std::string line;
    std::getline(field, line);
    CHECK(line == "k,c,kdot,cdot");
    std::size_t rows = 0;
    while (std::getline(field, line)) ++rows;
    CHECK(rows == 4);

    std::stringstream nc;
    write_nullcline_csv(nc, grid.nullcline_k, "kdot0");
    std::getline(nc, line);
    CHECK(line == "k,c,which");
    std::getline(nc, line);
    CHECK(line.find(",kdot0") != std::string::npos);
}
