#include "swave/grid.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace swave;

TEST_SUITE("grid") {

TEST_CASE("lattice geometry")
{
    const CharGrid g(0.25, 2.0, 1.0);
    CHECK(g.steps() == 8);
    CHECK(g.levels() == 9);
    CHECK(g.T() == 2.0);
    CHECK(g.window(0) == 5);
    CHECK(g.window(8) == 13);
    CHECK(g.half_nodes() == 13);
    CHECK(g.nodes_per_level() == 27);
    CHECK(g.x_extent() >= g.T() + g.R());
    CHECK(g.x(-3) == -0.75);
    CHECK(g.t(3) == 0.75);
}

TEST_CASE("T is rounded to a whole number of steps")
{
    CHECK(CharGrid(0.1, 1.0, 1.0).steps() == 10);
    CHECK(CharGrid(0.25, 1.1, 1.0).steps() == 5);
    CHECK(CharGrid(0.25, 0.1, 1.0).steps() == 1);
}

TEST_CASE("guard nodes sit outside the cone")
{
    const CharGrid g(1.0 / 16, 1.0, 1.0);
    for (long n = 0; n < g.levels(); ++n) {
        const long K = g.window(n);
        CHECK_FALSE(g.in_cone(K, n));
        CHECK_FALSE(g.in_cone(-K, n));
        CHECK(g.in_cone(K - 1, n));
        CHECK(g.in_cone(0, n));
    }
}

TEST_CASE("packed storage offsets")
{
    const CharGrid g(0.5, 3.0, 1.0);
    std::size_t off = 0;
    for (long n = 0; n < g.levels(); ++n) {
        CHECK(g.level_offset(n) == off);
        off += static_cast<std::size_t>(g.row_size(n));
    }
    CHECK(g.total_nodes() == off);
}

TEST_CASE("bad lattices are rejected")
{
    CHECK_THROWS_AS(CharGrid(0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(CharGrid(-0.1, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(CharGrid(0.1, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(CharGrid(0.1, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(CharGrid(NAN, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("grid functions")
{
    const CharGrid g(0.25, 1.0, 1.0);
    GridFn u(g, 2.0);
    CHECK(u(0, 0) == 2.0);
    CHECK(u(100, 2) == 0.0);
    CHECK_THROWS_AS(u.at(100, 2), std::out_of_range);
    u.at(-1, 3) = -5.0;
    CHECK(u(-1, 3) == -5.0);
    CHECK(u.sup_norm() == 5.0);
    u.fill([](double x, double t) { return x + 10 * t; });
    CHECK(u(2, 1) == 0.5 + 2.5);
    CHECK(u.row(4).size() == static_cast<std::size_t>(g.row_size(4)));
}

TEST_CASE("clamped reads replicate the edge")
{
    const std::vector<double> row{1, 2, 3, 4, 5};
    CHECK(clamped(row, 2, -3) == 1);
    CHECK(clamped(row, 2, 0) == 3);
    CHECK(clamped(row, 2, 7) == 5);
}

}
