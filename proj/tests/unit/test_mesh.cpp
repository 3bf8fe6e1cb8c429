#include <doctest.h>

#include <stdexcept>

#include "dimer_dg/mesh.hpp"

using namespace dimer_dg;

TEST_CASE("uniform mesh geometry")
{
    const Mesh1D m = build_uniform_mesh(-2.0, 2.0, 40);
    CHECK(m.n_elements() == 40);
    CHECK(m.width(0) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(m.regularity_bound() == 1.0);
    CHECK(m.x_a() == -2.0);
    CHECK(m.x_b() == 2.0);
    CHECK(m.center(0) == doctest::Approx(-1.95));
}

TEST_CASE("single element mesh")
{
    const Mesh1D m = build_uniform_mesh(0.0, 1.0, 1);
    CHECK(m.n_elements() == 1);
    CHECK(m.left(0) == 0.0);
    CHECK(m.right(0) == 1.0);
    CHECK(m.vertices().size() == 2);
}

TEST_CASE("bad mesh arguments are rejected")
{
    CHECK_THROWS_AS(build_uniform_mesh(1.0, 1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_uniform_mesh(2.0, 1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_uniform_mesh(0.0, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Mesh1D({0.0, 0.5, 0.5, 1.0}), std::invalid_argument);
}

TEST_CASE("reference map round trip")
{
    const Mesh1D m({-1.0, -0.2, 0.5, 3.0});
    for (std::size_t j = 0; j < m.n_elements(); ++j) {
        for (double r : {-1.0, -0.3, 0.0, 0.7, 1.0}) {
            const double x = m.from_reference(j, r);
            CHECK(m.to_reference(j, x) == doctest::Approx(r).epsilon(1e-14));
        }
    }
    CHECK(m.to_reference(1, -0.2) == -1.0);
    CHECK(m.to_reference(1, 0.5) == 1.0);
    CHECK_THROWS_AS(m.to_reference(1, 0.6), std::domain_error);
    CHECK(m.h_max() == doctest::Approx(2.5));
    CHECK(m.h_min() == doctest::Approx(0.7));
}

TEST_CASE("locate resolves interfaces to the right element")
{
    const Mesh1D m = build_uniform_mesh(0.0, 4.0, 4);
    CHECK(m.locate(0.0) == 0);
    CHECK(m.locate(0.5) == 0);
    CHECK(m.locate(1.0) == 1);
    CHECK(m.locate(3.999) == 3);
    CHECK(m.locate(4.0) == 3);
    CHECK_THROWS(m.locate(4.5));
}
