#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "dimer_dg/basis.hpp"
#include "dimer_dg/projection.hpp"
#include "dimer_dg/quadrature.hpp"

using namespace dimer_dg;

namespace {

std::shared_ptr<const Mesh1D> mesh_of(double a, double b, std::size_t n)
{
    return std::make_shared<const Mesh1D>(build_uniform_mesh(a, b, n));
}

double l2_distance(const ModalField& f, const ScalarFunction& g)
{
    const auto rule = gauss_legendre(kVolumeQuadratureNodes);
    double s = 0.0;
    for (std::size_t j = 0; j < f.mesh().n_elements(); ++j) {
        for (std::size_t k = 0; k < rule.size(); ++k) {
            const double d = f.evaluate_reference(j, rule.nodes[k]) - g(f.mesh().from_reference(j, rule.nodes[k]));
            s += 0.5 * f.mesh().width(j) * rule.weights[k] * d * d;
        }
    }
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("constants are reproduced by every projection")
{
    const auto mesh = mesh_of(-1.0, 2.0, 7);
    for (std::size_t q = 0; q <= 4; ++q) {
        const auto c = [](double) { return 2.5; };
        for (const auto& f : {gauss_radau_project(c, mesh, q, RadauSide::plus),
                              gauss_radau_project(c, mesh, q, RadauSide::minus), l2_project(c, mesh, q)}) {
            CHECK(l2_distance(f, c) < 1e-13);
        }
    }
}

TEST_CASE("polynomials of degree q are reproduced at the nodes")
{
    const auto mesh = mesh_of(-2.0, 2.0, 5);
    const auto rule = gauss_legendre(kVolumeQuadratureNodes);
    const auto p = [](double x) { return 1.0 - 2.0 * x + 0.5 * x * x * x; };
    for (const auto& f : {gauss_radau_project(p, mesh, 3, RadauSide::plus),
                          gauss_radau_project(p, mesh, 3, RadauSide::minus), l2_project(p, mesh, 3)}) {
        for (std::size_t j = 0; j < 5; ++j) {
            for (double r : rule.nodes) {
                CHECK(std::abs(f.evaluate_reference(j, r) - p(mesh->from_reference(j, r))) < 1e-12);
            }
        }
    }
}

TEST_CASE("L2 projection of a single basis function")
{
    const auto mesh = mesh_of(0.0, 1.0, 1);
    const auto f = l2_project([](double x) { return eval_basis(2, 2.0 * x - 1.0)[2]; }, mesh, 4);
    const auto c = f.element(0);
    CHECK(std::abs(c[0]) < 1e-14);
    CHECK(std::abs(c[1]) < 1e-14);
    CHECK(c[2] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(c[3]) < 1e-14);
}

TEST_CASE("Radau endpoint conditions and moments")
{
    const auto mesh = mesh_of(-2.0, 2.0, 9);
    const auto u = [](double x) { return std::exp(std::sin(3.0 * x)); };
    const auto rule = gauss_legendre(kVolumeQuadratureNodes);
    for (std::size_t q = 0; q <= 4; ++q) {
        const auto plus = gauss_radau_project(u, mesh, q, RadauSide::plus);
        const auto minus = gauss_radau_project(u, mesh, q, RadauSide::minus);
        for (std::size_t j = 0; j < mesh->n_elements(); ++j) {
            CHECK(std::abs(plus.evaluate_reference(j, -1.0) - u(mesh->left(j))) < 1e-12);
            CHECK(std::abs(minus.evaluate_reference(j, 1.0) - u(mesh->right(j))) < 1e-12);
            for (std::size_t m = 0; m < q; ++m) {
                double mp = 0.0;
                double mm = 0.0;
                for (std::size_t k = 0; k < rule.size(); ++k) {
                    const double r = rule.nodes[k];
                    const double phi = eval_basis(m, r)[m];
                    const double ux = u(mesh->from_reference(j, r));
                    mp += rule.weights[k] * (plus.evaluate_reference(j, r) - ux) * phi;
                    mm += rule.weights[k] * (minus.evaluate_reference(j, r) - ux) * phi;
                }
                CHECK(std::abs(mp) < 1e-12);
                CHECK(std::abs(mm) < 1e-12);
            }
        }
    }
}

TEST_CASE("projection error order for sin(pi x)")
{
    const auto u = [](double x) { return std::sin(std::numbers::pi * x); };
    for (std::size_t q = 0; q <= 3; ++q) {
        for (int kind = 0; kind < 3; ++kind) {
            double prev = 0.0;
            for (std::size_t n : {10, 20, 40, 80}) {
                const auto mesh = mesh_of(-1.0, 1.0, n);
                const ModalField f = kind == 0   ? l2_project(u, mesh, q)
                                     : kind == 1 ? gauss_radau_project(u, mesh, q, RadauSide::plus)
                                                 : gauss_radau_project(u, mesh, q, RadauSide::minus);
                const double e = l2_distance(f, u);
                if (prev > 0.0) {
                    CHECK(std::abs(std::log2(prev / e) - (q + 1.0)) <= 0.1);
                }
                prev = e;
            }
        }
    }
}

TEST_CASE("nodal projection matches function projection")
{
    const auto mesh = mesh_of(-3.0, 1.0, 6);
    const auto u = [](double x) { return std::cos(x) * x; };
    const auto pts = volume_quadrature_points(*mesh);
    REQUIRE(pts.size() == 6 * kVolumeQuadratureNodes);
    std::vector<double> vals(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        vals[i] = u(pts[i]);
    }
    const auto a = l2_project_nodal(vals, mesh, 3);
    const auto b = l2_project(u, mesh, 3);
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
        CHECK(a.coefficients()[i] == doctest::Approx(b.coefficients()[i]).epsilon(1e-14));
    }
    std::vector<double> short_vals(5);
    CHECK_THROWS(l2_project_nodal(short_vals, mesh, 3));
}

TEST_CASE("field evaluation on the physical domain")
{
    const auto mesh = mesh_of(0.0, 2.0, 4);
    const auto f = l2_project([](double x) { return 3.0 * x - 1.0; }, mesh, 1);
    CHECK(f.evaluate(0.3) == doctest::Approx(-0.1));
    CHECK(f.evaluate(2.0) == doctest::Approx(5.0));
}
