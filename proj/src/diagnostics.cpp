#include "dimer_dg/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "dimer_dg/csv.hpp"
#include "dimer_dg/quadrature.hpp"

namespace dimer_dg {

double discrete_energy(const DGState& state)
{
    double total = 0.0;
    for (std::size_t j = 0; j < state.n_elements(); ++j) {
        double s = 0.0;
        for (int var = 0; var < 2; ++var) {
            for (double c : state.element(var, j)) {
                s += c * c;
            }
        }
        total += 0.25 * state.mesh().width(j) * s;
    }
    return total;
}

double moving_box_energy(const DGState& state, double a, double b)
{
    if (!(b > a)) {
        throw std::invalid_argument("moving_box_energy: degenerate box, need b > a");
    }
    const Mesh1D& mesh = state.mesh();
    const double lo = std::max(a, mesh.x_a());
    const double hi = std::min(b, mesh.x_b());
    if (!(hi > lo)) {
        return 0.0;
    }
    static const QuadratureRule rule = gauss_legendre(kVolumeQuadratureNodes);
    double total = 0.0;
    for (std::size_t j = mesh.locate(lo); j < mesh.n_elements() && mesh.left(j) < hi; ++j) {
        const double xl = std::max(lo, mesh.left(j));
        const double xr = std::min(hi, mesh.right(j));
        if (!(xr > xl)) {
            continue;
        }
        const double half = 0.5 * (xr - xl);
        const double mid = 0.5 * (xr + xl);
        double s = 0.0;
        for (std::size_t k = 0; k < rule.size(); ++k) {
            const double r = mesh.to_reference(j, std::clamp(mid + half * rule.nodes[k], mesh.left(j), mesh.right(j)));
            const double u = state.evaluate_reference(0, j, r);
            const double v = state.evaluate_reference(1, j, r);
            s += rule.weights[k] * (u * u + v * v);
        }
        total += 0.5 * half * s;
    }
    return total;
}

L2Errors l2_error(const DGState& state, const PairFunction& exact, double t)
{
    static const QuadratureRule rule = gauss_legendre(kVolumeQuadratureNodes);
    const Mesh1D& mesh = state.mesh();
    const ModalBasis basis(state.degree(), rule);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    double e1 = 0.0, e2 = 0.0, eb1 = 0.0, eb2 = 0.0;
    for (std::size_t j = 0; j < mesh.n_elements(); ++j) {
        const auto c1 = state.element(0, j);
        const auto c2 = state.element(1, j);
        const double jac = 0.5 * mesh.width(j);
        for (std::size_t k = 0; k < rule.size(); ++k) {
            double u = 0.0;
            double v = 0.0;
            for (std::size_t n = 0; n < basis.n_modes(); ++n) {
                u += c1[n] * basis.value(k, n);
                v += c2[n] * basis.value(k, n);
            }
            const auto ex = exact(mesh.from_reference(j, rule.nodes[k]), t);
            const double d1 = u - ex[0];
            const double d2 = v - ex[1];
            const double db1 = inv_sqrt2 * (d1 + d2);
            const double db2 = inv_sqrt2 * (d1 - d2);
            const double w = jac * rule.weights[k];
            e1 += w * d1 * d1;
            e2 += w * d2 * d2;
            eb1 += w * db1 * db1;
            eb2 += w * db2 * db2;
        }
    }
    return {std::sqrt(e1), std::sqrt(e2), std::sqrt(eb1), std::sqrt(eb2)};
}

std::vector<std::optional<double>> convergence_order(std::span<const double> errors,
                                                     std::span<const std::size_t> meshes)
{
    if (errors.size() != meshes.size()) {
        throw std::invalid_argument("convergence_order: errors and meshes differ in length");
    }
    std::vector<std::optional<double>> orders(errors.size());
    for (std::size_t i = 1; i < errors.size(); ++i) {
        if (errors[i - 1] > 0.0 && errors[i] > 0.0 && meshes[i] != meshes[i - 1] && meshes[i] > 0 &&
            meshes[i - 1] > 0) {
            orders[i] = std::log(errors[i - 1] / errors[i]) /
                        std::log(static_cast<double>(meshes[i]) / static_cast<double>(meshes[i - 1]));
        }
    }
    return orders;
}

void ConvergenceTable::compute_orders()
{
    std::size_t begin = 0;
    while (begin < rows.size()) {
        std::size_t end = begin;
        while (end < rows.size() && rows[end].q == rows[begin].q) {
            ++end;
        }
        std::vector<std::size_t> meshes;
        std::array<std::vector<double>, 4> errs;
        for (std::size_t i = begin; i < end; ++i) {
            meshes.push_back(rows[i].n_elements);
            errs[0].push_back(rows[i].errors.w1);
            errs[1].push_back(rows[i].errors.w2);
            errs[2].push_back(rows[i].errors.b1);
            errs[3].push_back(rows[i].errors.b2);
        }
        for (std::size_t v = 0; v < 4; ++v) {
            const auto ord = convergence_order(errs[v], meshes);
            for (std::size_t i = begin; i < end; ++i) {
                rows[i].orders[v] = ord[i - begin];
            }
        }
        begin = end;
    }
}

namespace {

std::string order_cell(const std::optional<double>& o)
{
    if (!o) {
        return "--";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", *o);
    return buf;
}

}  // namespace

void ConvergenceTable::write_csv(const std::string& path) const
{
    CsvWriter csv(path, {"q", "N", "error_w1", "order_w1", "error_w2", "order_w2", "error_b1", "order_b1",
                         "error_b2", "order_b2"});
    for (const auto& r : rows) {
        const auto num = [](const std::optional<double>& o) { return o ? format_scientific(*o) : std::string("--"); };
        csv.row({std::to_string(r.q), std::to_string(r.n_elements), format_scientific(r.errors.w1), num(r.orders[0]),
                 format_scientific(r.errors.w2), num(r.orders[1]), format_scientific(r.errors.b1), num(r.orders[2]),
                 format_scientific(r.errors.b2), num(r.orders[3])});
    }
}

std::string ConvergenceTable::to_text() const
{
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof(line), "%2s %6s  %11s %7s  %11s %7s  %11s %7s  %11s %7s\n", "q", "N", "L2(w1)", "order",
                  "L2(w2)", "order", "L2(b1)", "order", "L2(b2)", "order");
    os << line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof(line), "%2zu %6zu  %11.4e %7s  %11.4e %7s  %11.4e %7s  %11.4e %7s\n", r.q,
                      r.n_elements, r.errors.w1, order_cell(r.orders[0]).c_str(), r.errors.w2,
                      order_cell(r.orders[1]).c_str(), r.errors.b1, order_cell(r.orders[2]).c_str(), r.errors.b2,
                      order_cell(r.orders[3]).c_str());
        os << line;
    }
    return os.str();
}

std::optional<double> modulus_crossing(const DGState& state, double level, std::size_t samples_per_element)
{
    const Mesh1D& mesh = state.mesh();
    const auto modulus = [&](std::size_t j, double r) {
        return std::hypot(state.evaluate_reference(0, j, r), state.evaluate_reference(1, j, r));
    };
    const std::size_t ns = std::max<std::size_t>(samples_per_element, 2);
    for (std::size_t j = 0; j < mesh.n_elements(); ++j) {
        double r_prev = -1.0;
        double m_prev = modulus(j, r_prev);
        if (m_prev >= level && j > 0) {
            // Jump across the interface: report the interface itself.
            const double left_val = modulus(j - 1, 1.0);
            if (left_val < level) {
                return mesh.left(j);
            }
        }
        for (std::size_t s = 1; s <= ns; ++s) {
            const double r = -1.0 + 2.0 * static_cast<double>(s) / static_cast<double>(ns);
            const double m = modulus(j, r);
            if (m_prev < level && m >= level) {
                double lo = r_prev;
                double hi = r;
                for (int it = 0; it < 100; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    (modulus(j, mid) < level ? lo : hi) = mid;
                }
                return mesh.from_reference(j, 0.5 * (lo + hi));
            }
            r_prev = r;
            m_prev = m;
        }
    }
    return std::nullopt;
}

}  // namespace dimer_dg
