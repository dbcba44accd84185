#include "solidcyl/oracle/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "solidcyl/errors.hpp"

namespace solidcyl::oracle
{
namespace
{
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2;

// Kronrod abscissae (descending, last is the midpoint); odd indices are the
// 7-point Gauss abscissae.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment
{
    double a;
    double b;
    double value;
    double error;

    bool operator<(Segment const& other) const { return error < other.error; }
};

Segment gauss_kronrod(std::function<double(double)> const& f,
                      double a,
                      double b)
{
    double const center = (a + b) / 2;
    double const half = (b - a) / 2;
    double const fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (int i = 0; i < 7; ++i)
    {
        double const dx = half * kNodes[i];
        double const pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1)
        {
            gauss += kGaussWeights[i / 2] * pair;
        }
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

QuadResult integrate_segments(std::function<double(double)> const& f,
                              std::vector<double> points,
                              double tol,
                              int max_subdivisions)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::priority_queue<Segment> queue;
    double total_error = 0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
    {
        auto seg = gauss_kronrod(f, points[i], points[i + 1]);
        total_error += seg.error;
        queue.push(seg);
    }

    int subdivisions = 0;
    while (total_error > tol)
    {
        if (subdivisions >= max_subdivisions)
        {
            throw OracleFailure("adaptive quadrature did not reach tolerance "
                                + std::to_string(tol) + " (estimate "
                                + std::to_string(total_error) + ")");
        }
        Segment worst = queue.top();
        queue.pop();
        double const mid = (worst.a + worst.b) / 2;
        auto left = gauss_kronrod(f, worst.a, mid);
        auto right = gauss_kronrod(f, mid, worst.b);
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++subdivisions;
    }

    // Resum from the final partition so that no drift accumulates
    QuadResult result{0, 0, subdivisions};
    while (!queue.empty())
    {
        result.value += queue.top().value;
        result.error += queue.top().error;
        queue.pop();
    }
    if (!std::isfinite(result.value))
    {
        throw OracleFailure("quadrature produced a nonfinite value");
    }
    return result;
}

void require_outside(CanonicalConfig const& cfg, char const* who)
{
    validate(cfg);
    if (!(cfg.offset > cfg.radius))
    {
        throw DomainError(std::string(who) + " requires d > r");
    }
    if (!(cfg.length > 0))
    {
        throw DomainError(std::string(who) + " requires L > 0");
    }
}
}  // namespace

//---------------------------------------------------------------------------//
QuadResult integrate(std::function<double(double)> const& f,
                     double a,
                     double b,
                     double tol,
                     int max_subdivisions)
{
    return integrate_segments(f, {a, b}, tol, max_subdivisions);
}

//---------------------------------------------------------------------------//
IntegrandState integrand_state(CanonicalConfig const& cfg, double phi)
{
    double const r = cfg.radius;
    double const d = cfg.offset;
    double const phi_o = std::asin(r / d);
    // r^2 - d^2 sin^2(phi) = d^2 sin(phi_o - phi) sin(phi_o + phi)
    double const root = d
                        * std::sqrt(std::max(
                            0.0, std::sin(phi_o - phi) * std::sin(phi_o + phi)));
    double const rho = (d - r) * (d + r) / (d * std::cos(phi) + root);
    double const half_angle = std::atan(std::sin(phi) * rho
                                        / (r + d - std::cos(phi) * rho));
    return {phi, rho, kHalfPi - half_angle};
}

double rho_minus_of_gamma(CanonicalConfig const& cfg, double gamma)
{
    double const r = cfg.radius;
    double const d = cfg.offset;
    double const c = std::cos(gamma);
    return std::sqrt((d - r) * (d - r) + 4 * d * r * c * c);
}

double quad_cyl0_phi(CanonicalConfig const& cfg, double tol)
{
    require_outside(cfg, "quad_cyl0_phi");
    double const length = cfg.length;
    double const r = cfg.radius;
    double const d = cfg.offset;
    double const s = std::sqrt((d - r) * (d + r));
    double const phi_o = std::atan2(r, s);
    double const tangent2 = (d - r) * (d + r);

    // phi = phi_o - w^2, dphi = 2w dw
    auto integrand = [=](double w) {
        double const w2 = w * w;
        double const phi = phi_o - w2;
        double const root
            = d * std::sqrt(std::sin(w2) * std::sin(2 * phi_o - w2));
        double const rho = tangent2 / (d * std::cos(phi) + root);
        return 2 * w * length / std::hypot(length, rho);
    };
    auto const result = integrate(integrand, 0, std::sqrt(phi_o),
                                  tol * 2 * kPi);
    return result.value / (2 * kPi);
}

double quad_cyl0_gamma(CanonicalConfig const& cfg, double tol)
{
    require_outside(cfg, "quad_cyl0_gamma");
    double const length = cfg.length;
    double const r = cfg.radius;
    double const d = cfg.offset;
    double const s = std::sqrt((d - r) * (d + r));
    double const co_gamma_o = std::atan2(s, r) / 2;
    double const tangent2 = (d - r) * (d + r);

    // u = pi/2 - gamma over [0, pi/2 - gamma_o]
    auto integrand = [=](double u) {
        double const su = std::sin(u);
        double const rho2 = (d - r) * (d - r) + 4 * d * r * su * su;
        return length / std::sqrt(length * length + rho2)
               * (tangent2 / rho2 - 1);
    };
    auto const result = integrate(integrand, 0, co_gamma_o, tol * 2 * kPi);
    return result.value / (2 * kPi);
}

double quad_disc(CanonicalConfig const& cfg, double tol)
{
    validate(cfg);
    if (!(cfg.length > 0))
    {
        throw DomainError("quad_disc requires L > 0");
    }
    double const length = cfg.length;
    double const r = cfg.radius;
    double const d = cfg.offset;

    // Omega = (1 / 2 pi) integral_0^pi dphi integral_0^r L s ds / q^{3/2},
    // q = L^2 + d^2 sin^2(phi) + (s - d cos(phi))^2
    double const outer_tol = tol * 2 * kPi;
    double const inner_tol = outer_tol / (10 * kPi);

    auto inner = [=](double phi) {
        double const h = d * std::sin(phi);
        double const s0 = d * std::cos(phi);
        double const floor2 = length * length + h * h;
        auto integrand = [=](double s) {
            double const ds = s - s0;
            double const q = floor2 + ds * ds;
            return length * s / (q * std::sqrt(q));
        };
        // Grade toward the point of closest approach
        std::vector<double> points{0, r};
        if (s0 > 0 && s0 < r)
        {
            points.push_back(s0);
        }
        double const width = std::sqrt(floor2);
        for (double step = width; step < r; step *= 4)
        {
            for (double p : {s0 - step, s0 + step})
            {
                if (p > 0 && p < r)
                {
                    points.push_back(p);
                }
            }
        }
        return integrate_segments(integrand, points, inner_tol, 10000).value;
    };

    std::vector<double> points{0, kPi};
    if (d > 0)
    {
        for (double step = length / d; step < kPi; step *= 4)
        {
            points.push_back(step);
        }
    }
    auto const result = integrate_segments(inner, points, outer_tol, 10000);
    return result.value / (2 * kPi);
}

//---------------------------------------------------------------------------//
}  // namespace solidcyl::oracle
