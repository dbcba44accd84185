//---------------------------------------------------------------------------//
//! \file acceptance.cpp
//! Acceptance suite: one PASS/FAIL line per criterion.
//---------------------------------------------------------------------------//
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "solidcyl/elliptic.hpp"
#include "solidcyl/oracle/monte_carlo.hpp"
#include "solidcyl/oracle/quadrature.hpp"
#include "solidcyl/solid_angle.hpp"

using namespace solidcyl;
using std::numbers::pi;

namespace
{
struct Check
{
    std::string label;
    double deviation;
    double tolerance;

    bool passed() const { return deviation <= tolerance; }
};

struct Criterion
{
    int id;
    std::string title;
    double time_limit;  // seconds
    std::function<std::vector<Check>()> body;
};

bool report(Criterion const& c)
{
    auto const start = std::chrono::steady_clock::now();
    std::vector<Check> checks;
    std::string failure;
    try
    {
        checks = c.body();
    }
    catch (std::exception const& e)
    {
        failure = e.what();
    }
    double const elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();

    bool ok = failure.empty() && elapsed <= c.time_limit;
    for (auto const& check : checks)
    {
        ok = ok && check.passed();
    }
    std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)\n",
                ok ? "PASS" : "FAIL", c.id, c.title.c_str(), elapsed,
                c.time_limit);
    for (auto const& check : checks)
    {
        std::printf("    %s %s: %.3e (tolerance %.1e)\n",
                    check.passed() ? "ok  " : "FAIL", check.label.c_str(),
                    check.deviation, check.tolerance);
    }
    if (!failure.empty())
    {
        std::printf("    exception: %s\n", failure.c_str());
    }
    std::fflush(stdout);
    return ok;
}

double rel(double a, double b)
{
    double const scale = std::max(std::abs(a), std::abs(b));
    return scale == 0 ? 0 : std::abs(a - b) / scale;
}

//---------------------------------------------------------------------------//
std::vector<Check> disc_forms()
{
    test::Sampler s(1001);
    double worst = 0;
    for (int i = 0; i < 1000; ++i)
    {
        double d = 1;
        while (d >= 0.999 && d <= 1.001)
        {
            d = s.log_uniform(0.01, 100);
        }
        CanonicalConfig const cfg{s.log_uniform(0.01, 100), 1, d};
        double const a = omega_circ(cfg, DiscForm::first_second_kind).value;
        double const b = omega_circ_third_kind(cfg).value;
        double const c = omega_circ_macklin(cfg).value;
        worst = std::max({worst, rel(a, b), rel(a, c), rel(b, c)});
    }
    return {{"max pairwise relative difference, 1000 configs", worst, 1e-10}};
}

std::vector<Check> lateral_quadrature()
{
    double grid = 0;
    for (int i = 0; i < 25; ++i)
    {
        double const length = std::pow(10.0, -3 + 5.0 * i / 24);
        for (int j = 0; j < 20; ++j)
        {
            double const d = 1 + std::pow(10.0, -6 + 8.0 * j / 19);
            CanonicalConfig const cfg{length, 1, d};
            double const closed = omega_cyl0(cfg, Cyl0Path::elliptic).value;
            grid = std::max(grid,
                            std::abs(closed - oracle::quad_cyl0_phi(cfg)));
        }
    }

    test::Sampler s(2002);
    double substitution = 0;
    for (int i = 0; i < 100; ++i)
    {
        CanonicalConfig const cfg{s.log_uniform(1e-3, 100), 1,
                                  1 + s.log_uniform(1e-6, 99)};
        substitution = std::max(substitution,
                                std::abs(oracle::quad_cyl0_phi(cfg)
                                         - oracle::quad_cyl0_gamma(cfg)));
    }
    return {{"elliptic vs phi quadrature, 500-point grid", grid, 1e-9},
            {"phi vs gamma quadrature, 100 configs", substitution, 1e-10}};
}

std::vector<Check> limit_values()
{
    std::vector<Check> checks;
    double const near_rim
        = omega_cyl0({1, 1, 1 + 1e-8}, Cyl0Path::automatic).value;
    checks.push_back({"lateral d = r(1+1e-8), L = r vs 1/4",
                      std::abs(near_rim - 0.25), 1e-6});

    struct Flat
    {
        double d;
        double expected;
    };
    for (auto const& f : {Flat{2, 0}, Flat{1, 0.25}, Flat{0.5, 0.5}})
    {
        double const v = omega_circ({1e-10, 1, f.d}).value;
        checks.push_back({"disc L = 1e-10 r, d/r = " + std::to_string(f.d),
                          std::abs(v - f.expected), 1e-6});
    }

    double const eq = omega_circ({2, 1, 1}).value;
    double const m1 = 0.5;
    double const formula
        = 0.25 - std::sqrt(1 - m1) * test::agm_K(m1) / (2 * pi);
    checks.push_back({"disc L = 2, d = r vs equal-distance formula",
                      std::abs(eq - formula), 1e-12});
    checks.push_back({"disc L = 2, d = r vs disc quadrature",
                      std::abs(eq - oracle::quad_disc({2, 1, 1})), 1e-9});
    return checks;
}

std::vector<Check> series_validity()
{
    double worst = 0;
    int points = 0;
    for (double length : {1.0, 3.0, 10.0, 30.0, 100.0})
    {
        for (int j = 0; j < 10; ++j)
        {
            // sqrt(d^2 - r^2) = f L / 10 with f in [1e-3, 0.9]
            double const f = std::pow(10.0, -3 + std::log10(900.0) * j / 9);
            double const s = f * length / 10;
            CanonicalConfig const cfg{length, 1, std::sqrt(1 + s * s)};
            double const series = omega_cyl0_series(cfg, 3).value;
            double const closed = omega_cyl0(cfg, Cyl0Path::elliptic).value;
            worst = std::max(worst, rel(series, closed));
            ++points;
        }
    }
    return {{"max relative difference, " + std::to_string(points)
                 + " points (4 significant digits)",
             worst, 5e-5}};
}

std::vector<Check> monte_carlo()
{
    test::Sampler s(5005);
    double worst_sigma = 0;
    double enclosed_gap = 0;
    std::uint64_t const samples = 10'000'000;
    for (int i = 0; i < 20; ++i)
    {
        double const length = s.log_uniform(0.2, 5);
        double const radius = 1;
        CylinderSpec const cyl(length, radius);
        double d = 0;
        double z = 0;
        switch (i % 4)
        {
            case 0:  // outside the radius, beyond an end
                d = s.uniform(1.05, 4);
                z = (i % 8 == 0) ? -s.uniform(0.1, 3)
                                 : length + s.uniform(0.1, 3);
                break;
            case 1:  // beside the lateral surface
                d = s.uniform(1.05, 4);
                z = s.uniform(0.05, 0.95) * length;
                break;
            case 2:  // within the radius, beyond an end
                d = s.uniform(0, 0.95);
                z = -s.uniform(0.1, 3);
                break;
            default:  // enclosed
                d = s.uniform(0, 0.95);
                z = s.uniform(0.05, 0.95) * length;
                break;
        }
        SourcePoint const src(d, z);
        auto const est = oracle::mc_total(
            cyl, src, samples, oracle::SplitMix64::stream_seed(20020101, i));
        double const exact = omega_total(cyl, src).value;
        if (i % 4 == 3)
        {
            enclosed_gap = std::max(enclosed_gap, std::abs(est.hit_fraction - 1));
        }
        else
        {
            worst_sigma = std::max(worst_sigma,
                                   std::abs(est.hit_fraction - exact)
                                       / est.std_error);
        }
    }
    return {{"max |closed - MC| / std_error, 15 configs at 1e7 samples",
             worst_sigma, 3},
            {"enclosed sources, |hit fraction - 1|", enclosed_gap, 0}};
}

std::vector<Check> elliptic_kernel()
{
    using namespace solidcyl::elliptic;
    double legendre = 0;
    double agm = 0;
    for (int i = 0; i < 100; ++i)
    {
        double const m = (i + 0.5) / 100;
        Parameter const p(m);
        auto const q = p.complementary();
        double const k = complete_K(p);
        double const kc = complete_K(q);
        double const lhs = complete_E(p) * kc + complete_E(q) * k - k * kc;
        legendre = std::max(legendre, rel(lhs, pi / 2));
        agm = std::max(agm, rel(k, test::agm_K(m)));
    }

    double identities = 0;
    test::Sampler s(6006);
    for (int i = 0; i < 100; ++i)
    {
        double const phi = s.uniform(0, pi / 2);
        double const m = s.uniform(0, 0.99);
        identities = std::max(
            identities, rel(incomplete_F(Amplitude(phi), Parameter(0)), phi));
        identities = std::max(
            identities,
            rel(incomplete_Pi(Characteristic(0), Amplitude(phi), Parameter(m)),
                incomplete_F(Amplitude(phi), Parameter(m))));
    }
    identities = std::max(identities, rel(complete_E(Parameter(1)), 1));

    return {{"Legendre relation, 100 values of m", legendre, 1e-12},
            {"K vs arithmetic-geometric mean", agm, 1e-13},
            {"F(phi|0) = phi, Pi(0;phi|m) = F(phi|m), E(1) = 1", identities,
             1e-14}};
}

std::vector<Check> invariants()
{
    test::Sampler s(7007);
    double scale = 0;
    double swap = 0;
    double bounds = 0;
    for (int i = 0; i < 1000; ++i)
    {
        double const length = s.log_uniform(0.01, 100);
        double const d = s.uniform(0, 4);
        double const z = s.uniform(-2 * length, 3 * length);
        CylinderSpec const cyl(length, 1);
        double const omega = omega_total(cyl, SourcePoint(d, z)).value;
        if (!(omega >= 0 && omega <= 1))
        {
            bounds = std::max(bounds, std::max(-omega, omega - 1));
        }
        swap = std::max(swap, std::abs(omega - omega_total(cyl, SourcePoint(d, length - z)).value));
        for (double k : {1e-3, 7.0, 1e3})
        {
            double const scaled = omega_total(CylinderSpec(k * length, k),
                                              SourcePoint(k * d, k * z))
                                      .value;
            scale = std::max(scale, std::abs(omega - scaled));
        }
    }

    // Near the rim the lateral surface tends to 0 when L -> 0 first and to
    // 1/4 when d -> r first
    double const thin = omega_cyl0({1e-12, 1, 1 + 1e-6}).value;
    double const tall = omega_cyl0({1, 1, 1 + 1e-12}).value;
    return {{"scale invariance, k in {1e-3, 7, 1e3}", scale, 1e-12},
            {"end-swap symmetry", swap, 1e-12},
            {"values outside [0, 1]", bounds, 0},
            {"witness L = 1e-12, d = r + 1e-6 vs 0", thin, 1e-6},
            {"witness L = 1, d = r + 1e-12 vs 1/4", std::abs(tall - 0.25),
             1e-6}};
}
}  // namespace

int main()
{
    std::vector<Criterion> const criteria = {
        {1, "three disc formulas agree", 5, disc_forms},
        {2, "lateral surface vs quadrature oracles", 30, lateral_quadrature},
        {3, "limit values", 5, limit_values},
        {4, "large-length series validity", 1, series_validity},
        {5, "Monte Carlo end-to-end", 120, monte_carlo},
        {6, "elliptic kernel", 1, elliptic_kernel},
        {7, "global invariants", 5, invariants},
    };
    int failed = 0;
    for (auto const& c : criteria)
    {
        failed += report(c) ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n",
                static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
