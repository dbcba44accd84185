#include <cmath>
#include <numbers>

#include <doctest.h>

#include "oracles.hpp"
#include "solidcyl/errors.hpp"
#include "solidcyl/oracle/monte_carlo.hpp"
#include "solidcyl/oracle/quadrature.hpp"
#include "solidcyl/solid_angle.hpp"

using namespace solidcyl;
using namespace solidcyl::oracle;
using std::numbers::pi;

TEST_CASE("Gauss-Kronrod exactness")
{
    // K15 integrates polynomials through degree 22 exactly
    auto const r = integrate([](double x) { return std::pow(x, 20) - 3 * x; },
                             0, 1, 1e-15);
    CHECK(r.value == doctest::Approx(1.0 / 21 - 1.5).epsilon(1e-15));

    auto const g = integrate([](double x) { return std::exp(-x * x); }, -5, 5,
                             1e-12);
    CHECK(std::abs(g.value - std::sqrt(pi)) <= 1e-11);

    // Integrable endpoint singularity
    auto const s = integrate([](double x) { return 1 / std::sqrt(x); }, 0, 1,
                             1e-10);
    CHECK(s.value == doctest::Approx(2).epsilon(1e-9));
}

TEST_CASE("subdivision budget")
{
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(1 / x); }, 1e-9,
                              1, 1e-15, 20),
                    OracleFailure);
}

TEST_CASE("integration path")
{
    CanonicalConfig const cfg{1, 1, 2};
    double const phi_o = std::asin(0.5);
    double const s = std::sqrt(3.0);
    for (int i = 0; i <= 20; ++i)
    {
        double const phi = phi_o * i / 20;
        auto const st = integrand_state(cfg, phi);
        CAPTURE(phi);
        CHECK(st.rho_minus >= 1 - 1e-15);
        CHECK(st.rho_minus <= s + 1e-15);
        CHECK(st.gamma_minus >= (pi / 2 + phi_o) / 2 - 1e-15);
        CHECK(st.gamma_minus <= pi / 2 + 1e-15);
        CHECK(rho_minus_of_gamma(cfg, st.gamma_minus)
              == doctest::Approx(st.rho_minus).epsilon(1e-12));
    }
    CHECK(integrand_state(cfg, 0).rho_minus == doctest::Approx(1).epsilon(1e-15));
    CHECK(integrand_state(cfg, phi_o).rho_minus
          == doctest::Approx(s).epsilon(1e-15));
}

TEST_CASE("lateral-surface quadrature")
{
    CHECK(quad_cyl0_phi({2, 1, 2}) == doctest::Approx(0.072462447677148226).epsilon(1e-12));
    CHECK(quad_cyl0_gamma({2, 1, 2}) == doctest::Approx(0.072462447677148226).epsilon(1e-12));
    CHECK(quad_cyl0_phi({5, 1, 1 + 1e-9}) == doctest::Approx(0.24999288237456870).epsilon(1e-10));

    // Long cylinders approach asin(r/d) / (2 pi)
    CHECK(quad_cyl0_phi({1e6, 1, 2}) == doctest::Approx(std::asin(0.5) / (2 * pi)).epsilon(1e-6));

    test::Sampler sampler(7);
    for (int i = 0; i < 50; ++i)
    {
        CanonicalConfig const cfg{sampler.log_uniform(1e-3, 100), 1,
                                  1 + sampler.log_uniform(1e-6, 99)};
        CAPTURE(cfg.length);
        CAPTURE(cfg.offset);
        CHECK(std::abs(quad_cyl0_phi(cfg) - quad_cyl0_gamma(cfg)) <= 2e-13);
    }

    CHECK_THROWS_AS(quad_cyl0_phi({1, 1, 1}), DomainError);
    CHECK_THROWS_AS(quad_cyl0_gamma({0, 1, 2}), DomainError);
}

TEST_CASE("disc quadrature")
{
    CHECK(quad_disc({1, 1, 0}) == doctest::Approx(0.5 * (1 - std::sqrt(0.5))).epsilon(1e-11));
    CHECK(std::abs(quad_disc({2, 1, 1}) - 0.041343289581481703) <= 1e-10);
    CHECK(std::abs(quad_disc({1e-3, 1, 0.5}) - 0.5) <= 1e-2);
    CHECK(quad_disc({1e-3, 1, 0.5}) < 0.5);
    CHECK_THROWS_AS(quad_disc({0, 1, 0.5}), DomainError);
}

TEST_CASE("isotropic directions")
{
    SplitMix64 rng(1);
    double mean_z = 0;
    int const n = 100000;
    for (int i = 0; i < n; ++i)
    {
        auto const dir = isotropic_direction(rng(), rng());
        double const norm = std::hypot(dir[0], dir[1], dir[2]);
        REQUIRE(std::abs(norm - 1) <= 1e-15);
        mean_z += dir[2];
    }
    CHECK(std::abs(mean_z / n) < 5 / std::sqrt(3.0 * n));
}

TEST_CASE("stream seeds")
{
    CHECK(SplitMix64::stream_seed(1, 0) != SplitMix64::stream_seed(1, 1));
    CHECK(SplitMix64::stream_seed(1, 0) != SplitMix64::stream_seed(2, 0));
    SplitMix64 a(42);
    SplitMix64 b(42);
    for (int i = 0; i < 10; ++i)
    {
        CHECK(a() == b());
    }
}

TEST_CASE("ray casting")
{
    CylinderSpec const cyl(2, 1);
    CHECK(ray_hits(cyl, SourcePoint(3, 1), {-1, 0, 0}));
    CHECK(!ray_hits(cyl, SourcePoint(3, 1), {1, 0, 0}));
    CHECK(!ray_hits(cyl, SourcePoint(3, 1), {0, 1, 0}));
    CHECK(ray_hits(cyl, SourcePoint(0, -1), {0, 0, 1}));
    CHECK(!ray_hits(cyl, SourcePoint(0, -1), {0, 0, -1}));
    CHECK(ray_hits(cyl, SourcePoint(0.5, 3), {0, 0, -1}));
    // Misses the lateral surface above the cylinder
    CHECK(!ray_hits(cyl, SourcePoint(3, 3), {-1, 0, 0}));
}

TEST_CASE("enclosed source")
{
    auto const est = mc_total(CylinderSpec(3, 2), SourcePoint(1, 1), 200000, 9);
    CHECK(est.hit_fraction == 1);
    CHECK(est.std_error == 0);
    CHECK(est.samples == 200000);
}

TEST_CASE("determinism")
{
    CylinderSpec const cyl(3, 1);
    SourcePoint const src(2, -1);
    auto const a = mc_total(cyl, src, 300000, 77, 1);
    auto const b = mc_total(cyl, src, 300000, 77, 1);
    auto const c = mc_total(cyl, src, 300000, 77, 4);
    CHECK(a.hit_fraction == b.hit_fraction);
    CHECK(a.std_error == b.std_error);
    CHECK(a.hit_fraction == c.hit_fraction);
    auto const other = mc_total(cyl, src, 300000, 78, 1);
    CHECK(other.hit_fraction != a.hit_fraction);
    CHECK(a.seed == 77);
}

TEST_CASE("agreement with the closed form")
{
    CylinderSpec const cyl(3, 1);
    SourcePoint const src(2, 1.5);
    auto const est = mc_total(cyl, src, 10'000'000, 20020101);
    double const exact = omega_total(cyl, src).value;
    CHECK(std::abs(est.hit_fraction - exact) <= 3 * est.std_error);

    // Far on-axis source sees the near cap
    CylinderSpec const small(1, 1);
    SourcePoint const far(0, -20);
    auto const cap = mc_total(small, far, 4'000'000, 5);
    double const expected = 0.5 * (1 - 20 / std::hypot(20.0, 1.0));
    CHECK(std::abs(cap.hit_fraction - expected) <= 3 * cap.std_error);
}

TEST_CASE("standard error scales as one over root N")
{
    CylinderSpec const cyl(2, 1);
    SourcePoint const src(3, -1);
    double reference = 0;
    for (std::uint64_t n : {100'000ull, 1'000'000ull, 10'000'000ull})
    {
        auto const est = mc_total(cyl, src, n, 3);
        double const scaled = est.std_error * std::sqrt(static_cast<double>(n));
        if (reference == 0)
        {
            reference = scaled;
        }
        CHECK(scaled == doctest::Approx(reference).epsilon(0.2));
    }
}

TEST_CASE("sample count validation")
{
    CHECK_THROWS_AS(mc_total(CylinderSpec(1, 1), SourcePoint(2, 0), 0, 1),
                    ArgumentError);
}
