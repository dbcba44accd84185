#include "solidcyl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "solidcyl/oracle/quadrature.hpp"
#include "solidcyl/solid_angle.hpp"

namespace solidcyl
{
namespace
{
class Sampler
{
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi)
    {
        double const u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    double log_uniform(double lo, double hi)
    {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

  private:
    std::mt19937_64 rng_;
};

std::string format_config(CanonicalConfig const& cfg)
{
    std::ostringstream os;
    os << std::setprecision(17) << "L=" << cfg.length << " r=" << cfg.radius
       << " d=" << cfg.offset;
    return os.str();
}

void record(SuiteReport& suite,
            double deviation,
            std::string const& where)
{
    ++suite.checked;
    if (!(deviation <= suite.max_deviation) || suite.checked == 1)
    {
        suite.max_deviation = deviation;
        suite.worst = where;
    }
    if (!(deviation <= suite.tolerance))
    {
        suite.passed = false;
    }
}

double relative_gap(double a, double b, double tol, double floor)
{
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor / tol});
}

// L/r and d/r log-uniform in [0.01, 100], d/r outside [0.999, 1.001]
CanonicalConfig disc_config(Sampler& s)
{
    double d = 1;
    while (d >= 0.999 && d <= 1.001)
    {
        d = s.log_uniform(0.01, 100);
    }
    return {s.log_uniform(0.01, 100), 1, d};
}

CanonicalConfig cyl0_config(Sampler& s)
{
    return {s.log_uniform(1e-3, 100), 1, 1 + s.log_uniform(1e-6, 99)};
}

SuiteReport suite_cross(VerifyOptions const& opt, Sampler& s)
{
    SuiteReport suite;
    suite.name = "disc forms pairwise (relative)";
    suite.tolerance = opt.cross_tolerance;
    for (int i = 0; i < opt.points; ++i)
    {
        auto const cfg = disc_config(s);
        double const a
            = omega_circ(cfg, DiscForm::first_second_kind).value
              + opt.fault_injection;
        double const b = omega_circ_third_kind(cfg).value;
        double const c = omega_circ_macklin(cfg).value;
        double const gap = std::max(
            {relative_gap(a, b, opt.cross_tolerance, opt.cross_floor),
             relative_gap(a, c, opt.cross_tolerance, opt.cross_floor),
             relative_gap(b, c, opt.cross_tolerance, opt.cross_floor)});
        record(suite, gap, format_config(cfg));
    }
    return suite;
}

SuiteReport suite_cyl0(VerifyOptions const& opt, Sampler& s)
{
    SuiteReport suite;
    suite.name = "lateral elliptic vs phi quadrature (absolute)";
    suite.tolerance = opt.cyl0_tolerance;
    for (int i = 0; i < opt.points; ++i)
    {
        auto const cfg = cyl0_config(s);
        double const closed = omega_cyl0(cfg, Cyl0Path::elliptic).value;
        double const quad = oracle::quad_cyl0_phi(cfg, 1e-13);
        record(suite, std::abs(closed - quad), format_config(cfg));
    }
    return suite;
}

SuiteReport suite_substitution(VerifyOptions const& opt, Sampler& s)
{
    SuiteReport suite;
    suite.name = "phi form vs gamma form quadrature (absolute)";
    suite.tolerance = opt.substitution_tolerance;
    for (int i = 0; i < opt.points; ++i)
    {
        auto const cfg = cyl0_config(s);
        double const a = oracle::quad_cyl0_phi(cfg, 1e-13);
        double const b = oracle::quad_cyl0_gamma(cfg, 1e-13);
        record(suite, std::abs(a - b), format_config(cfg));
    }
    return suite;
}

SuiteReport suite_disc(VerifyOptions const& opt, Sampler& s)
{
    SuiteReport suite;
    suite.name = "disc closed form vs disc quadrature (absolute)";
    suite.tolerance = opt.disc_tolerance;
    for (int i = 0; i < opt.points; ++i)
    {
        CanonicalConfig const cfg{s.log_uniform(0.05, 20), 1,
                                  s.uniform(0, 5)};
        double const closed = omega_circ(cfg).value + opt.fault_injection;
        double const quad = oracle::quad_disc(cfg, 1e-12);
        record(suite, std::abs(closed - quad), format_config(cfg));
    }
    return suite;
}

SuiteReport suite_invariants(VerifyOptions const& opt, Sampler& s)
{
    SuiteReport suite;
    suite.name = "bounds, scaling and end swap (absolute)";
    suite.tolerance = opt.invariant_tolerance;
    for (int i = 0; i < opt.points; ++i)
    {
        double const length = s.log_uniform(0.01, 100);
        double const d = s.uniform(0, 4);
        double const z = s.uniform(-2 * length, 3 * length);
        CylinderSpec const cyl(length, 1);
        SourcePoint const src(d, z);
        double const omega = omega_total(cyl, src).value;

        double worst = (omega >= 0 && omega <= 1) ? 0 : 1;
        double const swapped
            = omega_total(cyl, SourcePoint(d, length - z)).value;
        worst = std::max(worst, std::abs(omega - swapped));
        for (double k : {1e-3, 1e3})
        {
            double const scaled = omega_total(CylinderSpec(k * length, k),
                                              SourcePoint(k * d, k * z))
                                      .value;
            worst = std::max(worst, std::abs(omega - scaled));
        }
        std::ostringstream where;
        where << std::setprecision(17) << "L=" << length << " r=1 d=" << d
              << " z=" << z;
        record(suite, worst, where.str());
    }
    return suite;
}
}  // namespace

bool VerifyReport::passed() const
{
    return std::all_of(suites.begin(), suites.end(), [](auto const& s) {
        return s.passed;
    });
}

VerifyReport run_verify(VerifyOptions const& options)
{
    Sampler sampler(options.seed);
    VerifyReport report;
    report.suites.push_back(suite_cross(options, sampler));
    report.suites.push_back(suite_cyl0(options, sampler));
    report.suites.push_back(suite_substitution(options, sampler));
    report.suites.push_back(suite_disc(options, sampler));
    report.suites.push_back(suite_invariants(options, sampler));
    return report;
}

void print(VerifyReport const& report, std::ostream& os)
{
    for (auto const& suite : report.suites)
    {
        os << (suite.passed ? "PASS " : "FAIL ") << suite.name << ": "
           << suite.checked << " checks, max deviation "
           << std::setprecision(3) << std::scientific << suite.max_deviation
           << " (tolerance " << suite.tolerance << ")" << std::defaultfloat
           << '\n';
        if (!suite.passed)
        {
            os << "  worst: " << suite.worst << '\n';
        }
    }
    os << (report.passed() ? "all suites passed" : "verification FAILED")
       << '\n';
}
}  // namespace solidcyl
