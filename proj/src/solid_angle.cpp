//---------------------------------------------------------------------------//
//! \file solid_angle.cpp
//---------------------------------------------------------------------------//
#include "solidcyl/solid_angle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "solidcyl/errors.hpp"

namespace solidcyl
{
namespace
{
using elliptic::Amplitude;
using elliptic::Characteristic;
using elliptic::Parameter;

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

// Budget assigned to every closed-form evaluation: kernel tolerance times a
// conditioning allowance.  Not a rigorous bound.
constexpr double kEllipticErrBudget = 1e-11;

SolidAngle special(double value)
{
    return {value, Method::special, 0};
}

SolidAngle elliptic_result(double value, double upper = 1)
{
    return {std::clamp(value, 0.0, upper), Method::elliptic,
            kEllipticErrBudget};
}

// sqrt(d^2 - r^2) without cancellation
double tangent_length(double d, double r)
{
    return std::sqrt((d - r) * (d + r));
}

int method_rank(Method m)
{
    switch (m)
    {
        case Method::special:
            return 0;
        case Method::elliptic:
            return 1;
        case Method::series:
            return 2;
        case Method::quadrature:
            return 3;
        case Method::montecarlo:
            return 4;
    }
    return 0;
}
}  // namespace

char const* to_string(Method method)
{
    switch (method)
    {
        case Method::elliptic:
            return "elliptic";
        case Method::series:
            return "series";
        case Method::special:
            return "special";
        case Method::quadrature:
            return "quadrature";
        case Method::montecarlo:
            return "montecarlo";
    }
    return "?";
}

namespace detail
{
double circular_pi(Characteristic n, Amplitude phi, Parameter m)
{
    if (!(n.complement() > 0) || !(m.value() <= n.value() + 4 * kEpsilon))
    {
        throw std::logic_error(
            "third-kind integral requested outside the circular case");
    }
    return elliptic::incomplete_Pi(n, phi, m);
}
}  // namespace detail

//---------------------------------------------------------------------------//
EllipticParams params_from_geometry(CanonicalConfig const& cfg)
{
    validate(cfg);
    double const length = cfg.length;
    double const r = cfg.radius;
    double const d = cfg.offset;
    if (d == 0)
    {
        throw DomainError(
            "elliptic parameters are undefined on the axis (d = 0); use the "
            "on-axis disc formula");
    }

    double const sum = d + r;
    double const diff = d - r;
    double const l2 = length * length;
    double const denom = l2 + sum * sum;
    double const four_rd = 4 * r * d;

    EllipticParams p{
        Parameter::with_complement(four_rd / denom,
                                   (l2 + diff * diff) / denom),
        Characteristic::with_complement(four_rd / (sum * sum),
                                        (diff / sum) * (diff / sum)),
        (l2 + diff * diff) / denom,
        std::abs(diff) / sum,
        length / std::hypot(length, sum),
        std::nullopt,
        std::nullopt,
        std::nullopt,
    };

    if (d >= r)
    {
        double const s = tangent_length(d, r);
        double const co_phi = std::atan2(s, r);
        p.phi_o = std::atan2(r, s);
        p.gamma_o = Amplitude::from_complement(co_phi / 2);
    }
    if (p.m.complement() > 0)
    {
        // tan(epsilon) = |d - r| sqrt(L^2 + (d+r)^2) / (2 L sqrt(rd))
        double const num = std::abs(diff) * std::hypot(length, sum);
        double const den = 2 * length * std::sqrt(r * d);
        p.epsilon = Amplitude::from_complement(std::atan2(den, num));
    }
    return p;
}

//---------------------------------------------------------------------------//
Method method_policy(CanonicalConfig const& cfg)
{
    validate(cfg);
    double const length = cfg.length;
    double const r = cfg.radius;
    double const d = cfg.offset;
    if (length == 0 || d == r || d == 0)
    {
        return Method::special;
    }
    if (d > r && tangent_length(d, r) < length / 10)
    {
        return Method::series;
    }
    return Method::elliptic;
}

SolidAngle omega_cyl0_series(CanonicalConfig const& cfg, int terms)
{
    validate(cfg);
    double const length = cfg.length;
    double const r = cfg.radius;
    double const d = cfg.offset;
    if (d < r)
    {
        throw DomainError("lateral-surface term requires d >= r");
    }
    if (length == 0)
    {
        throw DivergentError("series in 1/L^2 diverges at L = 0");
    }
    if (terms < 1 || terms > 3)
    {
        throw ArgumentError("series term count must be 1, 2 or 3");
    }

    double const s = tangent_length(d, r);
    double const phi_o = std::atan2(r, s);
    double const co_phi = std::atan2(s, r);  // pi/2 - phi_o
    double const cos_phi_o = s / d;
    double const l2 = length * length;

    double const t[3] = {
        phi_o,
        -0.5 * (r * d * cos_phi_o - r * r * co_phi) / l2,
        0.375
            * (r * d * (d * d + 2 * r * r) * cos_phi_o
               - r * r * (r * r + 2 * d * d) * co_phi)
            / (l2 * l2),
    };

    double partial = 0;
    for (int i = 0; i < terms; ++i)
    {
        partial += t[i];
    }
    double const err = std::abs(t[terms < 3 ? terms : 2]) / kTwoPi;
    return {partial / kTwoPi, Method::series, err};
}

SolidAngle omega_cyl0(CanonicalConfig const& cfg, Cyl0Path path)
{
    validate(cfg);
    double const length = cfg.length;
    double const r = cfg.radius;
    double const d = cfg.offset;
    if (d < r)
    {
        throw DomainError("lateral-surface term requires d >= r");
    }
    if (length == 0)
    {
        return special(0);
    }
    if (d == r)
    {
        return special(0.25);
    }

    if (path == Cyl0Path::series
        || (path == Cyl0Path::automatic
            && method_policy(cfg) == Method::series))
    {
        return omega_cyl0_series(cfg, 3);
    }

    auto const p = params_from_geometry(cfg);
    auto const gamma_o = *p.gamma_o;
    double const k = elliptic::complete_K(p.m);
    double const f = elliptic::incomplete_F(gamma_o, p.m);
    double const pi_complete
        = detail::circular_pi(p.n, Amplitude::right_angle(), p.m);
    double const pi_incomplete = detail::circular_pi(p.n, gamma_o, p.m);

    double const value = p.sqrt_one_minus_m_over_n
                         * (p.sqrt_one_minus_n * (pi_complete - pi_incomplete)
                            - (k - f))
                         / kTwoPi;
    return elliptic_result(value, 0.25);
}

//---------------------------------------------------------------------------//
double omega_circ_equal_distance(double length, double radius)
{
    double const l2 = length * length;
    double const denom = l2 + 4 * radius * radius;
    auto const m1 = Parameter::with_complement(4 * radius * radius / denom,
                                               l2 / denom);
    return 0.25 - length / std::sqrt(denom) * elliptic::complete_K(m1) / kTwoPi;
}

namespace
{
void require_general_disc(CanonicalConfig const& cfg, char const* form)
{
    validate(cfg);
    if (cfg.length == 0)
    {
        throw DomainError(std::string(form) + " disc form requires L > 0");
    }
    if (cfg.offset == cfg.radius)
    {
        throw DivergentError(std::string(form)
                             + " disc form diverges at d = r; use the "
                               "equal-distance formula");
    }
}

// Amplitude phi* with F(phi|mu) + F(phi*|mu) = K(mu), i.e.
// tan(phi) tan(phi*) = (1 - mu)^{-1/2}
Amplitude addition_complement(Amplitude phi, Parameter mu)
{
    return Amplitude(
        std::atan2(phi.cos(), std::sqrt(mu.complement()) * phi.sin()));
}

// K(mu) - F(phi|mu) and E(mu) - E(phi|mu) by the addition theorem
struct CompleteGap
{
    double f;
    double e;
};

CompleteGap complete_gap(Amplitude phi, Parameter mu)
{
    auto const star = addition_complement(phi, mu);
    return {elliptic::incomplete_F(star, mu),
            elliptic::incomplete_E(star, mu)
                - mu.value() * phi.sin() * star.sin()};
}

// K(m) - E(m) = (m/3) R_D(0, 1-m, 1)
double k_minus_e(Parameter m)
{
    if (m.value() == 0)
    {
        return 0;
    }
    return m.value() / 3 * elliptic::carlson_rd(0, m.complement(), 1);
}

SolidAngle circ_first_second_kind(CanonicalConfig const& cfg)
{
    auto const p = params_from_geometry(cfg);
    double const k = elliptic::complete_K(p.m);
    auto const m_prime = p.m.complementary();
    double const root = p.sqrt_one_minus_n;

    double value;
    if (cfg.offset > cfg.radius)
    {
        // pi/2 - [(E-K) F(eps|m') + K E(eps|m')] via the Legendre relation,
        // free of the cancellation against 1/4 far from the disc
        auto const gap = complete_gap(*p.epsilon, m_prime);
        double const lambda_gap = k * gap.e - k_minus_e(p.m) * gap.f;
        value = lambda_gap / kTwoPi
                - p.n.value() / (1 + root) * p.sqrt_one_minus_m_over_n * k
                      / kTwoPi;
    }
    else
    {
        double const e = elliptic::complete_E(p.m);
        double const f_eps = elliptic::incomplete_F(*p.epsilon, m_prime);
        double const e_eps = elliptic::incomplete_E(*p.epsilon, m_prime);
        double const bracket = (e - k) * f_eps + k * e_eps;
        value = 0.25 - (1 + root) * p.sqrt_one_minus_m_over_n * k / kTwoPi
                + bracket / kTwoPi;
    }
    return elliptic_result(value);
}
}  // namespace

SolidAngle omega_circ_third_kind(CanonicalConfig const& cfg)
{
    require_general_disc(cfg, "third-kind");
    if (cfg.offset == 0)
    {
        throw DomainError("third-kind disc form requires d > 0");
    }
    auto const p = params_from_geometry(cfg);
    double const k = elliptic::complete_K(p.m);
    double const pi_complete
        = detail::circular_pi(p.n, Amplitude::right_angle(), p.m);
    double const root = p.sqrt_one_minus_n;

    double value;
    if (cfg.offset > cfg.radius)
    {
        value = p.sqrt_one_minus_m_over_n * (root * pi_complete - k) / kTwoPi;
    }
    else
    {
        value = 0.5
                - p.sqrt_one_minus_m_over_n * (root * pi_complete + k)
                      / kTwoPi;
    }
    return elliptic_result(value);
}

SolidAngle omega_circ_macklin(CanonicalConfig const& cfg)
{
    require_general_disc(cfg, "Macklin");
    double const length = cfg.length;
    double const r = cfg.radius;
    double const d = cfg.offset;
    double const alpha = d / length;
    double const beta = r / length;

    double const l2 = length * length;
    double const sum = d + r;
    double const denom = l2 + sum * sum;
    auto const m = Parameter::with_complement(
        4 * r * d / denom, (l2 + (d - r) * (d - r)) / denom);
    auto const m_prime = m.complementary();

    // sin(theta) = sqrt(1 + (a+b)^2) / (b + sqrt(1 + a^2)),
    // sin(psi) = (sqrt(1 + a^2) - b) / sqrt(1 + (a-b)^2); both cosines share
    // the factor sqrt(2b / (sqrt(1 + a^2) + a)).
    double const root_a = std::hypot(1.0, alpha);
    double const cos_factor = std::sqrt(2 * beta / (root_a + alpha));
    double const hyp_plus = std::hypot(1.0, alpha + beta);
    double const theta_sin = hyp_plus;  // unnormalized
    auto const theta = Amplitude::from_complement(
        std::atan2(cos_factor, theta_sin));
    double const psi_sin
        = (1 + (alpha - beta) * (alpha + beta)) / (root_a + beta);
    double const psi_sign = psi_sin < 0 ? -1 : 1;
    auto const psi = Amplitude::from_complement(
        std::atan2(cos_factor, std::abs(psi_sin)));

    double const k = elliptic::complete_K(m);
    double const tail = 2 * beta / (hyp_plus * (beta + root_a));

    double four_pi_omega;
    if (psi_sign > 0 && d > 0)
    {
        // 2 pi = 4 (K E' + E K' - K K'), leaving only the gaps to K', E'
        auto const theta_gap = complete_gap(theta, m_prime);
        auto const psi_gap = complete_gap(psi, m_prime);
        four_pi_omega = 2 * k * (theta_gap.e + psi_gap.e - tail)
                        - 2 * k_minus_e(m) * (theta_gap.f + psi_gap.f);
    }
    else
    {
        double const e = elliptic::complete_E(m);
        double const f_sum = elliptic::incomplete_F(theta, m_prime)
                             + psi_sign * elliptic::incomplete_F(psi, m_prime);
        double const e_sum = elliptic::incomplete_E(theta, m_prime)
                             + psi_sign * elliptic::incomplete_E(psi, m_prime);
        four_pi_omega = kTwoPi + 2 * (k - e) * f_sum - 2 * k * (e_sum + tail);
    }
    return elliptic_result(four_pi_omega / (4 * kPi));
}

SolidAngle omega_circ(CanonicalConfig const& cfg, DiscForm form)
{
    validate(cfg);
    double const length = cfg.length;
    double const r = cfg.radius;
    double const d = cfg.offset;
    if (length == 0)
    {
        return special(d > r ? 0 : d == r ? 0.25 : 0.5);
    }
    if (d == 0)
    {
        // 1/2 (1 - L / sqrt(L^2 + r^2)) without cancellation
        double const hyp = std::hypot(length, r);
        return special(0.5 * r * r / (hyp * (hyp + length)));
    }
    if (d == r)
    {
        return {std::clamp(omega_circ_equal_distance(length, r), 0.0, 0.25),
                Method::special, kEllipticErrBudget};
    }
    switch (form)
    {
        case DiscForm::third_kind:
            return omega_circ_third_kind(cfg);
        case DiscForm::macklin:
            return omega_circ_macklin(cfg);
        case DiscForm::first_second_kind:
            break;
    }
    return circ_first_second_kind(cfg);
}

//---------------------------------------------------------------------------//
SolidAngle evaluate(SignedTermList const& list, TermEvaluator const& eval)
{
    double value = 0;
    double err = 0;
    Method method = Method::special;
    for (auto const& term : list.terms)
    {
        SolidAngle part = term.kind == TermKind::constant
                              ? special(term.constant_value)
                              : eval(term.kind, list.config(term));
        value += term.coefficient * part.value;
        err += part.err_estimate;
        if (method_rank(part.method) > method_rank(method))
        {
            method = part.method;
        }
    }
    return {std::clamp(value, 0.0, 1.0), method, err};
}

SolidAngle omega_total(CylinderSpec const& cyl,
                       SourcePoint const& src,
                       EvalOptions const& options)
{
    return evaluate(decompose(cyl, src),
                    [&options](TermKind kind, CanonicalConfig const& cfg) {
                        return kind == TermKind::cyl0
                                   ? omega_cyl0(cfg, options.cyl0_path)
                                   : omega_circ(cfg, options.disc_form);
                    });
}

//---------------------------------------------------------------------------//
}  // namespace solidcyl
