//---------------------------------------------------------------------------//
//! \file elliptic.cpp
//---------------------------------------------------------------------------//
#include "solidcyl/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "solidcyl/errors.hpp"

namespace solidcyl::elliptic
{
namespace
{
constexpr double kEpsilon = std::numeric_limits<double>::epsilon();
constexpr double kGuard = 4 * kEpsilon;
constexpr double kHalfPi = std::numbers::pi / 2;

// Relative truncation error targeted by the duplication iterations
constexpr double kDuplicationTolerance = 1e-16;

double clamp_unit(double value, char const* what)
{
    if (!(value >= -kGuard && value <= 1 + kGuard))
    {
        throw ArgumentError(std::string(what) + " = " + std::to_string(value)
                            + " is outside [0, 1]");
    }
    return std::clamp(value, 0.0, 1.0);
}

void require_nonnegative(double value, char const* what)
{
    if (!(value >= 0))
    {
        throw ArgumentError(std::string("Carlson form: ") + what
                            + " must be nonnegative");
    }
}

// Convergence threshold Q = (r/4)^(-1/6) max|A0 - arg|, Carlson (1995)
template<class... Ts>
double spread(double a0, Ts... args)
{
    return std::max({std::abs(a0 - args)...});
}
}  // namespace

//---------------------------------------------------------------------------//
// DOMAIN TYPES
//---------------------------------------------------------------------------//
Parameter::Parameter(double m, double mc, int) : m_(m), mc_(mc) {}

Parameter::Parameter(double m)
    : Parameter(clamp_unit(m, "parameter m"), 0.0, 0)
{
    mc_ = 1 - m_;
}

Parameter Parameter::with_complement(double m, double m_complement)
{
    return Parameter(clamp_unit(m, "parameter m"),
                     clamp_unit(m_complement, "parameter complement 1-m"),
                     0);
}

Characteristic::Characteristic(double n, double nc, int) : n_(n), nc_(nc) {}

Characteristic::Characteristic(double n)
    : Characteristic(clamp_unit(n, "characteristic n"), 0.0, 0)
{
    nc_ = 1 - n_;
}

Characteristic
Characteristic::with_complement(double n, double n_complement)
{
    return Characteristic(
        clamp_unit(n, "characteristic n"),
        clamp_unit(n_complement, "characteristic complement 1-n"),
        0);
}

Amplitude::Amplitude(double phi)
{
    constexpr double guard = kGuard * kHalfPi;
    if (!(phi >= -guard && phi <= kHalfPi + guard))
    {
        throw ArgumentError("amplitude " + std::to_string(phi)
                            + " is outside [0, pi/2]");
    }
    phi_ = std::clamp(phi, 0.0, kHalfPi);
    co_ = kHalfPi - phi_;
}

Amplitude Amplitude::from_complement(double co_phi)
{
    constexpr double guard = kGuard * kHalfPi;
    if (!(co_phi >= -guard && co_phi <= kHalfPi + guard))
    {
        throw ArgumentError("co-amplitude " + std::to_string(co_phi)
                            + " is outside [0, pi/2]");
    }
    co_phi = std::clamp(co_phi, 0.0, kHalfPi);
    return Amplitude(kHalfPi - co_phi, co_phi, 0);
}

double Amplitude::sin() const
{
    return phi_ <= kHalfPi / 2 ? std::sin(phi_) : std::cos(co_);
}

double Amplitude::cos() const
{
    return phi_ <= kHalfPi / 2 ? std::cos(phi_) : std::sin(co_);
}

//---------------------------------------------------------------------------//
// CARLSON SYMMETRIC FORMS
//---------------------------------------------------------------------------//
double carlson_rc(double x, double y)
{
    require_nonnegative(x, "x");
    if (!(y > 0))
    {
        throw ArgumentError("Carlson R_C: y must be positive");
    }
    if (x == 0)
    {
        return kHalfPi / std::sqrt(y);
    }

    // R_C(x, y) = h(z) / sqrt(x), z = (y - x) / x
    double const z = (y - x) / x;
    if (std::abs(z) < 1e-3)
    {
        double const poly
            = 1
              + z
                    * (-1.0 / 3
                       + z
                             * (1.0 / 5
                                + z
                                      * (-1.0 / 7
                                         + z * (1.0 / 9 + z * (-1.0 / 11)))));
        return poly / std::sqrt(x);
    }
    if (y > x)
    {
        return std::atan(std::sqrt(z)) / std::sqrt(y - x);
    }
    return std::atanh(std::sqrt((x - y) / x)) / std::sqrt(x - y);
}

double carlson_rf(double x, double y, double z)
{
    require_nonnegative(x, "x");
    require_nonnegative(y, "y");
    require_nonnegative(z, "z");
    if ((x == 0) + (y == 0) + (z == 0) > 1)
    {
        throw DivergentError("Carlson R_F diverges with two zero arguments");
    }

    double const a0 = (x + y + z) / 3;
    double a = a0;
    double const x0 = x;
    double const y0 = y;
    double q = std::pow(3 * kDuplicationTolerance, -1.0 / 6)
               * spread(a0, x, y, z);
    double scale = 1;  // 4^-n
    while (q >= std::abs(a))
    {
        double const sx = std::sqrt(x);
        double const sy = std::sqrt(y);
        double const sz = std::sqrt(z);
        double const lambda = sx * (sy + sz) + sy * sz;
        x = (x + lambda) / 4;
        y = (y + lambda) / 4;
        z = (z + lambda) / 4;
        a = (a + lambda) / 4;
        q /= 4;
        scale /= 4;
    }

    double const dx = (a0 - x0) * scale / a;
    double const dy = (a0 - y0) * scale / a;
    double const dz = -(dx + dy);
    double const e2 = dx * dy - dz * dz;
    double const e3 = dx * dy * dz;
    return (1 - e2 / 10 + e3 / 14 + e2 * e2 / 24 - 3 * e2 * e3 / 44)
           / std::sqrt(a);
}

double carlson_rd(double x, double y, double z)
{
    require_nonnegative(x, "x");
    require_nonnegative(y, "y");
    if (!(z > 0))
    {
        throw ArgumentError("Carlson R_D: z must be positive");
    }
    if (x == 0 && y == 0)
    {
        throw DivergentError("Carlson R_D diverges with x = y = 0");
    }

    double const a0 = (x + y + 3 * z) / 5;
    double a = a0;
    double const x0 = x;
    double const y0 = y;
    double q = std::pow(kDuplicationTolerance / 4, -1.0 / 6)
               * spread(a0, x, y, z);
    double scale = 1;
    double sum = 0;
    while (q >= std::abs(a))
    {
        double const sx = std::sqrt(x);
        double const sy = std::sqrt(y);
        double const sz = std::sqrt(z);
        double const lambda = sx * (sy + sz) + sy * sz;
        sum += scale / (sz * (z + lambda));
        x = (x + lambda) / 4;
        y = (y + lambda) / 4;
        z = (z + lambda) / 4;
        a = (a + lambda) / 4;
        q /= 4;
        scale /= 4;
    }

    double const dx = (a0 - x0) * scale / a;
    double const dy = (a0 - y0) * scale / a;
    double const dz = -(dx + dy) / 3;
    double const xy = dx * dy;
    double const z2 = dz * dz;
    double const e2 = xy - 6 * z2;
    double const e3 = (3 * xy - 8 * z2) * dz;
    double const e4 = 3 * (xy - z2) * z2;
    double const e5 = xy * z2 * dz;
    double const series = 1 - 3 * e2 / 14 + e3 / 6 + 9 * e2 * e2 / 88
                          - 3 * e4 / 22 - 9 * e2 * e3 / 52 + 3 * e5 / 26;
    return scale * series / (a * std::sqrt(a)) + 3 * sum;
}

double carlson_rj(double x, double y, double z, double p)
{
    require_nonnegative(x, "x");
    require_nonnegative(y, "y");
    require_nonnegative(z, "z");
    if (!(p > 0))
    {
        throw ArgumentError("Carlson R_J: p must be positive");
    }
    if ((x == 0) + (y == 0) + (z == 0) > 1)
    {
        throw DivergentError("Carlson R_J diverges with two zero arguments");
    }

    double const a0 = (x + y + z + 2 * p) / 5;
    double a = a0;
    double const x0 = x;
    double const y0 = y;
    double const z0 = z;
    double const delta = (p - x) * (p - y) * (p - z);
    double q = std::pow(kDuplicationTolerance / 4, -1.0 / 6)
               * spread(a0, x, y, z, p);
    double scale = 1;
    double sum = 0;
    while (q >= std::abs(a))
    {
        double const sx = std::sqrt(x);
        double const sy = std::sqrt(y);
        double const sz = std::sqrt(z);
        double const sp = std::sqrt(p);
        double const lambda = sx * (sy + sz) + sy * sz;
        double const d = (sp + sx) * (sp + sy) * (sp + sz);
        double const e = scale * scale * scale * delta / (d * d);
        sum += scale * carlson_rc(1, 1 + e) / d;
        x = (x + lambda) / 4;
        y = (y + lambda) / 4;
        z = (z + lambda) / 4;
        p = (p + lambda) / 4;
        a = (a + lambda) / 4;
        q /= 4;
        scale /= 4;
    }

    double const dx = (a0 - x0) * scale / a;
    double const dy = (a0 - y0) * scale / a;
    double const dz = (a0 - z0) * scale / a;
    double const dp = -(dx + dy + dz) / 2;
    double const xyz = dx * dy * dz;
    double const p2 = dp * dp;
    double const e2 = dx * dy + dx * dz + dy * dz - 3 * p2;
    double const e3 = xyz + 2 * e2 * dp + 4 * p2 * dp;
    double const e4 = (2 * xyz + e2 * dp + 3 * p2 * dp) * dp;
    double const e5 = xyz * p2;
    double const series = 1 - 3 * e2 / 14 + e3 / 6 + 9 * e2 * e2 / 88
                          - 3 * e4 / 22 - 9 * e2 * e3 / 52 + 3 * e5 / 26;
    return scale * series / (a * std::sqrt(a)) + 6 * sum;
}

//---------------------------------------------------------------------------//
// LEGENDRE FORMS
//---------------------------------------------------------------------------//
// With s = sin(phi), c = cos(phi) and Delta^2 = 1 - m s^2 = m' + m c^2:
//   F(phi|m)    = s R_F(c^2, Delta^2, 1)
//   E(phi|m)    = F(phi|m) - (m/3) s^3 R_D(c^2, Delta^2, 1)
//   Pi(n;phi|m) = F(phi|m) + (n/3) s^3 R_J(c^2, Delta^2, 1, 1 - n s^2)

double complete_K(Parameter m)
{
    if (m.complement() == 0)
    {
        throw DivergentError("K(m) diverges at m = 1");
    }
    return carlson_rf(0, m.complement(), 1);
}

double complete_E(Parameter m)
{
    if (m.complement() == 0)
    {
        return 1;
    }
    double const mc = m.complement();
    return carlson_rf(0, mc, 1) - m.value() / 3 * carlson_rd(0, mc, 1);
}

double incomplete_F(Amplitude phi, Parameter m)
{
    if (phi.value() == 0)
    {
        return 0;
    }
    if (phi.is_right_angle() && m.complement() == 0)
    {
        throw DivergentError("F(pi/2|m) diverges at m = 1");
    }
    double const s = phi.sin();
    double const c = phi.cos();
    double const delta2 = m.complement() + m.value() * c * c;
    return s * carlson_rf(c * c, delta2, 1);
}

double incomplete_E(Amplitude phi, Parameter m)
{
    if (phi.value() == 0)
    {
        return 0;
    }
    double const s = phi.sin();
    if (m.complement() == 0)
    {
        return s;
    }
    double const c = phi.cos();
    double const delta2 = m.complement() + m.value() * c * c;
    return s * carlson_rf(c * c, delta2, 1)
           - m.value() / 3 * s * s * s * carlson_rd(c * c, delta2, 1);
}

double incomplete_Pi(Characteristic n, Amplitude phi, Parameter m)
{
    if (phi.value() == 0)
    {
        return 0;
    }
    if (n.value() == 0)
    {
        return incomplete_F(phi, m);
    }
    double const s = phi.sin();
    double const c = phi.cos();
    double const p = n.complement() + n.value() * c * c;
    if (p == 0)
    {
        throw DivergentError("Pi(n; pi/2|m) diverges at n = 1");
    }
    if (phi.is_right_angle() && m.complement() == 0)
    {
        throw DivergentError("Pi(n; pi/2|m) diverges at m = 1");
    }
    double const delta2 = m.complement() + m.value() * c * c;
    return s * carlson_rf(c * c, delta2, 1)
           + n.value() / 3 * s * s * s * carlson_rj(c * c, delta2, 1, p);
}

double complete_Pi(Characteristic n, Parameter m)
{
    if (n.complement() == 0)
    {
        throw DivergentError("Pi(n; m) diverges at n = 1");
    }
    double const k = complete_K(m);
    if (n.value() == 0)
    {
        return k;
    }
    return k
           + n.value() / 3
                 * carlson_rj(0, m.complement(), 1, n.complement());
}

//---------------------------------------------------------------------------//
}  // namespace solidcyl::elliptic
