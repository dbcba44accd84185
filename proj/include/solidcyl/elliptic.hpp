//---------------------------------------------------------------------------//
//! \file solidcyl/elliptic.hpp
//! Legendre-form elliptic integrals of the first, second and third kinds.
//---------------------------------------------------------------------------//
#pragma once

#include <numbers>

namespace solidcyl::elliptic
{
//---------------------------------------------------------------------------//
/*!
 * Elliptic parameter m.
 *
 * Everything in this library uses the PARAMETER convention of Abramowitz &
 * Stegun, m = k^2, where k is the modulus and alpha the modular angle:
 *
 *   m = k^2 = sin^2(alpha),     m' = 1 - m = k'^2 = cos^2(alpha)
 *
 * so that F(phi|m) = integral_0^phi (1 - m sin^2 t)^{-1/2} dt.  Code written
 * against the modulus convention (e.g. std::comp_ellint_1(k)) must pass
 * sqrt(m).
 *
 * The complement m' is carried alongside m.  When it can be formed from the
 * inputs without subtracting from one (as with m built from a geometry),
 * construct with \c with_complement so that the kernels stay accurate as
 * m -> 1.
 *
 * Values within four machine epsilons outside [0, 1] are clamped; anything
 * farther is rejected with an ArgumentError.
 */
class Parameter
{
  public:
    explicit Parameter(double m);

    // Construct from m and an independently computed 1 - m
    static Parameter with_complement(double m, double m_complement);

    double value() const { return m_; }
    double complement() const { return mc_; }

    // The parameter m' = 1 - m, as a Parameter in its own right
    Parameter complementary() const { return with_complement(mc_, m_); }

  private:
    Parameter(double m, double mc, int);

    double m_;
    double mc_;
};

//---------------------------------------------------------------------------//
/*!
 * Characteristic n of the third-kind integral
 * Pi(n; phi|m) = integral_0^phi dt / ((1 - n sin^2 t) sqrt(1 - m sin^2 t)).
 *
 * Only 0 <= n <= 1 is representable (no hyperbolic case).  The complement
 * 1 - n is carried with the same conventions as Parameter.
 */
class Characteristic
{
  public:
    explicit Characteristic(double n);

    static Characteristic with_complement(double n, double n_complement);

    double value() const { return n_; }
    double complement() const { return nc_; }

  private:
    Characteristic(double n, double nc, int);

    double n_;
    double nc_;
};

//---------------------------------------------------------------------------//
/*!
 * Amplitude phi in [0, pi/2].
 *
 * The co-amplitude pi/2 - phi is stored so that amplitudes close to pi/2
 * keep full relative accuracy in cos(phi).  Negative amplitudes are not
 * representable; callers use the odd symmetry F(-phi|m) = -F(phi|m).
 */
class Amplitude
{
  public:
    explicit Amplitude(double phi);

    // Construct from the co-amplitude pi/2 - phi
    static Amplitude from_complement(double co_phi);

    static Amplitude right_angle() { return from_complement(0); }

    double value() const { return phi_; }
    double complement() const { return co_; }
    double sin() const;
    double cos() const;
    bool is_right_angle() const { return co_ == 0; }

  private:
    Amplitude(double phi, double co, int) : phi_(phi), co_(co) {}

    double phi_;
    double co_;
};

//---------------------------------------------------------------------------//
// CARLSON SYMMETRIC FORMS
//---------------------------------------------------------------------------//
// Evaluated by the duplication theorem and a fifth-order Taylor expansion
// about the mean, with the iteration run until the relative truncation
// error falls below 1e-16.  Domain violations throw ArgumentError; a
// divergent integral (two of x, y, z zero) throws DivergentError.

// R_C(x, y) for x >= 0, y > 0
double carlson_rc(double x, double y);

// R_F(x, y, z) for nonnegative arguments, at most one zero
double carlson_rf(double x, double y, double z);

// R_D(x, y, z) for x, y >= 0 (at most one zero), z > 0
double carlson_rd(double x, double y, double z);

// R_J(x, y, z, p) for x, y, z >= 0 (at most one zero), p > 0
double carlson_rj(double x, double y, double z, double p);

//---------------------------------------------------------------------------//
// LEGENDRE FORMS
//---------------------------------------------------------------------------//

// K(m) = F(pi/2|m); throws DivergentError at m = 1
double complete_K(Parameter m);

// E(m) = E(pi/2|m); finite on all of [0, 1]
double complete_E(Parameter m);

// F(phi|m); throws DivergentError for phi = pi/2, m = 1
double incomplete_F(Amplitude phi, Parameter m);

// E(phi|m)
double incomplete_E(Amplitude phi, Parameter m);

/*!
 * Pi(n; phi|m) for 0 <= n < 1.
 *
 * Any m in [0, 1] is accepted here; the circular-case restriction m <= n is
 * a property of the solid angle formulas and is checked by their caller.
 * Throws DivergentError when the integrand has a nonintegrable pole at
 * phi = pi/2 (n = 1) or when m = 1 at phi = pi/2.
 */
double incomplete_Pi(Characteristic n, Amplitude phi, Parameter m);

// Pi(n; m) = Pi(n; pi/2|m)
double complete_Pi(Characteristic n, Parameter m);

//---------------------------------------------------------------------------//
}  // namespace solidcyl::elliptic
