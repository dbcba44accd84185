//---------------------------------------------------------------------------//
//! \file solidcyl/oracle/quadrature.hpp
//! Brute-force quadrature of the defining integrals, for verification only.
//---------------------------------------------------------------------------//
#pragma once

#include <functional>
#include <stdexcept>

#include "solidcyl/geometry.hpp"

namespace solidcyl::oracle
{
//---------------------------------------------------------------------------//
// Raised when an oracle cannot meet its tolerance within its budget
class OracleFailure : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct QuadResult
{
    double value;
    double error;  //!< estimated absolute error
    int subdivisions;
};

/*!
 * Globally adaptive 15-point Gauss-Kronrod quadrature on [a, b].
 *
 * The interval with the largest |K15 - G7| is bisected until the summed
 * estimate is below \p tol (absolute).  Throws OracleFailure after
 * \p max_subdivisions bisections.
 */
QuadResult integrate(std::function<double(double)> const& f,
                     double a,
                     double b,
                     double tol,
                     int max_subdivisions = 10000);

//---------------------------------------------------------------------------//
/*!
 * Point on the lateral-surface integration path.
 *
 * phi is the azimuth seen from the source, rho_minus the horizontal
 * distance to the near wall along it, and gamma_minus the substituted
 * variable of the gamma-form integral.
 */
struct IntegrandState
{
    double phi;
    double rho_minus;
    double gamma_minus;
};

// State at azimuth phi in [0, asin(r/d)]; requires d > r
IntegrandState integrand_state(CanonicalConfig const& cfg, double phi);

// rho_minus as a function of gamma_minus: sqrt((d+r)^2 - 4dr sin^2 gamma)
double rho_minus_of_gamma(CanonicalConfig const& cfg, double gamma);

/*!
 * Lateral-surface solid angle by direct quadrature of
 *   L/(2 pi) integral_0^phi_o [L^2 + rho_minus^2(phi)]^{-1/2} dphi.
 *
 * The square-root branch point at phi_o is removed by phi = phi_o - w^2.
 * Requires d > r and L > 0.
 */
double quad_cyl0_phi(CanonicalConfig const& cfg, double tol = 1e-13);

/*!
 * Same quantity via the substituted integral over [gamma_o, pi/2]:
 *   L/(2 pi) integral [L^2 + rho^2]^{-1/2} [(d^2 - r^2)/rho^2 - 1] dgamma.
 */
double quad_cyl0_gamma(CanonicalConfig const& cfg, double tol = 1e-13);

/*!
 * Disc solid angle by nested quadrature of L dA / (4 pi rho^3) over polar
 * disc coordinates (s, phi).  Requires L > 0.
 */
double quad_disc(CanonicalConfig const& cfg, double tol = 1e-12);

//---------------------------------------------------------------------------//
}  // namespace solidcyl::oracle
