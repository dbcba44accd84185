//---------------------------------------------------------------------------//
//! \file solidcyl/solid_angle.hpp
//! Closed-form solid angles of a cylinder and its end discs.
//!
//! All values are normalized to the full sphere: a solid angle is the
//! fraction of isotropically emitted directions that hit the surface, in
//! [0, 1].  Multiply by 4 pi for steradians.
//---------------------------------------------------------------------------//
#pragma once

#include <functional>
#include <optional>

#include "elliptic.hpp"
#include "geometry.hpp"

namespace solidcyl
{
//---------------------------------------------------------------------------//
enum class Method
{
    elliptic,
    series,
    special,
    quadrature,
    montecarlo,
};

char const* to_string(Method method);

struct SolidAngle
{
    double value;  //!< fraction of 4 pi, in [0, 1]
    Method method;
    double err_estimate;  //!< heuristic absolute error
};

//---------------------------------------------------------------------------//
/*!
 * Elliptic arguments derived from a canonical (L, r, d).
 *
 *   m = 4rd / (L^2 + (d+r)^2),   n = 4rd / (d+r)^2,   0 <= m <= n <= 1
 *
 * Every complement (1-m, 1-n, 1-m/n, cos of each amplitude) is formed
 * directly from the geometry rather than by subtraction from one.
 */
struct EllipticParams
{
    elliptic::Parameter m;
    elliptic::Characteristic n;
    double m_prime;  //!< 1 - m
    double sqrt_one_minus_n;  //!< |d - r| / (d + r)
    double sqrt_one_minus_m_over_n;  //!< L / sqrt(L^2 + (d+r)^2)

    //! Half-angle subtended by the cylinder cross-section, asin(r/d); d >= r
    std::optional<double> phi_o;
    //! (pi/2 + phi_o) / 2, in [pi/4, pi/2]; d >= r
    std::optional<elliptic::Amplitude> gamma_o;
    //! asin sqrt((1-n)/(1-m)); m < 1
    std::optional<elliptic::Amplitude> epsilon;
};

// Throws DomainError for d = 0 (use the on-axis disc formula instead)
EllipticParams params_from_geometry(CanonicalConfig const& cfg);

//---------------------------------------------------------------------------//
// Paths forced through the lateral-surface evaluation
enum class Cyl0Path
{
    automatic,
    elliptic,
    series,
};

// SERIES when sqrt(d^2 - r^2) < L/10, SPECIAL at L = 0, d = r or d = 0,
// ELLIPTIC otherwise
Method method_policy(CanonicalConfig const& cfg);

/*!
 * Lateral surface seen from a source in the plane of one end, d >= r.
 *
 * The elliptic path evaluates
 *   (2 pi)^-1 sqrt(1 - m/n) { sqrt(1-n) [Pi(n;m) - Pi(n;gamma_o|m)]
 *                             - [K(m) - F(gamma_o|m)] }.
 * Special values: 0 at L = 0 (including the rim point L = 0, d = r) and 1/4
 * for d = r, L > 0.  Throws DomainError for d < r.
 */
SolidAngle omega_cyl0(CanonicalConfig const& cfg,
                      Cyl0Path path = Cyl0Path::automatic);

/*!
 * Large-L expansion of the lateral-surface solid angle, truncated after
 * \p terms (1 to 3) terms.
 *
 * The error estimate is the magnitude of the first omitted term, or of the
 * last included one when all three are used.
 */
SolidAngle omega_cyl0_series(CanonicalConfig const& cfg, int terms = 3);

//---------------------------------------------------------------------------//
// Disc formula used for the general (d != r, d > 0, L > 0) case
enum class DiscForm
{
    first_second_kind,  //!< default: single amplitude epsilon
    third_kind,  //!< complete Pi(n; m)
    macklin,  //!< two amplitudes theta, psi
};

/*!
 * End disc of radius r seen from a point at height L above its plane and
 * offset d from its axis.
 *
 * Special values: on axis 1/2 (1 - L/sqrt(L^2 + r^2)); at d = r
 * 1/4 - (2 pi)^-1 sqrt(1 - m1) K(m1) with m1 = 4r^2/(L^2 + 4r^2); at L = 0
 * 0, 1/4 or 1/2 for d > r, d = r, d < r.
 */
SolidAngle omega_circ(CanonicalConfig const& cfg,
                      DiscForm form = DiscForm::first_second_kind);

// Third-kind disc form; requires L > 0, d > 0, d != r
SolidAngle omega_circ_third_kind(CanonicalConfig const& cfg);

// Macklin's two-amplitude disc form; requires L > 0, d != r
SolidAngle omega_circ_macklin(CanonicalConfig const& cfg);

// Equal-distance (d = r) disc value from L and r
double omega_circ_equal_distance(double length, double radius);

//---------------------------------------------------------------------------//
struct EvalOptions
{
    Cyl0Path cyl0_path = Cyl0Path::automatic;
    DiscForm disc_form = DiscForm::first_second_kind;
};

using TermEvaluator
    = std::function<SolidAngle(TermKind, CanonicalConfig const&)>;

/*!
 * Sum a decomposition with a caller-supplied evaluator.
 *
 * The value is clamped to [0, 1] against roundoff; the error estimate is
 * the sum of the term estimates.
 */
SolidAngle evaluate(SignedTermList const& list, TermEvaluator const& eval);

// Total solid angle of the closed cylinder
SolidAngle omega_total(CylinderSpec const& cyl,
                       SourcePoint const& src,
                       EvalOptions const& options = {});

//---------------------------------------------------------------------------//
namespace detail
{
// Third-kind evaluation restricted to the circular case m <= n < 1; throws
// std::logic_error otherwise
double circular_pi(elliptic::Characteristic n,
                   elliptic::Amplitude phi,
                   elliptic::Parameter m);
}  // namespace detail

//---------------------------------------------------------------------------//
}  // namespace solidcyl
