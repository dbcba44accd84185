//---------------------------------------------------------------------------//
//! \file solidcyl/geometry.hpp
//! Cylinder/source configuration and its reduction to canonical terms.
//---------------------------------------------------------------------------//
#pragma once

#include <string>
#include <vector>

namespace solidcyl
{
//---------------------------------------------------------------------------//
/*!
 * Right circular cylinder of length L and radius r.
 *
 * L = 0 is accepted as a degenerate disc.
 */
class CylinderSpec
{
  public:
    CylinderSpec(double length, double radius);

    double length() const { return length_; }
    double radius() const { return radius_; }

  private:
    double length_;
    double radius_;
};

//---------------------------------------------------------------------------//
/*!
 * Point source at radial offset d from the cylinder axis and axial
 * coordinate z, with z = 0 in the plane of the near end disc and z = L in
 * the plane of the far one.  The azimuth is irrelevant by symmetry.
 */
class SourcePoint
{
  public:
    SourcePoint(double radial_offset, double axial);

    double radial_offset() const { return d_; }
    double axial() const { return z_; }

  private:
    double d_;
    double z_;
};

//---------------------------------------------------------------------------//
/*!
 * Shared (L, r, d) triple of the canonical sub-problems: the lateral surface
 * seen from the plane of one end, and a single disc seen from a point at
 * height L above its plane.
 */
struct CanonicalConfig
{
    double length;
    double radius;
    double offset;
};

// Throws ArgumentError for negative/nonfinite L or d, or r <= 0
void validate(CanonicalConfig const& cfg);

// Uniform rescaling (kL, kr, kd); throws ArgumentError for k <= 0
CanonicalConfig scale(CanonicalConfig const& cfg, double k);

//---------------------------------------------------------------------------//
enum class TermKind
{
    cyl0,  //!< lateral surface, source in an end plane
    circ,  //!< single end disc
    constant,
};

char const* to_string(TermKind kind);

struct SignedTerm
{
    int coefficient;  //!< +1 or -1
    TermKind kind;
    double effective_length;  //!< L of the canonical sub-problem
    double constant_value;  //!< only for TermKind::constant
};

/*!
 * Signed sum of canonical terms that evaluates to the total solid angle.
 *
 * All terms share the cylinder radius and source offset; only the effective
 * length varies.  At most three terms are ever produced.
 */
struct SignedTermList
{
    double radius;
    double offset;
    std::vector<SignedTerm> terms;

    CanonicalConfig config(SignedTerm const& term) const
    {
        return {term.effective_length, radius, offset};
    }
};

/*!
 * Reduce a source position to canonical terms.
 *
 * A source beyond the far face (z > L) is reflected to z' = L - z first.
 * With zeta = -z' measuring the distance below the near face:
 *
 * - d >= r, z' < 0: Cyl0(L + zeta) - Cyl0(zeta) + Circ(zeta)
 * - d >= r, z' = 0: Cyl0(L)
 * - d >= r, 0 < z' < L: Cyl0(z') + Cyl0(L - z')
 * - d < r, z' < 0: Circ(zeta)
 * - d < r, z' = 0: 1/2; source on an end face, valued by the limit from
 *   outside the cylinder
 * - d < r, 0 < z' < L: 1; the source is enclosed
 *
 * d = r is routed with the d > r cases, giving 1/2 on the lateral surface
 * and 1/4 on the rim.
 */
SignedTermList decompose(CylinderSpec const& cyl, SourcePoint const& src);

// Human-readable form, e.g. "+Cyl0(L=4) -Cyl0(L=1) +Circ(L=1)"
std::string describe(SignedTermList const& list);

//---------------------------------------------------------------------------//
}  // namespace solidcyl
