#include "solidcyl/geometry.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "solidcyl/errors.hpp"

namespace solidcyl
{
namespace
{
void require(bool condition, char const* message)
{
    if (!condition)
    {
        throw ArgumentError(message);
    }
}
}  // namespace

CylinderSpec::CylinderSpec(double length, double radius)
    : length_(length), radius_(radius)
{
    require(std::isfinite(length) && length >= 0,
            "cylinder length L must be finite and >= 0");
    require(std::isfinite(radius) && radius > 0,
            "cylinder radius r must be finite and > 0");
}

SourcePoint::SourcePoint(double radial_offset, double axial)
    : d_(radial_offset), z_(axial)
{
    require(std::isfinite(radial_offset) && radial_offset >= 0,
            "source offset d must be finite and >= 0");
    require(std::isfinite(axial), "source coordinate z must be finite");
}

void validate(CanonicalConfig const& cfg)
{
    require(std::isfinite(cfg.length) && cfg.length >= 0,
            "length L must be finite and >= 0");
    require(std::isfinite(cfg.radius) && cfg.radius > 0,
            "radius r must be finite and > 0");
    require(std::isfinite(cfg.offset) && cfg.offset >= 0,
            "offset d must be finite and >= 0");
}

CanonicalConfig scale(CanonicalConfig const& cfg, double k)
{
    require(std::isfinite(k) && k > 0, "scale factor must be positive");
    return {k * cfg.length, k * cfg.radius, k * cfg.offset};
}

char const* to_string(TermKind kind)
{
    switch (kind)
    {
        case TermKind::cyl0:
            return "Cyl0";
        case TermKind::circ:
            return "Circ";
        case TermKind::constant:
            return "Const";
    }
    return "?";
}

SignedTermList decompose(CylinderSpec const& cyl, SourcePoint const& src)
{
    double const length = cyl.length();
    double const r = cyl.radius();
    double const d = src.radial_offset();
    double z = src.axial();
    if (z >= length && !(z == 0 && length == 0))
    {
        z = length - z;
    }

    SignedTermList result{r, d, {}};
    auto& terms = result.terms;
    if (d >= r)
    {
        if (z < 0)
        {
            double const zeta = -z;
            terms.push_back({+1, TermKind::cyl0, length + zeta, 0});
            terms.push_back({-1, TermKind::cyl0, zeta, 0});
            terms.push_back({+1, TermKind::circ, zeta, 0});
        }
        else if (z == 0)
        {
            terms.push_back({+1, TermKind::cyl0, length, 0});
        }
        else
        {
            terms.push_back({+1, TermKind::cyl0, z, 0});
            terms.push_back({+1, TermKind::cyl0, length - z, 0});
        }
    }
    else
    {
        if (z < 0)
        {
            terms.push_back({+1, TermKind::circ, -z, 0});
        }
        else if (z == 0)
        {
            terms.push_back({+1, TermKind::constant, 0, 0.5});
        }
        else
        {
            terms.push_back({+1, TermKind::constant, 0, 1});
        }
    }
    return result;
}

std::string describe(SignedTermList const& list)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    bool first = true;
    for (auto const& term : list.terms)
    {
        if (!first)
        {
            os << ' ';
        }
        first = false;
        os << (term.coefficient > 0 ? '+' : '-') << to_string(term.kind)
           << '(';
        if (term.kind == TermKind::constant)
        {
            os << term.constant_value;
        }
        else
        {
            os << "L=" << term.effective_length;
        }
        os << ')';
    }
    return os.str();
}
}  // namespace solidcyl
