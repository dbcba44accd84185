//---------------------------------------------------------------------------//
//! \file solidcyl/oracle/monte_carlo.hpp
//! Isotropic ray-casting estimate of the total solid angle.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstdint>

#include "solidcyl/geometry.hpp"

namespace solidcyl::oracle
{
//---------------------------------------------------------------------------//
/*!
 * SplitMix64: a 64-bit generator whose output function doubles as the seed
 * mixer for independent streams.
 *
 * Stream \c i of a run seeded with \c s is a std::mt19937_64 seeded with
 * \c stream_seed(s, i).  Streams cover fixed-size chunks of the sample
 * budget, so the sample-to-stream mapping does not depend on how many
 * threads execute them.
 */
class SplitMix64
{
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t operator()();

    static std::uint64_t mix(std::uint64_t z);
    static std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);

  private:
    std::uint64_t state_;
};

using Direction = std::array<double, 3>;

// Map two uniform 64-bit words to a direction uniform on the unit sphere
// (cos theta uniform in [-1, 1], azimuth uniform in [0, 2 pi))
Direction isotropic_direction(std::uint64_t u1, std::uint64_t u2);

/*!
 * Whether a ray from the source along \p dir hits the closed cylinder
 * (lateral surface or either end disc) at positive distance.
 *
 * The cylinder axis is the z axis with end planes z = 0 and z = L; the
 * source is at (d, 0, z).
 */
bool ray_hits(CylinderSpec const& cyl,
              SourcePoint const& src,
              Direction const& dir);

struct McEstimate
{
    double hit_fraction;
    double std_error;  //!< sqrt(p (1 - p) / N)
    std::uint64_t samples;
    std::uint64_t seed;
};

// Samples per independent stream
inline constexpr std::uint64_t kMcChunk = 1 << 16;

/*!
 * Fraction of isotropic rays that hit the cylinder.
 *
 * Deterministic for a fixed seed regardless of \p threads (0 selects the
 * hardware concurrency).
 */
McEstimate mc_total(CylinderSpec const& cyl,
                    SourcePoint const& src,
                    std::uint64_t samples,
                    std::uint64_t seed,
                    unsigned threads = 0);

//---------------------------------------------------------------------------//
}  // namespace solidcyl::oracle
