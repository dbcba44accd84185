#include "solidcyl/oracle/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "solidcyl/errors.hpp"

namespace solidcyl::oracle
{
namespace
{
constexpr double kUnitScale = 0x1.0p-53;

double to_unit(std::uint64_t bits)
{
    return static_cast<double>(bits >> 11) * kUnitScale;
}

std::uint64_t count_hits(CylinderSpec const& cyl,
                         SourcePoint const& src,
                         std::uint64_t seed,
                         std::uint64_t count)
{
    std::mt19937_64 rng(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < count; ++i)
    {
        auto const u1 = rng();
        auto const u2 = rng();
        hits += ray_hits(cyl, src, isotropic_direction(u1, u2)) ? 1 : 0;
    }
    return hits;
}
}  // namespace

std::uint64_t SplitMix64::mix(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::operator()()
{
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
}

std::uint64_t SplitMix64::stream_seed(std::uint64_t seed, std::uint64_t stream)
{
    return mix(seed + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

Direction isotropic_direction(std::uint64_t u1, std::uint64_t u2)
{
    double const cos_theta = 2 * to_unit(u1) - 1;
    double const azimuth = 2 * std::numbers::pi * to_unit(u2);
    double const sin_theta
        = std::sqrt(std::max(0.0, (1 - cos_theta) * (1 + cos_theta)));
    return {sin_theta * std::cos(azimuth), sin_theta * std::sin(azimuth),
            cos_theta};
}

bool ray_hits(CylinderSpec const& cyl,
              SourcePoint const& src,
              Direction const& dir)
{
    double const length = cyl.length();
    double const r = cyl.radius();
    double const d = src.radial_offset();
    double const z0 = src.axial();
    auto const [ux, uy, uz] = dir;

    // Lateral surface: |(d + t ux, t uy)|^2 = r^2
    double const a = ux * ux + uy * uy;
    if (a > 0)
    {
        double const b = d * ux;
        double const c = (d - r) * (d + r);
        double const disc = b * b - a * c;
        if (disc >= 0)
        {
            double const root = std::sqrt(disc);
            for (double t : {(-b - root) / a, (-b + root) / a})
            {
                double const zt = z0 + t * uz;
                if (t > 0 && zt >= 0 && zt <= length)
                {
                    return true;
                }
            }
        }
    }

    // End discs
    if (uz != 0)
    {
        for (double plane : {0.0, length})
        {
            double const t = (plane - z0) / uz;
            if (t > 0)
            {
                double const x = d + t * ux;
                double const y = t * uy;
                if (x * x + y * y <= r * r)
                {
                    return true;
                }
            }
        }
    }
    return false;
}

McEstimate mc_total(CylinderSpec const& cyl,
                    SourcePoint const& src,
                    std::uint64_t samples,
                    std::uint64_t seed,
                    unsigned threads)
{
    if (samples == 0)
    {
        throw ArgumentError("Monte Carlo sample count must be positive");
    }
    std::uint64_t const chunks = (samples + kMcChunk - 1) / kMcChunk;
    if (threads == 0)
    {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, chunks));

    std::vector<std::uint64_t> hits(chunks, 0);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t i = next++; i < chunks; i = next++)
        {
            std::uint64_t const begin = i * kMcChunk;
            std::uint64_t const count = std::min(kMcChunk, samples - begin);
            hits[i] = count_hits(cyl, src, SplitMix64::stream_seed(seed, i),
                                 count);
        }
    };

    if (threads == 1)
    {
        worker();
    }
    else
    {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
        {
            pool.emplace_back(worker);
        }
        for (auto& t : pool)
        {
            t.join();
        }
    }

    std::uint64_t total = 0;
    for (auto h : hits)
    {
        total += h;
    }
    double const n = static_cast<double>(samples);
    double const p = static_cast<double>(total) / n;
    return {p, std::sqrt(p * (1 - p) / n), samples, seed};
}

//---------------------------------------------------------------------------//
}  // namespace solidcyl::oracle
