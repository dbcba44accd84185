//---------------------------------------------------------------------------//
//! \file solidcyl/verify.hpp
//! Randomized cross-checks of the closed forms against each other and the
//! oracles.  Backs the CLI `verify` command.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace solidcyl
{
struct VerifyOptions
{
    int points = 200;
    std::uint64_t seed = 20020101;

    double cross_tolerance = 1e-10;  //!< relative, pairwise disc forms
    double cross_floor = 1e-14;  //!< absolute floor for the above
    double cyl0_tolerance = 1e-9;  //!< absolute, elliptic vs phi quadrature
    double substitution_tolerance = 1e-10;  //!< phi form vs gamma form
    double disc_tolerance = 1e-9;  //!< absolute, disc vs disc quadrature
    double invariant_tolerance = 1e-12;  //!< scaling and end swap

    //! Added to every default-path disc value; test hook for the harness
    double fault_injection = 0;
};

struct SuiteReport
{
    std::string name;
    int checked = 0;
    double max_deviation = 0;
    double tolerance = 0;
    bool passed = true;
    std::string worst;  //!< offending configuration, full precision
};

struct VerifyReport
{
    std::vector<SuiteReport> suites;

    bool passed() const;
};

VerifyReport run_verify(VerifyOptions const& options);

void print(VerifyReport const& report, std::ostream& os);
}  // namespace solidcyl
