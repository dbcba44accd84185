#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <locale>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "solidcyl/errors.hpp"
#include "solidcyl/oracle/monte_carlo.hpp"
#include "solidcyl/oracle/quadrature.hpp"
#include "solidcyl/solid_angle.hpp"
#include "solidcyl/verify.hpp"

namespace solidcyl::cli
{
namespace
{
constexpr double kFourPi = 4 * std::numbers::pi;
constexpr double kQuadTolerance = 1e-12;
constexpr std::uint64_t kDefaultSeed = 1;

std::string format_real(double value)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(17) << value;
    return os.str();
}

double parse_real(std::string const& text)
{
    std::istringstream is(text);
    is.imbue(std::locale::classic());
    double value;
    is >> value;
    if (!is || !is.eof())
    {
        throw ArgumentError("not a number: '" + text + "'");
    }
    return value;
}

std::vector<std::string> split(std::string const& text, char sep)
{
    std::vector<std::string> parts;
    std::string part;
    std::istringstream is(text);
    while (std::getline(is, part, sep))
    {
        parts.push_back(part);
    }
    if (!text.empty() && text.back() == sep)
    {
        parts.emplace_back();
    }
    return parts;
}

enum class Quantity
{
    total,
    cyl0,
    circ,
};

struct EvalRequest
{
    std::string method = "auto";
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = kDefaultSeed;
};

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag)
{
    if (flag)
    {
        return *flag;
    }
    if (char const* env = std::getenv("SOLIDCYL_SEED"))
    {
        try
        {
            return std::stoull(env);
        }
        catch (std::exception const&)
        {
            throw ArgumentError(std::string("SOLIDCYL_SEED is not an "
                                            "unsigned integer: '")
                                + env + "'");
        }
    }
    return kDefaultSeed;
}

SolidAngle quadrature_term(TermKind kind, CanonicalConfig const& cfg)
{
    double const tol = kQuadTolerance;
    if (kind == TermKind::cyl0)
    {
        if (cfg.length == 0 || cfg.offset == cfg.radius)
        {
            return omega_cyl0(cfg);
        }
        if (cfg.offset < cfg.radius)
        {
            throw DomainError("lateral-surface term requires d >= r");
        }
        return {oracle::quad_cyl0_phi(cfg, tol), Method::quadrature, tol};
    }
    if (cfg.length == 0)
    {
        return omega_circ(cfg);
    }
    return {oracle::quad_disc(cfg, tol), Method::quadrature, tol};
}

TermEvaluator make_evaluator(std::string const& method)
{
    if (method == "quadrature")
    {
        return quadrature_term;
    }
    EvalOptions options;
    if (method == "elliptic")
    {
        options.cyl0_path = Cyl0Path::elliptic;
    }
    else if (method == "series")
    {
        options.cyl0_path = Cyl0Path::series;
    }
    return [options](TermKind kind, CanonicalConfig const& cfg) {
        return kind == TermKind::cyl0 ? omega_cyl0(cfg, options.cyl0_path)
                                      : omega_circ(cfg, options.disc_form);
    };
}

// Single grid point or compute request
SolidAngle evaluate_point(Quantity quantity,
                          double length,
                          double r,
                          double d,
                          double z,
                          EvalRequest const& req)
{
    if (quantity == Quantity::total && req.method == "montecarlo")
    {
        auto const mc = oracle::mc_total(CylinderSpec(length, r),
                                         SourcePoint(d, z), req.samples,
                                         req.seed);
        return {mc.hit_fraction, Method::montecarlo, mc.std_error};
    }
    if (req.method == "montecarlo")
    {
        throw ArgumentError("montecarlo applies to the total quantity only");
    }
    auto const eval = make_evaluator(req.method);
    switch (quantity)
    {
        case Quantity::cyl0:
        {
            CanonicalConfig const cfg{length, r, d};
            validate(cfg);
            return eval(TermKind::cyl0, cfg);
        }
        case Quantity::circ:
        {
            CanonicalConfig const cfg{length, r, d};
            validate(cfg);
            return eval(TermKind::circ, cfg);
        }
        case Quantity::total:
            break;
    }
    return evaluate(decompose(CylinderSpec(length, r), SourcePoint(d, z)),
                    eval);
}

void add_method_options(CLI::App& cmd, EvalRequest& req,
                        std::optional<std::uint64_t>& seed)
{
    cmd.add_option("--method", req.method, "Evaluation path")
        ->check(CLI::IsMember(
            {"auto", "elliptic", "series", "quadrature", "montecarlo"}))
        ->default_val("auto");
    cmd.add_option("--samples", req.samples, "Monte Carlo sample count")
        ->check(CLI::PositiveNumber)
        ->default_val(1'000'000);
    cmd.add_option("--seed", seed,
                   "Monte Carlo seed (default: $SOLIDCYL_SEED, else 1)");
}

//---------------------------------------------------------------------------//
struct ComputeArgs
{
    double length = 0;
    double radius = 0;
    double offset = 0;
    double axial = 0;
    bool steradians = false;
    EvalRequest req;
    std::optional<std::uint64_t> seed;
};

int cmd_compute(ComputeArgs args, std::ostream& out)
{
    args.req.seed = resolve_seed(args.seed);
    auto const result = evaluate_point(Quantity::total, args.length,
                                       args.radius, args.offset, args.axial,
                                       args.req);
    auto const terms = decompose(CylinderSpec(args.length, args.radius),
                                 SourcePoint(args.offset, args.axial));
    double const unit = args.steradians ? kFourPi : 1;
    out << "value: " << format_real(result.value * unit) << '\n'
        << "units: " << (args.steradians ? "sr" : "fraction of 4pi") << '\n'
        << "method: " << to_string(result.method) << '\n'
        << "err_estimate: " << format_real(result.err_estimate * unit)
        << '\n'
        << "terms: " << describe(terms) << '\n';
    return kSuccess;
}

//---------------------------------------------------------------------------//
struct TableArgs
{
    std::string lengths = "1";
    std::string offsets = "2";
    std::string axials = "0";
    double radius = 1;
    std::string format = "csv";
    std::string quantity = "total";
    std::string output;
    EvalRequest req;
    std::optional<std::uint64_t> seed;
};

struct Row
{
    double length, radius, offset, axial;
    SolidAngle omega;
};

void write_csv(std::vector<Row> const& rows, std::ostream& os)
{
    os << "L,r,d,z,omega,method,err_estimate\n";
    for (auto const& row : rows)
    {
        os << format_real(row.length) << ',' << format_real(row.radius) << ','
           << format_real(row.offset) << ',' << format_real(row.axial) << ','
           << format_real(row.omega.value) << ','
           << to_string(row.omega.method) << ','
           << format_real(row.omega.err_estimate) << '\n';
    }
}

void write_json(std::vector<Row> const& rows, std::ostream& os)
{
    auto doc = nlohmann::ordered_json::array();
    for (auto const& row : rows)
    {
        doc.push_back({{"L", row.length},
                       {"r", row.radius},
                       {"d", row.offset},
                       {"z", row.axial},
                       {"omega", row.omega.value},
                       {"method", to_string(row.omega.method)},
                       {"err_estimate", row.omega.err_estimate}});
    }
    os << doc.dump(2) << '\n';
}

int cmd_table(TableArgs args, std::ostream& out)
{
    args.req.seed = resolve_seed(args.seed);
    if (!(args.radius > 0))
    {
        throw ArgumentError("radius r must be > 0");
    }
    Quantity const quantity = args.quantity == "cyl0"   ? Quantity::cyl0
                              : args.quantity == "circ" ? Quantity::circ
                                                        : Quantity::total;
    auto const lengths = parse_axis(args.lengths);
    auto const offsets = parse_axis(args.offsets);
    auto const axials = parse_axis(args.axials);

    std::vector<Row> rows;
    for (double l : lengths)
    {
        for (double d : offsets)
        {
            for (double z : axials)
            {
                double const r = args.radius;
                rows.push_back({l * r, r, d * r, z * r,
                                evaluate_point(quantity, l * r, r, d * r,
                                               z * r, args.req)});
            }
        }
    }

    std::ofstream file;
    std::ostream* os = &out;
    if (!args.output.empty())
    {
        file.open(args.output);
        if (!file)
        {
            throw std::runtime_error("cannot open output file '"
                                     + args.output + "'");
        }
        os = &file;
    }
    if (args.format == "json")
    {
        write_json(rows, *os);
    }
    else
    {
        write_csv(rows, *os);
    }
    os->flush();
    if (!*os)
    {
        throw std::runtime_error("write failed");
    }
    return kSuccess;
}

//---------------------------------------------------------------------------//
int cmd_verify(VerifyOptions options,
               std::optional<std::uint64_t> seed,
               std::ostream& out)
{
    if (seed || std::getenv("SOLIDCYL_SEED"))
    {
        options.seed = resolve_seed(seed);
    }
    auto const report = run_verify(options);
    out << "seed: " << options.seed << '\n';
    print(report, out);
    return report.passed() ? kSuccess : kRuntimeError;
}
}  // namespace

//---------------------------------------------------------------------------//
std::vector<double> parse_axis(std::string const& spec)
{
    std::vector<double> values;
    if (spec.find(':') == std::string::npos)
    {
        for (auto const& part : split(spec, ','))
        {
            values.push_back(parse_real(part));
        }
        if (values.empty())
        {
            throw ArgumentError("empty axis specification");
        }
        return values;
    }

    auto const parts = split(spec, ':');
    if (parts.size() < 3 || parts.size() > 4)
    {
        throw ArgumentError("range must be start:stop:count[:lin|log], got '"
                            + spec + "'");
    }
    double const start = parse_real(parts[0]);
    double const stop = parse_real(parts[1]);
    int count = 0;
    try
    {
        std::size_t used = 0;
        count = std::stoi(parts[2], &used);
        if (used != parts[2].size())
        {
            count = 0;
        }
    }
    catch (std::exception const&)
    {
        count = 0;
    }
    if (count < 1)
    {
        throw ArgumentError("range count must be an integer >= 1");
    }
    bool const log = parts.size() == 4 && parts[3] == "log";
    if (parts.size() == 4 && parts[3] != "log" && parts[3] != "lin")
    {
        throw ArgumentError("range spacing must be 'lin' or 'log'");
    }
    if (log && !(start > 0 && stop > 0))
    {
        throw ArgumentError("log range requires positive bounds");
    }
    for (int i = 0; i < count; ++i)
    {
        if (count == 1)
        {
            values.push_back(start);
            break;
        }
        double const t = static_cast<double>(i) / (count - 1);
        values.push_back(
            i == count - 1
                ? stop
                : log ? std::exp(std::log(start)
                                 + t * (std::log(stop) - std::log(start)))
                      : start + t * (stop - start));
    }
    return values;
}

int run(std::vector<std::string> const& args,
        std::ostream& out,
        std::ostream& err)
{
    CLI::App app{"Solid angle subtended by a right circular cylinder at a "
                 "point isotropic source",
                 "solidcyl"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Evaluate a single geometry");
    c->add_option("--L", compute.length, "Cylinder length")->required();
    c->add_option("--r", compute.radius, "Cylinder radius")->required();
    c->add_option("--d", compute.offset, "Source offset from the axis")
        ->required();
    c->add_option("--z", compute.axial,
                  "Source axial coordinate (0 = near end plane)")
        ->default_val(0);
    c->add_flag("--steradians", compute.steradians,
                "Report steradians instead of a fraction of 4pi");
    add_method_options(*c, compute.req, compute.seed);

    TableArgs table;
    auto* t = app.add_subcommand("table", "Tabulate over a grid of ratios");
    t->add_option("--L", table.lengths, "L/r axis: list or start:stop:count[:log]")
        ->default_val("1");
    t->add_option("--d", table.offsets, "d/r axis")->default_val("2");
    t->add_option("--z", table.axials, "z/r axis")->default_val("0");
    t->add_option("--r", table.radius, "Cylinder radius")->default_val(1);
    t->add_option("--format", table.format)
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");
    t->add_option("--quantity", table.quantity,
                  "total, cyl0 (lateral, source in an end plane) or circ "
                  "(single disc); z is ignored for cyl0 and circ")
        ->check(CLI::IsMember({"total", "cyl0", "circ"}))
        ->default_val("total");
    t->add_option("--output,-o", table.output, "Output path (default stdout)");
    add_method_options(*t, table.req, table.seed);

    VerifyOptions verify;
    std::optional<std::uint64_t> verify_seed;
    auto* v = app.add_subcommand("verify", "Run the randomized cross-checks");
    v->add_option("--points", verify.points, "Configurations per suite")
        ->check(CLI::PositiveNumber)
        ->default_val(200);
    v->add_option("--seed", verify_seed, "Grid seed");
    v->add_option("--cross-tol", verify.cross_tolerance)
        ->default_val(verify.cross_tolerance);
    v->add_option("--cyl0-tol", verify.cyl0_tolerance)
        ->default_val(verify.cyl0_tolerance);
    v->add_option("--substitution-tol", verify.substitution_tolerance)
        ->default_val(verify.substitution_tolerance);
    v->add_option("--disc-tol", verify.disc_tolerance)
        ->default_val(verify.disc_tolerance);
    v->add_option("--invariant-tol", verify.invariant_tolerance)
        ->default_val(verify.invariant_tolerance);

    std::vector<char const*> argv{"solidcyl"};
    for (auto const& a : args)
    {
        argv.push_back(a.c_str());
    }
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (CLI::CallForHelp const&)
    {
        out << app.help();
        return kSuccess;
    }
    catch (CLI::CallForAllHelp const&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    }
    catch (CLI::ParseError const& e)
    {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    try
    {
        if (c->parsed())
        {
            return cmd_compute(compute, out);
        }
        if (t->parsed())
        {
            return cmd_table(table, out);
        }
        return cmd_verify(verify, verify_seed, out);
    }
    catch (std::exception const& e)
    {
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
}
}  // namespace solidcyl::cli
