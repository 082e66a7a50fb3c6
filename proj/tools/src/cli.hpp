#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hypercf/hypercf.hpp"

namespace hypercf::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kBadInput = 2 };

// Malformed options or input files; maps to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

// Parses `args` (without the program name) and runs one subcommand. Data goes
// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Built-in curve name, JSON path, or "random" (with genus and seed).
CurveAndSeed load_curve(const std::string& spec, int genus, std::uint64_t seed, std::size_t forward = 12,
                        std::size_t backward = 8);

// Verification suites shared by `verify` and the acceptance binary.
struct Verdict {
    std::string property;
    Report report;
    json counterexample;  // null when the property held everywhere
    std::string note;
};

std::vector<Verdict> poisson_suite(int genus, std::size_t samples, std::uint64_t seed);
std::vector<Verdict> identities_suite(const CurveAndSeed& cs, std::size_t nmax, std::size_t samples,
                                      std::uint64_t seed);
json verdicts_to_json(const std::vector<Verdict>& v);
bool all_ok(const std::vector<Verdict>& v);

// Reproduction bundles: expected values are embedded at build time.
const std::map<std::string, std::string>& repro_bundles();

struct ReproOptions {
    std::optional<std::size_t> steps;  // shortens the long-orbit bundle
    std::ostream* csv = nullptr;       // long-orbit points, lossy floats
};

struct ReproResult {
    std::string id;
    Report report;
    json details;
};

ReproResult run_repro(const std::string& id, const ReproOptions& options = {});

// Decimal text with 17 significant digits.
std::string format_double(double x);

}  // namespace hypercf::cli
