#pragma once

#include <string>
#include <vector>

#include "hyperlap/bounds.hpp"
#include "hyperlap/io.hpp"
#include "hyperlap/nodal.hpp"
#include "hyperlap/report.hpp"
#include "hyperlap/spectra.hpp"

namespace hyperlap {

// Enumeration caps for the exponential searches. The HYPERLAP_LIMITS
// environment variable ("subset=12,signs=14,...") can lower them (never
// raise: the effective value is the minimum), so CI can bound worst-case
// runtimes without touching call sites.
struct Limits {
    int subset = 20;            // 2^n subset enumerations (Cheeger constants)
    int signs = 22;             // 2^n sign-vector search
    int chromatic = 16;         // exact coloring backtracking
    long long pairings = 10000; // underlying-graph pairings
    long long colorings = 10000; // alternative chi-partitions (sharpness)
    int coloring_subsets = 10;  // all-subset coloring sweep enabled iff n <= this
};

// Applies HYPERLAP_LIMITS caps to base. Unknown keys and malformed entries
// are ignored.
Limits limits_from_env(Limits base = {});

struct VerifyOptions {
    EigenConfig cfg;
    Limits limits;
    unsigned long seed = 1;      // drives the randomized identity spot-checks
    std::vector<int> delete_set; // claimed weak-deletion witness, used where a set is a premise
    std::string instance_name;
};

struct VerificationReport {
    std::string instance;
    std::vector<BoundReport> checks; // sorted by name
    std::vector<NodalReport> nodal;
    int pass = 0;
    int fail = 0;
    int not_applicable = 0;
    int unresolved = 0;
};

// Runs every applicable check against g and collects the outcomes. The
// result is deterministic given (g, options).
VerificationReport run_verification(const OrientedHypergraph& g, const VerifyOptions& options = {});

// Full report document: instance, config echo, checks, nodal entries,
// summary counts.
ordered_json verification_json(const VerificationReport& report, const VerifyOptions& options);

} // namespace hyperlap
