/*
 * cli.hpp
 * -------
 * Job description and runner behind the command-line tool.
 *
 * A JobSpec names one input (an inline polynomial or a resolution-data
 * file), a region, a list of characters and the outputs to produce.
 * run_job computes everything requested, writes a single report (text
 * or JSON, same content either way) and returns the process exit code:
 *
 *   0  success
 *   1  a mathematical check failed (functional-equation verdict false)
 *   2  invalid input (parse errors, unsupported requests, bad files)
 *   3  a work budget was exhausted
 */
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "izeta/arc_oracle.hpp"
#include "izeta/resolve.hpp"
#include "izeta/strata.hpp"

namespace izeta {

struct JobSpec {
    // Input data: at most one of the two. Required unless the oracle
    // (which carries its own polynomial) is the only output requested.
    std::string poly;             // inline polynomial, documented grammar
    std::string resolution_file;  // path to a resolution-data file

    // Arc-origin region. Unset means whole-space for inline polynomials
    // and the oracle; a resolution file always fixes its own region, so
    // combining one with an explicit region is rejected.
    std::optional<RegionSpec> region;

    // Characters to evaluate at; empty means the trivial character.
    std::vector<Character> characters;

    // Requested outputs (at least one).
    bool motivic = false;
    bool topological = false;
    long padic_q = 0;                 // 0 = off, else a prime power
    bool spectrum = false;
    long functional_equation_r = 0;   // 0 = off, else the input degree

    // Arc-counting oracle: counts for every depth n = 0..oracle_depth.
    std::string oracle_poly;          // empty = off
    long oracle_q = 0;
    long oracle_d = 1;
    long oracle_depth = -1;

    enum class Format { Text, Json };
    Format format = Format::Text;

    long long jet_budget = kDefaultJetBudget;
    long blowup_budget = kDefaultBlowupBudget;
};

// Runs the job, streaming the report to `out` and diagnostics to `err`.
int run_job(const JobSpec& job, std::ostream& out, std::ostream& err);

} // namespace izeta
