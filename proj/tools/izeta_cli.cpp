/*
 * izeta_cli.cpp
 * -------------
 * Command-line entry point: flag parsing only. All validation and
 * evaluation lives in run_job; exit codes are 0 (success), 1 (a
 * mathematical check failed), 2 (invalid input), 3 (budget exhausted).
 */
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "izeta/cli.hpp"
#include "izeta/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact zeta functions from embedded-resolution data"};
    app.set_version_flag("--version", "izeta 0.1.0");

    izeta::JobSpec job;
    std::string region_text;
    bool at_origin = false;
    std::vector<std::string> character_texts;
    std::string format_text = "text";

    app.add_option("--poly", job.poly, "inline polynomial (variables x, y, z, w)");
    app.add_option("--resolution", job.resolution_file, "resolution-data file");
    auto* region_opt = app.add_option(
        "--region", region_text, "arc-origin region: all | origin | hyperplane:K");
    auto* origin_flag = app.add_flag("--at-origin", at_origin, "shorthand for --region origin");
    region_opt->excludes(origin_flag);
    origin_flag->excludes(region_opt);
    app.add_option("--character", character_texts,
                   "character j/d (repeatable; default: the trivial character)");
    app.add_flag("--motivic", job.motivic, "emit the exact zeta function");
    app.add_flag("--topological", job.topological, "emit the topological specialization");
    app.add_option("--padic", job.padic_q,
                   "emit the point-count specialization at prime power q");
    app.add_flag("--spectrum", job.spectrum, "emit the spectrum at the point");
    app.add_option("--check-functional-equation", job.functional_equation_r,
                   "verify the duality for homogeneous input of degree r");
    app.add_option("--oracle", job.oracle_poly, "polynomial for the arc-counting oracle");
    app.add_option("--q", job.oracle_q, "oracle: field size, a prime power");
    app.add_option("--d", job.oracle_d, "oracle: character order dividing q - 1");
    app.add_option("--depth", job.oracle_depth, "oracle: report contact orders n = 0..N");
    app.add_option("--format", format_text, "report format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--budget", job.jet_budget, "jet-enumeration budget")
        ->envname("IZETA_JET_BUDGET");
    app.add_option("--blowup-budget", job.blowup_budget,
                   "blowup budget for plane-curve resolution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (at_origin)
            job.region = izeta::RegionSpec::origin();
        else if (!region_text.empty())
            job.region = izeta::RegionSpec::parse(region_text);
        for (const std::string& c : character_texts)
            job.characters.push_back(izeta::Character::parse(c));
        job.format = format_text == "json" ? izeta::JobSpec::Format::Json
                                           : izeta::JobSpec::Format::Text;
    } catch (const izeta::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    return izeta::run_job(job, std::cout, std::cerr);
}
