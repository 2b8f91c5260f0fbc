/*
 * cli.cpp
 * -------
 * Job validation, input inference, evaluation and report assembly.
 *
 * The text and JSON writers are fed from the same computation pass, so
 * the two formats always carry identical content; JSON is the
 * machine-facing one ("izeta-report-v1", see schemas/).
 */
#include "izeta/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "izeta/engine.hpp"
#include "izeta/errors.hpp"
#include "izeta/io.hpp"

namespace izeta {

namespace {

using nlohmann::json;

bool wants_resolution_output(const JobSpec& job) {
    return job.motivic || job.topological || job.padic_q != 0 || job.spectrum ||
           job.functional_equation_r != 0;
}

void validate(const JobSpec& job) {
    if (!wants_resolution_output(job) && job.oracle_poly.empty())
        throw InputError(
            "job: no output requested (--motivic, --topological, --padic, "
            "--spectrum, --check-functional-equation or --oracle)");
    if (!job.poly.empty() && !job.resolution_file.empty())
        throw InputError("job: --poly and --resolution are mutually exclusive");
    if (wants_resolution_output(job) && job.poly.empty() && job.resolution_file.empty())
        throw InputError("job: the requested outputs need an input (--poly or --resolution)");
    if (!job.resolution_file.empty() && job.region)
        throw InputError(
            "job: a resolution file fixes its own region; --region/--at-origin "
            "cannot override it");
    if (job.padic_q != 0 && job.padic_q < 2)
        throw InputError("job: --padic expects a prime power q >= 2");
    if (job.functional_equation_r < 0)
        throw InputError("job: --check-functional-equation expects a degree r >= 1");
    if (!job.oracle_poly.empty()) {
        if (job.oracle_q < 2)
            throw InputError("job: --oracle needs --q, a prime power q >= 2");
        if (job.oracle_d < 1)
            throw InputError("job: --d expects a character order >= 1");
        if (job.oracle_depth < 0)
            throw InputError("job: --oracle needs --depth, the largest contact order n >= 0");
    }
    if (job.jet_budget < 1) throw InputError("job: the jet budget must be positive");
    if (job.blowup_budget < 1) throw InputError("job: the blowup budget must be positive");
}

// Input inference for inline polynomials: monomials in any dimension,
// plane-curve germs at the origin (whole-space only for homogeneous
// input); everything else must arrive as resolution data.
ResolutionData resolution_for(const QPoly& f, const RegionSpec& region, long budget) {
    if (f.is_zero()) throw ZeroPolynomial("job: the zero polynomial has no zeta function");
    const int m = f.num_vars();
    if (m == 0)
        throw InputError("job: a nonzero constant vanishes nowhere; there is nothing to resolve");
    if (f.is_monomial()) {
        const auto& exps = f.terms().begin()->first;
        std::vector<long> w(exps.begin(), exps.begin() + m);
        return from_monomial(w, m, region);
    }
    if (m == 1)
        throw InputError(
            "job: one-variable inputs must be monomials c*x^k; supply general "
            "one-dimensional data through --resolution");
    if (m == 2) return resolve_plane_curve(f, Rational(0), Rational(0), region, budget);
    throw InputError(
        "job: inputs in three or more variables are not resolved automatically; "
        "supply --resolution data");
}

} // namespace

int run_job(const JobSpec& job, std::ostream& out, std::ostream& err) {
    try {
        validate(job);

        const std::vector<Character> chars =
            job.characters.empty() ? std::vector<Character>{Character()} : job.characters;

        json root;
        root["schema"] = "izeta-report-v1";
        std::ostringstream text;

        ResolutionData res;
        if (wants_resolution_output(job)) {
            if (!job.resolution_file.empty())
                res = load_resolution_file(job.resolution_file);
            else
                res = resolution_for(QPoly::parse(job.poly),
                                     job.region.value_or(RegionSpec::whole_space()),
                                     job.blowup_budget);
            if (res.projective)
                throw InputError(
                    "job: projective resolution data belongs to the homogeneous "
                    "evaluation; these outputs expect affine data");

            json input;
            if (!job.poly.empty())
                input["polynomial"] = job.poly;
            else
                input["resolution_file"] = job.resolution_file;
            input["ambient_dimension"] = res.m;
            input["region"] = res.region.to_string();
            json cj = json::array();
            for (const Character& a : chars) cj.push_back(a.to_string());
            input["characters"] = cj;
            root["input"] = input;

            text << "input: ";
            if (!job.poly.empty())
                text << "polynomial " << job.poly;
            else
                text << "resolution file " << job.resolution_file;
            text << "  (m = " << res.m << ", region " << res.region.to_string() << ")\n";
        }

        json results = json::array();
        bool all_ok = true;

        if (job.motivic) {
            for (const Character& a : chars) {
                const ZetaFn z = motivic_zeta(res, a);
                json row;
                row["kind"] = "motivic";
                row["character"] = a.to_string();
                row["zeta"] = z.to_string();
                row["zeta_data"] = json::parse(z.to_json());
                results.push_back(row);
                text << "motivic zeta [character " << a.to_string() << "]:\n  "
                     << z.to_string() << "\n";
            }
        }
        if (job.topological) {
            for (const Character& a : chars) {
                const TopoZeta t = topological_zeta(res, a);
                json row;
                row["kind"] = "topological";
                row["character"] = a.to_string();
                row["zeta"] = t.to_string();
                results.push_back(row);
                text << "topological zeta [character " << a.to_string() << "]:\n  "
                     << t.to_string() << "\n";
            }
        }
        if (job.padic_q != 0) {
            for (const Character& a : chars) {
                PadicZeta p;
                try {
                    p = padic_specialize(motivic_zeta(res, a), job.padic_q);
                } catch (const NotTate& e) {
                    throw NotTate("p-adic specialization at character " + a.to_string() +
                                  ": " + e.what());
                }
                json row;
                row["kind"] = "padic";
                row["character"] = a.to_string();
                row["q"] = job.padic_q;
                row["zeta"] = p.to_string();
                results.push_back(row);
                text << "p-adic zeta at q = " << job.padic_q << " [character "
                     << a.to_string() << "]:\n  " << p.to_string() << "\n";
            }
        }
        if (job.spectrum) {
            // The spectrum lives at a point. Inline input resolved over a
            // larger region is re-resolved at the origin; file input must
            // already be point-localized.
            const bool relocalize =
                res.region.kind != RegionSpec::Kind::Origin && !job.poly.empty();
            const SpectrumPoly sp = hodge_spectrum(
                relocalize ? resolution_for(QPoly::parse(job.poly), RegionSpec::origin(),
                                            job.blowup_budget)
                           : res);
            json row;
            row["kind"] = "spectrum";
            row["region"] = RegionSpec::origin().to_string();
            json terms = json::object();
            for (const auto& [a, n] : sp.terms) terms[a.get_str()] = n.get_str();
            row["spectrum"] = terms;
            results.push_back(row);
            text << "spectrum:\n  " << sp.to_string() << "\n";
        }
        if (job.functional_equation_r != 0) {
            for (const Character& a : chars) {
                const ZetaFn z = motivic_zeta(res, a);
                const FEReport rep =
                    a.is_trivial()
                        ? check_functional_equation(z, job.functional_equation_r)
                        : check_functional_equation(z, job.functional_equation_r,
                                                    motivic_zeta(res, a.inverse()));
                json row;
                row["kind"] = "functional-equation";
                row["character"] = a.to_string();
                row["dual_character"] = a.inverse().to_string();
                row["degree"] = job.functional_equation_r;
                row["ok"] = rep.ok;
                if (!rep.ok) row["detail"] = rep.detail;
                results.push_back(row);
                text << "functional equation (degree " << job.functional_equation_r
                     << ") [character " << a.to_string() << " vs "
                     << a.inverse().to_string() << "]: " << (rep.ok ? "ok" : "FAILED")
                     << "\n";
                if (!rep.ok) text << "  " << rep.detail << "\n";
                all_ok = all_ok && rep.ok;
            }
        }
        if (!job.oracle_poly.empty()) {
            const QPoly f = QPoly::parse(job.oracle_poly);
            const long m = std::max(1, f.num_vars());
            const RegionSpec region = job.region.value_or(RegionSpec::whole_space());
            json row;
            row["kind"] = "oracle";
            row["polynomial"] = job.oracle_poly;
            row["q"] = job.oracle_q;
            row["d"] = job.oracle_d;
            row["region"] = region.to_string();
            json reports = json::array();
            for (long n = 0; n <= job.oracle_depth; ++n) {
                const ArcCountReport rep = twisted_tally(f, m, job.oracle_q, job.oracle_d,
                                                         n, region, job.jet_budget);
                json jr;
                jr["n"] = n;
                jr["generator"] = rep.generator;
                jr["count"] = rep.count.get_str();
                json tl = json::array();
                for (const BigInt& t : rep.tallies) tl.push_back(t.get_str());
                jr["tallies"] = tl;
                reports.push_back(jr);
                text << "oracle: " << rep.to_string() << "\n";
            }
            row["reports"] = reports;
            results.push_back(row);
        }

        root["results"] = results;
        root["ok"] = all_ok;

        if (job.format == JobSpec::Format::Json)
            out << root.dump(2) << "\n";
        else
            out << text.str();
        return all_ok ? 0 : 1;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace izeta
