#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "bicard/dsl.hpp"
#include "bicard/survey.hpp"
#include "bicard/symcard.hpp"

namespace {

using bicard::survey::json;

constexpr int kExitPass = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitInputError = 2;

struct RelationSource {
    std::string catalog_name;
    std::string rel_path;
    std::string dsl_text;

    bicard::InvariantRelation load(int n) const {
        int given = (!catalog_name.empty() ? 1 : 0) + (!rel_path.empty() ? 1 : 0) +
                    (!dsl_text.empty() ? 1 : 0);
        if (given != 1)
            throw bicard::error("specify exactly one of --catalog, --rel, --dsl");
        if (!catalog_name.empty()) return bicard::catalog(catalog_name, n);
        std::string source = dsl_text;
        if (!rel_path.empty()) source = bicard::dsl::load_rel_file(rel_path).source;
        bicard::dsl::Expression expr = bicard::dsl::Expression::parse(source);
        bicard::dsl::CompileOutcome out = bicard::dsl::compile(expr, n);
        if (!out.ok())
            throw bicard::error("relation rejected: " + out.report.describe());
        return *out.relation;
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--catalog", catalog_name, "built-in relation name");
        cmd->add_option("--rel", rel_path, "relation file (.rel)");
        cmd->add_option("--dsl", dsl_text, "relation expression");
    }
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw bicard::error("cannot write output file: " + out_path);
    out << text;
}

std::string render_single(const json& j, const std::string& format) {
    if (format == "csv") {
        std::string header, row;
        for (const auto& [key, value] : j.items()) {
            if (!header.empty()) {
                header += ',';
                row += ',';
            }
            header += key;
            row += value.is_string() ? value.get<std::string>() : value.dump();
        }
        return header + "\n" + row + "\n";
    }
    if (format == "text") {
        std::string out;
        for (const auto& [key, value] : j.items()) out += key + ": " + value.dump() + "\n";
        return out;
    }
    return j.dump() + "\n";
}

int resolve_jobs(int jobs) {
    if (jobs == 0) {
        unsigned hc = std::thread::hardware_concurrency();
        return hc == 0 ? 1 : static_cast<int>(hc);
    }
    return jobs < 1 ? 1 : jobs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite laboratory for invariant equivalence relations on concepts"};
    app.require_subcommand(1);

    int n = 4;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string format = "json";
    std::string out_path;
    int slice = -1;
    int sample_count = 0;
    bool exhaustive = false;
    long long budget = 0;
    long long samples = 100000;
    std::string mode = "eq";
    int restrict_k = -1;

    auto add_common = [&](CLI::App* cmd, bool with_n = true) {
        if (with_n) cmd->add_option("--n", n, "universe size");
        cmd->add_option("--format", format, "json|csv|text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", out_path, "write output to file");
        cmd->add_option("--seed", seed, "random seed");
    };

    RelationSource classify_src, sat_src, relcat_src, dsl_src;

    CLI::App* c_classify = app.add_subcommand("classify", "slice profiles of one relation");
    add_common(c_classify);
    classify_src.attach(c_classify);
    c_classify->add_option("--slice", slice, "report a single slice");

    CLI::App* c_sat = app.add_subcommand("sat", "class count and realizability");
    add_common(c_sat);
    sat_src.attach(c_sat);
    c_sat->add_option("--restrict", restrict_k, "restricted realizability at this slice");
    c_sat->add_option("--mode", mode, "eq|le")->check(CLI::IsMember({"eq", "le"}));

    CLI::App* c_relcat = app.add_subcommand("relcat", "induced-model categoricity");
    add_common(c_relcat);
    relcat_src.attach(c_relcat);
    c_relcat->add_option("--budget", budget, "operator pair budget");

    CLI::App* c_laws = app.add_subcommand("laws", "covering-order arithmetic laws");
    add_common(c_laws, false);
    c_laws->add_option("--samples", samples, "number of random quadruples");

    CLI::App* c_survey = app.add_subcommand("survey", "sweep many relations");
    add_common(c_survey);
    c_survey->add_flag("--exhaustive", exhaustive, "enumerate every relation (n <= 5)");
    c_survey->add_option("--sample", sample_count, "number of sampled relations");
    c_survey->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    c_survey->add_option("--relcat-budget", budget, "operator pair budget per relation");

    CLI::App* c_dsl = app.add_subcommand("validate-dsl", "parse and compile an expression");
    add_common(c_dsl);
    dsl_src.attach(c_dsl);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_classify->parsed()) {
            bicard::InvariantRelation E = classify_src.load(n);
            json j;
            if (slice >= 0) {
                j = bicard::survey::slice_report_json(bicard::classify_slice(E, slice));
            } else {
                bicard::TrichotomyReport tri = bicard::trichotomy_check(E);
                bicard::TightnessReport tight = bicard::check_tightness(E);
                json slices = json::array();
                for (const auto& sr : tri.slices)
                    slices.push_back(bicard::survey::slice_report_json(sr));
                j = json{{"n", n},
                         {"slices", slices},
                         {"trichotomy", tri.pass},
                         {"tightness", tight.pass}};
            }
            emit(render_single(j, format), out_path);
            bool ok = slice >= 0 || (j.at("trichotomy").get<bool>() &&
                                     j.at("tightness").get<bool>());
            return ok ? kExitPass : kExitFalsified;
        }

        if (c_sat->parsed()) {
            bicard::InvariantRelation E = sat_src.load(n);
            json j;
            if (restrict_k >= 0) {
                bicard::SatReport rep = bicard::restricted_satisfiable(
                    E, restrict_k,
                    mode == "eq" ? bicard::RestrictMode::Eq : bicard::RestrictMode::Le);
                j = json{{"n", n},
                         {"restrict", restrict_k},
                         {"mode", mode},
                         {"classes", rep.classes},
                         {"satisfiable", rep.satisfiable}};
            } else {
                bicard::SatReport rep = bicard::satisfiable(E);
                j = json{{"n", n}, {"classes", rep.classes}, {"satisfiable", rep.satisfiable}};
                if (rep.witness) j["witness_range"] = rep.witness->range().str();
            }
            emit(render_single(j, format), out_path);
            return kExitPass;
        }

        if (c_relcat->parsed()) {
            bicard::InvariantRelation E = relcat_src.load(n);
            bicard::RelcatReport rep =
                bicard::relcat_verdict(E, budget > 0 ? budget : 1000000, seed);
            json j{{"n", n},
                   {"skipped", rep.skipped},
                   {"operators", rep.operators},
                   {"pairs_checked", rep.pairs_checked},
                   {"exhaustive", rep.exhaustive},
                   {"rc", rep.rc},
                   {"ccoa", rep.ccoa_flag},
                   {"agrees", rep.agrees},
                   {"natural_ok", rep.natural_is_iso_whenever_rc},
                   {"surjective_pairs", rep.surjective_pairs},
                   {"surjective_all_iso", rep.surjective_all_iso},
                   {"bicard_ccoa", rep.bicard_ccoa_flag},
                   {"surjective_agrees", rep.surjective_agrees}};
            emit(render_single(j, format), out_path);
            if (rep.skipped) return kExitPass;
            return (rep.agrees && rep.natural_is_iso_whenever_rc && rep.surjective_agrees)
                       ? kExitPass
                       : kExitFalsified;
        }

        if (c_laws->parsed()) {
            bicard::LawSuiteReport rep = bicard::law_suite(samples, seed);
            json laws = json::array();
            for (const auto& lr : rep.laws) {
                json l{{"name", lr.name}, {"checked", lr.checked}, {"failures", lr.failures}};
                if (!lr.counterexample.empty()) l["counterexample"] = lr.counterexample;
                laws.push_back(l);
            }
            json j{{"samples", rep.samples}, {"pass", rep.pass}, {"laws", laws}};
            emit(render_single(j, format), out_path);
            return rep.pass ? kExitPass : kExitFalsified;
        }

        if (c_survey->parsed()) {
            bicard::survey::Options opt;
            opt.n = n;
            opt.exhaustive = exhaustive || sample_count == 0;
            opt.sample_count = sample_count;
            opt.seed = seed;
            opt.jobs = resolve_jobs(jobs);
            opt.relcat_budget = budget;
            bicard::survey::Result res = bicard::survey::run_survey(opt);
            std::string text = format == "csv"
                                   ? bicard::survey::render_csv(res)
                                   : (format == "text" ? bicard::survey::render_text(res)
                                                       : bicard::survey::render_json_lines(res));
            emit(text, out_path);
            return res.pass ? kExitPass : kExitFalsified;
        }

        if (c_dsl->parsed()) {
            std::string source = dsl_src.dsl_text;
            std::string name;
            if (!dsl_src.rel_path.empty()) {
                bicard::dsl::RelFile rf = bicard::dsl::load_rel_file(dsl_src.rel_path);
                source = rf.source;
                name = rf.name;
            }
            if (source.empty()) throw bicard::error("validate-dsl needs --dsl or --rel");
            bicard::dsl::Expression expr = bicard::dsl::Expression::parse(source);
            bicard::dsl::CompileOutcome out = bicard::dsl::compile(expr, n);
            json j{{"n", n},
                   {"canonical", expr.print()},
                   {"valid", out.ok()}};
            if (!name.empty()) j["name"] = name;
            if (out.ok())
                j["types"] = out.relation->yes_types().size();
            else
                j["reason"] = out.report.describe();
            emit(render_single(j, format), out_path);
            return out.ok() ? kExitPass : kExitFalsified;
        }
    } catch (const bicard::dsl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const bicard::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
