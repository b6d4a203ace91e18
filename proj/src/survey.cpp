#include "bicard/survey.hpp"

#include <functional>
#include <sstream>
#include <thread>

namespace bicard::survey {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

json slice_report_json(const SliceReport& sr) {
    return json{{"k", sr.k},
                {"profile", to_string(sr.profile)},
                {"trivial", sr.flags.trivial},
                {"separative", sr.flags.separative},
                {"complementative", sr.flags.complementative},
                {"degenerate_overlap", sr.degenerate_overlap},
                {"exempt", sr.exempt}};
}

json relation_record(const InvariantRelation& E, long long relcat_budget) {
    json rec;
    int n = E.n();
    TrichotomyReport tri = trichotomy_check(E);
    TightnessReport tight = check_tightness(E);
    SatReport sat = satisfiable(E);

    json profiles = json::array();
    for (const SliceReport& sr : tri.slices) profiles.push_back(to_string(sr.profile));
    rec["n"] = n;
    rec["types"] = E.yes_types().size();
    rec["profiles"] = profiles;
    rec["trichotomy"] = tri.pass;
    rec["tightness"] = tight.pass;
    rec["classes"] = sat.classes;
    rec["satisfiable"] = sat.satisfiable;
    rec["ccoa"] = ccoa(E);

    MiddleSliceReport mid = check_middle_slice_blowup(E);
    if (mid.applicable) rec["middle_blowup_ok"] = mid.confirmed;

    TopTrivialityReport topr = check_top_triviality(E);
    rec["top_trivial_ok"] = topr.pass;

    rec["basal_refined"] = refines(basal(n), E) || !sat.satisfiable;

    long long budget = relcat_budget;
    if (budget == 0 && n <= 4) budget = 1000000;
    if (sat.satisfiable && budget > 0) {
        RelcatReport rc = relcat_verdict(E, budget);
        rec["rc"] = rc.rc;
        rec["rc_ccoa_agree"] = rc.agrees;
    } else {
        rec["rc"] = nullptr;
    }
    return rec;
}

Result run_survey(const Options& opt) {
    std::vector<InvariantRelation> sweep =
        opt.exhaustive ? enumerate_all(opt.n, opt.n == 5)
                       : sample(opt.n, opt.seed, opt.sample_count);
    std::vector<bool> dup = duplicate_flags(sweep);

    Result res;
    res.records.resize(sweep.size());
    parallel_for(sweep.size(), opt.jobs, [&](std::size_t i) {
        json rec = relation_record(sweep[i], opt.relcat_budget);
        rec["index"] = i;
        rec["duplicate"] = static_cast<bool>(dup[i]);
        res.records[i] = std::move(rec);
    });

    long satisfiable_count = 0, trich_viol = 0, tight_viol = 0, mid_viol = 0, top_viol = 0,
         basal_viol = 0, rc_mismatch = 0, duplicates = 0;
    for (const json& rec : res.records) {
        if (rec.at("satisfiable").get<bool>()) ++satisfiable_count;
        if (!rec.at("trichotomy").get<bool>()) ++trich_viol;
        if (!rec.at("tightness").get<bool>()) ++tight_viol;
        if (rec.contains("middle_blowup_ok") && !rec.at("middle_blowup_ok").get<bool>())
            ++mid_viol;
        if (!rec.at("top_trivial_ok").get<bool>()) ++top_viol;
        if (!rec.at("basal_refined").get<bool>()) ++basal_viol;
        if (rec.contains("rc_ccoa_agree") && !rec.at("rc_ccoa_agree").get<bool>())
            ++rc_mismatch;
        if (rec.at("duplicate").get<bool>()) ++duplicates;
    }
    res.summary = json{{"n", opt.n},
                       {"mode", opt.exhaustive ? "exhaustive" : "sample"},
                       {"seed", opt.seed},
                       {"relations", res.records.size()},
                       {"satisfiable", satisfiable_count},
                       {"duplicates", duplicates},
                       {"trichotomy_violations", trich_viol},
                       {"tightness_violations", tight_viol},
                       {"middle_blowup_violations", mid_viol},
                       {"top_triviality_violations", top_viol},
                       {"basal_refinement_violations", basal_viol},
                       {"rc_ccoa_mismatches", rc_mismatch}};
    res.pass = trich_viol == 0 && tight_viol == 0 && mid_viol == 0 && top_viol == 0 &&
               basal_viol == 0 && rc_mismatch == 0;
    res.summary["pass"] = res.pass;
    return res;
}

std::string render_json_lines(const Result& r) {
    std::ostringstream os;
    for (const json& rec : r.records) os << rec.dump() << '\n';
    os << r.summary.dump() << '\n';
    return os.str();
}

std::string render_csv(const Result& r) {
    std::ostringstream os;
    os << "index,classes,satisfiable,trichotomy,tightness,ccoa,rc,profiles\n";
    for (const json& rec : r.records) {
        std::string profiles;
        for (const auto& p : rec.at("profiles")) {
            if (!profiles.empty()) profiles += '|';
            profiles += p.get<std::string>();
        }
        os << rec.at("index") << ',' << rec.at("classes") << ','
           << (rec.at("satisfiable").get<bool>() ? 1 : 0) << ','
           << (rec.at("trichotomy").get<bool>() ? 1 : 0) << ','
           << (rec.at("tightness").get<bool>() ? 1 : 0) << ','
           << (rec.at("ccoa").get<bool>() ? 1 : 0) << ',';
        if (rec.at("rc").is_null())
            os << "";
        else
            os << (rec.at("rc").get<bool>() ? 1 : 0);
        os << ',' << profiles << '\n';
    }
    return os.str();
}

std::string render_text(const Result& r) {
    std::ostringstream os;
    os << "relations: " << r.records.size() << '\n';
    for (const auto& [key, value] : r.summary.items())
        if (key != "relations") os << key << ": " << value.dump() << '\n';
    return os.str();
}

}  // namespace bicard::survey
