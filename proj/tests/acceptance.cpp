// Acceptance harness: eleven end-to-end checks, one PASS/FAIL line each.
// Exit status 0 only when every check passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bicard/abstraction.hpp"
#include "bicard/classify.hpp"
#include "bicard/relcat.hpp"
#include "bicard/shuttle.hpp"
#include "bicard/symcard.hpp"

using namespace bicard;

namespace {

// --- tolerances and workloads, pinned ---
constexpr int kSamplesPerBigN = 10000;       // criteria 1, 2, 7, 8
constexpr long long kLawSamples = 100000;    // criterion 4
constexpr int kShuttleInstances = 1000;      // criterion 3
constexpr double kTrichotomySeconds = 300.0; // criterion 1 runtime ceiling
constexpr long long kRelcatBudget = 1000000; // criterion 9

int g_failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << idx << ". " << name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << '\n';
    if (!ok) ++g_failures;
}

// Independent oracle: enumerate partitions of the concept space directly and
// keep the permutation-invariant ones.
std::set<std::string> invariant_partitions_oracle(int n) {
    const TypeTable& tab = TypeTable::get(n);
    std::uint32_t all = 1u << n;
    std::set<std::string> found;
    std::vector<int> block(all, -1);

    auto record_if_invariant = [&]() {
        std::vector<signed char> verdict(static_cast<std::size_t>(tab.size()), -1);
        for (std::uint32_t x = 0; x < all; ++x)
            for (std::uint32_t y = 0; y < all; ++y) {
                int idx = tab.index_bits(x, y);
                signed char same = block[x] == block[y] ? 1 : 0;
                if (verdict[static_cast<std::size_t>(idx)] < 0)
                    verdict[static_cast<std::size_t>(idx)] = same;
                else if (verdict[static_cast<std::size_t>(idx)] != same)
                    return;
            }
        std::vector<PairType> types;
        for (int i = 0; i < tab.size(); ++i)
            if (verdict[static_cast<std::size_t>(i)] == 1) types.push_back(tab.at(i));
        found.insert(InvariantRelation::from_types(n, types).serialize());
    };
    auto rec = [&](auto&& self, std::uint32_t next, int blocks) -> void {
        if (next == all) {
            record_if_invariant();
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            block[next] = b;
            self(self, next + 1, b == blocks ? blocks + 1 : blocks);
        }
        block[next] = -1;
    };
    rec(rec, 0, 0);
    return found;
}

struct Sweep {
    int n;
    std::vector<InvariantRelation> relations;
    bool exhaustive;
};

std::vector<Sweep> build_sweeps() {
    std::vector<Sweep> sweeps;
    for (int n = 1; n <= 4; ++n) sweeps.push_back({n, enumerate_all(n), true});
    for (int n : {5, 6}) {
        Sweep s{n, sample(n, 1000 + static_cast<std::uint64_t>(n), kSamplesPerBigN), false};
        for (const std::string& name : catalog_names()) s.relations.push_back(catalog(name, n));
        sweeps.push_back(std::move(s));
    }
    return sweeps;
}

bool criterion_trichotomy(const std::vector<Sweep>& sweeps, std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    long checked = 0, proper = 0;
    for (const Sweep& s : sweeps)
        for (const InvariantRelation& E : s.relations) {
            TrichotomyReport rep = trichotomy_check(E);
            if (!rep.pass || !rep.violations.empty()) {
                detail = "violation at n=" + std::to_string(s.n);
                return false;
            }
            for (const SliceReport& sr : rep.slices) {
                if (sr.profile == SliceProfile::Violation) {
                    detail = "violation profile at n=" + std::to_string(s.n);
                    return false;
                }
                // Above the degenerate sizes each slice carries exactly one label.
                if (s.n > 2 && !sr.exempt && sr.degenerate_overlap) {
                    detail = "label overlap at n=" + std::to_string(s.n) +
                             " k=" + std::to_string(sr.k);
                    return false;
                }
                if (sr.profile != SliceProfile::Trivial) ++proper;
            }
            ++checked;
        }
    // Exhaustive lists cross-checked against the direct partition oracle.
    for (int n = 1; n <= 3; ++n) {
        std::set<std::string> got;
        for (const InvariantRelation& E : enumerate_all(n)) got.insert(E.serialize());
        if (got != invariant_partitions_oracle(n)) {
            detail = "enumeration disagrees with partition oracle at n=" + std::to_string(n);
            return false;
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    detail = std::to_string(checked) + " relations, " + std::to_string(proper) +
             " proper slices, " + std::to_string(secs).substr(0, 5) + "s";
    return secs < kTrichotomySeconds;
}

bool criterion_tightness(const std::vector<Sweep>& sweeps, std::string& detail) {
    long checked = 0;
    for (const Sweep& s : sweeps)
        for (const InvariantRelation& E : s.relations) {
            TightnessReport rep = check_tightness(E);
            if (!rep.pass) {
                detail = "loose slice at n=" + std::to_string(s.n);
                return false;
            }
            ++checked;
        }
    detail = std::to_string(checked) + " relations, zero exceptions";
    return true;
}

bool criterion_shuttle(std::string& detail) {
    std::mt19937_64 rng(4242);
    int done = 0;
    long long attempts = 0;
    for (int n = 3; n <= 6 && done < kShuttleInstances; n = (n == 6 ? 3 : n + 1)) {
        std::vector<InvariantRelation> rels;
        for (const std::string& name : catalog_names()) rels.push_back(catalog(name, n));
        for (const InvariantRelation& E : sample(n, 77, 30)) rels.push_back(E);
        std::uint32_t all = 1u << n;
        for (const InvariantRelation& E : rels) {
            for (int trial = 0; trial < 50 && done < kShuttleInstances; ++trial) {
                ++attempts;
                if (attempts > 2000000) {
                    detail = "could not assemble enough instances";
                    return false;
                }
                Concept X(static_cast<std::uint32_t>(rng()) % all, n);
                Concept Y(static_cast<std::uint32_t>(rng()) % all, n);
                if (!opportune(E, X, Y)) continue;
                Concept Z(static_cast<std::uint32_t>(rng()) % all, n);
                if (!relatively_finite(X, Z)) continue;
                ShuttleTrace tr = shuttle(E, X, Y, Z, ConceptBijection::canonical(X, Z));
                bool stage_ok = true;
                for (const ShuttleStage& st : tr.stages)
                    stage_ok = stage_ok && st.class_preserved;
                if (!tr.ok || tr.x_final != Z || tr.composite.apply(X) != Z || !stage_ok) {
                    detail = "failed instance at n=" + std::to_string(n) + ": X=" + X.str() +
                             " Y=" + Y.str() + " Z=" + Z.str();
                    return false;
                }
                ++done;
            }
            if (done >= kShuttleInstances) break;
        }
    }
    detail = std::to_string(done) + " instances, 100% carried";
    return done >= kShuttleInstances;
}

bool criterion_laws(std::string& detail) {
    LawSuiteReport rep = law_suite(kLawSamples, 97);
    for (const LawResult& law : rep.laws) {
        if (law.failures > 0) {
            detail = law.name + " failed: " + law.counterexample;
            return false;
        }
        if (law.checked == 0) {
            detail = law.name + " never applied";
            return false;
        }
    }
    detail = std::to_string(rep.laws.size()) + " laws x " + std::to_string(rep.samples) +
             " samples, zero counterexamples";
    return rep.pass;
}

bool criterion_indicator(std::string& detail) {
    long long maps = 0;
    for (int n = 2; n <= 5; ++n) {
        IndicatorReport rep = indicator_check(catalog("BP", n), 10000000);
        if (!rep.exhaustive || !rep.indicator) {
            detail = "equinumerosity not an indicator at n=" + std::to_string(n);
            return false;
        }
        maps += rep.maps_checked;
        IndicatorReport neg = indicator_check(catalog("TOTAL", n), 10000000);
        if (neg.indicator || !neg.unbroken_map.has_value()) {
            detail = "total relation wrongly flagged as indicator at n=" + std::to_string(n);
            return false;
        }
    }
    detail = std::to_string(maps) + " non-permutation maps all refuted; TOTAL refused";
    return true;
}

bool criterion_bad_company(std::string& detail) {
    for (int n = 1; n <= 8; ++n) {
        SatReport hp = satisfiable(catalog("HP", n));
        if (hp.satisfiable || hp.classes != n + 1) {
            detail = "size relation wrong at n=" + std::to_string(n);
            return false;
        }
        if (satisfiable(catalog("LCP", n)).satisfiable != (n <= 2)) {
            detail = "complement-or-identity relation wrong at n=" + std::to_string(n);
            return false;
        }
        if (!satisfiable(catalog("NP", n)).satisfiable) {
            detail = "total-style relation unsatisfiable at n=" + std::to_string(n);
            return false;
        }
    }
    if (!restricted_satisfiable(catalog("LCP", 4), 2, RestrictMode::Eq).satisfiable) {
        detail = "middle pairing should fit at n=4";
        return false;
    }
    if (restricted_satisfiable(catalog("LCP", 6), 3, RestrictMode::Eq).satisfiable) {
        detail = "middle pairing should overflow at n=6";
        return false;
    }
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k)
            if (restricted_satisfiable(catalog("BLV", n), k, RestrictMode::Eq).satisfiable) {
                detail = "separated slice should overflow at n=" + std::to_string(n) +
                         " k=" + std::to_string(k);
                return false;
            }
    detail = "all exact counts as predicted";
    return true;
}

bool criterion_middle_blowup(std::string& detail) {
    long nontrivial = 0;
    for (int n : {6, 8}) {
        std::vector<InvariantRelation> rels =
            sample(n, 500 + static_cast<std::uint64_t>(n), kSamplesPerBigN);
        for (const std::string& name : catalog_names()) rels.push_back(catalog(name, n));
        for (const InvariantRelation& E : rels) {
            MiddleSliceReport rep = check_middle_slice_blowup(E);
            if (!rep.applicable || !rep.confirmed) {
                detail = "counterexample at n=" + std::to_string(n) + ": " +
                         std::to_string(rep.classes) + " classes";
                return false;
            }
            if (rep.nontrivial_middle) ++nontrivial;
        }
    }
    detail = std::to_string(nontrivial) + " nontrivial middles, all overflow";
    return true;
}

bool criterion_top_triviality(std::string& detail) {
    long satisfiable_seen = 0;
    for (int n : {6, 7}) {
        std::vector<InvariantRelation> rels =
            sample(n, 600 + static_cast<std::uint64_t>(n), kSamplesPerBigN);
        for (const std::string& name : catalog_names()) rels.push_back(catalog(name, n));
        for (const InvariantRelation& E : rels) {
            TopTrivialityReport rep = check_top_triviality(E);
            if (!rep.pass) {
                detail = "nontrivial heavy slice at n=" + std::to_string(n);
                return false;
            }
            if (rep.applicable) ++satisfiable_seen;
        }
    }
    detail = std::to_string(satisfiable_seen) + " satisfiable relations, all trivial up top";
    return true;
}

bool criterion_relcat(std::string& detail) {
    long verdicts = 0;
    for (int n = 1; n <= 4; ++n)
        for (const InvariantRelation& E : enumerate_all(n)) {
            RelcatReport rep = relcat_verdict(E, kRelcatBudget);
            if (rep.skipped) continue;
            ++verdicts;
            if (!rep.exhaustive || !rep.agrees || !rep.natural_is_iso_whenever_rc ||
                !rep.surjective_agrees) {
                detail = "verdict mismatch at n=" + std::to_string(n);
                return false;
            }
        }
    // The canonical negative instance, with a concrete witness pair.
    InvariantRelation cp = catalog("CP", 4);
    RelcatReport rep = relcat_verdict(cp, kRelcatBudget);
    if (rep.skipped || rep.rc || rep.ccoa_flag || !rep.witness_pair.has_value()) {
        detail = "complement pairing at n=4 must fail categoricity";
        return false;
    }
    auto ops = kernel_operators(cp, 1000000);
    auto [i, j] = *rep.witness_pair;
    if (find_isomorphism(induced_model(ops[static_cast<std::size_t>(i)]),
                         induced_model(ops[static_cast<std::size_t>(j)]))
            .has_value()) {
        detail = "witness pair is isomorphic after all";
        return false;
    }
    detail = std::to_string(verdicts) + " verdicts agree; negative witness (" +
             std::to_string(i) + "," + std::to_string(j) + ") confirmed";
    return true;
}

bool criterion_basal(std::string& detail) {
    for (int n = 1; n <= 6; ++n) {
        FinerReport rep = finer_than_all_satisfiable(n, 7, 2000);
        if (!rep.pass) {
            detail = "refinement fails at n=" + std::to_string(n);
            return false;
        }
    }
    // Counting oracle: everything alone except one merged heavy middle.
    int n = 6;
    long expected = 0;
    bool merged_any = false;
    for (std::uint32_t xb = 0; xb < (1u << n); ++xb) {
        Concept X(xb, n);
        if (top(X))
            merged_any = true;
        else
            ++expected;
    }
    if (merged_any) ++expected;
    if (class_count(basal(6)) != 45 || expected != 45) {
        detail = "class count is " + std::to_string(class_count(basal(6))) + ", oracle " +
                 std::to_string(expected);
        return false;
    }
    detail = "refines all satisfiable up to n=6; 45 classes at n=6";
    return true;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool criterion_determinism(std::string& detail) {
    std::filesystem::path dir = std::filesystem::temp_directory_path();
    std::vector<std::string> outputs;
    for (int jobs : {1, 4, 0}) {  // 0 = every available core
        std::filesystem::path out = dir / ("survey_jobs_" + std::to_string(jobs) + ".jsonl");
        std::string cmd = std::string("\"") + BICARD_CLI_PATH +
                          "\" survey --n 3 --exhaustive --seed 0 --jobs " +
                          std::to_string(jobs) + " --format json --out " + out.string();
        int rc = std::system(cmd.c_str());
        if (rc != 0) {
            detail = "survey exited with status " + std::to_string(rc);
            return false;
        }
        outputs.push_back(slurp(out));
        std::filesystem::remove(out);
    }
    if (outputs[0].empty() || outputs[0] != outputs[1] || outputs[1] != outputs[2]) {
        detail = "outputs differ across parallelism degrees";
        return false;
    }
    detail = std::to_string(outputs[0].size()) + " bytes identical at jobs 1/4/max";
    return true;
}

}  // namespace

int main() {
    std::vector<Sweep> sweeps = build_sweeps();

    using Fn = std::function<bool(std::string&)>;
    const std::vector<std::pair<std::string, Fn>> criteria = {
        {"slice trichotomy across exhaustive and sampled sweeps",
         [&](std::string& d) { return criterion_trichotomy(sweeps, d); }},
        {"nontrivial slices are exactly singletons or complement pairs",
         [&](std::string& d) { return criterion_tightness(sweeps, d); }},
        {"shuttle carries X to every relatively finite target", criterion_shuttle},
        {"covering-order laws for symbolic cardinals", criterion_laws},
        {"equinumerosity detects every non-permutation", criterion_indicator},
        {"exact satisfiability counts for the built-in relations", criterion_bad_company},
        {"nontrivial middle slices overflow the universe", criterion_middle_blowup},
        {"satisfiable relations are trivial on heavy slices", criterion_top_triviality},
        {"relative categoricity matches coarse-above-class-count", criterion_relcat},
        {"the basal relation refines everything satisfiable", criterion_basal},
        {"survey output is byte-identical across parallelism", criterion_determinism},
    };

    int idx = 1;
    for (const auto& [name, fn] : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        report(idx++, name, ok, detail);
    }

    if (g_failures == 0) {
        std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
    return 1;
}
