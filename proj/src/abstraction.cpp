#include "bicard/abstraction.hpp"

#include <algorithm>
#include <random>

namespace bicard {

namespace {

// Least member of each class, ascending. Transitivity lets every
// non-minimal concept point at a smaller classmate.
std::vector<std::uint32_t> class_reps(const InvariantRelation& E) {
    int n = E.n();
    std::uint32_t all = 1u << n;
    std::vector<std::uint32_t> reps;
    for (std::uint32_t xb = 0; xb < all; ++xb) {
        bool minimal = true;
        for (std::uint32_t yb = 0; yb < xb && minimal; ++yb)
            if (E.holds_bits(xb, yb)) minimal = false;
        if (minimal) reps.push_back(xb);
    }
    return reps;
}

std::vector<std::uint8_t> table_from_assignment(const InvariantRelation& E,
                                                const std::vector<std::uint32_t>& reps,
                                                const std::vector<int>& value_of_rep) {
    int n = E.n();
    std::uint32_t all = 1u << n;
    std::vector<std::uint8_t> table(all, 0);
    for (std::uint32_t xb = 0; xb < all; ++xb) {
        for (std::size_t r = 0; r < reps.size(); ++r)
            if (E.holds_bits(xb, reps[r])) {
                table[static_cast<std::size_t>(xb)] =
                    static_cast<std::uint8_t>(value_of_rep[r]);
                break;
            }
    }
    return table;
}

bool types_agree_on_region(const InvariantRelation& a, const InvariantRelation& b,
                           int k, RestrictMode mode) {
    const TypeTable& tab = TypeTable::get(a.n());
    for (int i = 0; i < tab.size(); ++i) {
        const PairType& t = tab.at(i);
        bool in_region = mode == RestrictMode::Eq ? (t.x() == k && t.y() == k)
                                                  : (t.x() <= k && t.y() <= k);
        if (in_region && a.has_index(i) != b.has_index(i)) return false;
    }
    return true;
}

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

AbstractionOperator::AbstractionOperator(int n, std::vector<std::uint8_t> table)
    : n_(n), table_(std::move(table)) {
    if (n < 1 || n > kMaxN) throw error("operator: universe size out of range");
    if (table_.size() != (1ull << n)) throw error("operator: table size mismatch");
    for (std::uint8_t v : table_)
        if (v >= n) throw error("operator: value outside universe");
}

int AbstractionOperator::apply(const Concept& X) const {
    if (X.n() != n_) throw error("operator: universe mismatch");
    return apply_bits(X.bits());
}

Concept AbstractionOperator::range() const {
    std::uint32_t bits = 0;
    for (std::uint8_t v : table_) bits |= 1u << v;
    return Concept(bits, n_);
}

InvariantRelation AbstractionOperator::kernel() const {
    const TypeTable& tab = TypeTable::get(n_);
    std::vector<signed char> verdict(static_cast<std::size_t>(tab.size()), -1);
    std::uint32_t all = 1u << n_;
    for (std::uint32_t xb = 0; xb < all; ++xb)
        for (std::uint32_t yb = 0; yb < all; ++yb) {
            int idx = tab.index_bits(xb, yb);
            signed char same = apply_bits(xb) == apply_bits(yb) ? 1 : 0;
            if (verdict[static_cast<std::size_t>(idx)] < 0)
                verdict[static_cast<std::size_t>(idx)] = same;
            else if (verdict[static_cast<std::size_t>(idx)] != same)
                throw error("operator kernel is not permutation invariant");
        }
    std::vector<char> yes(verdict.begin(), verdict.end());
    return InvariantRelation::from_types_unchecked(n_, std::move(yes));
}

int class_count(const InvariantRelation& E) {
    return static_cast<int>(class_reps(E).size());
}

SatReport satisfiable(const InvariantRelation& E) {
    SatReport rep;
    std::vector<std::uint32_t> reps = class_reps(E);
    rep.classes = static_cast<long>(reps.size());
    rep.satisfiable = rep.classes <= E.n();
    if (rep.satisfiable) {
        std::vector<int> values(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i) values[i] = static_cast<int>(i);
        rep.witness = AbstractionOperator(E.n(), table_from_assignment(E, reps, values));
    }
    return rep;
}

std::vector<AbstractionOperator> kernel_operators(const InvariantRelation& E,
                                                  std::size_t limit) {
    std::vector<std::uint32_t> reps = class_reps(E);
    std::size_t m = reps.size();
    int n = E.n();
    std::vector<AbstractionOperator> out;
    if (m > static_cast<std::size_t>(n)) return out;

    std::vector<int> values;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto rec = [&](auto&& self) -> void {
        if (out.size() >= limit) return;
        if (values.size() == m) {
            out.emplace_back(n, table_from_assignment(E, reps, values));
            return;
        }
        for (int v = 0; v < n && out.size() < limit; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            values.push_back(v);
            self(self);
            values.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec(rec);
    return out;
}

SatReport restricted_satisfiable(const InvariantRelation& E, int k, RestrictMode mode) {
    int n = E.n();
    if (k < 0 || k > n) throw error("restricted satisfiability: slice out of range");

    auto report_with_witness = [&](const InvariantRelation& Eprime) {
        SatReport rep = satisfiable(Eprime);
        return rep;  // classes/witness describe the witnessing relation
    };

    if (mode == RestrictMode::Eq) {
        SlicePartition part = slice_classes(E, k);
        long blocks = static_cast<long>(part.blocks.size());
        bool all_singletons = true, all_pairs = true;
        for (const auto& block : part.blocks) {
            if (block.size() != 1) all_singletons = false;
            if (!(block.size() == 2 && block[0].complement() == block[1])) all_pairs = false;
        }

        if (blocks == 1) return report_with_witness(catalog("TOTAL", n));
        if (all_singletons) {
            if (k == 0 || k == n) return report_with_witness(catalog("TOTAL", n));
            // A separated slice pins C(n,k) classes; when that equals n, the
            // empty (or full) concept still cannot join any of them.
            SatReport rep;
            rep.classes = binom(n, k) + (binom(n, k) == n ? 1 : 0);
            rep.satisfiable = false;
            return rep;
        }
        if (all_pairs) {
            InvariantRelation cp = catalog("CP", n);
            if (types_agree_on_region(E, cp, k, mode)) {
                SatReport cp_rep = satisfiable(cp);
                if (cp_rep.satisfiable) return cp_rep;
            }
            if (blocks > n) {
                SatReport rep;
                rep.classes = blocks;
                rep.satisfiable = false;
                return rep;
            }
        }
        // Remaining shapes only occur at small n; decide exhaustively there.
        if (n <= 4) {
            for (const InvariantRelation& cand : enumerate_all(n)) {
                if (class_count(cand) > n) continue;
                if (types_agree_on_region(E, cand, k, mode)) return report_with_witness(cand);
            }
        }
        SatReport rep;
        rep.classes = blocks;
        rep.satisfiable = false;
        return rep;
    }

    // Mode Le: agreement on every pair of concepts of size at most k.
    std::uint32_t all = 1u << n;
    long lower = 0;
    for (std::uint32_t xb = 0; xb < all; ++xb) {
        if (std::popcount(xb) > k) continue;
        bool minimal = true;
        for (std::uint32_t yb = 0; yb < xb && minimal; ++yb)
            if (std::popcount(yb) <= k && E.holds_bits(xb, yb)) minimal = false;
        if (minimal) ++lower;
    }
    if (lower > n) {
        SatReport rep;
        rep.classes = lower;
        rep.satisfiable = false;
        return rep;
    }

    SatReport self = satisfiable(E);
    if (self.satisfiable) return self;

    // Keep E below the slice, merge everything above into one blob.
    {
        const TypeTable& tab = TypeTable::get(n);
        std::vector<PairType> types;
        for (int i = 0; i < tab.size(); ++i) {
            const PairType& t = tab.at(i);
            bool inside = t.x() <= k && t.y() <= k;
            if ((inside && E.has_index(i)) || (!inside && t.x() > k && t.y() > k))
                types.push_back(t);
        }
        InvariantRelation blob = InvariantRelation::from_types(n, types);
        SatReport rep = satisfiable(blob);
        if (rep.satisfiable) return rep;
    }

    if (n <= 4) {
        for (const InvariantRelation& cand : enumerate_all(n)) {
            if (class_count(cand) > n) continue;
            if (types_agree_on_region(E, cand, k, mode)) return report_with_witness(cand);
        }
    } else {
        // Last resort: a deterministic sampled search.
        for (const InvariantRelation& cand : sample(n, 99, 4000)) {
            if (class_count(cand) > n) continue;
            if (types_agree_on_region(E, cand, k, mode)) return report_with_witness(cand);
        }
    }
    SatReport rep;
    rep.classes = lower;
    rep.satisfiable = false;
    return rep;
}

MiddleSliceReport check_middle_slice_blowup(const InvariantRelation& E) {
    MiddleSliceReport rep;
    int n = E.n();
    rep.applicable = (n % 2 == 0) && n > 4;
    if (!rep.applicable) return rep;
    rep.nontrivial_middle = classify_slice(E, n / 2).profile != SliceProfile::Trivial;
    rep.classes = class_count(E);
    rep.confirmed = !rep.nontrivial_middle || rep.classes > n;
    return rep;
}

IndicatorReport indicator_check(const InvariantRelation& E, long long budget,
                                std::uint64_t seed) {
    int n = E.n();
    IndicatorReport rep;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= n;
    rep.exhaustive = total <= budget;

    std::uint32_t all = 1u << n;
    auto breaks_somewhere = [&](const std::vector<std::uint8_t>& f) {
        std::vector<std::uint32_t> image(all, 0);
        for (std::uint32_t xb = 0; xb < all; ++xb) {
            std::uint32_t out = 0;
            for (int i = 0; i < n; ++i)
                if ((xb >> i) & 1u) out |= 1u << f[static_cast<std::size_t>(i)];
            image[static_cast<std::size_t>(xb)] = out;
        }
        for (std::uint32_t xb = 0; xb < all; ++xb)
            for (std::uint32_t yb = xb; yb < all; ++yb)
                if (E.holds_bits(xb, yb) !=
                    E.holds_bits(image[static_cast<std::size_t>(xb)],
                                 image[static_cast<std::size_t>(yb)]))
                    return true;
        return false;
    };
    auto is_permutation = [&](const std::vector<std::uint8_t>& f) {
        std::uint32_t seen = 0;
        for (std::uint8_t v : f) seen |= 1u << v;
        return std::popcount(seen) == n;
    };

    rep.indicator = true;
    if (rep.exhaustive) {
        std::vector<std::uint8_t> f(static_cast<std::size_t>(n), 0);
        for (long long code = 0; code < total; ++code) {
            long long c = code;
            for (int i = 0; i < n; ++i) {
                f[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(c % n);
                c /= n;
            }
            if (is_permutation(f)) continue;
            ++rep.maps_checked;
            if (!breaks_somewhere(f)) {
                rep.indicator = false;
                rep.unbroken_map = f;
                return rep;
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        std::vector<std::uint8_t> f(static_cast<std::size_t>(n), 0);
        while (rep.maps_checked < budget) {
            for (int i = 0; i < n; ++i)
                f[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rng() % n);
            if (is_permutation(f)) continue;
            ++rep.maps_checked;
            if (!breaks_somewhere(f)) {
                rep.indicator = false;
                rep.unbroken_map = f;
                return rep;
            }
        }
    }
    return rep;
}

bool expl_size(int k, int n) { return (1 << k) > n; }
bool top_size(int k, int n) { return expl_size(k, n) && expl_size(n - k, n); }
bool expl(const Concept& X) { return expl_size(X.size(), X.n()); }
bool top(const Concept& X) { return top_size(X.size(), X.n()); }

InvariantRelation basal(int n) { return catalog("E0", n); }

TopTrivialityReport check_top_triviality(const InvariantRelation& E) {
    TopTrivialityReport rep;
    rep.applicable = satisfiable(E).satisfiable;
    if (rep.applicable)
        for (int k = 0; k <= E.n(); ++k)
            if (top_size(k, E.n()) &&
                classify_slice(E, k).profile != SliceProfile::Trivial)
                rep.exceptions.push_back(k);
    rep.pass = rep.exceptions.empty();
    return rep;
}

FinerReport finer_than_all_satisfiable(int n, std::uint64_t seed, int samples) {
    FinerReport rep;
    InvariantRelation base = basal(n);
    rep.basal_is_identity = base == catalog("BLV", n);

    std::vector<InvariantRelation> sweep;
    if (n <= 4)
        sweep = enumerate_all(n);
    else
        sweep = sample(n, seed, samples);
    for (const std::string& name : catalog_names()) sweep.push_back(catalog(name, n));

    for (const InvariantRelation& E : sweep) {
        ++rep.relations_checked;
        if (class_count(E) > n) continue;
        ++rep.satisfiable_count;
        if (!refines(base, E)) rep.violations.push_back(E.serialize());
    }
    rep.pass = rep.violations.empty();
    return rep;
}

}  // namespace bicard
