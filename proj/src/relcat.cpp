#include "bicard/relcat.hpp"

#include <algorithm>
#include <random>

namespace bicard {

namespace {

struct ModelTable {
    std::vector<int> elems;              // carrier, ascending
    std::vector<int> value;              // value[mask over elems] = operator value
    std::vector<long long> fingerprint;  // per carrier element: #subsets landing on it
};

ModelTable tabulate(const InducedModel& m) {
    ModelTable t;
    t.elems = m.carrier.elements();
    std::size_t sz = t.elems.size();
    t.value.resize(1ull << sz);
    t.fingerprint.assign(sz, 0);
    for (std::uint32_t mask = 0; mask < (1u << sz); ++mask) {
        std::uint32_t bits = 0;
        for (std::size_t i = 0; i < sz; ++i)
            if ((mask >> i) & 1u) bits |= 1u << t.elems[i];
        int v = m.op.apply_bits(bits);
        t.value[mask] = v;
        for (std::size_t i = 0; i < sz; ++i)
            if (t.elems[i] == v) ++t.fingerprint[i];
    }
    return t;
}

bool natural_iso_unverified(const AbstractionOperator& op1, const AbstractionOperator& op2) {
    int n = op1.n();
    std::uint32_t all = 1u << n;
    std::vector<int> gamma(static_cast<std::size_t>(n), -1);
    for (std::uint32_t xb = 0; xb < all; ++xb)
        gamma[static_cast<std::size_t>(op1.apply_bits(xb))] = op2.apply_bits(xb);
    Concept carrier1 = op1.range();
    for (std::uint32_t xb = 0; xb < all; ++xb) {
        if ((xb & ~carrier1.bits()) != 0) continue;  // only subsets of the carrier
        std::uint32_t mapped = 0;
        for (int i = 0; i < n; ++i)
            if ((xb >> i) & 1u) mapped |= 1u << gamma[static_cast<std::size_t>(i)];
        if (gamma[static_cast<std::size_t>(op1.apply_bits(xb))] != op2.apply_bits(mapped))
            return false;
    }
    return true;
}

}  // namespace

InducedModel induced_model(const AbstractionOperator& op) {
    return InducedModel(op.n(), op.range(), op);
}

std::optional<IsoWitness> find_isomorphism(const InducedModel& m1, const InducedModel& m2) {
    if (m1.n != m2.n) throw error("isomorphism: universe mismatch");
    if (m1.carrier.size() != m2.carrier.size()) return std::nullopt;
    ModelTable t1 = tabulate(m1);
    ModelTable t2 = tabulate(m2);
    std::size_t m = t1.elems.size();

    {
        auto f1 = t1.fingerprint;
        auto f2 = t2.fingerprint;
        std::sort(f1.begin(), f1.end());
        std::sort(f2.begin(), f2.end());
        if (f1 != f2) return std::nullopt;
    }

    std::vector<int> pos1(static_cast<std::size_t>(m1.n), -1);
    for (std::size_t i = 0; i < m; ++i)
        pos1[static_cast<std::size_t>(t1.elems[i])] = static_cast<int>(i);

    // Backtracking over carrier bijections in ascending image order, so the
    // first witness found is canonical.
    std::vector<int> assign(m, -1);  // index into t2.elems
    std::vector<bool> used(m, false);

    // gamma(op1(X)) == op2(gamma(X)) for every subset X of the first carrier.
    auto full_check = [&]() {
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            std::uint32_t mapped = 0;
            for (std::size_t i = 0; i < m; ++i)
                if ((mask >> i) & 1u) mapped |= 1u << assign[i];
            int v1 = t1.value[mask];
            int lhs = t2.elems[static_cast<std::size_t>(
                assign[static_cast<std::size_t>(pos1[static_cast<std::size_t>(v1)])])];
            int rhs = t2.value[mapped];
            if (lhs != rhs) return false;
        }
        return true;
    };

    std::optional<IsoWitness> found;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == m) {
            if (!full_check()) return false;
            IsoWitness w;
            w.carrier1 = t1.elems;
            for (std::size_t j = 0; j < m; ++j)
                w.gamma.push_back(t2.elems[static_cast<std::size_t>(assign[j])]);
            found = std::move(w);
            return true;
        }
        for (std::size_t j = 0; j < m; ++j) {
            if (used[j]) continue;
            if (t1.fingerprint[i] != t2.fingerprint[j]) continue;
            used[j] = true;
            assign[i] = static_cast<int>(j);
            if (self(self, i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

bool natural_bijection_check(const InvariantRelation& E, const AbstractionOperator& op1,
                             const AbstractionOperator& op2) {
    if (op1.n() != E.n() || op2.n() != E.n())
        throw error("natural bijection: universe mismatch");
    if (!(op1.kernel() == E) || !(op2.kernel() == E))
        throw error("natural bijection: operators must have kernel E");
    return natural_iso_unverified(op1, op2);
}

bool ccoa(const InvariantRelation& E) {
    int m = class_count(E);
    const TypeTable& tab = TypeTable::get(E.n());
    for (int i = 0; i < tab.size(); ++i) {
        const PairType& t = tab.at(i);
        if (t.b == t.c && t.x() <= m && !E.has_index(i)) return false;
    }
    return true;
}

bool bicard_ccoa(const InvariantRelation& E) {
    const TypeTable& tab = TypeTable::get(E.n());
    for (int i = 0; i < tab.size(); ++i) {
        const PairType& t = tab.at(i);
        if (t.b == t.c && !E.has_index(i)) return false;
    }
    return true;
}

RelcatReport relcat_verdict(const InvariantRelation& E, long long budget,
                            std::uint64_t seed) {
    RelcatReport rep;
    SatReport sat = satisfiable(E);
    if (!sat.satisfiable) {
        rep.skipped = true;
        return rep;
    }

    std::vector<AbstractionOperator> ops = kernel_operators(
        E, static_cast<std::size_t>(std::min<long long>(budget, 1000000)));
    rep.operators = static_cast<long>(ops.size());
    std::vector<InducedModel> models;
    models.reserve(ops.size());
    for (const auto& op : ops) models.push_back(induced_model(op));

    long long total = static_cast<long long>(ops.size()) * static_cast<long long>(ops.size());
    rep.exhaustive = total <= budget;

    bool all_iso = true;
    bool natural_all = true;
    bool surjective_all = true;

    auto check_pair = [&](long i, long j) {
        bool iso = find_isomorphism(models[static_cast<std::size_t>(i)],
                                    models[static_cast<std::size_t>(j)])
                       .has_value();
        if (!iso && all_iso) {
            all_iso = false;
            rep.witness_pair = {i, j};
        }
        if (!natural_iso_unverified(ops[static_cast<std::size_t>(i)],
                                    ops[static_cast<std::size_t>(j)]))
            natural_all = false;
        bool surj = ops[static_cast<std::size_t>(i)].surjective() &&
                    ops[static_cast<std::size_t>(j)].surjective();
        if (surj) {
            ++rep.surjective_pairs;
            if (!iso) surjective_all = false;
        }
        ++rep.pairs_checked;
    };

    if (rep.exhaustive) {
        for (long i = 0; i < rep.operators; ++i)
            for (long j = 0; j < rep.operators; ++j) check_pair(i, j);
    } else {
        std::mt19937_64 rng(seed);
        for (long long s = 0; s < budget; ++s)
            check_pair(static_cast<long>(rng() % static_cast<std::uint64_t>(rep.operators)),
                       static_cast<long>(rng() % static_cast<std::uint64_t>(rep.operators)));
    }

    rep.rc = all_iso;
    rep.ccoa_flag = ccoa(E);
    rep.agrees = rep.rc == rep.ccoa_flag;
    rep.natural_is_iso_whenever_rc = !rep.rc || natural_all;
    rep.surjective_all_iso = surjective_all;
    rep.bicard_ccoa_flag = bicard_ccoa(E);
    rep.surjective_agrees = rep.surjective_all_iso == rep.bicard_ccoa_flag;
    return rep;
}

}  // namespace bicard
