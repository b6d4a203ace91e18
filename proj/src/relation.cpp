#include "bicard/relation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace bicard {

namespace {

// Disjoint-set forest over concept bitmasks.
class UnionFind {
public:
    explicit UnionFind(int size) : parent_(static_cast<std::size_t>(size)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int v) {
        while (parent_[static_cast<std::size_t>(v)] != v) {
            parent_[static_cast<std::size_t>(v)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
            v = parent_[static_cast<std::size_t>(v)];
        }
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

// Representative pair realizing a type: X = first x elements,
// Y = first a elements plus the next c after X.
std::pair<std::uint32_t, std::uint32_t> representative_pair(const PairType& t) {
    std::uint32_t xb = Concept::mask(t.a + t.b);
    std::uint32_t yb = Concept::mask(t.a) | (Concept::mask(t.c) << (t.a + t.b));
    return {xb, yb};
}

// Transitivity of an invariant candidate only needs checking with the middle
// concept fixed to one representative per cardinality.
bool find_transitivity_violation(const TypeTable& tab, const std::vector<char>& yes,
                                 std::uint32_t* out_x, std::uint32_t* out_y,
                                 std::uint32_t* out_z) {
    int n = tab.n();
    std::uint32_t all = 1u << n;
    for (int k = 0; k <= n; ++k) {
        std::uint32_t yb = Concept::mask(k);
        std::vector<std::uint32_t> related;
        for (std::uint32_t xb = 0; xb < all; ++xb)
            if (yes[static_cast<std::size_t>(tab.index_bits(xb, yb))]) related.push_back(xb);
        for (std::uint32_t xb : related)
            for (std::uint32_t zb : related)
                if (!yes[static_cast<std::size_t>(tab.index_bits(xb, zb))]) {
                    if (out_x) *out_x = xb;
                    if (out_y) *out_y = yb;
                    if (out_z) *out_z = zb;
                    return true;
                }
    }
    return false;
}

// Smallest transitive superset of `yes` (as a type set); also keeps the
// swap closure. Used when enumerating relations.
void transitive_close(const TypeTable& tab, std::vector<char>& yes) {
    int n = tab.n();
    std::uint32_t all = 1u << n;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 0; k <= n; ++k) {
            std::uint32_t yb = Concept::mask(k);
            std::vector<std::uint32_t> related;
            for (std::uint32_t xb = 0; xb < all; ++xb)
                if (yes[static_cast<std::size_t>(tab.index_bits(xb, yb))]) related.push_back(xb);
            for (std::uint32_t xb : related)
                for (std::uint32_t zb : related) {
                    int idx = tab.index_bits(xb, zb);
                    if (!yes[static_cast<std::size_t>(idx)]) {
                        yes[static_cast<std::size_t>(idx)] = 1;
                        yes[static_cast<std::size_t>(tab.index(tab.at(idx).swapped()))] = 1;
                        changed = true;
                    }
                }
        }
    }
}

std::vector<char> predicate_mask(const TypeTable& tab, bool (*pred)(const PairType&, int)) {
    std::vector<char> yes(static_cast<std::size_t>(tab.size()), 0);
    for (int i = 0; i < tab.size(); ++i)
        if (pred(tab.at(i), tab.n())) yes[static_cast<std::size_t>(i)] = 1;
    return yes;
}

bool top_size(int k, int n) { return (1 << k) > n && (1 << (n - k)) > n; }

}  // namespace

std::string ValidationReport::describe() const {
    if (ok()) return "valid";
    std::ostringstream os;
    if (!reflexive) {
        os << "missing diagonal type";
        if (missing_diagonal) os << ' ' << missing_diagonal->str();
    } else if (!symmetric) {
        os << "not closed under swapping differences";
        if (asymmetric_type) os << ", e.g. " << asymmetric_type->str();
    } else {
        os << "not transitive";
        if (counterexample)
            os << ": " << (*counterexample)[0].str() << " ~ " << (*counterexample)[1].str()
               << " ~ " << (*counterexample)[2].str() << " but ends unrelated";
    }
    return os.str();
}

ValidationReport validate(const std::vector<PairType>& types, int n) {
    const TypeTable& tab = TypeTable::get(n);
    ValidationReport rep;
    std::vector<char> yes(static_cast<std::size_t>(tab.size()), 0);
    for (const PairType& t : types) {
        if (t.n() != n || t.a < 0 || t.b < 0 || t.c < 0 || t.d < 0)
            throw error("validate: malformed pair type");
        yes[static_cast<std::size_t>(tab.index(t))] = 1;
    }

    rep.reflexive = true;
    for (int i = 0; i < tab.size(); ++i) {
        const PairType& t = tab.at(i);
        if (t.diagonal() && !yes[static_cast<std::size_t>(i)]) {
            rep.reflexive = false;
            rep.missing_diagonal = t;
            break;
        }
    }

    rep.symmetric = true;
    for (int i = 0; i < tab.size(); ++i) {
        const PairType& t = tab.at(i);
        bool self = yes[static_cast<std::size_t>(i)] != 0;
        bool swap = yes[static_cast<std::size_t>(tab.index(t.swapped()))] != 0;
        if (self != swap) {
            rep.symmetric = false;
            rep.asymmetric_type = self ? t.swapped() : t;
            break;
        }
    }

    rep.transitive = true;
    if (rep.reflexive && rep.symmetric) {
        std::uint32_t xb = 0, yb = 0, zb = 0;
        if (find_transitivity_violation(tab, yes, &xb, &yb, &zb)) {
            rep.transitive = false;
            rep.counterexample = {Concept(xb, n), Concept(yb, n), Concept(zb, n)};
        }
    }
    return rep;
}

InvariantRelation::InvariantRelation(int n, std::vector<char> yes)
    : n_(n), yes_(std::move(yes)), table_(&TypeTable::get(n)) {}

InvariantRelation InvariantRelation::from_types(int n, const std::vector<PairType>& types) {
    ValidationReport rep = validate(types, n);
    if (!rep.ok()) throw error("invalid relation: " + rep.describe());
    const TypeTable& tab = TypeTable::get(n);
    std::vector<char> yes(static_cast<std::size_t>(tab.size()), 0);
    for (const PairType& t : types) yes[static_cast<std::size_t>(tab.index(t))] = 1;
    return InvariantRelation(n, std::move(yes));
}

InvariantRelation InvariantRelation::from_types_unchecked(int n, std::vector<char> yes) {
    if (static_cast<int>(yes.size()) != TypeTable::get(n).size())
        throw error("relation: mask size mismatch");
    return InvariantRelation(n, std::move(yes));
}

bool InvariantRelation::holds(const Concept& X, const Concept& Y) const {
    if (X.n() != n_ || Y.n() != n_) throw error("relation: universe mismatch");
    return holds_bits(X.bits(), Y.bits());
}

bool InvariantRelation::has_type(const PairType& t) const {
    return yes_[static_cast<std::size_t>(table_->index(t))] != 0;
}

std::vector<PairType> InvariantRelation::yes_types() const {
    std::vector<PairType> out;
    for (int i = 0; i < table_->size(); ++i)
        if (yes_[static_cast<std::size_t>(i)]) out.push_back(table_->at(i));
    return out;
}

std::string InvariantRelation::serialize() const {
    std::ostringstream os;
    for (const PairType& t : yes_types())
        os << t.a << ' ' << t.b << ' ' << t.c << ' ' << t.d << '\n';
    return os.str();
}

InvariantRelation InvariantRelation::deserialize(const std::string& text, int n) {
    std::istringstream is(text);
    std::vector<PairType> types;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        PairType t;
        if (!(ls >> t.a >> t.b >> t.c >> t.d)) throw error("relation: bad serialized line: " + line);
        types.push_back(t);
    }
    return from_types(n, types);
}

namespace {
InvariantRelation catalog_uncached(const std::string& name, int n);
}

InvariantRelation catalog(const std::string& name, int n) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, InvariantRelation> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(name, n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, catalog_uncached(name, n)).first;
    return it->second;
}

namespace {
InvariantRelation catalog_uncached(const std::string& name, int n) {
    const TypeTable& tab = TypeTable::get(n);
    std::vector<char> yes;
    if (name == "BLV") {
        yes = predicate_mask(tab, [](const PairType& t, int) { return t.sd() == 0; });
    } else if (name == "HP" || name == "BP") {
        yes = predicate_mask(tab, [](const PairType& t, int) { return t.b == t.c; });
    } else if (name == "NP" || name == "TOTAL") {
        yes = predicate_mask(tab, [](const PairType&, int) { return true; });
    } else if (name == "LCP") {
        yes = predicate_mask(tab,
                             [](const PairType& t, int) { return t.sd() == 0 || t.csd() == 0; });
    } else if (name == "CP") {
        // Concepts equinumerous with their complement pair up with exactly
        // themselves and their complement; everything else is one junk class.
        yes = predicate_mask(tab, [](const PairType& t, int n) {
            bool half = (t.x() == t.y() && 2 * t.x() == n && (t.sd() == 0 || t.csd() == 0));
            bool junk = (2 * t.x() != n && 2 * t.y() != n);
            return half || junk;
        });
    } else if (name == "NewV") {
        yes = predicate_mask(tab, [](const PairType& t, int n) {
            return (t.x() == n && t.y() == n) || (t.x() < n && t.y() < n && t.sd() == 0);
        });
    } else if (name == "E0") {
        // Concepts of doubly exponential-heavy size merge by cardinality;
        // everything else stays alone.
        yes = predicate_mask(tab, [](const PairType& t, int n) {
            return t.diagonal() || (t.b == t.c && top_size(t.x(), n));
        });
    } else {
        throw error("unknown catalog relation: " + name);
    }
    InvariantRelation rel = InvariantRelation::from_types_unchecked(n, std::move(yes));
    ValidationReport rep = validate(rel.yes_types(), n);
    if (!rep.ok()) throw error("catalog relation " + name + " invalid at n=" +
                               std::to_string(n) + ": " + rep.describe());
    return rel;
}
}  // namespace

std::vector<std::string> catalog_names() {
    return {"BLV", "HP", "BP", "NP", "LCP", "CP", "NewV", "E0", "TOTAL"};
}

InvariantRelation dualize(const InvariantRelation& E) {
    const TypeTable& tab = TypeTable::get(E.n());
    std::vector<char> yes(static_cast<std::size_t>(tab.size()), 0);
    for (int i = 0; i < tab.size(); ++i)
        if (E.has_type(tab.at(i).dual())) yes[static_cast<std::size_t>(i)] = 1;
    return InvariantRelation::from_types_unchecked(E.n(), std::move(yes));
}

bool refines(const InvariantRelation& finer, const InvariantRelation& coarser) {
    if (finer.n() != coarser.n()) throw error("refines: universe mismatch");
    const auto& a = finer.yes_mask();
    const auto& b = coarser.yes_mask();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

std::vector<InvariantRelation> enumerate_all(int n, bool allow_large) {
    if (n > 5 || (n == 5 && !allow_large))
        throw error("enumerate_all: exhaustive search capped at n=4 (n=5 on request)");
    const TypeTable& tab = TypeTable::get(n);

    // Swap-orbit groups of non-diagonal types; diagonals are always included.
    std::vector<std::vector<int>> groups;
    std::vector<int> group_of(static_cast<std::size_t>(tab.size()), -1);
    for (int i = 0; i < tab.size(); ++i) {
        const PairType& t = tab.at(i);
        if (t.diagonal() || group_of[static_cast<std::size_t>(i)] >= 0) continue;
        int j = tab.index(t.swapped());
        std::vector<int> g = {i};
        if (j != i) g.push_back(j);
        int gi = static_cast<int>(groups.size());
        for (int idx : g) group_of[static_cast<std::size_t>(idx)] = gi;
        groups.push_back(std::move(g));
    }

    std::vector<char> base(static_cast<std::size_t>(tab.size()), 0);
    for (int i = 0; i < tab.size(); ++i)
        if (tab.at(i).diagonal()) base[static_cast<std::size_t>(i)] = 1;

    std::vector<InvariantRelation> out;
    int G = static_cast<int>(groups.size());

    if (n <= 4) {
        // Small enough to filter every subset of swap-orbit groups directly.
        for (std::uint64_t mask = 0; mask < (1ull << G); ++mask) {
            std::vector<char> yes = base;
            for (int g = 0; g < G; ++g)
                if ((mask >> g) & 1ull)
                    for (int idx : groups[static_cast<std::size_t>(g)])
                        yes[static_cast<std::size_t>(idx)] = 1;
            if (!find_transitivity_violation(tab, yes, nullptr, nullptr, nullptr))
                out.push_back(InvariantRelation::from_types_unchecked(n, yes));
        }
        return out;
    }

    // n = 5: depth-first search over groups with transitive closure, so only
    // closed candidates are visited.
    std::vector<char> excluded(static_cast<std::size_t>(G), 0);
    auto closure_consistent = [&](std::vector<char>& yes) {
        transitive_close(tab, yes);
        for (int i = 0; i < tab.size(); ++i)
            if (yes[static_cast<std::size_t>(i)]) {
                int g = group_of[static_cast<std::size_t>(i)];
                if (g >= 0 && excluded[static_cast<std::size_t>(g)]) return false;
            }
        return true;
    };
    auto dfs = [&](auto&& self, int g, std::vector<char> yes) -> void {
        while (g < G && yes[static_cast<std::size_t>(groups[static_cast<std::size_t>(g)][0])]) ++g;
        if (g == G) {
            out.push_back(InvariantRelation::from_types_unchecked(n, std::move(yes)));
            return;
        }
        excluded[static_cast<std::size_t>(g)] = 1;
        self(self, g + 1, yes);
        excluded[static_cast<std::size_t>(g)] = 0;
        for (int idx : groups[static_cast<std::size_t>(g)]) yes[static_cast<std::size_t>(idx)] = 1;
        if (closure_consistent(yes)) self(self, g + 1, std::move(yes));
    };
    dfs(dfs, 0, base);
    return out;
}

std::vector<InvariantRelation> sample(int n, std::uint64_t seed, int count) {
    if (n < 1 || n > 8) throw error("sample: supported for n in [1,8]");
    if (count < 0) throw error("sample: negative count");
    const TypeTable& tab = TypeTable::get(n);
    std::mt19937_64 rng(seed);
    auto rng_below = [&rng](std::uint64_t m) {
        return static_cast<int>(rng() % m);  // tiny bias is irrelevant here
    };

    std::vector<int> nondiag;
    for (int i = 0; i < tab.size(); ++i)
        if (!tab.at(i).diagonal()) nondiag.push_back(i);

    std::uint32_t all = 1u << n;
    std::vector<InvariantRelation> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int s = 0; s < count; ++s) {
        // Seed a few generator orbits, then take the equivalence closure over
        // concrete concepts; the result is invariant by construction.
        std::vector<char> gen(static_cast<std::size_t>(tab.size()), 0);
        for (int i = 0; i < tab.size(); ++i)
            if (tab.at(i).diagonal()) gen[static_cast<std::size_t>(i)] = 1;
        int picks = 1 + rng_below(3);
        for (int p = 0; p < picks && !nondiag.empty(); ++p) {
            int idx = nondiag[static_cast<std::size_t>(rng_below(nondiag.size()))];
            gen[static_cast<std::size_t>(idx)] = 1;
            gen[static_cast<std::size_t>(tab.index(tab.at(idx).swapped()))] = 1;
        }

        UnionFind uf(static_cast<int>(all));
        for (std::uint32_t xb = 0; xb < all; ++xb)
            for (std::uint32_t yb = xb + 1; yb < all; ++yb)
                if (gen[static_cast<std::size_t>(tab.index_bits(xb, yb))])
                    uf.unite(static_cast<int>(xb), static_cast<int>(yb));

        std::vector<char> yes(static_cast<std::size_t>(tab.size()), 0);
        for (int i = 0; i < tab.size(); ++i) {
            auto [xb, yb] = representative_pair(tab.at(i));
            if (uf.find(static_cast<int>(xb)) == uf.find(static_cast<int>(yb)))
                yes[static_cast<std::size_t>(i)] = 1;
        }
        out.push_back(InvariantRelation::from_types_unchecked(n, std::move(yes)));
    }
    return out;
}

std::vector<bool> duplicate_flags(const std::vector<InvariantRelation>& relations) {
    std::vector<bool> out(relations.size(), false);
    std::set<std::vector<char>> seen;
    for (std::size_t i = 0; i < relations.size(); ++i)
        out[i] = !seen.insert(relations[i].yes_mask()).second;
    return out;
}

}  // namespace bicard
