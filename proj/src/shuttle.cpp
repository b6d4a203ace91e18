#include "bicard/shuttle.hpp"

#include <algorithm>
#include <sstream>

namespace bicard {

namespace {

// Finite collapse of "finitely many copies of q cover p".
bool tri_le_counts(int p, int q) { return q >= 1 || p == 0; }

void require_same_slice(const Concept& X, const Concept& Y, const char* who) {
    if (X.n() != Y.n()) throw error(std::string(who) + ": universe mismatch");
    if (X.size() != Y.size()) throw error(std::string(who) + ": concepts must be equinumerous");
}

Permutation involution_from_pairs(int n, const std::vector<std::pair<int, int>>& swaps) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    for (const auto& [u, v] : swaps) {
        img[static_cast<std::size_t>(u)] = v;
        img[static_cast<std::size_t>(v)] = u;
    }
    return Permutation::from_images(img);
}

// The covered route: block elements are shuttled through a disjoint
// auxiliary region W in chunks, three involutions per chunk, composed so the
// chunk's net effect swaps it with its image while W returns to place.
Permutation covered_stage(int n, const std::vector<int>& block,
                          const std::vector<int>& target,  // target[i] pairs with block[i]
                          const std::vector<int>& w) {
    if (block.empty()) return Permutation::identity(n);
    if (w.empty()) throw error("shuttle: no auxiliary region available");
    Permutation stage = Permutation::identity(n);
    std::size_t chunk = w.size();
    for (std::size_t start = 0; start < block.size(); start += chunk) {
        std::size_t len = std::min(chunk, block.size() - start);
        std::vector<std::pair<int, int>> p_swaps, q_swaps, r_swaps;
        for (std::size_t t = 0; t < len; ++t) {
            int wt = w[t];
            int zt = block[start + t];
            int ft = target[start + t];
            p_swaps.emplace_back(wt, zt);
            q_swaps.emplace_back(zt, ft);
            r_swaps.emplace_back(wt, ft);
        }
        Permutation p = involution_from_pairs(n, p_swaps);
        Permutation q = involution_from_pairs(n, q_swaps);
        Permutation r = involution_from_pairs(n, r_swaps);
        Permutation s = r.then(q).then(p);  // s(x) = p(q(r(x)))
        stage = stage.then(s);
    }
    return stage;
}

Permutation swap_stage(int n, const std::vector<int>& block, const std::vector<int>& target) {
    std::vector<std::pair<int, int>> swaps;
    for (std::size_t i = 0; i < block.size(); ++i) swaps.emplace_back(block[i], target[i]);
    return involution_from_pairs(n, swaps);
}

}  // namespace

bool tri_le_concepts(const Concept& X, const Concept& Y) {
    if (X.n() != Y.n()) throw error("tri_le: universe mismatch");
    return tri_le_counts(X.size(), Y.size());
}

bool almost_complementary(const Concept& X, const Concept& Y) {
    require_same_slice(X, Y, "almost_complementary");
    PairType t = pair_type(X, Y);
    // Almost complementary: none of the four coverings succeeds.
    bool any = tri_le_counts(t.c, t.a) || tri_le_counts(t.b, t.a) ||
               tri_le_counts(t.b, t.d) || tri_le_counts(t.c, t.d);
    return !any;
}

bool symmetric_pair(const Concept& X, const Concept& Y) {
    require_same_slice(X, Y, "symmetric_pair");
    int n = X.n();
    std::uint32_t all = 1u << n;
    Concept uni = X.unite(Y);
    for (std::uint32_t zb = 0; zb < all; ++zb) {
        if (std::popcount(zb) != X.size()) continue;
        if (zb == X.bits() || zb == Y.bits()) continue;
        Concept Z(zb, n);
        int escape = Z.minus(uni).size();
        bool covered = tri_le_counts(escape, X.minus(Y).size()) ||
                       tri_le_counts(escape, Y.minus(X).size());
        if (!covered) return true;
    }
    return false;
}

bool opportune(const InvariantRelation& E, const Concept& X, const Concept& Y) {
    if (X.n() != E.n() || Y.n() != E.n()) throw error("opportune: universe mismatch");
    if (X == Y) return false;
    if (X.size() != Y.size()) return false;
    if (!E.holds(X, Y)) return false;
    return !almost_complementary(X, Y) && !symmetric_pair(X, Y);
}

bool relatively_finite(const Concept& X, const Concept& Y) {
    if (X.n() != Y.n()) throw error("relatively_finite: universe mismatch");
    return X.minus(Y).size() == Y.minus(X).size();
}

ConceptBijection::ConceptBijection(const Concept& dom, const Concept& rng,
                                   const std::vector<std::pair<int, int>>& pairs)
    : ConceptBijection(dom, rng) {
    if (dom.n() != rng.n()) throw error("bijection: universe mismatch");
    if (dom.size() != rng.size()) throw error("bijection: sides not equinumerous");
    std::uint32_t seen_dom = 0, seen_rng = 0;
    for (const auto& [u, v] : pairs) {
        if (!dom.contains(u) || !rng.contains(v)) throw error("bijection: pair out of range");
        if ((seen_dom >> u) & 1u) throw error("bijection: domain element repeated");
        if ((seen_rng >> v) & 1u) throw error("bijection: range element repeated");
        seen_dom |= 1u << u;
        seen_rng |= 1u << v;
        img_[static_cast<std::size_t>(u)] = v;
    }
    if (seen_dom != dom.bits()) throw error("bijection: domain not fully mapped");
}

ConceptBijection ConceptBijection::canonical(const Concept& dom, const Concept& rng) {
    std::vector<std::pair<int, int>> pairs;
    for (int u : dom.intersect(rng).elements()) pairs.emplace_back(u, u);
    auto only_dom = dom.minus(rng).elements();
    auto only_rng = rng.minus(dom).elements();
    for (std::size_t i = 0; i < only_dom.size(); ++i)
        pairs.emplace_back(only_dom[i], only_rng[i]);
    return ConceptBijection(dom, rng, pairs);
}

int ConceptBijection::apply(int x) const {
    if (!dom_.contains(x)) throw error("bijection: argument outside domain");
    return img_[static_cast<std::size_t>(x)];
}

Concept ConceptBijection::image(const Concept& sub) const {
    if (!sub.subset_of(dom_)) throw error("bijection: image of non-subset");
    std::uint32_t b = 0;
    for (int u : sub.elements()) b |= 1u << apply(u);
    return Concept(b, dom_.n());
}

ConceptBijection ConceptBijection::inverse() const {
    std::vector<std::pair<int, int>> pairs;
    for (int u : dom_.elements()) pairs.emplace_back(apply(u), u);
    return ConceptBijection(rng_, dom_, pairs);
}

bool ConceptBijection::fixes_overlap() const {
    for (int u : dom_.intersect(rng_).elements())
        if (apply(u) != u) return false;
    return true;
}

ConceptBijection normalize_fixing_overlap(const ConceptBijection& f) {
    if (f.fixes_overlap()) return f;
    return ConceptBijection::canonical(f.dom(), f.rng());
}

std::string to_string(StageTag tag) {
    switch (tag) {
        case StageTag::AtoX: return "AtoX";
        case StageTag::ExtoX: return "ExtoX";
        case StageTag::AtoS: return "AtoS";
        case StageTag::ExttoS: return "ExttoS";
    }
    return "?";
}

ShuttleTrace shuttle(const InvariantRelation& E, const Concept& X, const Concept& Y,
                     const Concept& Z, const ConceptBijection& f) {
    int n = E.n();
    if (X.n() != n || Y.n() != n || Z.n() != n) throw error("shuttle: universe mismatch");
    if (!opportune(E, X, Y)) throw error("shuttle: pair is not opportune");
    if (!relatively_finite(X, Z)) throw error("shuttle: target not relatively finite");
    if (f.dom() != X || f.rng() != Z) throw error("shuttle: bijection must map X onto Z");
    if (!f.fixes_overlap())
        throw error("shuttle: bijection must fix X∩Z pointwise (see normalize_fixing_overlap)");

    ConceptBijection g_inv = f.inverse();

    // Split the target along how it sits relative to X and Y.
    Concept gXmY = f.image(X.minus(Y));
    Concept gXiY = f.image(X.intersect(Y));
    Concept z1 = gXmY.intersect(Y.minus(X));
    Concept z2 = gXmY.minus(Y).minus(X);
    Concept z3 = gXiY.intersect(Y.minus(X));
    Concept z4 = gXiY.minus(Y).minus(X);
    Concept z5 = X.intersect(Z);
    if (z1.unite(z2).unite(z3).unite(z4).unite(z5) != Z ||
        z1.size() + z2.size() + z3.size() + z4.size() + z5.size() != Z.size())
        throw error("shuttle: internal block decomposition failed");

    ShuttleTrace trace(n);
    Concept x_cur = X, y_cur = Y;
    Permutation composite = Permutation::identity(n);
    bool all_ok = true;

    auto run_stage = [&](StageTag tag, const Concept& block, const Permutation& perm,
                         const std::string& route) {
        ShuttleStage st{tag,
                        perm,
                        perm.support(),
                        Concept::empty(n),
                        Concept::empty(n),
                        false,
                        route};
        // Fixed-point law: the stage moves exactly its block and the
        // block's mirror, nothing else.
        Concept expected = block.unite(g_inv.image(block));
        if (st.moved != expected) all_ok = false;
        x_cur = perm.apply(x_cur);
        y_cur = perm.apply(y_cur);
        st.x_after = x_cur;
        st.y_after = y_cur;
        st.class_preserved = E.holds(x_cur, X);
        if (!st.class_preserved) all_ok = false;
        composite = composite.then(perm);
        trace.stages.push_back(std::move(st));
    };

    auto targets_of = [&](const Concept& block) {
        std::vector<int> t;
        for (int z : block.elements()) t.push_back(g_inv.apply(z));
        return t;
    };

    // Stage 1: the part of the target inside Y−X that mirrors X−Y.
    {
        std::string route;
        Permutation perm = Permutation::identity(n);
        if (!z1.is_empty()) {
            Concept core = X.intersect(Y);
            Concept exterior = X.unite(Y).complement();
            const Concept& w = !core.is_empty() ? core : exterior;
            route = !core.is_empty() ? "via intersection" : "via exterior";
            perm = covered_stage(n, z1.elements(), targets_of(z1), w.elements());
        }
        run_stage(StageTag::AtoX, z1, perm, route);
    }

    // Stage 2: the part outside both, swapped with its mirror in X−Y.
    run_stage(StageTag::ExtoX, z2,
              z2.is_empty() ? Permutation::identity(n)
                            : swap_stage(n, z2.elements(), targets_of(z2)),
              "");

    // Stage 3: the part inside Y−X mirroring X∩Y, swapped directly.
    run_stage(StageTag::AtoS, z3,
              z3.is_empty() ? Permutation::identity(n)
                            : swap_stage(n, z3.elements(), targets_of(z3)),
              "");

    // Stage 4: the part outside both mirroring X∩Y, shuttled through a
    // difference region of the running pair.
    {
        std::string route;
        Permutation perm = Permutation::identity(n);
        if (!z4.is_empty()) {
            Concept left = x_cur.minus(y_cur);
            Concept right = y_cur.minus(x_cur);
            const Concept& w = !left.is_empty() ? left : right;
            route = !left.is_empty() ? "via left difference" : "via right difference";
            perm = covered_stage(n, z4.elements(), targets_of(z4), w.elements());
        }
        run_stage(StageTag::ExttoS, z4, perm, route);
    }

    trace.composite = composite;
    trace.x_final = x_cur;
    trace.y_final = y_cur;
    trace.ok = all_ok && (x_cur == Z);
    return trace;
}

std::string format_trace(const ShuttleTrace& trace) {
    std::ostringstream os;
    for (const ShuttleStage& st : trace.stages) {
        os << to_string(st.tag) << ": " << st.perm.cycle_str() << " moved=" << st.moved.str()
           << " X->" << st.x_after.str() << " class " << (st.class_preserved ? "ok" : "BROKEN");
        if (!st.route.empty()) os << " (" << st.route << ")";
        os << '\n';
    }
    os << "composite: " << trace.composite.cycle_str() << " X->" << trace.x_final.str()
       << (trace.ok ? " [ok]" : " [FAILED]") << '\n';
    return os.str();
}

}  // namespace bicard
