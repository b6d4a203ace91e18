#pragma once

#include <array>
#include <string>
#include <vector>

#include "bicard/relation.hpp"

namespace bicard {

/// Size comparison collapsed to a finite universe: some finite multiple of
/// |Y| covers |X|, which holds unless Y is empty while X is not.
bool tri_le_concepts(const Concept& X, const Concept& Y);

/// Equinumerous, disjoint, jointly exhaustive, both sides nonempty:
/// exactly the complement pairs away from the extremes.
/// Requires |X| = |Y|.
bool almost_complementary(const Concept& X, const Concept& Y);

/// Some third concept of the same size escapes both difference bounds.
/// Requires |X| = |Y|. At finite scale this collapses to X = Y with
/// 0 < |X| < n.
bool symmetric_pair(const Concept& X, const Concept& Y);

/// Distinct, related, neither almost complementary nor symmetric.
bool opportune(const InvariantRelation& E, const Concept& X, const Concept& Y);

/// The two differences have equal size (finitely: |X| = |Y|).
bool relatively_finite(const Concept& X, const Concept& Y);

/// A bijection between two equinumerous concepts, as an explicit map.
class ConceptBijection {
public:
    ConceptBijection(const Concept& dom, const Concept& rng,
                     const std::vector<std::pair<int, int>>& pairs);

    /// Fixes dom∩rng pointwise, maps the rest in ascending order.
    static ConceptBijection canonical(const Concept& dom, const Concept& rng);

    const Concept& dom() const { return dom_; }
    const Concept& rng() const { return rng_; }
    int apply(int x) const;
    Concept image(const Concept& sub) const;  // sub must lie inside dom
    ConceptBijection inverse() const;
    bool fixes_overlap() const;  // identity on dom∩rng

private:
    ConceptBijection(const Concept& dom, const Concept& rng)
        : dom_(dom), rng_(rng) {
        img_.fill(-1);
    }
    Concept dom_, rng_;
    std::array<int, kMaxN> img_;
};

/// Rebuilds f so that it fixes dom∩rng pointwise (required by the shuttle).
ConceptBijection normalize_fixing_overlap(const ConceptBijection& f);

enum class StageTag { AtoX, ExtoX, AtoS, ExttoS };
std::string to_string(StageTag tag);

struct ShuttleStage {
    StageTag tag;
    Permutation perm;         // the stage permutation
    Concept moved;            // its support: the stage block and its image
    Concept x_after, y_after; // running pair after this stage
    bool class_preserved = false;
    std::string route;        // which auxiliary region was used, if any
};

struct ShuttleTrace {
    std::vector<ShuttleStage> stages;
    Permutation composite;
    Concept x_final, y_final;
    bool ok = false;  // composite lands on the target and every stage checked out

    ShuttleTrace(int n)
        : composite(Permutation::identity(n)),
          x_final(Concept::empty(n)),
          y_final(Concept::empty(n)) {}
};

/// Moves X onto Z through four permutation stages, each supported exactly on
/// one block of Z and its image, and each preserving the E-class of the
/// running copy of X. Requires opportune(E, X, Y), |Z| = |X|, and a bijection
/// f : X -> Z fixing X∩Z pointwise.
ShuttleTrace shuttle(const InvariantRelation& E, const Concept& X, const Concept& Y,
                     const Concept& Z, const ConceptBijection& f);

std::string format_trace(const ShuttleTrace& trace);

}  // namespace bicard
