#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bicard/core.hpp"

namespace bicard {

/// Why a candidate type set fails to be an invariant equivalence relation.
struct ValidationReport {
    bool reflexive = false;   // all diagonal types present
    bool symmetric = false;   // closed under swapping the two difference counts
    bool transitive = false;  // no concept triple breaks transitivity
    std::optional<PairType> missing_diagonal;
    std::optional<PairType> asymmetric_type;
    // A violating triple (X,Y,Z): related, related, yet unrelated ends.
    std::optional<std::array<Concept, 3>> counterexample;

    bool ok() const { return reflexive && symmetric && transitive; }
    std::string describe() const;
};

ValidationReport validate(const std::vector<PairType>& types, int n);

/// A permutation-invariant equivalence relation on concepts over {0,...,n-1},
/// stored as its set of accepted pair types. Construction validates.
class InvariantRelation {
public:
    static InvariantRelation from_types(int n, const std::vector<PairType>& types);
    /// Skips validation; caller guarantees the type set is a valid relation.
    static InvariantRelation from_types_unchecked(int n, std::vector<char> yes);

    int n() const { return n_; }

    bool holds(const Concept& X, const Concept& Y) const;
    bool holds_bits(std::uint32_t xb, std::uint32_t yb) const {
        return yes_[static_cast<std::size_t>(table_->index_bits(xb, yb))] != 0;
    }
    bool has_type(const PairType& t) const;
    bool has_index(int idx) const { return yes_[static_cast<std::size_t>(idx)] != 0; }

    std::vector<PairType> yes_types() const;
    const std::vector<char>& yes_mask() const { return yes_; }

    /// Canonical text form: one "a b c d" line per accepted type, sorted.
    std::string serialize() const;
    static InvariantRelation deserialize(const std::string& text, int n);

    bool operator==(const InvariantRelation& o) const {
        return n_ == o.n_ && yes_ == o.yes_;
    }

private:
    InvariantRelation(int n, std::vector<char> yes);
    int n_;
    std::vector<char> yes_;
    const TypeTable* table_;
};

/// Built-in relations: BLV, HP, BP, NP, LCP, CP, NewV, E0, TOTAL.
InvariantRelation catalog(const std::string& name, int n);
std::vector<std::string> catalog_names();

/// Complement view: accepted types with intersection and outside counts swapped.
InvariantRelation dualize(const InvariantRelation& E);

/// Every pair related by `finer` is related by `coarser`.
bool refines(const InvariantRelation& finer, const InvariantRelation& coarser);

/// All invariant equivalence relations over n, each exactly once, in a
/// deterministic order. Exhaustive search is capped at n <= 4; pass
/// allow_large to permit n = 5.
std::vector<InvariantRelation> enumerate_all(int n, bool allow_large = false);

/// `count` pseudo-random invariant equivalence relations (n <= 8),
/// reproducible from the seed. Duplicates are possible.
std::vector<InvariantRelation> sample(int n, std::uint64_t seed, int count);

/// duplicate[i] is true when relations[i] already occurred at some j < i.
std::vector<bool> duplicate_flags(const std::vector<InvariantRelation>& relations);

}  // namespace bicard
