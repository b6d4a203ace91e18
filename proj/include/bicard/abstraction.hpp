#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicard/classify.hpp"
#include "bicard/relation.hpp"

namespace bicard {

/// A total map from concepts over {0,...,n-1} into the universe itself.
class AbstractionOperator {
public:
    AbstractionOperator(int n, std::vector<std::uint8_t> table);

    int n() const { return n_; }
    int apply(const Concept& X) const;
    int apply_bits(std::uint32_t xb) const { return table_[static_cast<std::size_t>(xb)]; }

    /// Elements actually hit by the operator.
    Concept range() const;
    bool surjective() const { return range().size() == n_; }

    /// The equivalence relation "same value"; throws if not invariant.
    InvariantRelation kernel() const;

    bool operator==(const AbstractionOperator&) const = default;

private:
    int n_;
    std::vector<std::uint8_t> table_;  // indexed by concept bits
};

int class_count(const InvariantRelation& E);

struct SatReport {
    long classes = 0;
    bool satisfiable = false;
    std::optional<AbstractionOperator> witness;
};

/// An operator realizing E as its kernel exists iff the classes fit into
/// the universe. The witness indexes classes by least member.
SatReport satisfiable(const InvariantRelation& E);

/// All operators whose kernel is E (injections of the class list into the
/// universe), in a deterministic order, up to `limit` of them.
std::vector<AbstractionOperator> kernel_operators(const InvariantRelation& E,
                                                  std::size_t limit);

enum class RestrictMode { Eq, Le };

/// Whether some invariant equivalence relation with enough room agrees with
/// E on the size-k slice (Eq), or on everything of size at most k (Le).
SatReport restricted_satisfiable(const InvariantRelation& E, int k, RestrictMode mode);

/// For even universes above four: a nontrivial middle slice already forces
/// more classes than the universe has elements.
struct MiddleSliceReport {
    bool applicable = false;
    bool nontrivial_middle = false;
    long classes = 0;
    bool confirmed = false;  // nontrivial middle implies too many classes
};

MiddleSliceReport check_middle_slice_blowup(const InvariantRelation& E);

/// An invariant relation is an indicator when every non-permutation self-map
/// of the universe breaks it on some concept pair.
struct IndicatorReport {
    bool indicator = false;
    long long maps_checked = 0;
    bool exhaustive = false;
    std::optional<std::vector<std::uint8_t>> unbroken_map;  // refutes indicator
};

IndicatorReport indicator_check(const InvariantRelation& E, long long budget,
                                std::uint64_t seed = 0);

/// Size classes that overflow / doubly overflow the universe.
bool expl_size(int k, int n);  // 2^k > n
bool top_size(int k, int n);   // both k and n-k overflow
bool expl(const Concept& X);
bool top(const Concept& X);

/// The finest candidate compatible with satisfiability: heavy slices merge
/// by cardinality, everything else stays alone.
InvariantRelation basal(int n);

struct TopTrivialityReport {
    bool applicable = false;  // E satisfiable
    std::vector<int> exceptions;  // heavy slice sizes that are not trivial
    bool pass = false;
};

TopTrivialityReport check_top_triviality(const InvariantRelation& E);

struct FinerReport {
    bool basal_is_identity = false;
    long relations_checked = 0;
    long satisfiable_count = 0;
    std::vector<std::string> violations;
    bool pass = false;
};

/// basal(n) refines every satisfiable invariant relation in a sweep:
/// exhaustive for n <= 4, sampled otherwise.
FinerReport finer_than_all_satisfiable(int n, std::uint64_t seed = 7, int samples = 2000);

}  // namespace bicard
