#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicard/abstraction.hpp"

namespace bicard {

/// The structure an operator induces on its own range: the carrier plus the
/// operator restricted to subsets of the carrier.
struct InducedModel {
    int n = 0;
    Concept carrier;
    AbstractionOperator op;

    InducedModel(int n_, Concept carrier_, AbstractionOperator op_)
        : n(n_), carrier(std::move(carrier_)), op(std::move(op_)) {}
};

InducedModel induced_model(const AbstractionOperator& op);

/// A carrier bijection commuting with the two operators on every subset of
/// the first carrier.
struct IsoWitness {
    std::vector<int> carrier1;  // ascending
    std::vector<int> gamma;     // gamma[i] = image of carrier1[i]
};

std::optional<IsoWitness> find_isomorphism(const InducedModel& m1, const InducedModel& m2);

/// The canonical candidate: send the value of X under the first operator to
/// its value under the second. True when that map is an isomorphism.
bool natural_bijection_check(const InvariantRelation& E, const AbstractionOperator& op1,
                             const AbstractionOperator& op2);

/// Every equinumerous pair of concepts no larger than the class count is
/// related.
bool ccoa(const InvariantRelation& E);

/// Every equinumerous pair whatsoever is related.
bool bicard_ccoa(const InvariantRelation& E);

struct RelcatReport {
    bool skipped = false;        // E unsatisfiable: no operators to compare
    long operators = 0;
    long long pairs_checked = 0;
    bool exhaustive = false;
    bool rc = false;             // all checked operator pairs isomorphic
    bool ccoa_flag = false;
    bool agrees = false;         // rc == ccoa_flag
    bool natural_is_iso_whenever_rc = false;
    // First non-isomorphic pair found, as operator indexes.
    std::optional<std::pair<long, long>> witness_pair;
    long long surjective_pairs = 0;
    bool surjective_all_iso = false;
    bool bicard_ccoa_flag = false;
    bool surjective_agrees = false;  // surjective_all_iso == bicard_ccoa
};

/// Compares induced models across operator pairs whose kernel is E.
/// Exhaustive when the pair count fits the budget, sampled otherwise.
RelcatReport relcat_verdict(const InvariantRelation& E, long long budget = 1000000,
                            std::uint64_t seed = 0);

}  // namespace bicard
