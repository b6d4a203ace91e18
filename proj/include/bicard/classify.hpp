#pragma once

#include <string>
#include <vector>

#include "bicard/relation.hpp"

namespace bicard {

enum class SliceProfile { Trivial, ProperSeparation, ProperComplementation, Violation };

std::string to_string(SliceProfile p);

/// Raw shape flags of one cardinality slice; these may overlap in
/// degenerate situations (one-concept slices, tiny universes).
struct SliceFlags {
    bool trivial = false;          // one block
    bool separative = false;       // all blocks singletons
    bool complementative = false;  // every block inside {X, complement of X}
};

/// Partition of the size-k slice into equivalence blocks, canonically ordered
/// (concepts ascending within a block, blocks by least member).
struct SlicePartition {
    int k = 0;
    std::vector<std::vector<Concept>> blocks;
};

SlicePartition slice_classes(const InvariantRelation& E, int k);

struct SliceReport {
    int k = 0;
    SliceFlags flags;
    SliceProfile profile = SliceProfile::Violation;
    bool degenerate_overlap = false;  // several raw flags at once
    bool exempt = false;              // overlap tolerated (n <= 2 or one-concept slice)
};

SliceReport classify_slice(const InvariantRelation& E, int k);

/// Every slice must land in exactly one of the three shapes.
struct TrichotomyReport {
    std::vector<SliceReport> slices;
    std::vector<int> violations;  // slice sizes with no admissible shape
    bool pass = false;
};

TrichotomyReport trichotomy_check(const InvariantRelation& E);

/// A nontrivial slice must be exactly all singletons or exactly all
/// complement pairs; nothing in between.
struct TightnessReport {
    std::vector<int> violating_k;
    bool pass = false;
};

TightnessReport check_tightness(const InvariantRelation& E);

}  // namespace bicard
