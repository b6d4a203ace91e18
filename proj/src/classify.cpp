#include "bicard/classify.hpp"

#include <algorithm>

namespace bicard {

std::string to_string(SliceProfile p) {
    switch (p) {
        case SliceProfile::Trivial: return "trivial";
        case SliceProfile::ProperSeparation: return "proper-separation";
        case SliceProfile::ProperComplementation: return "proper-complementation";
        case SliceProfile::Violation: return "violation";
    }
    return "?";
}

SlicePartition slice_classes(const InvariantRelation& E, int k) {
    int n = E.n();
    if (k < 0 || k > n) throw error("slice: cardinality out of range");
    SlicePartition part;
    part.k = k;
    std::uint32_t all = 1u << n;
    std::vector<std::uint32_t> slice;
    for (std::uint32_t xb = 0; xb < all; ++xb)
        if (std::popcount(xb) == k) slice.push_back(xb);

    std::vector<bool> used(slice.size(), false);
    for (std::size_t i = 0; i < slice.size(); ++i) {
        if (used[i]) continue;
        std::vector<Concept> block;
        for (std::size_t j = i; j < slice.size(); ++j) {
            if (used[j]) continue;
            if (E.holds_bits(slice[i], slice[j])) {
                block.emplace_back(slice[j], n);
                used[j] = true;
            }
        }
        part.blocks.push_back(std::move(block));
    }
    return part;
}

SliceReport classify_slice(const InvariantRelation& E, int k) {
    int n = E.n();
    SlicePartition part = slice_classes(E, k);
    SliceReport rep;
    rep.k = k;
    rep.flags.trivial = part.blocks.size() == 1;
    rep.flags.separative = true;
    rep.flags.complementative = true;
    for (const auto& block : part.blocks) {
        if (block.size() != 1) rep.flags.separative = false;
        bool pair = block.size() == 2 && block[0].complement() == block[1];
        if (!pair) rep.flags.complementative = false;
    }

    if (rep.flags.trivial)
        rep.profile = SliceProfile::Trivial;
    else if (rep.flags.separative)
        rep.profile = SliceProfile::ProperSeparation;
    else if (rep.flags.complementative)
        rep.profile = SliceProfile::ProperComplementation;
    else
        rep.profile = SliceProfile::Violation;

    int raw = (rep.flags.trivial ? 1 : 0) + (rep.flags.separative ? 1 : 0) +
              (rep.flags.complementative ? 1 : 0);
    rep.degenerate_overlap = raw > 1;
    std::size_t slice_size = 0;
    for (const auto& block : part.blocks) slice_size += block.size();
    rep.exempt = rep.degenerate_overlap && (n <= 2 || slice_size <= 1);
    return rep;
}

TrichotomyReport trichotomy_check(const InvariantRelation& E) {
    TrichotomyReport rep;
    for (int k = 0; k <= E.n(); ++k) {
        SliceReport sr = classify_slice(E, k);
        if (sr.profile == SliceProfile::Violation) rep.violations.push_back(k);
        rep.slices.push_back(sr);
    }
    rep.pass = rep.violations.empty();
    return rep;
}

TightnessReport check_tightness(const InvariantRelation& E) {
    TightnessReport rep;
    for (int k = 0; k <= E.n(); ++k) {
        SliceReport sr = classify_slice(E, k);
        if (sr.profile == SliceProfile::Trivial) continue;
        SlicePartition part = slice_classes(E, k);
        bool all_singletons = true, all_pairs = true;
        for (const auto& block : part.blocks) {
            if (block.size() != 1) all_singletons = false;
            bool pair = block.size() == 2 && block[0].complement() == block[1];
            if (!pair) all_pairs = false;
        }
        if (!all_singletons && !all_pairs) rep.violating_k.push_back(k);
    }
    rep.pass = rep.violating_k.empty();
    return rep;
}

}  // namespace bicard
