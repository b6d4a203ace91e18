#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicard {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxN = 16;

/// A finite first-order universe {0,...,n-1}. Identity is structural.
struct Universe {
    int n;

    explicit Universe(int n_) : n(n_) {
        if (n < 1 || n > kMaxN)
            throw error("universe size must be in [1," + std::to_string(kMaxN) + "]");
    }
    bool operator==(const Universe&) const = default;
};

/// A concept: a subset of {0,...,n-1}, stored as a bitset. Immutable value.
class Concept {
public:
    Concept(std::uint32_t bits, int n) : bits_(bits), n_(n) {
        if (n < 1 || n > kMaxN) throw error("concept: universe size out of range");
        if (bits_ & ~mask(n_)) throw error("concept: support exceeds universe");
    }
    Concept(std::uint32_t bits, const Universe& u) : Concept(bits, u.n) {}

    static Concept empty(int n) { return Concept(0u, n); }
    static Concept full(int n) { return Concept(mask(n), n); }
    static Concept of(std::initializer_list<int> xs, int n) {
        std::uint32_t b = 0;
        for (int x : xs) {
            if (x < 0 || x >= n) throw error("concept: element out of range");
            b |= 1u << x;
        }
        return Concept(b, n);
    }

    std::uint32_t bits() const { return bits_; }
    int n() const { return n_; }
    int size() const { return std::popcount(bits_); }
    bool is_empty() const { return bits_ == 0; }
    bool contains(int x) const { return (bits_ >> x) & 1u; }

    Concept complement() const { return Concept(~bits_ & mask(n_), n_); }
    Concept intersect(const Concept& o) const { return binop(o, bits_ & o.bits_); }
    Concept unite(const Concept& o) const { return binop(o, bits_ | o.bits_); }
    Concept minus(const Concept& o) const { return binop(o, bits_ & ~o.bits_); }
    Concept sym_diff(const Concept& o) const { return binop(o, bits_ ^ o.bits_); }
    bool subset_of(const Concept& o) const { return (bits_ & ~o.bits_) == 0; }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (int x = 0; x < n_; ++x)
            if (contains(x)) out.push_back(x);
        return out;
    }

    std::string str() const;

    auto operator<=>(const Concept&) const = default;

    static std::uint32_t mask(int n) { return (n == 32) ? ~0u : ((1u << n) - 1u); }

private:
    Concept binop(const Concept& o, std::uint32_t b) const {
        if (n_ != o.n_) throw error("concept: universe mismatch");
        return Concept(b, n_);
    }

    std::uint32_t bits_;
    int n_;
};

/// Orbit invariant of a concept pair under the symmetric group:
/// the four region counts (|X∩Y|, |X−Y|, |Y−X|, |M−(X∪Y)|).
struct PairType {
    int a = 0, b = 0, c = 0, d = 0;

    int n() const { return a + b + c + d; }
    int x() const { return a + b; }    // |X|
    int y() const { return a + c; }    // |Y|
    int sd() const { return b + c; }   // |X△Y|
    int csd() const { return a + d; }  // |M−(X△Y)|

    PairType swapped() const { return {a, c, b, d}; }
    PairType dual() const { return {d, b, c, a}; }
    bool diagonal() const { return b == 0 && c == 0; }

    auto operator<=>(const PairType&) const = default;

    std::string str() const;
};

/// A permutation of {0,...,n-1}.
class Permutation {
public:
    static Permutation identity(int n);
    static Permutation from_images(const std::vector<int>& images);

    int n() const { return n_; }
    int apply(int x) const { return img_[static_cast<std::size_t>(x)]; }
    Concept apply(const Concept& X) const;

    /// this then other: (other ∘ this)(x) = other(this(x)).
    Permutation then(const Permutation& other) const;
    Permutation inverse() const;
    bool is_identity() const;

    /// Elements moved by the permutation.
    Concept support() const;

    auto operator<=>(const Permutation&) const = default;

    std::string cycle_str() const;

private:
    Permutation(int n) : n_(n) { img_.fill(0); }
    std::array<std::uint8_t, kMaxN> img_;
    int n_ = 0;
};

/// An injective partial map whose domain and range are disjoint subsets
/// of the universe. Induces an involution swapping x with f(x).
class PartialInjection {
public:
    PartialInjection(int n) : n_(n) {}

    void add(int from, int to);
    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    Concept domain() const;
    Concept range() const;

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;
};

PairType pair_type(const Concept& X, const Concept& Y);

/// Raw-bits version for hot loops; no universe checks.
inline PairType pair_type_bits(std::uint32_t xb, std::uint32_t yb, int n) {
    int a = std::popcount(xb & yb);
    int b = std::popcount(xb & ~yb);
    int c = std::popcount(yb & ~xb);
    return {a, b, c, n - a - b - c};
}

/// |X|=|Y| and |M−X|=|M−Y| (the latter is automatic at finite n).
bool bicardinal(const Concept& X, const Concept& Y);

Concept apply_permutation(const Permutation& p, const Concept& X);

Permutation induced_permutation(const PartialInjection& f, const Universe& u);

/// All pair types over a size-n universe, lexicographically ordered.
std::vector<PairType> orbit_types(int n);
int type_count(int n);  // C(n+3, 3)

/// Index <-> PairType for a fixed n, with O(1) lookup from region counts.
class TypeTable {
public:
    explicit TypeTable(int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(types_.size()); }
    const PairType& at(int idx) const { return types_[static_cast<std::size_t>(idx)]; }
    const std::vector<PairType>& types() const { return types_; }

    int index(const PairType& t) const {
        if (t.n() != n_) throw error("pair type has wrong universe size");
        return index_abc(t.a, t.b, t.c);
    }
    int index_abc(int a, int b, int c) const {
        return packed_[static_cast<std::size_t>((a * 17 + b) * 17 + c)];
    }
    int index_bits(std::uint32_t xb, std::uint32_t yb) const {
        int a = std::popcount(xb & yb);
        int b = std::popcount(xb & ~yb);
        int c = std::popcount(yb & ~xb);
        return index_abc(a, b, c);
    }

    static const TypeTable& get(int n);

private:
    int n_;
    std::vector<PairType> types_;
    std::vector<std::int16_t> packed_;
};

/// A permutation carrying (X1,Y1) onto (X2,Y2); requires equal pair types.
/// Built region-by-region, so it also witnesses orbit completeness.
Permutation carrying_permutation(const Concept& X1, const Concept& Y1,
                                 const Concept& X2, const Concept& Y2);

}  // namespace bicard
