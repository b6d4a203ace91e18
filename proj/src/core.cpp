#include "bicard/core.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace bicard {

std::string Concept::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int x = 0; x < n_; ++x) {
        if (!contains(x)) continue;
        if (!first) os << ',';
        os << x;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string PairType::str() const {
    std::ostringstream os;
    os << '(' << a << ',' << b << ',' << c << ',' << d << ')';
    return os.str();
}

Permutation Permutation::identity(int n) {
    if (n < 1 || n > kMaxN) throw error("permutation: universe size out of range");
    Permutation p(n);
    for (int i = 0; i < n; ++i) p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return p;
}

Permutation Permutation::from_images(const std::vector<int>& images) {
    int n = static_cast<int>(images.size());
    Permutation p = identity(n);
    std::uint32_t seen = 0;
    for (int i = 0; i < n; ++i) {
        int v = images[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n) throw error("permutation: image out of range");
        if (seen & (1u << v)) throw error("permutation: images not injective");
        seen |= 1u << v;
        p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
    }
    return p;
}

Concept Permutation::apply(const Concept& X) const {
    if (X.n() != n_) throw error("permutation: universe mismatch");
    std::uint32_t out = 0;
    for (int i = 0; i < n_; ++i)
        if (X.contains(i)) out |= 1u << apply(i);
    return Concept(out, n_);
}

Permutation Permutation::then(const Permutation& other) const {
    if (other.n_ != n_) throw error("permutation: universe mismatch");
    Permutation out = identity(n_);
    for (int i = 0; i < n_; ++i)
        out.img_[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(other.apply(apply(i)));
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out = identity(n_);
    for (int i = 0; i < n_; ++i) out.img_[static_cast<std::size_t>(apply(i))] = static_cast<std::uint8_t>(i);
    return out;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n_; ++i)
        if (apply(i) != i) return false;
    return true;
}

Concept Permutation::support() const {
    std::uint32_t b = 0;
    for (int i = 0; i < n_; ++i)
        if (apply(i) != i) b |= 1u << i;
    return Concept(b, n_);
}

std::string Permutation::cycle_str() const {
    std::ostringstream os;
    std::uint32_t done = 0;
    bool any = false;
    for (int i = 0; i < n_; ++i) {
        if ((done >> i) & 1u) continue;
        if (apply(i) == i) continue;
        os << '(';
        int j = i;
        bool first = true;
        do {
            if (!first) os << ' ';
            os << j;
            done |= 1u << j;
            j = apply(j);
            first = false;
        } while (j != i);
        os << ')';
        any = true;
    }
    if (!any) return "id";
    return os.str();
}

void PartialInjection::add(int from, int to) {
    if (from < 0 || from >= n_ || to < 0 || to >= n_)
        throw error("partial injection: element out of range");
    for (const auto& [f, t] : pairs_) {
        if (f == from) throw error("partial injection: domain element repeated");
        if (t == to) throw error("partial injection: range element repeated");
    }
    pairs_.emplace_back(from, to);
    // Domain and range must stay disjoint so the induced involution is well defined.
    if (domain().intersect(range()).size() != 0)
        throw error("partial injection: domain meets range");
}

Concept PartialInjection::domain() const {
    std::uint32_t b = 0;
    for (const auto& [f, t] : pairs_) b |= 1u << f;
    return Concept(b, n_);
}

Concept PartialInjection::range() const {
    std::uint32_t b = 0;
    for (const auto& [f, t] : pairs_) b |= 1u << t;
    return Concept(b, n_);
}

PairType pair_type(const Concept& X, const Concept& Y) {
    if (X.n() != Y.n()) throw error("pair type: universe mismatch");
    return pair_type_bits(X.bits(), Y.bits(), X.n());
}

bool bicardinal(const Concept& X, const Concept& Y) {
    if (X.n() != Y.n()) throw error("bicardinal: universe mismatch");
    return X.size() == Y.size();
}

Permutation induced_permutation(const PartialInjection& f, const Universe& u) {
    if (f.n() != u.n) throw error("induced permutation: universe mismatch");
    std::vector<int> img(static_cast<std::size_t>(u.n));
    for (int i = 0; i < u.n; ++i) img[static_cast<std::size_t>(i)] = i;
    for (const auto& [from, to] : f.pairs()) {
        img[static_cast<std::size_t>(from)] = to;
        img[static_cast<std::size_t>(to)] = from;
    }
    return Permutation::from_images(img);
}

std::vector<PairType> orbit_types(int n) {
    if (n < 1 || n > kMaxN) throw error("orbit types: universe size out of range");
    std::vector<PairType> out;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
            for (int c = 0; a + b + c <= n; ++c)
                out.push_back({a, b, c, n - a - b - c});
    std::sort(out.begin(), out.end());
    return out;
}

int type_count(int n) {
    return (n + 1) * (n + 2) * (n + 3) / 6;
}

TypeTable::TypeTable(int n) : n_(n), types_(orbit_types(n)), packed_(17 * 17 * 17, -1) {
    for (int i = 0; i < size(); ++i) {
        const PairType& t = types_[static_cast<std::size_t>(i)];
        packed_[static_cast<std::size_t>((t.a * 17 + t.b) * 17 + t.c)] =
            static_cast<std::int16_t>(i);
    }
}

const TypeTable& TypeTable::get(int n) {
    static std::mutex mu;
    static std::map<int, TypeTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, TypeTable(n)).first;
    return it->second;
}

Concept apply_permutation(const Permutation& p, const Concept& X) {
    return p.apply(X);
}

Permutation carrying_permutation(const Concept& X1, const Concept& Y1,
                                 const Concept& X2, const Concept& Y2) {
    if (X1.n() != Y1.n() || X1.n() != X2.n() || X1.n() != Y2.n())
        throw error("carrying permutation: universe mismatch");
    if (pair_type(X1, Y1) != pair_type(X2, Y2))
        throw error("carrying permutation: pair types differ");
    int n = X1.n();
    std::vector<int> img(static_cast<std::size_t>(n), -1);
    auto match = [&](const Concept& r1, const Concept& r2) {
        auto e1 = r1.elements();
        auto e2 = r2.elements();
        for (std::size_t i = 0; i < e1.size(); ++i)
            img[static_cast<std::size_t>(e1[i])] = e2[i];
    };
    match(X1.intersect(Y1), X2.intersect(Y2));
    match(X1.minus(Y1), X2.minus(Y2));
    match(Y1.minus(X1), Y2.minus(X2));
    match(X1.unite(Y1).complement(), X2.unite(Y2).complement());
    return Permutation::from_images(img);
}

}  // namespace bicard
