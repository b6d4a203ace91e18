#include "bicard/symcard.hpp"

#include <random>
#include <sstream>

namespace bicard {

SymCard::SymCard(long long finite) {
    if (finite < 0) throw error("symbolic cardinal: negative value");
    if (finite > 0) coeffs_.push_back(finite);
}

SymCard SymCard::omega() { return from_coeffs({0, 1}); }

SymCard SymCard::from_coeffs(std::vector<long long> coeffs) {
    for (long long c : coeffs)
        if (c < 0) throw error("symbolic cardinal: negative coefficient");
    SymCard s;
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
}

void SymCard::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

SymCard SymCard::operator+(const SymCard& o) const {
    std::vector<long long> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return from_coeffs(std::move(out));
}

SymCard SymCard::operator*(const SymCard& o) const {
    if (is_zero() || o.is_zero()) return SymCard();
    std::vector<long long> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return from_coeffs(std::move(out));
}

SymCard SymCard::scale(long long k) const {
    if (k < 0) throw error("symbolic cardinal: negative multiple");
    std::vector<long long> out = coeffs_;
    for (long long& c : out) c *= k;
    return from_coeffs(std::move(out));
}

std::strong_ordering SymCard::operator<=>(const SymCard& o) const {
    if (coeffs_.size() != o.coeffs_.size())
        return coeffs_.size() <=> o.coeffs_.size();
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] <=> o.coeffs_[i];
    return std::strong_ordering::equal;
}

std::string SymCard::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        if (i == 0)
            os << coeffs_[i];
        else {
            if (coeffs_[i] != 1) os << coeffs_[i] << "*";
            os << "w";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

SymCard card_add(const SymCard& a, const SymCard& b) { return a + b; }
SymCard card_mul(const SymCard& a, const SymCard& b) { return a * b; }
bool card_le(const SymCard& a, const SymCard& b) { return a <= b; }

bool tri_le(const SymCard& a, const SymCard& b) {
    // Some finite multiple of b reaches a exactly when b's scale is at
    // least a's (or a vanishes).
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    return b.degree() >= a.degree();
}

bool tri_lt(const SymCard& a, const SymCard& b) { return tri_le(a, b) && !tri_le(b, a); }

namespace {

// Independent reading of strict covering: every finite multiple of a stays
// strictly below b. Decided by bounded scan where a bound exists.
bool all_multiples_below(const SymCard& a, const SymCard& b) {
    if (a.is_zero()) return !b.is_zero();
    if (a.degree() > b.degree()) return false;
    if (a.degree() < b.degree()) return true;
    long long bound = b.coeffs().back() / a.coeffs().back() + 1;
    for (long long n = 1; n <= bound; ++n)
        if (!(a.scale(n) < b)) return false;
    return true;
}

struct Quad {
    SymCard x, y, z, w;
};

SymCard random_card(std::mt19937_64& rng) {
    int deg = static_cast<int>(rng() % 4);  // 0..3
    std::vector<long long> coeffs(static_cast<std::size_t>(deg) + 1);
    for (long long& c : coeffs) c = static_cast<long long>(rng() % 1000001);
    return SymCard::from_coeffs(std::move(coeffs));
}

using LawFn = bool (*)(const Quad&, bool* applicable);

bool law_total(const Quad& q, bool*) { return tri_le(q.x, q.y) || tri_le(q.y, q.x); }

bool law_additive(const Quad& q, bool* app) {
    *app = tri_le(q.x, q.y) && q.z <= q.w;
    return !*app || tri_le(q.x + q.z, q.y + q.w);
}

bool law_cancel(const Quad& q, bool* app) {
    *app = q.z == q.w && tri_lt(q.x + q.z, q.y + q.w);
    return !*app || tri_lt(q.x, q.y);
}

bool law_trans(const Quad& q, bool* app) {
    *app = tri_le(q.x, q.y) && tri_le(q.y, q.z);
    return !*app || tri_le(q.x, q.z);
}

bool law_split(const Quad& q, bool* app) {
    *app = tri_le(q.x, q.y + q.z);
    return !*app || tri_le(q.x, q.y) || tri_le(q.x, q.z);
}

bool law_split_eq(const Quad& q, bool* app) {
    *app = q.x == q.y + q.z;
    return !*app || tri_le(q.x, q.y) || tri_le(q.x, q.z);
}

bool law_strict_split(const Quad& q, bool* app) {
    *app = tri_lt(q.x, q.y + q.z);
    return !*app || tri_lt(q.x, q.y) || tri_lt(q.x, q.z);
}

bool law_self_split(const Quad& q, bool* app) {
    *app = tri_lt(q.x, q.x + q.y);
    return !*app || tri_lt(q.x, q.y);
}

bool law_left_split(const Quad& q, bool* app) {
    *app = tri_le(q.y + q.z, q.x);
    return !*app || (tri_le(q.y, q.x) && tri_le(q.z, q.x));
}

bool law_strict_left_split(const Quad& q, bool* app) {
    *app = tri_lt(q.y + q.z, q.x);
    return !*app || (tri_lt(q.y, q.x) && tri_lt(q.z, q.x));
}

bool law_expand(const Quad& q, bool* app) {
    *app = tri_lt(q.x, q.y);
    return !*app || tri_lt(q.x, q.y + q.z);
}

bool law_subst_left(const Quad& q, bool* app) {
    *app = tri_le(q.x + q.y, q.z) && q.w == q.y;
    return !*app || tri_le(q.x + q.w, q.z);
}

bool law_subst_right(const Quad& q, bool* app) {
    *app = tri_le(q.x, q.y + q.z) && q.w == q.y;
    return !*app || tri_le(q.x, q.w + q.z);
}

bool law_strict_subst_left(const Quad& q, bool* app) {
    *app = tri_lt(q.x + q.y, q.z) && q.w == q.y;
    return !*app || tri_lt(q.x + q.w, q.z);
}

bool law_strict_subst_right(const Quad& q, bool* app) {
    *app = tri_lt(q.x, q.y + q.z) && q.w == q.y;
    return !*app || tri_lt(q.x, q.w + q.z);
}

bool law_strict_iff_cofinal(const Quad& q, bool* app) {
    *app = true;
    return tri_lt(q.x, q.y) == all_multiples_below(q.x, q.y);
}

struct LawDef {
    const char* name;
    LawFn fn;
    // Pins make equality hypotheses fire instead of being vacuously true.
    bool pin_z_eq_w;
    bool pin_w_eq_y;
    bool pin_x_eq_sum;  // x := y + z
};

const LawDef kLaws[] = {
    {"totality", law_total, false, false, false},
    {"additive-monotonicity", law_additive, false, false, false},
    {"equal-summand-cancellation", law_cancel, true, false, false},
    {"transitivity", law_trans, false, false, false},
    {"split-over-sum", law_split, false, false, false},
    {"split-over-equal-sum", law_split_eq, false, false, true},
    {"strict-split-over-sum", law_strict_split, false, false, false},
    {"strict-self-sum-split", law_self_split, false, false, false},
    {"sum-below-splits", law_left_split, false, false, false},
    {"strict-sum-below-splits", law_strict_left_split, false, false, false},
    {"strict-expansion", law_expand, false, false, false},
    {"left-summand-substitution", law_subst_left, false, true, false},
    {"right-summand-substitution", law_subst_right, false, true, false},
    {"strict-left-summand-substitution", law_strict_subst_left, false, true, false},
    {"strict-right-summand-substitution", law_strict_subst_right, false, true, false},
    {"strict-iff-all-multiples-below", law_strict_iff_cofinal, false, false, false},
};

}  // namespace

LawSuiteReport law_suite(long long samples, std::uint64_t seed) {
    LawSuiteReport rep;
    rep.samples = samples;
    for (const LawDef& def : kLaws) rep.laws.push_back({def.name, 0, 0, ""});

    std::mt19937_64 rng(seed);
    for (long long s = 0; s < samples; ++s) {
        Quad q{random_card(rng), random_card(rng), random_card(rng), random_card(rng)};
        // Mix in degenerate shapes so edge cases get sampled too.
        if (rng() % 8 == 0) q.x = SymCard();
        if (rng() % 8 == 0) q.y = SymCard();
        for (std::size_t li = 0; li < std::size(kLaws); ++li) {
            Quad qq = q;
            if (kLaws[li].pin_z_eq_w) qq.w = qq.z;
            if (kLaws[li].pin_w_eq_y) qq.w = qq.y;
            if (kLaws[li].pin_x_eq_sum) qq.x = qq.y + qq.z;
            bool applicable = true;
            bool ok = kLaws[li].fn(qq, &applicable);
            if (!applicable) continue;
            LawResult& lr = rep.laws[li];
            ++lr.checked;
            if (!ok) {
                ++lr.failures;
                if (lr.counterexample.empty())
                    lr.counterexample = "x=" + qq.x.str() + " y=" + qq.y.str() +
                                        " z=" + qq.z.str() + " w=" + qq.w.str();
            }
        }
    }
    rep.pass = true;
    for (const LawResult& lr : rep.laws)
        if (lr.failures > 0 || lr.checked == 0) rep.pass = false;
    return rep;
}

}  // namespace bicard
