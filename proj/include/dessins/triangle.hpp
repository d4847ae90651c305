#pragma once

#include <array>
#include <optional>
#include <string>

#include "bigint.hpp"

namespace dessins {

/// An ordered triangle-group signature (l, m, n). Periods stay in the order
/// produced (associates are distinguished); catalog matching works on the
/// sorted multiset.
struct TriangleType {
    long l, m, n;

    TriangleType(long l_, long m_, long n_) : l(l_), m(m_), n(n_) {
        if (l < 1 || m < 1 || n < 1) throw std::invalid_argument("TriangleType: periods must be >= 1");
    }

    std::array<long, 3> sorted() const {
        std::array<long, 3> a{l, m, n};
        std::sort(a.begin(), a.end());
        return a;
    }

    bool operator==(const TriangleType&) const = default;
};

inline std::string to_string(const TriangleType& t) {
    return "(" + std::to_string(t.l) + "," + std::to_string(t.m) + "," + std::to_string(t.n) + ")";
}

inline bool is_hyperbolic(const TriangleType& t) {
    // 1/l + 1/m + 1/n < 1, exactly
    return t.m * t.n + t.l * t.n + t.l * t.m < t.l * t.m * t.n;
}

/// Riemann-Hurwitz genus of a regular dessin of the given type with
/// automorphism group of the given order: g = 1 + (N/2)(1 - 1/l - 1/m - 1/n).
/// A non-integral or negative value signals an invalid (type, order) pair.
inline BigInt rh_genus(const TriangleType& t, const BigInt& group_order) {
    if (group_order <= 0) throw std::invalid_argument("rh_genus: order must be positive");
    BigRat g = 1 + BigRat(group_order, 2) *
                       (1 - BigRat(1, t.l) - BigRat(1, t.m) - BigRat(1, t.n));
    if (boost::multiprecision::denominator(g) != 1)
        throw std::domain_error("rh_genus: non-integral genus for type " + to_string(t));
    BigInt gi = boost::multiprecision::numerator(g);
    if (gi < 0) throw std::domain_error("rh_genus: negative genus for type " + to_string(t));
    return gi;
}

/// Genus of an unbranched degree-index covering of a genus-g surface.
inline BigInt cover_genus(const BigInt& base_genus, const BigInt& index) {
    if (base_genus < 2) throw std::invalid_argument("cover_genus: base genus must be >= 2");
    if (index < 1) throw std::invalid_argument("cover_genus: index must be >= 1");
    return index * (base_genus - 1) + 1;
}

/// One row of the triangle-group inclusion catalog, with the normalizer
/// N_{super}(sub) and the resulting count |super : N| of mutually isomorphic
/// dessins on the common surface.
struct InclusionRecord {
    TriangleType sub, super;
    long index;
    bool normal;
    TriangleType normalizer;
    long dessin_count;
    std::string case_label;
};

namespace detail {

inline bool same_multiset(const TriangleType& a, const TriangleType& b) {
    return a.sorted() == b.sorted();
}

} // namespace detail

/// Catalog lookup: the inclusion (sub < super) between hyperbolic triangle
/// groups, if the pair matches one of the normal rows (a)-(c) or non-normal
/// rows (A)-(K). Types are matched as multisets.
inline std::optional<InclusionRecord> singerman_lookup(const TriangleType& sub,
                                                       const TriangleType& super) {
    using detail::same_multiset;
    auto S = sub.sorted();
    auto record = [&](long index, bool normal, TriangleType normalizer, long count,
                      std::string label) {
        return InclusionRecord{sub, super, index, normal, normalizer, count, std::move(label)};
    };

    // fixed non-normal rows
    struct FixedRow {
        std::array<long, 3> sub, super;
        long index;
        std::array<long, 3> normalizer;
        long count;
        const char* label;
    };
    static const FixedRow fixed[] = {
        {{7, 7, 7}, {2, 3, 7}, 24, {3, 3, 7}, 8, "(A)"},
        {{2, 7, 7}, {2, 3, 7}, 9, {2, 7, 7}, 9, "(B)"},
        {{3, 3, 7}, {2, 3, 7}, 8, {3, 3, 7}, 8, "(C)"},
        {{4, 8, 8}, {2, 3, 8}, 12, {2, 8, 8}, 6, "(D)"},
        {{3, 8, 8}, {2, 3, 8}, 10, {3, 8, 8}, 10, "(E)"},
        {{9, 9, 9}, {2, 3, 9}, 12, {3, 3, 9}, 4, "(F)"},
        {{4, 4, 5}, {2, 4, 5}, 6, {4, 4, 5}, 6, "(G)"},
    };
    auto P = super.sorted();
    for (const auto& r : fixed)
        if (S == r.sub && P == r.super)
            return record(r.index, false, TriangleType(r.normalizer[0], r.normalizer[1],
                                                        r.normalizer[2]), r.count, r.label);

    // (H) (n,4n,4n) <_6 (2,3,4n), n >= 2; normalizer (2,2n,4n), count 3
    if (S[1] == 4 * S[0] && S[2] == 4 * S[0] && S[0] >= 2) {
        long n = S[0];
        if (P == std::array<long, 3>{2, 3, 4 * n})
            return record(6, false, TriangleType(2, 2 * n, 4 * n), 3, "(H)");
    }
    // (I) (n,2n,2n) <_4 (2,4,2n), n >= 3; normalizer (2,2n,2n), count 2
    if (S[1] == 2 * S[0] && S[2] == 2 * S[0] && S[0] >= 3) {
        long n = S[0];
        if (P == std::array<long, 3>{2, 4, 2 * n})
            return record(4, false, TriangleType(2, 2 * n, 2 * n), 2, "(I)");
    }
    // (J) (3,n,3n) <_4 (2,3,3n), n >= 3
    for (int i = 0; i < 3; ++i) {
        std::array<long, 3> c = S;
        std::swap(c[0], c[i]);
        std::sort(c.begin() + 1, c.end());
        if (c[0] == 3 && c[2] == 3 * c[1] && c[1] >= 3 &&
            P == std::array<long, 3>{2, 3, 3 * c[1]})
            return record(4, false, sub, 4, "(J)");
    }
    // (K) (2,n,2n) <_3 (2,3,2n), n >= 4
    for (int i = 0; i < 3; ++i) {
        std::array<long, 3> c = S;
        std::swap(c[0], c[i]);
        std::sort(c.begin() + 1, c.end());
        if (c[0] == 2 && c[2] == 2 * c[1] && c[1] >= 4 &&
            P == std::array<long, 3>{2, 3, 2 * c[1]})
            return record(3, false, sub, 3, "(K)");
    }

    // (a) (s,s,t) normal_2 (2,s,2t), (s-2)(t-1) > 2
    {
        std::vector<std::pair<long, long>> cands; // (s, t)
        if (S[0] == S[1]) cands.push_back({S[0], S[2]});
        if (S[1] == S[2] && S[0] != S[1]) cands.push_back({S[1], S[0]});
        for (auto [s, t] : cands) {
            std::array<long, 3> want{2, s, 2 * t};
            std::sort(want.begin(), want.end());
            if ((s - 2) * (t - 1) > 2 && P == want)
                return record(2, true, super, 1, "(a)");
        }
    }
    // (b) (t,t,t) normal_3 (3,3,t), t > 3
    if (S[0] == S[2] && S[0] > 3 && P == std::array<long, 3>{3, 3, S[0]})
        return record(3, true, super, 1, "(b)");
    // (c) (t,t,t) normal_6 (2,3,2t), t > 3
    if (S[0] == S[2] && S[0] > 3 && P == std::array<long, 3>{2, 3, 2 * S[0]})
        return record(6, true, super, 1, "(c)");

    return std::nullopt;
}

/// Proposition 3.1: the shapes two same-index hyperbolic triangle subgroups
/// of a triangle group can take. Cases 3 and 4 share their type pattern
/// {(2n,2n,2n), (n,4n,4n)} and are separated only by the ambient group
/// ((2,2n,4n) vs (2,3,4n)), so the type-level classification reports them
/// together.
enum class PairCase { case1, case2, case3_or_4, none };

struct PairClassification {
    PairCase kind;
    long n = 0; // the parameter for case2 / case3_or_4
};

inline PairClassification classify_pair(const TriangleType& t1, const TriangleType& t2) {
    if (!is_hyperbolic(t1) || !is_hyperbolic(t2))
        throw std::invalid_argument("classify_pair: both types must be hyperbolic");
    auto a = t1.sorted(), b = t2.sorted();
    if (a == b) {
        if (a[1] == 2 * a[0] && a[2] == 2 * a[0]) return {PairCase::case2, a[0]};
        return {PairCase::case1, 0};
    }
    for (int flip = 0; flip < 2; ++flip) {
        const auto& e = flip ? b : a; // candidate (2n,2n,2n)
        const auto& f = flip ? a : b; // candidate (n,4n,4n)
        if (e[0] == e[2] && e[0] % 2 == 0) {
            long n = e[0] / 2;
            if (f == std::array<long, 3>{n, 4 * n, 4 * n}) return {PairCase::case3_or_4, n};
        }
    }
    return {PairCase::none, 0};
}

} // namespace dessins
