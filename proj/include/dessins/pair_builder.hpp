#pragma once

#include <json.hpp>

#include "hypermap.hpp"
#include "triple.hpp"

namespace dessins {

enum class Verdict { isomorphic, not_isomorphic, no_inner_swap };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::isomorphic: return "isomorphic";
        case Verdict::not_isomorphic: return "not-isomorphic";
        case Verdict::no_inner_swap: return "no-inner-swap";
    }
    return "?";
}

/// What we can certify about one dessin's automorphism group.
struct GroupSummary {
    std::string label;
    BigInt order = 0;
    bool has_central_involution = false;
    bool centerless = false;
    std::optional<Fingerprint> fingerprint;
};

/// One regular dessin: verified triple, type, group, genus (Riemann-Hurwitz,
/// cross-checked against the Euler characteristic of the regular model when
/// it was materialized).
struct DessinSpec {
    TriangleType type{1, 1, 1};
    std::array<Permutation, 3> triple;
    BigInt group_order = 0;
    BigInt genus = 0;
    GroupSummary group;
    std::optional<BigInt> euler_genus;
};

struct PairReport {
    std::string construction;
    std::string group_kind;
    std::string group_label;
    std::map<std::string, long> group_params;
    BigInt group_order = 0;
    std::array<std::string, 3> triple_text;
    int parity_j = -1;
    DessinSpec dessin1, dessin2;
    BigInt genus = 0;
    Verdict verdict = Verdict::no_inner_swap;
    std::string verdict_detail;
};

enum class Cor { cor52, cor53, cor61, cor62 };

inline std::string to_string(Cor c) {
    switch (c) {
        case Cor::cor52: return "cor52";
        case Cor::cor53: return "cor53";
        case Cor::cor61: return "cor61";
        case Cor::cor62: return "cor62";
    }
    return "?";
}

namespace detail {

inline Permutation extend_with_bit(const Permutation& p, bool bit) {
    int d = p.degree();
    std::vector<int> img(d + 2);
    for (int i = 0; i < d; ++i) img[i] = p[i];
    img[d] = bit ? d + 1 : d;
    img[d + 1] = bit ? d : d + 1;
    return Permutation(std::move(img));
}

inline bool swaps_tail(const Permutation& p) { return p[p.degree() - 2] == p.degree() - 1; }

inline Permutation restrict_head(const Permutation& p, int d) {
    std::vector<int> img(d);
    for (int i = 0; i < d; ++i) {
        if (p[i] >= d) throw std::logic_error("restrict_head: point leaves the head block");
        img[i] = p[i];
    }
    return Permutation(std::move(img));
}

/// Certify the structure of an index-2 dessin subgroup S of G* = G x C2:
/// if the tail flip lies in S, then S = (S ∩ G) x <flip> = H x C2; otherwise
/// S projects isomorphically onto G.
inline GroupSummary summarize_side(const PermGroup& S, const GroupHandle& G, bool flip_in,
                                   size_t fingerprint_bound) {
    GroupSummary gs;
    gs.order = S.order();
    if (flip_in) {
        // split off the central flip and check the complement sits inside H
        std::vector<Permutation> hgens;
        Permutation flip = extend_with_bit(Permutation::identity(G.group.degree()), true);
        for (const auto& g : S.generators())
            hgens.push_back(swaps_tail(g) ? compose(g, flip) : g);
        PermGroup hpart(hgens);
        if (hpart.order() * 2 != S.order())
            throw std::logic_error("summarize_side: H-part does not have index 2");
        if (G.in_unique_index2)
            for (const auto& g : hpart.generators())
                if (!G.in_unique_index2(restrict_head(g, G.group.degree())))
                    throw std::logic_error("summarize_side: H-part escapes H");
        gs.label = G.h_label.empty() ? ("H(" + G.label + ") x C2") : (G.h_label + " x C2");
        gs.has_central_involution = true; // the flip is central in G* and lies in S
        gs.centerless = false;
    } else {
        // projection to the head block is injective (flip not in S) and onto G,
        // so S = G; "centerless" is only asserted when certified
        gs.label = G.label;
        gs.centerless = G.complete;
        gs.has_central_involution = false;
    }
    if (S.order() <= fingerprint_bound) {
        gs.fingerprint = structure_fingerprint(S, fingerprint_bound);
        gs.centerless = gs.fingerprint->center_order == 1;
        // a central involution exists iff the center has even order
        gs.has_central_involution = gs.fingerprint->center_order % 2 == 0;
    }
    return gs;
}

} // namespace detail

struct PairOptions {
    size_t materialize_bound = 1000000; // regular-model Euler cross-check cutoff
    size_t fingerprint_bound = 10000;
};

/// The Lemma 5.1 pair machinery (Corollaries 5.2, 5.3, 6.1, 6.2): given a
/// smooth generating triple of type (2, M, N) for Delta* = Delta(2, M, N)
/// (M = N = 2n for 5.2/5.3, N = 2M = 4n for 6.1/6.2) in a group G with a
/// unique index-2 subgroup H, build the extension model G* <= G x C2 and
/// extract the two index-2 dessin subgroups with their triples.
inline PairReport build_pair(Cor which, const GroupHandle& G, const Permutation& x,
                             const Permutation& y, const Permutation& z,
                             const PairOptions& opt = {}) {
    using detail::extend_with_bit;
    GeneratingTriple t(x, y, z, G.group.order());
    long M = t.type.m, N = t.type.n;
    if (t.type.l != 2) throw std::invalid_argument("build_pair: x must have order 2");
    if (M % 2 || N % 2) throw std::invalid_argument("build_pair: y, z must have even order");
    bool case2 = which == Cor::cor52 || which == Cor::cor53;
    if (case2 && M != N)
        throw std::invalid_argument("build_pair: cor52/cor53 need type (2, 2n, 2n)");
    if (!case2 && N != 2 * M)
        throw std::invalid_argument("build_pair: cor61/cor62 need type (2, 2n, 4n)");

    int j = parity_classify(t, G.in_unique_index2);
    bool want_j0 = which == Cor::cor52 || which == Cor::cor61;
    if (want_j0 && j != 0)
        throw std::invalid_argument("build_pair: " + to_string(which) +
                                    " needs the involution inside H (j = 0), got j = " +
                                    std::to_string(j));
    if (!want_j0 && j == 0)
        throw std::invalid_argument("build_pair: " + to_string(which) +
                                    " needs j in {1, 2}, got j = 0");

    // the epsilon-defining dessin subgroup: Delta_c with c != j, c in {1, 2}
    int c = (j == 0) ? 1 : 3 - j;
    std::array<bool, 3> eps{c != 0, c != 1, c != 2};
    Permutation xs = extend_with_bit(x, eps[0]);
    Permutation ys = extend_with_bit(y, eps[1]);
    Permutation zs = extend_with_bit(z, eps[2]);
    PermGroup Gstar({xs, ys, zs});
    if (Gstar.order() != 2 * G.group.order())
        throw std::domain_error("build_pair: extension order != 2|G|");

    auto stA = index2_subtriple(xs, ys, zs, SubtripleChoice::contains_y);
    auto stB = index2_subtriple(xs, ys, zs, SubtripleChoice::contains_z);
    PermGroup SA({stA.t[0], stA.t[1], stA.t[2]});
    PermGroup SB({stB.t[0], stB.t[1], stB.t[2]});
    if (SA.order() != G.group.order() || SB.order() != G.group.order())
        throw std::domain_error("build_pair: dessin subgroup does not have index 2");
    if (SA.contains(xs) || SB.contains(xs))
        throw std::domain_error("build_pair: dessin subgroup contains the involution coset");

    Permutation flip = extend_with_bit(Permutation::identity(G.group.degree()), true);
    bool flipA = SA.contains(flip), flipB = SB.contains(flip);
    if (flipA != (j == 1) || flipB != (j == 2))
        throw std::logic_error("build_pair: central-involution pattern inconsistent with j");

    PairReport r;
    r.construction = to_string(which);
    r.group_kind = G.kind;
    r.group_label = G.label;
    r.group_params = G.params;
    r.group_order = G.group.order();
    r.triple_text = {to_cycle_string(x), to_cycle_string(y), to_cycle_string(z)};
    r.parity_j = j;

    auto make_spec = [&](const Subtriple& st, const PermGroup& S, bool flip_in) {
        DessinSpec d;
        d.type = st.type;
        d.triple = st.t;
        d.group_order = S.order();
        d.genus = rh_genus(st.type, S.order());
        d.group = detail::summarize_side(S, G, flip_in, opt.fingerprint_bound);
        if (S.order() <= opt.materialize_bound) {
            Hypermap h = regular_hypermap(st.t[0], st.t[1], opt.materialize_bound);
            d.euler_genus = genus_of(h);
            if (*d.euler_genus != d.genus)
                throw std::logic_error("build_pair: Euler genus disagrees with Riemann-Hurwitz");
        }
        return d;
    };
    r.dessin1 = make_spec(stA, SA, flipA);
    r.dessin2 = make_spec(stB, SB, flipB);
    if (r.dessin1.genus != r.dessin2.genus)
        throw std::logic_error("build_pair: the two dessins disagree on genus");
    r.genus = r.dessin1.genus;

    if (!case2) {
        r.verdict = Verdict::not_isomorphic;
        r.verdict_detail = "types " + to_string(r.dessin1.type) + " and " +
                           to_string(r.dessin2.type) + " differ";
    } else if (j != 0) {
        // one group is H x C2 (certified central involution), the other is G
        if (!G.complete && !(r.dessin1.group.centerless || r.dessin2.group.centerless))
            throw std::logic_error("build_pair: cannot certify Aut groups differ");
        r.verdict = Verdict::not_isomorphic;
        r.verdict_detail = "automorphism groups " + r.dessin1.group.label + " and " +
                           r.dessin2.group.label + " differ (central involution vs centerless)";
    } else {
        // Case 2 with both groups isomorphic to G: dessins are isomorphic iff
        // some automorphism of G transposes y and z
        if (cycle_type(y) != cycle_type(z)) {
            r.verdict = G.complete ? Verdict::not_isomorphic : Verdict::no_inner_swap;
            r.verdict_detail = "cycle types of y and z differ; no automorphism swaps them" +
                               std::string(G.complete ? "" : " (inner test only)");
        } else {
            auto g = find_swapping_conjugator(G.group, y, z);
            if (g) {
                r.verdict = Verdict::isomorphic;
                r.verdict_detail = "swapped by conjugation with " + to_cycle_string(*g);
            } else {
                r.verdict = G.complete ? Verdict::not_isomorphic : Verdict::no_inner_swap;
                r.verdict_detail = std::string("no conjugation swaps y and z") +
                                   (G.complete ? " and the group is complete" : "");
            }
        }
    }
    return r;
}

/// Case 4: a (2, 3, 4n)-triple whose kernel lies under the S4-cover of the
/// cube. The images of the two triangle subgroups of Delta(2,3,4n) are
/// recovered as G1 = ncl(z^2) (index 6, type (2n,2n,2n)) and
/// G2 = <ncl(z^4), z> (index 6, type (n,4n,4n)), with ncl(z^4) of index 24.
inline PairReport case4_pipeline(const GroupHandle& Gstar, const Permutation& x,
                                 const Permutation& y, const Permutation& z,
                                 const PairOptions& opt = {}) {
    GeneratingTriple t(x, y, z, Gstar.group.order());
    if (t.type.l != 2 || t.type.m != 3 || t.type.n % 4 != 0)
        throw std::invalid_argument("case4_pipeline: need a triple of type (2, 3, 4n)");
    long n = t.type.n / 4;

    PermGroup G1 = normal_closure(Gstar.group, {power(z, 2)});
    if (G1.order() * 6 != Gstar.group.order())
        throw std::domain_error("case4_pipeline: ncl(z^2) does not have index 6 "
                                "(no S3 quotient through z^2)");
    PermGroup K0 = normal_closure(Gstar.group, {power(z, 4)});
    if (K0.order() * 24 != Gstar.group.order())
        throw std::domain_error("case4_pipeline: ncl(z^4) does not have index 24 "
                                "(kernel does not lie under the S4 cover)");
    std::vector<Permutation> g2gens = K0.generators();
    g2gens.push_back(z);
    PermGroup G2(g2gens);
    if (G2.order() * 6 != Gstar.group.order())
        throw std::domain_error("case4_pipeline: <ncl(z^4), z> does not have index 6");

    // deterministic search for generating triples of the declared types
    auto find_triple = [](const PermGroup& S, long a, long b, long c) {
        auto elems = S.elements();
        std::sort(elems.begin(), elems.end());
        for (const auto& u : elems) {
            if (order_of(u) != a) continue;
            for (const auto& v : elems) {
                if (order_of(v) != b) continue;
                Permutation w = inverse(compose(u, v));
                if (order_of(w) != c) continue;
                if (PermGroup({u, v, w}).order() != S.order()) continue;
                return std::array<Permutation, 3>{u, v, w};
            }
        }
        throw std::domain_error("case4_pipeline: no generating triple of the required type");
    };

    PairReport r;
    r.construction = "case4";
    r.group_kind = Gstar.kind;
    r.group_label = Gstar.label;
    r.group_params = Gstar.params;
    r.group_order = Gstar.group.order();
    r.triple_text = {to_cycle_string(x), to_cycle_string(y), to_cycle_string(z)};
    r.parity_j = -1; // not a Lemma 5.1 parity construction

    auto make_spec = [&](const PermGroup& S, TriangleType type,
                         const std::array<Permutation, 3>& tr) {
        DessinSpec d;
        d.type = type;
        d.triple = tr;
        d.group_order = S.order();
        d.genus = rh_genus(type, S.order());
        d.group.order = S.order();
        d.group.fingerprint = structure_fingerprint(S, opt.fingerprint_bound);
        auto name = small_group_name(*d.group.fingerprint);
        d.group.label = name ? *name : "order-" + d.group.order.str();
        d.group.centerless = d.group.fingerprint->center_order == 1;
        d.group.has_central_involution = d.group.fingerprint->center_order % 2 == 0;
        if (S.order() <= opt.materialize_bound) {
            Hypermap h = regular_hypermap(tr[0], tr[1], opt.materialize_bound);
            d.euler_genus = genus_of(h);
            if (*d.euler_genus != d.genus)
                throw std::logic_error("case4_pipeline: Euler genus disagrees");
        }
        return d;
    };
    r.dessin1 = make_spec(G1, {2 * n, 2 * n, 2 * n}, find_triple(G1, 2 * n, 2 * n, 2 * n));
    r.dessin2 = make_spec(G2, {n, 4 * n, 4 * n}, find_triple(G2, n, 4 * n, 4 * n));
    if (r.dessin1.genus != r.dessin2.genus)
        throw std::logic_error("case4_pipeline: the two dessins disagree on genus");
    r.genus = r.dessin1.genus;
    r.verdict = Verdict::not_isomorphic;
    r.verdict_detail = "types " + to_string(r.dessin1.type) + " and " +
                       to_string(r.dessin2.type) + " differ";
    return r;
}

// ---- JSON serialization (big integers rendered as decimal strings) ----

inline nlohmann::json to_json(const Fingerprint& fp) {
    nlohmann::json h = nlohmann::json::object();
    for (const auto& [o, c] : fp.order_histogram) h[std::to_string(o)] = c;
    return {{"order", fp.order},        {"abelian", fp.abelian},
            {"exponent", fp.exponent},  {"order_histogram", h},
            {"center_order", fp.center_order}, {"derived_order", fp.derived_order}};
}

inline nlohmann::json to_json(const GroupSummary& gs) {
    nlohmann::json j{{"label", gs.label},
                     {"order", gs.order.str()},
                     {"central_involution", gs.has_central_involution},
                     {"centerless", gs.centerless}};
    if (gs.fingerprint) {
        j["fingerprint"] = to_json(*gs.fingerprint);
        if (auto n = small_group_name(*gs.fingerprint)) j["small_group"] = *n;
    }
    return j;
}

inline nlohmann::json to_json(const PairReport& r) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.group_params) params[k] = v;
    auto type_arr = [](const TriangleType& t) {
        auto s = t.sorted();
        return nlohmann::json::array({s[0], s[1], s[2]});
    };
    nlohmann::json j{
        {"construction", r.construction},
        {"group", {{"kind", r.group_kind}, {"label", r.group_label}, {"params", params},
                   {"order", r.group_order.str()}}},
        {"triple", {{"x", r.triple_text[0]}, {"y", r.triple_text[1]}, {"z", r.triple_text[2]}}},
        {"types", nlohmann::json::array({type_arr(r.dessin1.type), type_arr(r.dessin2.type)})},
        {"genus", r.genus.str()},
        {"parity_j", r.parity_j},
        {"verdict", to_string(r.verdict)},
        {"verdict_detail", r.verdict_detail},
        {"fingerprints", nlohmann::json::array({to_json(r.dessin1.group),
                                                to_json(r.dessin2.group)})}};
    return j;
}

} // namespace dessins
