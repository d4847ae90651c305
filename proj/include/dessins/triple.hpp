#pragma once

#include <functional>

#include "perm_group.hpp"
#include "triangle.hpp"

namespace dessins {

/// A finite group in a permutation model, plus the metadata the pair
/// constructions need: a membership test for the unique index-2 subgroup H
/// (when there is one) and whether every automorphism of the group is inner.
struct GroupHandle {
    PermGroup group;
    std::string kind;                  // "sym", "pgl2", "hxc2", ...
    std::string label;                 // display name, e.g. "S_9"
    std::string h_label;               // display name of H, e.g. "A_9"
    std::map<std::string, long> params;
    std::function<bool(const Permutation&)> in_unique_index2;
    bool complete = false;
};

inline GroupHandle sym_handle(int d) {
    std::vector<int> cyc;
    for (int i = 1; i <= d; ++i) cyc.push_back(i);
    PermGroup G({perm_from_cycles({{1, 2}}, d), perm_from_cycles({cyc}, d)});
    return GroupHandle{std::move(G),
                       "sym",
                       "S_" + std::to_string(d),
                       "A_" + std::to_string(d),
                       {{"d", d}},
                       [](const Permutation& g) { return is_even(g); },
                       d != 2 && d != 6};
}

/// A verified smooth-epimorphism witness: x*y*z = 1, exact declared orders,
/// and <x,y,z> of the declared group order.
struct GeneratingTriple {
    Permutation x, y, z;
    TriangleType type;

    GeneratingTriple(Permutation x_, Permutation y_, Permutation z_, const BigInt& group_order)
        : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)),
          type(order_of(x), order_of(y), order_of(z)) {
        if (!compose(compose(x, y), z).is_identity())
            throw std::invalid_argument("GeneratingTriple: x*y*z != 1");
        if (PermGroup({x, y, z}).order() != group_order)
            throw std::invalid_argument("GeneratingTriple: triple does not generate the group");
    }
};

/// Lemma 5.1 bookkeeping: with H the unique index-2 subgroup, exactly one of
/// x, y, z lies in H (an even number lie outside, and not all three can lie
/// inside a proper subgroup). Returns its position j, so the kernel of the
/// epimorphism lies in the index-2 triangle/quadrilateral subgroup Delta_j.
inline int parity_classify(const GeneratingTriple& t,
                           const std::function<bool(const Permutation&)>& h_membership) {
    if (!h_membership) throw std::invalid_argument("parity_classify: no H-membership predicate");
    bool in[3] = {h_membership(t.x), h_membership(t.y), h_membership(t.z)};
    int outside = (in[0] ? 0 : 1) + (in[1] ? 0 : 1) + (in[2] ? 0 : 1);
    if (outside % 2 != 0)
        throw std::domain_error("parity_classify: odd number of generators outside H "
                                "(H is not the kernel of a character on <x,y,z>)");
    if (outside == 0)
        throw std::domain_error("parity_classify: all generators inside H (not a generating "
                                "triple of the full group)");
    for (int j = 0; j < 3; ++j)
        if (in[j]) return j;
    throw std::logic_error("parity_classify: unreachable");
}

enum class SubtripleChoice { contains_y, contains_z };

/// Canonical generating triple of the index-2 subgroup of <x,y,z> containing
/// y (resp. z), for a triple of type (2, M, N) with M, N even; from
/// Reidemeister-Schreier with transversal {1, x}:
///   contains_y: (y, y^x, y z^2 y^-1)   of type (M, M, N/2)
///   contains_z: (z, z^x, y^2)          of type (N, N, M/2)
/// Both multiply to the identity; an order collapse signals a degenerate
/// quotient and is an error.
struct Subtriple {
    std::array<Permutation, 3> t;
    TriangleType type;
};

inline Subtriple index2_subtriple(const Permutation& x, const Permutation& y,
                                  const Permutation& z, SubtripleChoice which,
                                  std::optional<TriangleType> declared = {}) {
    if (order_of(x) != 2) throw std::invalid_argument("index2_subtriple: x must be an involution");
    long M = order_of(y), N = order_of(z);
    if (declared && (declared->l != 2 || declared->m != M || declared->n != N))
        throw std::domain_error("index2_subtriple: period collapse, triple has type (" +
                                std::to_string(order_of(x)) + "," + std::to_string(M) + "," +
                                std::to_string(N) + ") but " + to_string(*declared) +
                                " was declared");
    if (M % 2 || N % 2)
        throw std::invalid_argument("index2_subtriple: y and z must have even order");
    if (!compose(compose(x, y), z).is_identity())
        throw std::invalid_argument("index2_subtriple: x*y*z != 1");
    Subtriple s{{Permutation(), Permutation(), Permutation()}, {1, 1, 1}};
    if (which == SubtripleChoice::contains_y) {
        s.t = {y, conjugate(y, x), compose(compose(y, power(z, 2)), inverse(y))};
        s.type = {M, M, N / 2};
    } else {
        s.t = {z, conjugate(z, x), power(y, 2)};
        s.type = {N, N, M / 2};
    }
    if (!compose(compose(s.t[0], s.t[1]), s.t[2]).is_identity())
        throw std::logic_error("index2_subtriple: product not identity");
    if (order_of(s.t[0]) != s.type.l || order_of(s.t[1]) != s.type.m ||
        order_of(s.t[2]) != s.type.n)
        throw std::domain_error("index2_subtriple: period collapse (degenerate quotient)");
    return s;
}

} // namespace dessins
