#pragma once

#include <unordered_map>

#include "perm_group.hpp"

namespace dessins {

/// Bipartite multigraph underlying a hypermap: white vertices are x-cycles,
/// black vertices are y-cycles, one edge per point of the ground set.
struct WalshGraph {
    size_t white_count = 0;
    size_t black_count = 0;
    size_t edge_count = 0;
    std::map<std::pair<int, int>, long> multiplicity; // (white id, black id)
};

inline std::string to_edge_list(const WalshGraph& w) {
    std::ostringstream os;
    os << "walsh " << w.white_count << " " << w.black_count << " " << w.edge_count << "\n";
    for (const auto& [e, m] : w.multiplicity)
        os << e.first << " " << e.second << " " << m << "\n";
    return os.str();
}

/// A pair of permutations x, y generating a transitive group on a finite set,
/// with z = (xy)^-1; cycles of x, y, z are the hypervertices, hyperedges and
/// hyperfaces.
class Hypermap {
public:
    Hypermap(Permutation x, Permutation y) : x_(std::move(x)), y_(std::move(y)) {
        if (x_.degree() != y_.degree()) throw std::invalid_argument("Hypermap: degree mismatch");
        if (x_.degree() == 0) throw std::invalid_argument("Hypermap: empty ground set");
        z_ = inverse(compose(x_, y_));
        // transitivity of <x, y> via forward orbit (cycles close up)
        std::vector<char> seen(x_.degree(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int p = stack.back();
            stack.pop_back();
            for (const Permutation* g : {&x_, &y_}) {
                int q = (*g)[p];
                if (!seen[q]) { seen[q] = 1; ++cnt; stack.push_back(q); }
            }
        }
        if (cnt != x_.degree())
            throw std::invalid_argument("Hypermap: <x, y> is not transitive");
        xc_ = cycles_of(x_);
        yc_ = cycles_of(y_);
        zc_ = cycles_of(z_);
    }

    int size() const { return x_.degree(); }
    const Permutation& x() const { return x_; }
    const Permutation& y() const { return y_; }
    const Permutation& z() const { return z_; }
    size_t hypervertex_count() const { return xc_.size(); }
    size_t hyperedge_count() const { return yc_.size(); }
    size_t hyperface_count() const { return zc_.size(); }

    /// Exact orders of (x, y, z).
    std::array<long, 3> type() const { return {order_of(x_), order_of(y_), order_of(z_)}; }

private:
    Permutation x_, y_, z_;
    std::vector<std::vector<int>> xc_, yc_, zc_;
};

inline Hypermap hypermap_from_pair(const Permutation& x, const Permutation& y) {
    return Hypermap(x, y);
}

/// Euler-characteristic genus: c(x) + c(y) + c(z) = |Omega| + 2 - 2g.
inline BigInt genus_of(const Hypermap& h) {
    long c = static_cast<long>(h.hypervertex_count() + h.hyperedge_count() + h.hyperface_count());
    long e = h.size();
    long defect = e + 2 - c;
    if (defect < 0 || defect % 2 != 0)
        throw std::domain_error("genus_of: inconsistent Euler characteristic");
    return BigInt(defect / 2);
}

inline WalshGraph walsh_graph(const Hypermap& h) {
    WalshGraph w;
    auto xc = cycles_of(h.x()), yc = cycles_of(h.y());
    std::vector<int> wid(h.size()), bid(h.size());
    for (size_t i = 0; i < xc.size(); ++i)
        for (int p : xc[i]) wid[p] = static_cast<int>(i);
    for (size_t i = 0; i < yc.size(); ++i)
        for (int p : yc[i]) bid[p] = static_cast<int>(i);
    w.white_count = xc.size();
    w.black_count = yc.size();
    w.edge_count = h.size();
    for (int p = 0; p < h.size(); ++p) w.multiplicity[{wid[p], bid[p]}]++;
    return w;
}

/// Permute the roles (hypervertex, hyperedge, hyperface) = (0, 1, 2).
/// sigma[r] is the new role of the old role r. Transposing colours maps
/// (x, y) to (y, y^-1 x y); swapping edges and faces maps (x, y) to
/// (x, y z y^-1). Genus is invariant.
inline Hypermap associate(const Hypermap& h, const std::array<int, 3>& sigma) {
    const Permutation &x = h.x(), &y = h.y(), &z = h.z();
    // each pair below multiplies back to a product-one triple realizing sigma
    if (sigma == std::array<int, 3>{0, 1, 2}) return Hypermap(x, y);
    if (sigma == std::array<int, 3>{1, 0, 2}) return Hypermap(y, conjugate(x, y));
    if (sigma == std::array<int, 3>{0, 2, 1})
        return Hypermap(x, compose(compose(y, z), inverse(y)));
    if (sigma == std::array<int, 3>{2, 1, 0})
        return Hypermap(z, compose(compose(x, y), inverse(x)));
    if (sigma == std::array<int, 3>{1, 2, 0}) return Hypermap(z, x); // (z, x, y)
    if (sigma == std::array<int, 3>{2, 0, 1}) return Hypermap(y, z); // (y, z, x)
    throw std::invalid_argument("associate: not a role permutation");
}

/// Monodromy-group order equals the ground-set size. Needs a BSGS over the
/// ground set, so it is bounded; regular models built from triples are
/// regular by construction.
inline bool is_regular(const Hypermap& h, size_t bound = 20000) {
    if (static_cast<size_t>(h.size()) > bound)
        throw std::runtime_error("is_regular: ground set exceeds bound");
    PermGroup m({h.x(), h.y()});
    return m.order() == h.size();
}

/// Deterministic enumeration of the group generated by gens (breadth-first
/// from the identity), for building regular models. Elements come back in a
/// stable order with the identity first.
inline std::vector<Permutation> enumerate_group(const std::vector<Permutation>& gens,
                                                size_t bound = 1000000) {
    if (gens.empty()) throw std::invalid_argument("enumerate_group: no generators");
    int d = gens[0].degree();
    auto key = [d](const Permutation& p) {
        std::string s(static_cast<size_t>(d), '\0');
        for (int i = 0; i < d; ++i) s[i] = static_cast<char>(p[i]);
        return s;
    };
    std::vector<Permutation> elems{Permutation::identity(d)};
    std::unordered_map<std::string, int> idx;
    idx.emplace(key(elems[0]), 0);
    for (size_t head = 0; head < elems.size(); ++head) {
        Permutation cur = elems[head]; // copy: elems may reallocate
        for (const auto& g : gens) {
            Permutation nxt = compose(cur, g);
            auto k = key(nxt);
            if (idx.find(k) == idx.end()) {
                if (elems.size() >= bound)
                    throw std::runtime_error("enumerate_group: bound exceeded");
                idx.emplace(std::move(k), static_cast<int>(elems.size()));
                elems.push_back(std::move(nxt));
            }
        }
    }
    return elems;
}

/// Regular model of a generating pair: the group acts on itself by right
/// translation, so |Omega| = |G| and the model is regular by construction.
inline Hypermap regular_hypermap(const Permutation& x, const Permutation& y,
                                 size_t bound = 1000000) {
    auto elems = enumerate_group({x, y}, bound);
    int d = x.degree();
    std::unordered_map<std::string, int> idx;
    auto key = [d](const Permutation& p) {
        std::string s(static_cast<size_t>(d), '\0');
        for (int i = 0; i < d; ++i) s[i] = static_cast<char>(p[i]);
        return s;
    };
    for (size_t i = 0; i < elems.size(); ++i) idx.emplace(key(elems[i]), static_cast<int>(i));
    auto translation = [&](const Permutation& g) {
        std::vector<int> img(elems.size());
        for (size_t i = 0; i < elems.size(); ++i) img[i] = idx.at(key(compose(elems[i], g)));
        return Permutation(std::move(img));
    };
    return Hypermap(translation(x), translation(y));
}

} // namespace dessins
