#pragma once

#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>

#include "bigint.hpp"
#include "permutation.hpp"

namespace dessins {

/// Permutation group with a base and strong generating set (deterministic
/// Schreier-Sims, base points taken in natural order unless a custom point
/// priority is supplied). Immutable once built; order and membership are
/// exact.
class PermGroup {
public:
    explicit PermGroup(std::vector<Permutation> generators,
                       std::vector<int> point_priority = {})
        : gens_(std::move(generators)) {
        if (gens_.empty()) throw std::invalid_argument("PermGroup: no generators");
        deg_ = gens_[0].degree();
        for (const auto& g : gens_)
            if (g.degree() != deg_) throw std::invalid_argument("PermGroup: degree mismatch");
        if (point_priority.empty()) {
            priority_.resize(deg_);
            std::iota(priority_.begin(), priority_.end(), 0);
        } else {
            if (static_cast<int>(point_priority.size()) != deg_)
                throw std::invalid_argument("PermGroup: bad point priority");
            priority_ = std::move(point_priority);
        }
        build();
    }

    int degree() const { return deg_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    const BigInt& order() const { return order_; }

    bool contains(const Permutation& g) const {
        if (g.degree() != deg_) return false;
        auto [h, stuck] = sift(g, 0);
        (void)stuck;
        return h.is_identity();
    }

    size_t base_length() const { return levels_.size(); }
    int base_point(size_t i) const { return levels_[i].base; }

    /// All elements, in a deterministic order. Throws if the order exceeds
    /// the bound.
    std::vector<Permutation> elements(size_t bound = 1000000) const {
        if (order_ > bound) throw std::runtime_error("PermGroup::elements: order exceeds bound");
        std::vector<Permutation> out{Permutation::identity(deg_)};
        for (size_t i = levels_.size(); i-- > 0;) {
            std::vector<Permutation> next;
            next.reserve(out.size() * levels_[i].orbit.size());
            for (size_t t = 0; t < levels_[i].orbit.size(); ++t)
                for (const auto& h : out)
                    next.push_back(compose(h, levels_[i].transversal[t]));
            out = std::move(next);
        }
        return out;
    }

    bool is_natural_symmetric() const { return order_ == big_factorial(deg_); }

    /// DFS over base images: calls visit(g) for every g in the group with
    /// y^g = z, in deterministic order; stops early if visit returns false.
    /// The constraint map prunes via w -> d  ==>  w^y -> d^z.
    void for_each_conjugator(const Permutation& y, const Permutation& z,
                             const std::function<bool(const Permutation&)>& visit) const {
        if (cycle_type(y) != cycle_type(z)) return;
        std::vector<int> sigma(deg_, -1), sigma_inv(deg_, -1);
        dfs_conj(0, Permutation::identity(deg_), sigma, sigma_inv, y, z, visit);
    }

private:
    struct Level {
        int base = -1;
        std::vector<Permutation> gens;
        std::vector<int> orbit;               // discovery order; orbit[0] == base
        std::vector<int> pos;                 // point -> orbit index, or -1
        std::vector<Permutation> transversal; // base^transversal[t] == orbit[t]
    };

    int deg_ = 0;
    std::vector<Permutation> gens_;
    std::vector<int> priority_;
    std::vector<Level> levels_;
    BigInt order_ = 1;

    int first_moved(const Permutation& g) const {
        for (int p : priority_)
            if (g[p] != p) return p;
        return -1;
    }

    void rebuild_orbit(Level& L) const {
        L.orbit.assign(1, L.base);
        L.pos.assign(deg_, -1);
        L.pos[L.base] = 0;
        L.transversal.assign(1, Permutation::identity(deg_));
        for (size_t i = 0; i < L.orbit.size(); ++i) {
            for (const auto& s : L.gens) {
                int q = s[L.orbit[i]];
                if (L.pos[q] < 0) {
                    L.pos[q] = static_cast<int>(L.orbit.size());
                    L.orbit.push_back(q);
                    L.transversal.push_back(compose(L.transversal[i], s));
                }
            }
        }
    }

    std::pair<Permutation, size_t> sift(const Permutation& g, size_t from) const {
        Permutation h = g;
        for (size_t i = from; i < levels_.size(); ++i) {
            if (h.is_identity()) return {h, i};
            int p = h[levels_[i].base];
            if (levels_[i].pos[p] < 0) return {h, i};
            h = compose(h, inverse(levels_[i].transversal[levels_[i].pos[p]]));
        }
        return {h, levels_.size()};
    }

    void build() {
        bool all_id = true;
        for (const auto& g : gens_)
            if (!g.is_identity()) all_id = false;
        if (all_id) { order_ = 1; return; }

        Level l0;
        for (const auto& g : gens_)
            if (!g.is_identity()) l0.gens.push_back(g);
        l0.base = first_moved(l0.gens[0]);
        levels_.push_back(std::move(l0));
        rebuild_orbit(levels_[0]);

        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = levels_.size(); i-- > 0;)
                changed |= verify_level(i);
        }
        order_ = 1;
        for (const auto& L : levels_) order_ *= static_cast<unsigned>(L.orbit.size());
    }

    // Check that every Schreier generator of level i sifts through the chain
    // below; install residues as new strong generators where they get stuck.
    bool verify_level(size_t i) {
        rebuild_orbit(levels_[i]);
        bool changed = false;
        // levels_ may grow (and reallocate) while scanning, so index everywhere
        for (size_t t = 0; t < levels_[i].orbit.size(); ++t) {
            for (size_t si = 0; si < levels_[i].gens.size(); ++si) {
                const Permutation s = levels_[i].gens[si];
                int q = s[levels_[i].orbit[t]];
                Permutation sg = compose(compose(levels_[i].transversal[t], s),
                                         inverse(levels_[i].transversal[levels_[i].pos[q]]));
                auto [h, stuck] = sift(sg, i + 1);
                if (h.is_identity()) continue;
                changed = true;
                if (stuck == levels_.size()) {
                    Level nl;
                    nl.base = first_moved(h);
                    levels_.push_back(std::move(nl));
                }
                for (size_t j = i + 1; j <= stuck; ++j) {
                    levels_[j].gens.push_back(h);
                    rebuild_orbit(levels_[j]);
                }
            }
        }
        return changed;
    }

    bool dfs_conj(size_t lvl, const Permutation& u, std::vector<int>& sigma,
                  std::vector<int>& sigma_inv, const Permutation& y, const Permutation& z,
                  const std::function<bool(const Permutation&)>& visit) const {
        if (lvl == levels_.size()) {
            if (conjugate(y, u) == z) return visit(u);
            return true;
        }
        const Level& L = levels_[lvl];
        for (size_t t = 0; t < L.orbit.size(); ++t) {
            Permutation u2 = compose(L.transversal[t], u);
            int gamma = u2[L.base];
            // propagate the forced orbit mapping; record assignments to undo
            std::vector<int> touched;
            bool ok = true;
            int w = L.base, d = gamma;
            do {
                if (sigma[w] == d) break; // already known along this orbit
                if (sigma[w] != -1 || sigma_inv[d] != -1) { ok = false; break; }
                sigma[w] = d;
                sigma_inv[d] = w;
                touched.push_back(w);
                w = y[w];
                d = z[d];
            } while (true);
            if (ok && !dfs_conj(lvl + 1, u2, sigma, sigma_inv, y, z, visit)) {
                for (int v : touched) { sigma_inv[sigma[v]] = -1; sigma[v] = -1; }
                return false;
            }
            for (int v : touched) { sigma_inv[sigma[v]] = -1; sigma[v] = -1; }
        }
        return true;
    }
};

inline bool is_transitive(const PermGroup& G) {
    int d = G.degree();
    std::vector<char> seen(d, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (const auto& g : G.generators()) {
            int q = g[p];
            if (!seen[q]) { seen[q] = 1; ++cnt; stack.push_back(q); }
        }
    }
    return cnt == d;
}

inline bool is_two_transitive(const PermGroup& G) {
    int d = G.degree();
    if (d < 2) throw std::invalid_argument("is_two_transitive: degree < 2");
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> stack{{0, 1}};
    seen.insert({0, 1});
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        for (const auto& g : G.generators()) {
            std::pair<int, int> q{g[a], g[b]};
            if (seen.insert(q).second) stack.push_back(q);
        }
    }
    return seen.size() == static_cast<size_t>(d) * (d - 1);
}

/// Smallest normal subgroup of G containing elems.
inline PermGroup normal_closure(const PermGroup& G, const std::vector<Permutation>& elems) {
    for (const auto& e : elems)
        if (!G.contains(e)) throw std::invalid_argument("normal_closure: element not in G");
    std::vector<Permutation> gens;
    for (const auto& e : elems)
        if (!e.is_identity()) gens.push_back(e);
    if (gens.empty()) return PermGroup({Permutation::identity(G.degree())});
    PermGroup N(gens);
    std::vector<Permutation> queue = gens;
    while (!queue.empty()) {
        Permutation n = queue.back();
        queue.pop_back();
        for (const auto& g : G.generators()) {
            Permutation c = conjugate(n, g);
            if (!N.contains(c)) {
                gens.push_back(c);
                queue.push_back(c);
                N = PermGroup(gens);
            }
        }
    }
    return N;
}

/// Some g in G with y^g = z, or nullopt. Fast-fails on distinct cycle types;
/// in a natural symmetric group the conjugator is built by cycle alignment,
/// otherwise by backtracking over the BSGS with orbit-map pruning.
inline std::optional<Permutation> find_conjugator(const PermGroup& G, const Permutation& y,
                                                  const Permutation& z) {
    if (!G.contains(y) || !G.contains(z))
        throw std::invalid_argument("find_conjugator: arguments outside G");
    if (cycle_type(y) != cycle_type(z)) return std::nullopt;
    if (y == z) return Permutation::identity(G.degree());
    if (G.is_natural_symmetric()) {
        auto canon = [](const Permutation& p) {
            auto cs = cycles_of(p);
            for (auto& c : cs) {
                auto mn = std::min_element(c.begin(), c.end());
                std::rotate(c.begin(), mn, c.end());
            }
            std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a[0] < b[0];
            });
            return cs;
        };
        auto cy = canon(y), cz = canon(z);
        std::vector<int> img(G.degree());
        for (size_t i = 0; i < cy.size(); ++i)
            for (size_t j = 0; j < cy[i].size(); ++j) img[cy[i][j]] = cz[i][j];
        Permutation g{std::move(img)};
        return g;
    }
    std::optional<Permutation> found;
    G.for_each_conjugator(y, z, [&](const Permutation& g) {
        found = g;
        return false;
    });
    return found;
}

/// All solutions of y^g = z in G (the coset C_G(y)·h), up to the bound.
inline std::vector<Permutation> all_conjugators(const PermGroup& G, const Permutation& y,
                                                const Permutation& z, size_t bound = 1000000) {
    std::vector<Permutation> out;
    G.for_each_conjugator(y, z, [&](const Permutation& g) {
        out.push_back(g);
        return out.size() < bound;
    });
    if (out.size() >= bound) throw std::runtime_error("all_conjugators: bound exceeded");
    return out;
}

/// g with y^g = z and z^g = y, or nullopt (no inner swap). Scans the coset
/// C_G(y)·h of all solutions of y^g = z.
inline std::optional<Permutation> find_swapping_conjugator(const PermGroup& G,
                                                           const Permutation& y,
                                                           const Permutation& z) {
    if (!G.contains(y) || !G.contains(z))
        throw std::invalid_argument("find_swapping_conjugator: arguments outside G");
    auto h = find_conjugator(G, y, z);
    if (!h) return std::nullopt;
    if (conjugate(z, *h) == y) return h;
    for (const auto& c : all_conjugators(G, y, y)) {
        Permutation g = compose(c, *h);
        if (conjugate(z, g) == y) return g;
    }
    return std::nullopt;
}

/// Full-enumeration isomorphism-invariant summary of a small group.
struct Fingerprint {
    unsigned long order = 0;
    bool abelian = false;
    unsigned long exponent = 1;
    std::map<long, unsigned long> order_histogram;
    unsigned long center_order = 0;
    unsigned long derived_order = 0;

    bool operator==(const Fingerprint&) const = default;
};

inline Fingerprint structure_fingerprint(const PermGroup& G, size_t bound = 10000) {
    if (G.order() > bound)
        throw std::runtime_error("structure_fingerprint: order exceeds bound");
    Fingerprint fp;
    auto elems = G.elements(bound);
    fp.order = elems.size();
    fp.abelian = true;
    for (const auto& a : G.generators())
        for (const auto& b : G.generators())
            if (compose(a, b) != compose(b, a)) fp.abelian = false;
    for (const auto& e : elems) {
        long o = order_of(e);
        fp.order_histogram[o]++;
        fp.exponent = std::lcm<unsigned long>(fp.exponent, o);
    }
    fp.center_order = 0;
    for (const auto& e : elems) {
        bool central = true;
        for (const auto& g : G.generators())
            if (compose(e, g) != compose(g, e)) { central = false; break; }
        if (central) fp.center_order++;
    }
    std::vector<Permutation> comms;
    for (const auto& a : G.generators())
        for (const auto& b : G.generators()) {
            Permutation c = compose(compose(inverse(a), inverse(b)), compose(a, b));
            if (!c.is_identity()) comms.push_back(c);
        }
    if (comms.empty())
        fp.derived_order = 1;
    else
        fp.derived_order = static_cast<unsigned long>(normal_closure(G, comms).order());
    return fp;
}

inline bool is_cyclic(const Fingerprint& fp, unsigned long n) {
    return fp.order == n && fp.exponent == n;
}

inline bool is_klein_four(const Fingerprint& fp) { return fp.order == 4 && fp.exponent == 2; }

/// Q8 is the unique nonabelian group of order 8 with a single involution.
inline bool is_quaternion8(const Fingerprint& fp) {
    auto it = fp.order_histogram.find(2);
    return fp.order == 8 && !fp.abelian && it != fp.order_histogram.end() && it->second == 1;
}

inline bool is_v4_x_c3(const Fingerprint& fp) {
    auto it = fp.order_histogram.find(2);
    return fp.order == 12 && fp.abelian && fp.exponent == 6 && it != fp.order_histogram.end() &&
           it->second == 3;
}

/// Among order-24 groups, (nonabelian, one involution, center of order 6)
/// pins down Q8 x C3.
inline bool is_q8_x_c3(const Fingerprint& fp) {
    auto it = fp.order_histogram.find(2);
    return fp.order == 24 && !fp.abelian && it != fp.order_histogram.end() && it->second == 1 &&
           fp.center_order == 6;
}

inline std::optional<std::string> small_group_name(const Fingerprint& fp) {
    if (fp.order == 1) return "C1";
    if (is_cyclic(fp, fp.order)) return "C" + std::to_string(fp.order);
    if (is_klein_four(fp)) return "V4";
    if (is_quaternion8(fp)) return "Q8";
    if (is_v4_x_c3(fp)) return "V4xC3";
    if (is_q8_x_c3(fp)) return "Q8xC3";
    return std::nullopt;
}

} // namespace dessins
