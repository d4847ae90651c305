#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dessins {

/// A permutation of {0, ..., degree-1}, stored as its image table.
/// Points are 0-based internally; all text I/O is 1-based disjoint-cycle
/// notation, e.g. "(1,2)(3,4)". Composition is "apply p first, then q"
/// (points acted on the right), so ω^(pq) = (ω^p)^q.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size(), 0);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("Permutation: image table is not a bijection");
            seen[v] = 1;
        }
    }

    static Permutation identity(int degree) {
        std::vector<int> v(degree);
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator[](int p) const { return img_[p]; }
    int apply(int p) const { return img_[p]; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    const std::vector<int>& images() const { return img_; }

private:
    std::vector<int> img_;
};

/// apply p first, then q
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> v(p.degree());
    for (int i = 0; i < p.degree(); ++i) v[i] = q[p[i]];
    return Permutation(std::move(v));
}

inline Permutation inverse(const Permutation& p) {
    std::vector<int> v(p.degree());
    for (int i = 0; i < p.degree(); ++i) v[p[i]] = i;
    return Permutation(std::move(v));
}

/// g^-1 * p * g
inline Permutation conjugate(const Permutation& p, const Permutation& g) {
    return compose(compose(inverse(g), p), g);
}

inline Permutation power(const Permutation& p, long e) {
    Permutation r = Permutation::identity(p.degree());
    Permutation base = e < 0 ? inverse(p) : p;
    for (long k = e < 0 ? -e : e; k > 0; --k) r = compose(r, base);
    return r;
}

/// Multiset of cycle lengths, fixed points included; sorted ascending.
using CycleType = std::vector<int>;

inline std::vector<std::vector<int>> cycles_of(const Permutation& p) {
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(p.degree(), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        for (int j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            c.push_back(j);
        }
        cycles.push_back(std::move(c));
    }
    return cycles;
}

inline CycleType cycle_type(const Permutation& p) {
    CycleType t;
    for (const auto& c : cycles_of(p)) t.push_back(static_cast<int>(c.size()));
    std::sort(t.begin(), t.end());
    return t;
}

inline long order_of(const Permutation& p) {
    long o = 1;
    for (int l : cycle_type(p)) o = std::lcm<long>(o, l);
    return o;
}

enum class Parity { even, odd };

/// (degree - number of cycles) mod 2
inline Parity parity_of(const Permutation& p) {
    return (p.degree() - cycles_of(p).size()) % 2 == 0 ? Parity::even : Parity::odd;
}

inline bool is_even(const Permutation& p) { return parity_of(p) == Parity::even; }

/// Build from 1-based disjoint cycles; unnamed points are fixed.
inline Permutation perm_from_cycles(const std::vector<std::vector<int>>& cycles, int degree) {
    if (degree < 0) throw std::invalid_argument("perm_from_cycles: negative degree");
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(degree, 0);
    for (const auto& c : cycles) {
        for (size_t i = 0; i < c.size(); ++i) {
            int a = c[i], b = c[(i + 1) % c.size()];
            if (a < 1 || a > degree)
                throw std::invalid_argument("perm_from_cycles: point out of range");
            if (used[a - 1])
                throw std::invalid_argument("perm_from_cycles: repeated point across cycles");
            used[a - 1] = 1;
            img[a - 1] = b - 1;
        }
    }
    return Permutation(std::move(img));
}

inline std::string to_cycle_string(const Permutation& p) {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles_of(p)) {
        if (c.size() < 2) continue;
        any = true;
        os << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ',';
            os << c[i] + 1;
        }
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

/// Parse "(1,2)(3,4)" (1-based); "()" is the identity.
inline Permutation parse_cycle_string(const std::string& s, int degree) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
        if (s[i] != '(') throw std::invalid_argument("parse_cycle_string: expected '('");
        size_t close = s.find(')', i);
        if (close == std::string::npos)
            throw std::invalid_argument("parse_cycle_string: unbalanced parenthesis");
        std::string body = s.substr(i + 1, close - i - 1);
        std::vector<int> cyc;
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ','))
            if (!tok.empty()) cyc.push_back(std::stoi(tok));
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        i = close + 1;
    }
    return perm_from_cycles(cycles, degree);
}

} // namespace dessins
