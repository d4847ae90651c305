#pragma once

#include <complex>
#include <fstream>

#include "hypermap.hpp"
#include "triangle.hpp"

namespace dessins {

struct ConjClass {
    Permutation rep;
    BigInt size;
    long element_order;
};

/// Conjugacy classes with an element -> class lookup. Natural symmetric
/// groups are handled analytically through cycle types; everything else by
/// full enumeration (bounded).
class ClassTable {
public:
    explicit ClassTable(PermGroup G, size_t bound = 1000000) : G_(std::move(G)) {
        if (G_.is_natural_symmetric()) {
            build_symmetric(G_.degree());
            return;
        }
        if (G_.order() > bound)
            throw std::runtime_error("ClassTable: order exceeds enumeration bound");
        auto elems = G_.elements(bound);
        std::sort(elems.begin(), elems.end());
        std::map<Permutation, int> cls;
        std::vector<std::vector<Permutation>> members;
        for (const auto& e : elems) {
            if (cls.count(e)) continue;
            // conjugation orbit
            std::vector<Permutation> orbit{e};
            cls[e] = -1;
            for (size_t h = 0; h < orbit.size(); ++h)
                for (const auto& g : G_.generators()) {
                    auto c = conjugate(orbit[h], g);
                    if (!cls.count(c)) { cls[c] = -1; orbit.push_back(c); }
                }
            members.push_back(std::move(orbit));
        }
        std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
            long oa = order_of(a[0]), ob = order_of(b[0]);
            if (oa != ob) return oa < ob;
            if (a.size() != b.size()) return a.size() < b.size();
            return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
        });
        for (size_t i = 0; i < members.size(); ++i) {
            auto rep = *std::min_element(members[i].begin(), members[i].end());
            classes_.push_back({rep, BigInt(members[i].size()), order_of(rep)});
            for (const auto& e : members[i]) lookup_[key(e)] = static_cast<int>(i);
        }
    }

    const std::vector<ConjClass>& classes() const { return classes_; }

    int class_of(const Permutation& g) const {
        if (symmetric_) {
            auto it = type_lookup_.find(cycle_type(g));
            if (it == type_lookup_.end()) throw std::invalid_argument("class_of: wrong degree");
            return it->second;
        }
        auto it = lookup_.find(key(g));
        if (it == lookup_.end()) throw std::invalid_argument("class_of: element not in group");
        return it->second;
    }

    /// Explicit member list of one class (conjugation orbit of the rep).
    std::vector<Permutation> members(int id, size_t bound = 1000000) const {
        if (classes_[id].size > bound)
            throw std::runtime_error("ClassTable::members: class exceeds bound");
        std::vector<Permutation> orbit{classes_[id].rep};
        std::set<Permutation> seen{classes_[id].rep};
        for (size_t h = 0; h < orbit.size(); ++h)
            for (const auto& g : G_.generators()) {
                auto c = conjugate(orbit[h], g);
                if (seen.insert(c).second) orbit.push_back(c);
            }
        if (BigInt(orbit.size()) != classes_[id].size)
            throw std::logic_error("ClassTable::members: orbit size mismatch");
        return orbit;
    }

private:
    PermGroup G_;
    bool symmetric_ = false;
    std::vector<ConjClass> classes_;
    std::unordered_map<std::string, int> lookup_;
    std::map<CycleType, int> type_lookup_;

    static std::string key(const Permutation& p) {
        std::string s(p.degree(), '\0');
        for (int i = 0; i < p.degree(); ++i) s[i] = static_cast<char>(p[i]);
        return s;
    }

    void build_symmetric(int d) {
        symmetric_ = true;
        // partitions of d, each one class; size = d! / prod(part^mult * mult!)
        std::vector<int> part;
        std::vector<std::vector<int>> all;
        std::function<void(int, int)> rec = [&](int rest, int maxp) {
            if (rest == 0) { all.push_back(part); return; }
            for (int p = std::min(rest, maxp); p >= 1; --p) {
                part.push_back(p);
                rec(rest - p, p);
                part.pop_back();
            }
        };
        rec(d, d);
        BigInt dfact = big_factorial(d);
        std::vector<std::pair<ConjClass, CycleType>> rows;
        for (const auto& pa : all) {
            std::vector<std::vector<int>> cycles;
            int next = 1;
            for (int p : pa) {
                std::vector<int> c;
                for (int i = 0; i < p; ++i) c.push_back(next++);
                cycles.push_back(c);
            }
            Permutation rep = perm_from_cycles(cycles, d);
            BigInt denom = 1;
            std::map<int, int> mult;
            for (int p : pa) mult[p]++;
            for (auto [p, m] : mult) {
                for (int i = 0; i < m; ++i) denom *= p;
                denom *= big_factorial(m);
            }
            CycleType t(pa.begin(), pa.end());
            std::sort(t.begin(), t.end());
            rows.push_back({{rep, dfact / denom, order_of(rep)}, t});
        }
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            if (a.first.element_order != b.first.element_order)
                return a.first.element_order < b.first.element_order;
            if (a.first.size != b.first.size) return a.first.size < b.first.size;
            return a.second < b.second;
        });
        for (size_t i = 0; i < rows.size(); ++i) {
            classes_.push_back(rows[i].first);
            type_lookup_[rows[i].second] = static_cast<int>(i);
        }
    }
};

inline std::vector<ConjClass> conjugacy_classes(const PermGroup& G, size_t bound = 1000000) {
    return ClassTable(G, bound).classes();
}

/// Exact count of (x, y, z) in X x Y x Z with xyz = 1, by iterating X x Y.
inline BigInt count_triples_bruteforce(const ClassTable& ct, int xi, int yi, int zi) {
    BigInt cnt = 0;
    auto X = ct.members(xi), Y = ct.members(yi);
    for (const auto& x : X)
        for (const auto& y : Y)
            if (ct.class_of(inverse(compose(x, y))) == zi) ++cnt;
    return cnt;
}

/// One-pass variant: counts for every z-class at once.
inline std::vector<BigInt> count_triples_by_z(const ClassTable& ct, int xi, int yi) {
    std::vector<BigInt> cnt(ct.classes().size(), 0);
    auto X = ct.members(xi), Y = ct.members(yi);
    for (const auto& x : X)
        for (const auto& y : Y) ++cnt[ct.class_of(inverse(compose(x, y)))];
    return cnt;
}

// ---------- character tables (external fixtures) ----------

struct CharacterTable {
    std::string group_name;
    long order = 0;
    std::vector<long> sizes;
    std::vector<long> orders;
    std::map<long, std::vector<int>> powermaps; // p -> 0-based class of rep^p
    std::vector<std::vector<std::complex<double>>> values;

    size_t class_count() const { return sizes.size(); }
};

namespace detail {

inline std::complex<double> parse_char_value(const std::string& tok) {
    if (tok.find('/') != std::string::npos) {
        auto pos = tok.find('/');
        return {std::stod(tok.substr(0, pos)) / std::stod(tok.substr(pos + 1)), 0.0};
    }
    if (!tok.empty() && tok.back() == 'i') {
        std::string body = tok.substr(0, tok.size() - 1);
        for (size_t i = body.size(); i-- > 1;) {
            if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                return {std::stod(body.substr(0, i)),
                        std::stod(body[i] == '+' ? body.substr(i + 1) : body.substr(i))};
            }
        }
        return {0.0, std::stod(body)}; // pure imaginary "bi"
    }
    return {std::stod(tok), 0.0};
}

} // namespace detail

inline CharacterTable parse_character_table(std::istream& in) {
    CharacterTable t;
    std::string line;
    long k = -1;
    while (std::getline(in, line)) {
        std::istringstream is(line);
        std::string tok;
        if (!(is >> tok)) continue;
        if (tok == "group") { is >> t.group_name; }
        else if (tok == "order") { is >> t.order; }
        else if (tok == "classes") { is >> k; }
        else if (tok == "sizes") {
            long v;
            while (is >> v) t.sizes.push_back(v);
        } else if (tok == "orders") {
            long v;
            while (is >> v) t.orders.push_back(v);
        } else if (tok == "powermap") {
            long p, v;
            is >> p;
            std::vector<int> pm;
            while (is >> v) pm.push_back(static_cast<int>(v - 1)); // file is 1-based
            t.powermaps[p] = std::move(pm);
        } else {
            std::vector<std::complex<double>> row;
            row.push_back(detail::parse_char_value(tok));
            while (is >> tok) row.push_back(detail::parse_char_value(tok));
            t.values.push_back(std::move(row));
        }
    }
    if (k < 0 || t.sizes.size() != static_cast<size_t>(k) ||
        t.orders.size() != static_cast<size_t>(k) || t.values.size() != static_cast<size_t>(k))
        throw std::invalid_argument("parse_character_table: malformed fixture");
    for (const auto& row : t.values)
        if (row.size() != static_cast<size_t>(k))
            throw std::invalid_argument("parse_character_table: ragged value rows");
    return t;
}

inline CharacterTable load_character_table(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("load_character_table: cannot open " + path);
    return parse_character_table(f);
}

/// Class sizes sum to |G|, degrees satisfy sum chi(1)^2 = |G|, and the rows
/// are orthogonal under the class-weighted hermitian product (tol 1e-6).
inline void validate_character_table(const CharacterTable& t) {
    long total = 0;
    for (long s : t.sizes) total += s;
    if (total != t.order)
        throw std::invalid_argument("character table: class sizes do not sum to the order");
    int id_class = -1;
    for (size_t i = 0; i < t.class_count(); ++i)
        if (t.sizes[i] == 1 && t.orders[i] == 1) id_class = static_cast<int>(i);
    if (id_class < 0) throw std::invalid_argument("character table: no identity class");
    double degsum = 0;
    for (const auto& row : t.values) degsum += std::norm(row[id_class]);
    if (std::abs(degsum - static_cast<double>(t.order)) > 1e-6 * t.order)
        throw std::invalid_argument("character table: sum of squared degrees != order");
    for (size_t i = 0; i < t.values.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            std::complex<double> s = 0;
            for (size_t c = 0; c < t.class_count(); ++c)
                s += static_cast<double>(t.sizes[c]) * t.values[i][c] * std::conj(t.values[j][c]);
            double want = i == j ? static_cast<double>(t.order) : 0.0;
            if (std::abs(s - want) > 1e-6 * t.order)
                throw std::invalid_argument("character table: row orthogonality fails");
        }
}

/// Match computed classes to fixture columns by (element order, class size),
/// resolving ambiguities with the fixture's powermap lines.
inline std::vector<int> match_classes(const CharacterTable& t, const ClassTable& ct) {
    size_t k = ct.classes().size();
    if (t.class_count() != k)
        throw std::invalid_argument("match_classes: class counts differ");
    std::vector<int> out(k, -1);
    std::vector<char> used(k, 0);
    // candidates per computed class
    std::vector<std::vector<int>> cand(k);
    for (size_t i = 0; i < k; ++i) {
        for (size_t c = 0; c < k; ++c)
            if (BigInt(t.sizes[c]) == ct.classes()[i].size &&
                t.orders[c] == ct.classes()[i].element_order)
                cand[i].push_back(static_cast<int>(c));
        if (cand[i].empty())
            throw std::invalid_argument("match_classes: no fixture column matches class " +
                                        std::to_string(i));
    }
    // precompute computed powermaps for the primes the fixture supplies
    std::map<long, std::vector<int>> cpow;
    for (const auto& [p, pm] : t.powermaps) {
        (void)pm;
        std::vector<int> v(k);
        for (size_t i = 0; i < k; ++i)
            v[i] = ct.class_of(power(ct.classes()[i].rep, p));
        cpow[p] = std::move(v);
    }
    std::function<bool(size_t)> assign = [&](size_t i) -> bool {
        if (i == k) return true;
        for (int c : cand[i]) {
            if (used[c]) continue;
            out[i] = c;
            used[c] = 1;
            bool ok = true;
            // powermap consistency on everything assigned so far
            for (const auto& [p, pm] : t.powermaps) {
                for (size_t a = 0; a <= i && ok; ++a) {
                    int image = cpow[p][a];
                    if (out[image] >= 0 && pm[out[a]] != out[image]) ok = false;
                }
                if (!ok) break;
            }
            if (ok && assign(i + 1)) return true;
            used[c] = 0;
            out[i] = -1;
        }
        return false;
    };
    if (!assign(0))
        throw std::invalid_argument("match_classes: no consistent matching "
                                    "(ambiguous classes need powermap data)");
    return out;
}

/// Frobenius's class-triple count: (|X||Y||Z|/|G|) sum_chi chi(x)chi(y)chi(z)/chi(1).
/// The value must land within 1e-3 of a non-negative integer.
inline long frobenius_count(const CharacterTable& t, int cx, int cy, int cz) {
    int id_class = -1;
    for (size_t i = 0; i < t.class_count(); ++i)
        if (t.sizes[i] == 1 && t.orders[i] == 1) id_class = static_cast<int>(i);
    std::complex<double> s = 0;
    for (const auto& chi : t.values) s += chi[cx] * chi[cy] * chi[cz] / chi[id_class];
    std::complex<double> val = s * (static_cast<double>(t.sizes[cx]) * t.sizes[cy] * t.sizes[cz] /
                                    static_cast<double>(t.order));
    double re = val.real();
    if (std::abs(val.imag()) > 1e-3 || std::abs(re - std::round(re)) > 1e-3 ||
        std::round(re) < 0)
        throw std::domain_error("frobenius_count: non-integral value (corrupt table or "
                                "mismatched classes)");
    return static_cast<long>(std::llround(re));
}

/// r-tuple generalization: exponent r-2 on the degrees.
inline long frobenius_count_r(const CharacterTable& t, const std::vector<int>& cls) {
    if (cls.size() < 2) throw std::invalid_argument("frobenius_count_r: need r >= 2");
    int id_class = -1;
    for (size_t i = 0; i < t.class_count(); ++i)
        if (t.sizes[i] == 1 && t.orders[i] == 1) id_class = static_cast<int>(i);
    std::complex<double> s = 0;
    for (const auto& chi : t.values) {
        std::complex<double> term = 1;
        for (int c : cls) term *= chi[c];
        term /= std::pow(chi[id_class], static_cast<double>(cls.size()) - 2.0);
        s += term;
    }
    double factor = 1.0 / static_cast<double>(t.order);
    for (int c : cls) factor *= static_cast<double>(t.sizes[c]);
    std::complex<double> val = s * factor;
    double re = val.real();
    if (std::abs(val.imag()) > 1e-3 || std::abs(re - std::round(re)) > 1e-3 ||
        std::round(re) < 0)
        throw std::domain_error("frobenius_count_r: non-integral value");
    return static_cast<long>(std::llround(re));
}

/// Number of triples with exact orders (l, m, n), product one, generating G.
/// Conjugation-invariance lets x run over one representative per class,
/// weighted by the class size.
inline BigInt count_smooth_epimorphisms(const PermGroup& G, const ClassTable& ct,
                                        const TriangleType& type, size_t bound = 1000000) {
    if (G.order() > bound)
        throw std::runtime_error("count_smooth_epimorphisms: order exceeds bound");
    BigInt total = 0;
    for (const auto& X : ct.classes()) {
        if (X.element_order != type.l) continue;
        long cnt = 0;
        for (size_t yi = 0; yi < ct.classes().size(); ++yi) {
            if (ct.classes()[yi].element_order != type.m) continue;
            for (const auto& y : ct.members(yi)) {
                Permutation z = inverse(compose(X.rep, y));
                if (order_of(z) != type.n) continue;
                if (PermGroup({X.rep, y}).order() != G.order()) continue;
                ++cnt;
            }
        }
        total += X.size * cnt;
    }
    return total;
}

/// Kernels = epimorphisms / |Aut G| (Aut G acts freely on generating triples).
inline BigInt count_kernels(const BigInt& epi_count, const BigInt& aut_order) {
    if (aut_order <= 0) throw std::invalid_argument("count_kernels: bad |Aut G|");
    if (epi_count % aut_order != 0)
        throw std::domain_error("count_kernels: |Aut G| does not divide the epimorphism count");
    return epi_count / aut_order;
}

// ---------- congruence-subgroup arithmetic ----------

namespace detail {

inline std::vector<long> prime_divisors(long m) {
    std::vector<long> ps;
    for (long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            ps.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) ps.push_back(m);
    return ps;
}

} // namespace detail

/// |PSL2(Z) : Gamma(m)| = (m^3/2) prod_{p|m} (1 - 1/p^2) for m > 2.
inline BigInt gamma_index(long m) {
    if (m <= 2) throw std::invalid_argument("gamma_index: need m > 2");
    BigRat r = BigRat(BigInt(m) * m * m, 2);
    for (long p : detail::prime_divisors(m)) r *= BigRat(p * p - 1, p * p);
    if (boost::multiprecision::denominator(r) != 1)
        throw std::domain_error("gamma_index: non-integral result");
    return boost::multiprecision::numerator(r);
}

struct ModularDessinData {
    BigInt aut_order; // |Aut H_i| = |Delta_i : K| = |Gamma : Gamma(4n)| / 6
    BigInt genus;     // of the modular curve X(4n)
};

/// The principal-congruence-subgroup family: |Aut| = 4n^3 prod_{2 != p|n}(1 - 1/p^2)
/// and genus 1 + (2n-3) n^2 prod_{2 != p|n}(1 - 1/p^2).
inline ModularDessinData modular_dessin_data(long n) {
    if (n < 1) throw std::invalid_argument("modular_dessin_data: need n >= 1");
    BigRat aut = BigRat(BigInt(4) * n * n * n);
    BigRat gen = BigRat(BigInt(2 * n - 3) * n * n);
    for (long p : detail::prime_divisors(n)) {
        if (p == 2) continue;
        aut *= BigRat(p * p - 1, p * p);
        gen *= BigRat(p * p - 1, p * p);
    }
    gen += 1;
    if (boost::multiprecision::denominator(aut) != 1 ||
        boost::multiprecision::denominator(gen) != 1)
        throw std::domain_error("modular_dessin_data: non-integral result");
    ModularDessinData out{boost::multiprecision::numerator(aut),
                          boost::multiprecision::numerator(gen)};
    if (out.genus < 0) throw std::domain_error("modular_dessin_data: negative genus");
    // consistency with the Riemann-Hurwitz form on type (2n, 2n, 2n)
    if (rh_genus({2 * n, 2 * n, 2 * n}, out.aut_order) != out.genus)
        throw std::logic_error("modular_dessin_data: formula disagrees with Riemann-Hurwitz");
    return out;
}

} // namespace dessins
