#pragma once

#include <optional>
#include <sstream>

#include "perm_group.hpp"

namespace dessins {

namespace fp {

inline long normalize(long v, long p) {
    v %= p;
    return v < 0 ? v + p : v;
}

inline long pow_mod(long b, long e, long p) {
    long r = 1;
    b = normalize(b, p);
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline long inv_mod(long v, long p) {
    v = normalize(v, p);
    if (v == 0) throw std::invalid_argument("inv_mod: zero");
    return pow_mod(v, p - 2, p);
}

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

inline bool is_square(long v, long p) {
    v = normalize(v, p);
    if (v == 0) return true;
    return pow_mod(v, (p - 1) / 2, p) == 1;
}

inline long mult_order(long v, long p) {
    v = normalize(v, p);
    if (v == 0) throw std::invalid_argument("mult_order: zero");
    long o = 1, c = v;
    while (c != 1) {
        c = c * v % p;
        ++o;
    }
    return o;
}

/// Roots of x^2 - tr*x + det over F_p, if the polynomial splits.
inline std::optional<std::pair<long, long>> quad_roots(long tr, long det, long p) {
    long disc = normalize(tr * tr - 4 * det, p);
    if (!is_square(disc, p)) return std::nullopt;
    long s = 0;
    for (long r = 0; r < p; ++r)
        if (r * r % p == disc) { s = r; break; }
    long half = inv_mod(2, p);
    return std::make_pair(normalize((tr + s) * half, p), normalize((tr - s) * half, p));
}

} // namespace fp

/// Invertible 2x2 matrix over F_p (p an odd prime), entries normalized.
struct Mat2 {
    long a, b, c, d;
    long p;

    Mat2(long a_, long b_, long c_, long d_, long p_)
        : a(fp::normalize(a_, p_)), b(fp::normalize(b_, p_)), c(fp::normalize(c_, p_)),
          d(fp::normalize(d_, p_)), p(p_) {
        if (p < 3 || !fp::is_prime(p)) throw std::invalid_argument("Mat2: p must be an odd prime");
        if (det() == 0) throw std::invalid_argument("Mat2: singular matrix");
    }

    static Mat2 identity(long p) { return Mat2(1, 0, 0, 1, p); }

    long det() const { return fp::normalize(a * d - b * c, p); }
    long trace() const { return fp::normalize(a + d, p); }

    Mat2 operator*(const Mat2& o) const {
        if (p != o.p) throw std::invalid_argument("Mat2: field mismatch");
        return Mat2(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d, p);
    }

    Mat2 inverse() const {
        long di = fp::inv_mod(det(), p);
        return Mat2(d * di, -b * di, -c * di, a * di, p);
    }

    bool operator==(const Mat2& o) const {
        return p == o.p && a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

inline std::string to_string(const Mat2& m) {
    std::ostringstream os;
    os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]] mod " << m.p;
    return os.str();
}

inline Mat2 parse_mat2(const std::string& s) {
    long a, b, c, d, p;
    char ch;
    std::istringstream is(s);
    auto expect = [&](char want) {
        is >> ch;
        if (ch != want) throw std::invalid_argument("parse_mat2: malformed matrix string");
    };
    expect('[');
    expect('[');
    is >> a;
    expect(',');
    is >> b;
    expect(']');
    expect(',');
    expect('[');
    is >> c;
    expect(',');
    is >> d;
    expect(']');
    expect(']');
    std::string word;
    is >> word;
    if (word != "mod") throw std::invalid_argument("parse_mat2: expected 'mod'");
    is >> p;
    if (!is) throw std::invalid_argument("parse_mat2: malformed matrix string");
    return Mat2(a, b, c, d, p);
}

/// Element of PGL2(p): matrix modulo scalars, with the representative scaled
/// so its first nonzero entry in reading order is 1.
struct ProjElement {
    Mat2 rep;

    explicit ProjElement(const Mat2& m) : rep(canonicalize(m)) {}

    static Mat2 canonicalize(const Mat2& m) {
        long lead = m.a ? m.a : m.b ? m.b : m.c ? m.c : m.d;
        long s = fp::inv_mod(lead, m.p);
        return Mat2(m.a * s, m.b * s, m.c * s, m.d * s, m.p);
    }

    long p() const { return rep.p; }
    bool is_identity() const { return rep == Mat2::identity(rep.p); }

    ProjElement operator*(const ProjElement& o) const { return ProjElement(rep * o.rep); }
    ProjElement inverse() const { return ProjElement(rep.inverse()); }
    bool operator==(const ProjElement& o) const { return rep == o.rep; }
};

inline long proj_order(const ProjElement& e) {
    long o = 1;
    ProjElement c = e;
    while (!c.is_identity()) {
        c = c * e;
        ++o;
    }
    return o;
}

/// Membership in PSL2(p) inside PGL2(p): det of any representative is a
/// square (well defined since scalars change det by squares).
inline bool in_psl(const ProjElement& e) { return fp::is_square(e.rep.det(), e.p()); }

/// The projective line P^1(p) indexed 0, 1, ..., p-1, then infinity last.
/// Points are row vectors [u:w] acted on the right, so the permutation image
/// is a homomorphism for "apply p then q" composition.
inline Permutation proj_perm(const Mat2& m) {
    long p = m.p;
    std::vector<int> img(p + 1);
    for (long t = 0; t <= p; ++t) {
        long u = (t == p) ? 1 : t, w = (t == p) ? 0 : 1;
        long u2 = fp::normalize(u * m.a + w * m.c, p);
        long w2 = fp::normalize(u * m.b + w * m.d, p);
        img[t] = w2 == 0 ? p : static_cast<int>(u2 * fp::inv_mod(w2, p) % p);
    }
    return Permutation(std::move(img));
}

inline Permutation proj_perm(const ProjElement& e) { return proj_perm(e.rep); }

inline long smallest_primitive_root(long p) {
    for (long r = 2; r < p; ++r)
        if (fp::mult_order(r, p) == p - 1) return r;
    throw std::logic_error("no primitive root");
}

/// Faithful degree-(p+1) permutation model of PGL2(p), with order
/// p(p-1)(p+1) verified by the BSGS.
inline PermGroup pgl2_as_perm_group(long p) {
    if (p < 3 || p > 97 || !fp::is_prime(p))
        throw std::invalid_argument("pgl2_as_perm_group: need an odd prime <= 97");
    Permutation t = proj_perm(Mat2(1, 1, 0, 1, p));
    Permutation u = proj_perm(Mat2(1, 0, 1, 1, p));
    Permutation s = proj_perm(Mat2(smallest_primitive_root(p), 0, 0, 1, p));
    PermGroup G({t, u, s});
    if (G.order() != BigInt(p) * (p - 1) * (p + 1))
        throw std::logic_error("pgl2_as_perm_group: order check failed");
    return G;
}

inline PermGroup psl2_as_perm_group(long p) {
    if (p < 3 || p > 97 || !fp::is_prime(p))
        throw std::invalid_argument("psl2_as_perm_group: need an odd prime <= 97");
    Permutation t = proj_perm(Mat2(1, 1, 0, 1, p));
    Permutation u = proj_perm(Mat2(1, 0, 1, 1, p));
    PermGroup G({t, u});
    if (G.order() != BigInt(p) * (p - 1) * (p + 1) / 2)
        throw std::logic_error("psl2_as_perm_group: order check failed");
    return G;
}

/// Verified (x, y, z) over F_p with x*y*z = 1, plus eigenvalue-ratio data
/// for the order-2n generators (the swap criterion of the construction).
struct ProjTriple {
    ProjElement x, y, z;
    long d;                                   // the torus parameter
    std::optional<std::pair<long, long>> z_eigenvalues; // absent if irrational over F_p
    bool swap_case = false;
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline long smallest_of_order(long order, long p, const std::string& what) {
    for (long d = 2; d < p; ++d)
        if (fp::mult_order(d, p) == order) return d;
    throw std::invalid_argument(what + ": no element of the required order mod p");
}

} // namespace detail

/// x = image of [[a,b],[c,-a]] with a^2+bc+1 = 0 (an involution in PSL),
/// y = image of diag(d,1) of order 2n outside PSL, z = (xy)^-1 of order 2n.
/// With a = (d+1)/(d-1) the eigenvalue ratio of Z is d^{+-1} (swap case);
/// other a give ratio d^{+-j}, j != +-1 (no inner automorphism swaps y, z).
inline ProjTriple build_example7_triple(long n, long p, std::optional<long> d_in = {},
                                        std::optional<long> a_in = {},
                                        std::optional<long> b_in = {},
                                        std::optional<long> c_in = {}) {
    using namespace detail;
    require(n >= 3, "example7: n >= 3");
    require(fp::is_prime(p) && p % 2 == 1, "example7: p must be an odd prime");
    require(p % (4 * n) == fp::normalize(2 * n + 1, 4 * n), "example7: need p = 2n+1 mod 4n");
    long d = d_in ? *d_in : smallest_of_order(2 * n, p, "example7");
    require(fp::mult_order(d, p) == 2 * n, "example7: d must have multiplicative order 2n");
    long a = a_in ? *a_in : fp::normalize((d + 1) * fp::inv_mod(d - 1, p), p);
    a = fp::normalize(a, p);
    require(a != 0, "example7: a = 0 is degenerate (d = -1)");
    require(fp::normalize(a * a + 1, p) != 0, "example7: a^2 = -1 is degenerate (forces n <= 2)");
    long bc = fp::normalize(-1 - a * a, p);
    require(bc != 0, "example7: bc = 0 is degenerate");
    long b = b_in ? fp::normalize(*b_in, p) : 1;
    require(b != 0, "example7: b must be nonzero");
    long c = c_in ? fp::normalize(*c_in, p) : fp::normalize(bc * fp::inv_mod(b, p), p);
    require(fp::normalize(a * a + b * c + 1, p) == 0, "example7: a^2 + bc + 1 != 0");

    Mat2 X(a, b, c, -a, p), Y(d, 0, 0, 1, p);
    Mat2 Z = (X * Y).inverse();
    ProjTriple t{ProjElement(X), ProjElement(Y), ProjElement(Z), d, {}, false};
    require(proj_order(t.x) == 2, "example7: x does not have order 2");
    require(in_psl(t.x), "example7: x not in PSL");
    require(proj_order(t.y) == 2 * n, "example7: y does not have order 2n");
    require(!in_psl(t.y), "example7: y lies in PSL");
    require(proj_order(t.z) == 2 * n, "example7: z does not have order 2n");
    require((t.x * t.y * t.z).is_identity(), "example7: product not identity");
    t.z_eigenvalues = fp::quad_roots(Z.trace(), Z.det(), p);
    if (t.z_eigenvalues) {
        auto [l, m] = *t.z_eigenvalues;
        long ratio = fp::normalize(l * fp::inv_mod(m, p), p);
        t.swap_case = ratio == fp::normalize(d, p) || ratio == fp::inv_mod(d, p);
    }
    return t;
}

/// All of x, z, y inside PSL2(p): x order 2, z order 4n, y = (zx)^-1 of
/// order 2n, with a = (d^4+1)/(d-d^3) for d of order 8n mod p.
inline ProjTriple build_example11_triple(long n, long p, std::optional<long> d_in = {},
                                         std::optional<long> b_in = {}) {
    using namespace detail;
    require(n >= 2, "example11: n >= 2");
    require(fp::is_prime(p) && p % 2 == 1, "example11: p must be an odd prime");
    require(p % (8 * n) == 1, "example11: need p = 1 mod 8n");
    long d = d_in ? *d_in : smallest_of_order(8 * n, p, "example11");
    require(fp::mult_order(d, p) == 8 * n, "example11: d must have multiplicative order 8n");
    long denom = fp::normalize(d - fp::pow_mod(d, 3, p), p);
    require(denom != 0, "example11: d - d^3 = 0");
    long a = fp::normalize((fp::pow_mod(d, 4, p) + 1) * fp::inv_mod(denom, p), p);
    long bc = fp::normalize(-1 - a * a, p);
    long b = b_in ? fp::normalize(*b_in, p) : 1;
    require(b != 0, "example11: b must be nonzero");
    long c = fp::normalize(bc * fp::inv_mod(b, p), p);

    Mat2 X(a, b, c, -a, p), Z(d, 0, 0, fp::inv_mod(d, p), p);
    Mat2 Y = (Z * X).inverse();
    ProjTriple t{ProjElement(X), ProjElement(Y), ProjElement(Z), d, {}, false};
    require(proj_order(t.x) == 2, "example11: x does not have order 2");
    require(proj_order(t.z) == 4 * n, "example11: z does not have order 4n");
    require(proj_order(t.y) == 2 * n, "example11: y does not have order 2n");
    require(in_psl(t.x) && in_psl(t.y) && in_psl(t.z), "example11: triple not inside PSL");
    require((t.x * t.y * t.z).is_identity(), "example11: product not identity");
    return t;
}

/// x order 2 outside PSL, y order 2n inside, z order 4n outside, with
/// a^-2 bc + d + d^-1 = 1 and a^2 + bc a non-square; <y, z> = PGL2(p).
inline ProjTriple build_example13_triple(long n, long p, std::optional<long> d_in = {},
                                         std::optional<long> a_in = {},
                                         std::optional<long> b_in = {}) {
    using namespace detail;
    require(n >= 3, "example13: n >= 3");
    require(fp::is_prime(p) && p % 2 == 1, "example13: p must be an odd prime");
    require(p % (8 * n) == fp::normalize(4 * n + 1, 8 * n), "example13: need p = 4n+1 mod 8n");
    long d = 0;
    if (d_in) {
        d = *d_in;
        require(fp::mult_order(d, p) == 4 * n, "example13: d must have multiplicative order 4n");
    } else {
        // smallest d of order 4n making a^2+bc a non-square
        for (long cand = 2; cand < p; ++cand)
            if (fp::mult_order(cand, p) == 4 * n &&
                !fp::is_square(fp::normalize(-cand, p), p)) { d = cand; break; }
        require(d != 0, "example13: no usable d mod p");
    }
    long a = a_in ? fp::normalize(*a_in, p) : 1;
    require(a != 0, "example13: a must be nonzero");
    long bc = fp::normalize(a * a * (1 - d - fp::inv_mod(d, p)), p);
    require(bc != 0, "example13: bc = 0 is degenerate");
    require(!fp::is_square(fp::normalize(a * a + bc, p), p), "example13: a^2 + bc is a square");
    long b = b_in ? fp::normalize(*b_in, p) : 1;
    require(b != 0, "example13: b must be nonzero");
    long c = fp::normalize(bc * fp::inv_mod(b, p), p);

    Mat2 X(a, b, c, -a, p), Y(d, 0, 0, fp::inv_mod(d, p), p);
    Mat2 Z = (X * Y).inverse();
    ProjTriple t{ProjElement(X), ProjElement(Y), ProjElement(Z), d, {}, false};
    require(proj_order(t.x) == 2, "example13: x does not have order 2");
    require(!in_psl(t.x), "example13: x lies in PSL");
    require(proj_order(t.y) == 2 * n, "example13: y does not have order 2n");
    require(in_psl(t.y), "example13: y not in PSL");
    require(proj_order(t.z) == 4 * n, "example13: z does not have order 4n");
    require(!in_psl(t.z), "example13: z lies in PSL");
    require((t.x * t.y * t.z).is_identity(), "example13: product not identity");
    return t;
}

} // namespace dessins
