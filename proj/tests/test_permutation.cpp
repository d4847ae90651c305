#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <dessins/permutation.hpp>

using namespace dessins;

namespace {

Permutation random_perm(int degree, std::mt19937& rng) {
    std::vector<int> v(degree);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(std::move(v));
}

} // namespace

TEST_CASE("perm_from_cycles basics") {
    // empty cycle list is the identity
    CHECK(perm_from_cycles({}, 5) == Permutation::identity(5));
    CHECK(perm_from_cycles({{}}, 5) == Permutation::identity(5));

    // the x of the (2,6,6) S5 triple
    auto x = perm_from_cycles({{1, 2}, {3, 4}}, 5);
    CHECK(x[0] == 1);
    CHECK(x[1] == 0);
    CHECK(x[2] == 3);
    CHECK(x[3] == 2);
    CHECK(x[4] == 4);

    // 24-cycle fixing the last point, degree 25
    std::vector<int> big;
    for (int i = 1; i <= 24; ++i) big.push_back(i);
    auto z = perm_from_cycles({big}, 25);
    CHECK(order_of(z) == 24);
    CHECK(z[24] == 24);
    CHECK(cycle_type(z) == CycleType{1, 24});

    CHECK_THROWS_AS(perm_from_cycles({{1, 2}, {2, 3}}, 5), std::invalid_argument);
    CHECK_THROWS_AS(perm_from_cycles({{1, 6}}, 5), std::invalid_argument);
}

TEST_CASE("compose conventions and the published triples") {
    auto x = perm_from_cycles({{1, 2}, {3, 4}}, 5);
    auto y = perm_from_cycles({{1, 3}, {2, 4, 5}}, 5);
    auto z = perm_from_cycles({{1, 4}, {2, 5, 3}}, 5);

    CHECK(compose(x, inverse(x)).is_identity());
    // x*y*z = 1 under "apply p then q" fixes z = (xy)^-1
    CHECK(compose(compose(x, y), z).is_identity());
    CHECK(inverse(compose(x, y)) == z);

    // degree-25 check: y = (zx)^-1 has cycle type {12,8,2,2,1}
    std::vector<int> c1;
    for (int i = 1; i <= 24; ++i) c1.push_back(i);
    auto z9 = perm_from_cycles({c1}, 25);
    auto x9 = perm_from_cycles({{1, 25}, {2, 15}, {3, 8}, {4, 7}, {5, 6}}, 25);
    auto y9 = inverse(compose(z9, x9));
    CHECK(cycle_type(compose(z9, x9)) == CycleType{1, 2, 2, 8, 12});
    CHECK(cycle_type(y9) == CycleType{1, 2, 2, 8, 12});
    CHECK(compose(compose(x9, y9), z9).is_identity());

    CHECK_THROWS_AS(compose(x, z9), std::invalid_argument);
}

TEST_CASE("order and parity") {
    CHECK(order_of(Permutation::identity(4)) == 1);
    CHECK(parity_of(Permutation::identity(4)) == Parity::even);

    auto y6 = perm_from_cycles({{1, 2, 3, 4, 5, 6}}, 9);
    CHECK(order_of(y6) == 6);
    CHECK(parity_of(y6) == Parity::odd);

    auto x6 = perm_from_cycles({{1, 7}, {2, 8}, {4, 6}, {5, 9}}, 9);
    CHECK(parity_of(x6) == Parity::even);

    // a 4n-cycle is odd
    auto z10 = perm_from_cycles({{1, 2, 3, 4, 5, 6, 7, 8}}, 9);
    CHECK(parity_of(z10) == Parity::odd);

    std::vector<int> c;
    for (int i = 1; i <= 24; ++i) c.push_back(i);
    auto y9 = inverse(compose(perm_from_cycles({c}, 25),
                              perm_from_cycles({{1, 25}, {2, 15}, {3, 8}, {4, 7}, {5, 6}}, 25)));
    CHECK(order_of(y9) == 24); // lcm{12,8,2,2,1}
}

TEST_CASE("order and parity properties on random permutations") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        int d = 2 + static_cast<int>(rng() % 14);
        auto p = random_perm(d, rng);
        auto q = random_perm(d, rng);
        // order(pq) == order(qp)
        CHECK(order_of(compose(p, q)) == order_of(compose(q, p)));
        // parity is a homomorphism
        bool lhs = parity_of(compose(p, q)) == Parity::odd;
        bool rhs = (parity_of(p) == Parity::odd) != (parity_of(q) == Parity::odd);
        CHECK(lhs == rhs);
        // conjugation preserves cycle type
        CHECK(cycle_type(conjugate(p, q)) == cycle_type(p));
    }
}

TEST_CASE("cycle string round trip") {
    CHECK(to_cycle_string(Permutation::identity(6)) == "()");
    CHECK(parse_cycle_string("()", 6) == Permutation::identity(6));
    auto y = perm_from_cycles({{1, 3}, {2, 4, 5}}, 5);
    CHECK(to_cycle_string(y) == "(1,3)(2,4,5)");
    CHECK(parse_cycle_string(to_cycle_string(y), 5) == y);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = random_perm(3 + static_cast<int>(rng() % 12), rng);
        CHECK(parse_cycle_string(to_cycle_string(p), p.degree()) == p);
    }
}
