#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <dessins/counting.hpp>
#include <dessins/linfp.hpp>

using namespace dessins;

namespace {

PermGroup sym(int d) {
    std::vector<int> cyc;
    for (int i = 1; i <= d; ++i) cyc.push_back(i);
    return PermGroup({perm_from_cycles({{1, 2}}, d), perm_from_cycles({cyc}, d)});
}

} // namespace

TEST_CASE("conjugacy classes") {
    PermGroup c3({perm_from_cycles({{1, 2, 3}}, 3)});
    auto cls3 = conjugacy_classes(c3);
    CHECK(cls3.size() == 3);
    for (const auto& c : cls3) CHECK(c.size == 1);

    // S5: classes indexed by the 7 partitions of 5
    ClassTable s5(sym(5));
    CHECK(s5.classes().size() == 7);
    BigInt total = 0;
    for (const auto& c : s5.classes()) total += c.size;
    CHECK(total == 120);
    // the analytic sizes match a direct enumeration
    ClassTable s5e(PermGroup({perm_from_cycles({{1, 2}}, 5), perm_from_cycles({{1, 2, 3, 4, 5}}, 5),
                              perm_from_cycles({{1, 2}}, 5)}),
                   200); // same group, but not flagged symmetric? it is; force via members
    for (size_t i = 0; i < s5.classes().size(); ++i) {
        auto mem = s5.members(static_cast<int>(i));
        CHECK(BigInt(mem.size()) == s5.classes()[i].size);
        for (const auto& m : mem) CHECK(s5.class_of(m) == static_cast<int>(i));
    }

    // PGL2(7): 9 classes totalling 336, with the ATLAS (order, size) profile
    ClassTable pgl(pgl2_as_perm_group(7));
    REQUIRE(pgl.classes().size() == 9);
    std::vector<std::pair<long, long>> profile;
    BigInt tot = 0;
    for (const auto& c : pgl.classes()) {
        profile.push_back({c.element_order, static_cast<long>(c.size)});
        tot += c.size;
    }
    CHECK(tot == 336);
    CHECK(profile == std::vector<std::pair<long, long>>{{1, 1},
                                                        {2, 21},
                                                        {2, 28},
                                                        {3, 56},
                                                        {4, 42},
                                                        {6, 56},
                                                        {7, 48},
                                                        {8, 42},
                                                        {8, 42}});
}

TEST_CASE("brute-force triple counting") {
    PermGroup triv({Permutation::identity(3)});
    ClassTable ct(triv);
    CHECK(count_triples_bruteforce(ct, 0, 0, 0) == 1);

    // sum over z-classes of the counts is |X| |Y|
    ClassTable s4(sym(4));
    for (size_t i = 0; i < s4.classes().size(); ++i)
        for (size_t j = 0; j < s4.classes().size(); ++j) {
            auto by_z = count_triples_by_z(s4, static_cast<int>(i), static_cast<int>(j));
            BigInt sum = 0;
            for (const auto& v : by_z) sum += v;
            CHECK(sum == s4.classes()[i].size * s4.classes()[j].size);
        }

    // PGL2(7): the (2,6,6) triples number exactly |G| = 336
    ClassTable pgl(pgl2_as_perm_group(7));
    BigInt total = 0;
    for (size_t i = 0; i < 9; ++i) {
        if (pgl.classes()[i].element_order != 2) continue;
        for (size_t j = 0; j < 9; ++j) {
            if (pgl.classes()[j].element_order != 6) continue;
            auto by_z = count_triples_by_z(pgl, static_cast<int>(i), static_cast<int>(j));
            for (size_t k = 0; k < 9; ++k)
                if (pgl.classes()[k].element_order == 6) total += by_z[k];
        }
    }
    CHECK(total == 336);
}

TEST_CASE("character table fixtures parse and validate") {
    for (const char* path : {"fixtures/s4.tbl", "fixtures/s5.tbl", "fixtures/pgl2_7.tbl"}) {
        auto t = load_character_table(path);
        CHECK_NOTHROW(validate_character_table(t));
    }
    auto t = load_character_table("fixtures/pgl2_7.tbl");
    CHECK(t.order == 336);
    CHECK(t.class_count() == 9);
    CHECK(t.powermaps.count(3) == 1);

    // corrupt value breaks orthogonality
    std::istringstream bad(
        "group X\norder 6\nclasses 3\nsizes 1 2 3\norders 1 3 2\n"
        "1 1 1\n1 1 -1\n2 0 0\n"); // true S3 table has 2 -1 0 in the last row
    auto tb = parse_character_table(bad);
    CHECK_THROWS_AS(validate_character_table(tb), std::invalid_argument);

    // malformed: wrong number of rows
    std::istringstream mal("group X\norder 2\nclasses 2\nsizes 1 1\norders 1 2\n1 1\n");
    CHECK_THROWS_AS(parse_character_table(mal), std::invalid_argument);
}

TEST_CASE("class matching uses powermaps to split same-size classes") {
    auto t = load_character_table("fixtures/pgl2_7.tbl");
    ClassTable ct(pgl2_as_perm_group(7));
    auto m = match_classes(t, ct);
    // the two order-8 classes are distinguished by the cube map
    for (size_t i = 0; i < 9; ++i) {
        CHECK(t.orders[m[i]] == ct.classes()[i].element_order);
        CHECK(BigInt(t.sizes[m[i]]) == ct.classes()[i].size);
    }
    const auto& pm3 = t.powermaps.at(3);
    for (size_t i = 0; i < 9; ++i) {
        int cube = ct.class_of(power(ct.classes()[i].rep, 3));
        CHECK(pm3[m[i]] == m[cube]);
    }
}

TEST_CASE("Frobenius equals brute force on every class triple of S4 and S5") {
    for (auto [path, d] : {std::pair{"fixtures/s4.tbl", 4}, std::pair{"fixtures/s5.tbl", 5}}) {
        auto t = load_character_table(path);
        validate_character_table(t);
        ClassTable ct(sym(d));
        auto m = match_classes(t, ct);
        size_t k = ct.classes().size();
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) {
                auto by_z = count_triples_by_z(ct, static_cast<int>(i), static_cast<int>(j));
                for (size_t z = 0; z < k; ++z)
                    CHECK(BigInt(frobenius_count(t, m[i], m[j], m[z])) == by_z[z]);
            }
    }
}

TEST_CASE("Frobenius on the PGL2(7) fixture reproduces the 336 count") {
    auto t = load_character_table("fixtures/pgl2_7.tbl");
    validate_character_table(t);
    ClassTable ct(pgl2_as_perm_group(7));
    auto m = match_classes(t, ct);
    long total = 0;
    for (size_t i = 0; i < 9; ++i)
        for (size_t j = 0; j < 9; ++j)
            for (size_t z = 0; z < 9; ++z) {
                if (ct.classes()[i].element_order != 2 || ct.classes()[j].element_order != 6 ||
                    ct.classes()[z].element_order != 6)
                    continue;
                total += frobenius_count(t, m[i], m[j], m[z]);
            }
    CHECK(total == 336);
}

TEST_CASE("r-tuple Frobenius counts") {
    auto t = load_character_table("fixtures/s4.tbl");
    ClassTable ct(sym(4));
    auto m = match_classes(t, ct);

    // r = 2 on a class of involutions: pairs (x, x^-1) number |X|
    int transp = -1;
    for (size_t i = 0; i < 5; ++i)
        if (ct.classes()[i].element_order == 2 && ct.classes()[i].size == 6)
            transp = static_cast<int>(i);
    REQUIRE(transp >= 0);
    CHECK(frobenius_count_r(t, {m[transp], m[transp]}) == 6);

    // r = 3 reduces to frobenius_count
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j)
            for (size_t z = 0; z < 5; ++z)
                CHECK(frobenius_count_r(t, {m[i], m[j], m[z]}) ==
                      frobenius_count(t, m[i], m[j], m[z]));

    // r = 4, all classes = transpositions: check against direct enumeration
    auto members = ct.members(transp);
    long direct = 0;
    for (const auto& a : members)
        for (const auto& b : members)
            for (const auto& c : members)
                for (const auto& d : members)
                    if (compose(compose(compose(a, b), c), d).is_identity()) ++direct;
    CHECK(frobenius_count_r(t, {m[transp], m[transp], m[transp], m[transp]}) == direct);
}

TEST_CASE("smooth epimorphism and kernel counting") {
    // C2 admits no (2,2,2)-triple with product 1
    PermGroup c2({perm_from_cycles({{1, 2}}, 2)});
    ClassTable ctc2(c2);
    CHECK(count_smooth_epimorphisms(c2, ctc2, {2, 2, 2}) == 0);

    // PGL2(7), type (2,6,6): all 336 triples generate; one kernel
    auto pgl = pgl2_as_perm_group(7);
    ClassTable ct(pgl);
    auto epi = count_smooth_epimorphisms(pgl, ct, {2, 6, 6});
    CHECK(epi == 336);
    CHECK(count_kernels(epi, pgl.order()) == 1); // G complete: |Aut G| = |G|

    // S5, type (2,6,6): 120 epimorphisms, a single kernel
    auto s5 = sym(5);
    ClassTable ct5(s5);
    auto epi5 = count_smooth_epimorphisms(s5, ct5, {2, 6, 6});
    CHECK(epi5 == 120);
    CHECK(count_kernels(epi5, 120) == 1);

    // S4, type (2,3,4): 24 triples, all generating
    auto s4 = sym(4);
    ClassTable ct4(s4);
    BigInt brute = 0;
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j)
            for (size_t z = 0; z < 5; ++z) {
                if (ct4.classes()[i].element_order != 2 || ct4.classes()[j].element_order != 3 ||
                    ct4.classes()[z].element_order != 4)
                    continue;
                brute += count_triples_bruteforce(ct4, static_cast<int>(i), static_cast<int>(j),
                                                  static_cast<int>(z));
            }
    CHECK(brute == 24);
    auto epi4 = count_smooth_epimorphisms(s4, ct4, {2, 3, 4});
    CHECK(epi4 == 24);
    CHECK(epi4 <= brute);
    CHECK(count_kernels(epi4, 24) == 1);

    CHECK(count_kernels(0, 42) == 0);
    CHECK_THROWS_AS(count_kernels(10, 4), std::domain_error);
}

TEST_CASE("gamma_index matches the exhaustive SL2(Z_m) oracle") {
    auto sl2_order = [](long m) {
        long cnt = 0;
        for (long a = 0; a < m; ++a)
            for (long b = 0; b < m; ++b)
                for (long c = 0; c < m; ++c)
                    for (long d = 0; d < m; ++d)
                        if (((a * d - b * c) % m + m) % m == 1) ++cnt;
        return cnt;
    };
    std::vector<long> expected{12, 24, 60, 72, 168, 192, 324, 360, 660, 576};
    for (long m = 3; m <= 12; ++m) {
        CHECK(gamma_index(m) == sl2_order(m) / 2);
        CHECK(gamma_index(m) == expected[m - 3]);
    }
    CHECK_THROWS_AS(gamma_index(2), std::invalid_argument);
}

TEST_CASE("modular dessin data") {
    auto d1 = modular_dessin_data(1);
    CHECK(d1.aut_order == 4);
    CHECK(d1.genus == 0);

    auto d2 = modular_dessin_data(2);
    CHECK(d2.aut_order == 32);
    CHECK(d2.genus == 5);

    auto d6 = modular_dessin_data(6);
    CHECK(d6.aut_order == 768);
    CHECK(d6.genus == 289);

    auto d12 = modular_dessin_data(12);
    CHECK(d12.aut_order == 6144);
    CHECK(d12.genus == 2689);

    auto d20 = modular_dessin_data(20);
    CHECK(d20.aut_order == 30720);
    CHECK(d20.genus == 14209);

    for (long n = 1; n <= 20; ++n) {
        auto d = modular_dessin_data(n);
        CHECK(d.genus >= 0);
        // |Gamma : Gamma(4n)| = 6 |Delta_i : K|
        CHECK(gamma_index(4 * n) == 6 * d.aut_order);
    }
}
