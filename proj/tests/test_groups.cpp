#include <doctest.h>

#include "apollo/groups.hpp"

using namespace apollo;

namespace {

RationalMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    RationalMatrix m(rows.size());
    size_t i = 0;
    for (const auto& row : rows) {
        size_t j = 0;
        for (long x : row) {
            m(i, j++) = x;
        }
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("gram matrices") {
    RationalMatrix g4 = gram(4);
    CHECK(g4 == from_rows({{-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}}));
    CHECK(gram(2) == from_rows({{1, 1}, {1, 1}}));
    RationalMatrix g5 = gram(5);
    CHECK(g5(0, 0) == -2);
    CHECK(g5(0, 1) == 1);
}

TEST_CASE("generators at dimension 4 match the 4x4 displays") {
    CHECK(gen_M(4, 1) ==
          from_rows({{-1, 2, 2, 2}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(gen_M(4, 2) ==
          from_rows({{1, 0, 0, 0}, {2, -1, 2, 2}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(gen_N(4, 1) ==
          from_rows({{-1, 0, 0, 0}, {2, 1, 0, 0}, {2, 0, 1, 0}, {2, 0, 0, 1}}));
    CHECK(gen_N(4, 4) ==
          from_rows({{1, 0, 0, 2}, {0, 1, 0, 2}, {0, 0, 1, 2}, {0, 0, 0, -1}}));
}

TEST_CASE("generators at dimension 5 match the 5x5 displays") {
    CHECK(gen_M(5, 1) == from_rows({{-1, 1, 1, 1, 1},
                                    {0, 1, 0, 0, 0},
                                    {0, 0, 1, 0, 0},
                                    {0, 0, 0, 1, 0},
                                    {0, 0, 0, 0, 1}}));
    CHECK(gen_N(5, 1) == from_rows({{-1, 0, 0, 0, 0},
                                    {2, 1, 0, 0, 0},
                                    {2, 0, 1, 0, 0},
                                    {2, 0, 0, 1, 0},
                                    {2, 0, 0, 0, 1}}));
    CHECK(gen_N(5, 3) == from_rows({{1, 0, 2, 0, 0},
                                    {0, 1, 2, 0, 0},
                                    {0, 0, -1, 0, 0},
                                    {0, 0, 2, 1, 0},
                                    {0, 0, 2, 0, 1}}));
}

TEST_CASE("generators at dimension 2") {
    CHECK(gen_M(2, 1) == from_rows({{-1, -2}, {0, 1}}));
    CHECK(gen_M(2, 2) == from_rows({{1, 0}, {-2, -1}}));
    CHECK(gen_N(2, 1) == from_rows({{-1, 0}, {2, 1}}));
    CHECK(gen_N(2, 2) == from_rows({{1, 2}, {0, -1}}));
    // The N generators are the negatives of the M generators with slots
    // swapped.
    CHECK(gen_N(2, 1) == -gen_M(2, 2));
    CHECK(gen_N(2, 2) == -gen_M(2, 1));
}

TEST_CASE("dimension 3 Descartes-move generators are undefined") {
    CHECK_THROWS_AS(gen_M(3, 1), DimThreeUndefinedError);
    CHECK_NOTHROW(gen_N(3, 1));
}

TEST_CASE("non-integral entries appear above dimension 5") {
    RationalMatrix m = gen_M(6, 1);
    CHECK(m(0, 1) == Rat(2, 3));
    CHECK(m * m == RationalMatrix::identity(6));
}

TEST_CASE("reflection_from_axis reproduces the generators") {
    for (size_t m : {4ul, 5ul, 6ul}) {
        RationalMatrix g = gram(m);
        for (size_t i = 1; i <= m; ++i) {
            std::vector<Rat> e(m, Rat(0));
            e[i - 1] = 1;
            CHECK(reflection_from_axis(e, g) == gen_M(m, i));
            std::vector<Rat> b(m, Rat(1));
            b[i - 1] = -1;
            CHECK(reflection_from_axis(b, g) == gen_N(m, i));
        }
    }
    CHECK(reflection_from_axis({1, 0}, gram(2)) == gen_M(2, 1));
    // e1 reflected twice is the identity.
    RationalMatrix g = gram(4);
    std::vector<Rat> e{1, 0, 0, 0};
    RationalMatrix r = reflection_from_axis(e, g);
    CHECK(r * r == RationalMatrix::identity(4));
}

TEST_CASE("isotropic axes are rejected") {
    // (0,0,1,1) is isotropic for the dimension-4 form, as is the
    // self-inversion axis (-1,1) in the degenerate dimension-2 form.
    std::vector<Rat> v{0, 0, 1, 1};
    CHECK_THROWS_AS(reflection_from_axis(v, gram(4)), IsotropicAxisError);
    CHECK_THROWS_AS(reflection_from_axis({-1, 1}, gram(2)), IsotropicAxisError);
}

TEST_CASE("generator property reports across dimensions") {
    for (size_t m : {2ul, 4ul, 5ul, 6ul, 7ul}) {
        PropertyReport rep = check_generator_properties(m);
        CHECK(rep.involutions);
        CHECK(rep.orthogonal);
        CHECK(rep.determinant_minus_one);
        CHECK(rep.cross_commutation);
        CHECK(rep.core_ok());
        if (m == 4) {
            CHECK(rep.transpose_duality);
        } else {
            CHECK_FALSE(rep.transpose_duality);
        }
        if (m == 2) {
            CHECK(rep.n_negates_m);
        }
    }
    PropertyReport deg = check_generator_properties(3);
    CHECK(deg.involutions);
    CHECK(deg.orthogonal);
    CHECK(deg.determinant_minus_one);
    CHECK_FALSE(deg.apo_checked);
    CHECK(deg.core_ok());
}

TEST_CASE("Cayley spheres of the small groups are Bethe lattices") {
    auto kal4 = cayley_sphere_sizes({4, GroupFamily::Kal}, 5);
    CHECK(kal4 == std::vector<size_t>{1, 4, 12, 36, 108, 324});
    auto apo4 = cayley_sphere_sizes({4, GroupFamily::Apo}, 5);
    CHECK(apo4 == std::vector<size_t>{1, 4, 12, 36, 108, 324});
    auto kal3 = cayley_sphere_sizes({3, GroupFamily::Kal}, 3);
    CHECK(kal3 == std::vector<size_t>{1, 3, 6, 12});
    // z = m counts m*(m-1)^(k-1) hold for the self-inversion family and for
    // the Descartes-move family away from dimension 5.
    for (size_t m : {5ul, 6ul}) {
        auto spheres = cayley_sphere_sizes({m, GroupFamily::Kal}, 3);
        std::vector<size_t> expected{1, m, m * (m - 1), m * (m - 1) * (m - 1)};
        CHECK(spheres == expected);
    }
    CHECK(cayley_sphere_sizes({6, GroupFamily::Apo}, 3) ==
          std::vector<size_t>{1, 6, 30, 150});
}

TEST_CASE("the dimension-5 Descartes-move group is not free: (MiMj)^3 = id") {
    // The off-diagonal coefficient 2/(m-3) equals 1 exactly at m = 5, and the
    // pairwise products acquire order 3. Each unordered generator pair then
    // merges two length-3 words, deflating sphere 3 from 80 to 70.
    RationalMatrix p = gen_M(5, 1) * gen_M(5, 2);
    CHECK(p * p * p == RationalMatrix::identity(5));
    CHECK_FALSE(p * p == RationalMatrix::identity(5));
    CHECK(cayley_sphere_sizes({5, GroupFamily::Apo}, 4) ==
          std::vector<size_t>{1, 5, 20, 70, 240});
}

TEST_CASE("the full Descartes group has commutation cycles") {
    auto des4 = cayley_sphere_sizes({4, GroupFamily::Des}, 2);
    REQUIRE(des4.size() == 3);
    CHECK(des4[1] == 8);
    CHECK(des4[2] < 8 * 7);  // M1 N2 M1 N2 = id and friends
    CHECK(des4[2] == 44);    // 56 minus one collision per unordered (i != j) pair
}

TEST_CASE("element budget guards runaway enumerations") {
    CHECK_THROWS_AS(cayley_sphere_sizes({4, GroupFamily::Des}, 6, 100),
                    std::length_error);
}
