#include <doctest.h>

#include "lmv/errors.hpp"
#include "lmv/matrix.hpp"
#include "lmv/rng.hpp"

using namespace lmv;

namespace {

RationalMatrix random_matrix(SeededRng& rng, int r, int c, int mag = 9) {
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Rational(rng.int_in(-mag, mag));
    return m;
}

}  // namespace

TEST_CASE("determinant basics") {
    CHECK(RationalMatrix::identity(4).det() == Rational(1));
    // repeated row
    RationalMatrix m(2, 2, {Rational(1), Rational(2), Rational(1), Rational(2)});
    CHECK(m.det() == Rational(0));
    RationalMatrix m2(2, 2, {Rational(1), Rational(2), Rational(3), Rational(4)});
    CHECK(m2.det() == Rational(-2));
    RationalMatrix rect(2, 3);
    CHECK_THROWS_AS(rect.det(), ShapeError);
    // rational entries stay exact
    RationalMatrix q(2, 2, {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7)});
    CHECK(q.det() == Rational(1, 14) - Rational(1, 15));
}

TEST_CASE("det is multiplicative on random matrices") {
    SeededRng rng(42);
    for (int n = 2; n <= 5; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto a = random_matrix(rng, n, n);
            const auto b = random_matrix(rng, n, n);
            CHECK((a * b).det() == a.det() * b.det());
        }
    }
}

TEST_CASE("rank") {
    RationalMatrix z(4, 3);
    CHECK(z.rank() == 0);
    CHECK(RationalMatrix::identity(4).rank() == 4);
    RationalMatrix m(3, 2,
                     {Rational(1), Rational(2), Rational(2), Rational(4), Rational(3), Rational(6)});
    CHECK(m.rank() == 1);
}

TEST_CASE("rank equals dimension minus kernel dimension") {
    SeededRng rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        const int r = static_cast<int>(rng.int_in(1, 5));
        const int c = static_cast<int>(rng.int_in(1, 5));
        const auto m = random_matrix(rng, r, c, 3);
        const int rank = m.rank();
        CHECK(rank == c - static_cast<int>(m.kernel_basis().size()));
        CHECK(rank == r - static_cast<int>(m.transpose().kernel_basis().size()));
    }
}

TEST_CASE("kernel basis") {
    // C = [I3 | 0] has center (0,0,0,1)
    RationalMatrix c(3, 4);
    for (int i = 0; i < 3; ++i) c.at(i, i) = Rational(1);
    auto k = c.kernel_basis();
    REQUIRE(k.size() == 1);
    CHECK(k[0] == RatVec{Rational(0), Rational(0), Rational(0), Rational(1)});

    // C(s) = [I3 | s] has center (s1, s2, s3, -1) up to normalization
    RationalMatrix cs(3, 4);
    const RatVec s{Rational(3), Rational(-5), Rational(7, 2)};
    for (int i = 0; i < 3; ++i) {
        cs.at(i, i) = Rational(1);
        cs.at(i, 3) = s[i];
    }
    auto ks = cs.kernel_basis();
    REQUIRE(ks.size() == 1);
    CHECK(proportional(ks[0], RatVec{s[0], s[1], s[2], Rational(-1)}));

    CHECK(RationalMatrix::identity(3).kernel_basis().empty());

    // kernel vectors satisfy Mv = 0 exactly on random matrices
    SeededRng rng(11);
    for (int rep = 0; rep < 10; ++rep) {
        const auto m = random_matrix(rng, 3, 5, 4);
        for (const auto& v : m.kernel_basis()) CHECK(is_zero_vec(m.apply(v)));
    }
}

TEST_CASE("minors") {
    auto i3 = RationalMatrix::identity(3);
    auto m3 = i3.minors(3);
    REQUIRE(m3.size() == 1);
    CHECK(m3[0].value == Rational(1));

    RationalMatrix m(2, 3,
                     {Rational(1), Rational(0), Rational(0), Rational(0), Rational(1), Rational(0)});
    auto m2 = m.minors(2);
    REQUIRE(m2.size() == 3);
    CHECK(m2[0].col_set == std::vector<int>{0, 1});
    CHECK(m2[0].value == Rational(1));
    CHECK(m2[1].col_set == std::vector<int>{0, 2});
    CHECK(m2[1].value == Rational(0));
    CHECK(m2[2].col_set == std::vector<int>{1, 2});
    CHECK(m2[2].value == Rational(0));

    CHECK_THROWS_AS(m.minors(3), ShapeError);

    // equal columns kill the spanning minors
    RationalMatrix dup(3, 3);
    for (int i = 0; i < 3; ++i) {
        dup.at(i, 0) = Rational(i + 1);
        dup.at(i, 1) = Rational(i + 1);
        dup.at(i, 2) = Rational(2 * i + 5);
    }
    for (const auto& mn : dup.minors(2))
        if (mn.col_set[0] == 0 && mn.col_set[1] == 1) CHECK(mn.value == Rational(0));
}

TEST_CASE("rank < k iff all k-minors vanish") {
    SeededRng rng(13);
    for (int rep = 0; rep < 8; ++rep) {
        const auto m = random_matrix(rng, 3, 4, 2);
        const int rank = m.rank();
        for (int k = 1; k <= 3; ++k) {
            bool all_zero = true;
            for (const auto& mn : m.minors(k))
                if (!mn.value.is_zero()) all_zero = false;
            CHECK(all_zero == (rank < k));
        }
    }
}

TEST_CASE("inverse and solve") {
    SeededRng rng(17);
    for (int rep = 0; rep < 6; ++rep) {
        auto m = random_matrix(rng, 4, 4, 6);
        if (m.det().is_zero()) continue;
        CHECK(m * m.inverse() == RationalMatrix::identity(4));
        RatVec b{Rational(1), Rational(2), Rational(3), Rational(4)};
        CHECK(m.apply(m.solve(b)) == b);
    }
    RationalMatrix sing(2, 2, {Rational(1), Rational(2), Rational(2), Rational(4)});
    CHECK_THROWS_AS(sing.inverse(), InputError);
}

TEST_CASE("primitive normalization") {
    CHECK(primitive(RatVec{Rational(2, 3), Rational(-4, 3)}) ==
          RatVec{Rational(1), Rational(-2)});
    CHECK(primitive(RatVec{Rational(-2), Rational(4)}) == RatVec{Rational(1), Rational(-2)});
    CHECK(primitive(RatVec{Rational(0), Rational(-5), Rational(10)}) ==
          RatVec{Rational(0), Rational(1), Rational(-2)});
    CHECK(proportional(RatVec{Rational(1), Rational(2)}, RatVec{Rational(-2), Rational(-4)}));
    CHECK_FALSE(proportional(RatVec{Rational(1), Rational(2)}, RatVec{Rational(2), Rational(1)}));
}
