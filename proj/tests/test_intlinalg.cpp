#include "doctest.h"

#include "bsk/errors.hpp"
#include "bsk/hermform.hpp"
#include "bsk/intlinalg.hpp"
#include "oracles.hpp"

using namespace bsk;

namespace {

void check_smith(const IntMatrix& a, const SmithForm& s) {
    REQUIRE(s.U * a * s.V == s.D);
    REQUIRE(abs(determinant(s.U)) == 1);
    REQUIRE(abs(determinant(s.V)) == 1);
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j)
                REQUIRE(s.D(i, j) == 0);
    auto f = s.invariant_factors();
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        REQUIRE(f[i + 1] % f[i] == 0);
}

IntMatrix diag(std::initializer_list<long> d) {
    IntMatrix m(d.size(), d.size());
    std::size_t i = 0;
    for (long v : d) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("smith normal form examples") {
    SmithForm id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.D == IntMatrix::identity(3));
    check_smith(IntMatrix::identity(3), id);

    IntMatrix a{{2, 4}, {6, 8}};
    SmithForm s = smith_normal_form(a);
    CHECK(s.D == diag({2, 4}));
    check_smith(a, s);
    CHECK(oracle::invariant_factors_by_minors(a) == std::vector<Integer>{2, 4});

    IntMatrix z(2, 3);
    SmithForm sz = smith_normal_form(z);
    CHECK(sz.D.is_zero());
    CHECK(sz.rank() == 0);
    check_smith(z, sz);

    IntMatrix r{{0, 6, 0}, {4, 0, 0}};
    check_smith(r, smith_normal_form(r));
    CHECK(smith_normal_form(r).invariant_factors() == std::vector<Integer>{2, 12});
}

TEST_CASE("property: smith form against determinantal divisors") {
    oracle::Rng rng(606);
    for (int i = 0; i < 150; ++i) {
        std::size_t rows = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
        std::size_t cols = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
        IntMatrix a = oracle::random_int_matrix(rng, rows, cols, -9, 9);
        if (i % 5 == 0 && rows > 1)
            for (std::size_t c = 0; c < cols; ++c)
                a(rows - 1, c) = 3 * a(0, c);
        SmithForm s = smith_normal_form(a);
        check_smith(a, s);
        REQUIRE(s.invariant_factors() == oracle::invariant_factors_by_minors(a));
    }
}

TEST_CASE("rank mod 2 and determinant") {
    CHECK(rank_mod2(IntMatrix{{2, 4}, {6, 8}}) == 0);
    CHECK(rank_mod2(IntMatrix{{1, 1}, {1, 1}}) == 1);
    CHECK(rank_mod2(IntMatrix{{1, 0}, {1, 1}}) == 2);
    oracle::Rng rng(6);
    for (int i = 0; i < 50; ++i) {
        IntMatrix a = oracle::random_int_matrix(rng, 4, 4, -9, 9);
        std::vector<std::vector<Integer>> rows = a.to_rows();
        REQUIRE(determinant(a) == oracle::laplace_det(rows));
    }
}

TEST_CASE("homology of complexes") {
    // k = 3: Z -> Z^2 -> Z with d2 = (0, -2), d1 = 0
    auto h3 = homology_of_complex(IntMatrix{{0, -2}}, IntMatrix{{0}, {0}}, 0);
    CHECK(h3[0] == AbelianGroup::integers());
    CHECK(h3[1] == AbelianGroup::integers() + AbelianGroup::cyclic(2));
    CHECK(h3[2] == AbelianGroup::trivial());

    auto h1 = homology_of_complex(IntMatrix{{0, 0}}, IntMatrix{{0}, {0}}, 0);
    CHECK(h1[2] == AbelianGroup::integers());
    CHECK(h1[1] == AbelianGroup::integers(2));

    CHECK(homology_of_complex(IntMatrix{{0, 1}}, IntMatrix{{0}, {0}}, 2)[2].is_trivial());
    CHECK(homology_of_complex(IntMatrix{{0, 0}}, IntMatrix{{0}, {0}}, 2)[2] == AbelianGroup::cyclic(2));

    // circle: 0 -> Z --0--> Z
    auto hc = homology_of_complex(IntMatrix(0, 1), IntMatrix{{0}}, 0);
    CHECK(hc[0] == AbelianGroup::integers());
    CHECK(hc[1] == AbelianGroup::integers());
    CHECK(hc[2].is_trivial());

    CHECK_THROWS_AS(homology_of_complex(IntMatrix{{1, 0}}, IntMatrix{{1}, {0}}, 0), PreconditionError);
    CHECK_THROWS_AS(homology_of_complex(IntMatrix{{1, 0, 0}}, IntMatrix{{1}, {0}}, 0), PreconditionError);
}

TEST_CASE("abelian groups") {
    CHECK(AbelianGroup::from_cyclic(1, {6, 4}).torsion() == std::vector<Integer>{2, 12});
    CHECK(AbelianGroup::from_cyclic(0, {0, 1, -1}) == AbelianGroup::integers());
    CHECK(AbelianGroup::cyclic(-3) == AbelianGroup::cyclic(3));
    CHECK(AbelianGroup::trivial().str() == "0");
    CHECK((AbelianGroup::integers() + AbelianGroup::cyclic(2)).str() == "Z + Z/2");
    CHECK(AbelianGroup::integers(2).str() == "Z^2");
    CHECK(AbelianGroup::from_cyclic(0, {2, 2}).str() == "Z/2 + Z/2");
}

TEST_CASE("signature examples") {
    CHECK(signature(diag({1, 1, -1})) == 1);
    CHECK(signature(IntMatrix{{0, 1}, {1, 0}}) == 0);
    CHECK(signature(IntMatrix(0, 0)) == 0);
    CHECK(signature(IntMatrix{{0, 0}, {0, 0}}) == 0);
    IntMatrix e8 = e8_matrix();
    CHECK(e8.symmetric());
    CHECK(determinant(e8) == 1);
    // Sylvester: all leading principal minors positive, so positive definite
    for (std::size_t n = 1; n <= 8; ++n) {
        std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = e8(i, j);
        CHECK(oracle::laplace_det(m) > 0);
    }
    CHECK(signature(e8) == 8);
    CHECK(signature(-e8) == -8);
    CHECK_THROWS_AS(signature(IntMatrix{{0, 1}, {0, 0}}), PreconditionError);
}

TEST_CASE("property: signature under sums, negation and congruence") {
    oracle::Rng rng(707);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 5));
        IntMatrix a = oracle::random_int_matrix(rng, n, n, -5, 5);
        IntMatrix s = a + a.transpose();
        if (i % 3 == 0)
            for (std::size_t d = 0; d < n; ++d)
                s(d, d) = 0;
        IntMatrix p = oracle::random_unimodular(rng, n);
        long sig = signature(s);
        REQUIRE(signature(p * s * p.transpose()) == sig);
        REQUIRE(signature(-s) == -sig);
        IntMatrix b = oracle::random_int_matrix(rng, 2, 2, -4, 4);
        IntMatrix t = b + b.transpose();
        REQUIRE(signature(direct_sum(s, t)) == sig + signature(t));
        REQUIRE(std::labs(sig) <= static_cast<long>(n));
    }
}
