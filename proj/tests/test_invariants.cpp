#include "doctest.h"

#include "bsk/errors.hpp"
#include "bsk/invariants.hpp"
#include "oracles.hpp"

using namespace bsk;

namespace {

AbelianGroup Z() { return AbelianGroup::integers(); }
AbelianGroup C(long n) { return AbelianGroup::cyclic(n); }

HermitianForm ext(const IntMatrix& m, long k) { return extended_from_integers(m, GroupParam(k)); }

ManifoldDescriptor descriptor(const HermitianForm& f, W2Type w2, std::optional<int> ks) {
    return {f.param(), f, w2, ks};
}

} // namespace

TEST_CASE("homology closed forms") {
    CHECK(homology_closed_form(GroupParam(3), Coefficients::Z, 1) == Z() + C(2));
    CHECK(homology_closed_form(GroupParam(1), Coefficients::Z, 2) == Z());
    CHECK(homology_closed_form(GroupParam(1), Coefficients::Z, 1) == AbelianGroup::integers(2));
    CHECK(homology_closed_form(GroupParam(2), Coefficients::Z, 1) == Z());
    CHECK(homology_closed_form(GroupParam(0), Coefficients::Z, 1) == Z());
    CHECK(homology_closed_form(GroupParam(-3), Coefficients::Z, 1) == Z() + C(4));
    CHECK(homology_closed_form(GroupParam(2), Coefficients::Z2, 2).is_trivial());
    CHECK(homology_closed_form(GroupParam(3), Coefficients::Z2, 2) == C(2));
    CHECK(homology_closed_form(GroupParam(3), Coefficients::Z, 3).is_trivial());
    CHECK_THROWS_AS(homology_closed_form(GroupParam(3), Coefficients::Z, 4), PreconditionError);
}

TEST_CASE("oracle equivalence: closed forms equal chain-complex homology") {
    for (long kv = -12; kv <= 12; ++kv) {
        GroupParam k(kv);
        for (Coefficients c : {Coefficients::Z, Coefficients::Z2}) {
            auto h = homology_from_complex(k, c);
            REQUIRE(h.size() == 3);
            for (int d = 0; d <= 2; ++d)
                CHECK(h[static_cast<std::size_t>(d)] == homology_closed_form(k, c, d));
        }
    }
}

TEST_CASE("L-groups and Whitehead group") {
    LGroupTable t3 = lgroup_table(GroupParam(3));
    CHECK(t3.L4 == Z() + C(2));
    CHECK(t3.L5 == Z() + C(2));
    LGroupTable t2 = lgroup_table(GroupParam(2));
    CHECK(t2.L4 == Z());
    CHECK(t2.L5 == Z());
    // classical values pin the degenerate readings: L5(Z[Z]) = Z, H1(Z^2) = Z^2
    CHECK(lgroup_table(GroupParam(0)).L5 == Z());
    CHECK(lgroup_table(GroupParam(1)).L5 == AbelianGroup::integers(2));
    for (long kv = -12; kv <= 12; ++kv)
        CHECK(lgroup_table(GroupParam(kv)).whitehead.is_trivial());
}

TEST_CASE("stable bordism groups") {
    CHECK(stable_bordism_group(GroupParam(3), W2Type::II).str() == "8Z + Z/2");
    CHECK(stable_bordism_group(GroupParam(2), W2Type::III).str() == "8Z");
    CHECK(stable_bordism_group(GroupParam(1), W2Type::II).str() == "8Z + Z/2");
    CHECK_THROWS_AS(stable_bordism_group(GroupParam(3), W2Type::I), PreconditionError);
}

TEST_CASE("type I stable classification") {
    GroupParam k(2);
    auto one = descriptor(ext(IntMatrix{{1}}, 2), W2Type::I, 0);
    auto minus = descriptor(ext(IntMatrix{{-1}}, 2), W2Type::I, 0);
    auto one_ks = descriptor(ext(IntMatrix{{1}}, 2), W2Type::I, 1);
    CHECK(stable_classify_typeI(one, one));
    CHECK_FALSE(stable_classify_typeI(one, minus));
    CHECK_FALSE(stable_classify_typeI(one, one_ks));
    auto spin = descriptor(hyperbolic(1, k), W2Type::II, 0);
    CHECK_THROWS_AS(stable_classify_typeI(one, spin), PreconditionError);
    CHECK_THROWS_AS(stable_classify_typeI(one, descriptor(ext(IntMatrix{{1}}, 3), W2Type::I, 0)), ParameterError);
}

TEST_CASE("KS constraints") {
    CHECK(ks_constraint(W2Type::II, 8, std::nullopt).value == KsValue::One);
    CHECK(ks_constraint(W2Type::II, -16, std::nullopt).value == KsValue::Zero);
    CHECK(ks_constraint(W2Type::III, 0, 1).value == KsValue::One);
    CHECK(ks_constraint(W2Type::III, 8, 1).value == KsValue::Zero);
    KsVerdict unknown = ks_constraint(W2Type::III, 8, std::nullopt);
    CHECK(unknown.value == KsValue::Free);
    CHECK(unknown.depends_on_arf);
    for (long s : {-3L, 0L, 5L, 8L})
        CHECK(ks_constraint(W2Type::I, s, std::nullopt).value == KsValue::Free);
    CHECK(ks_constraint(W2Type::II, 4, std::nullopt).value == KsValue::Inconsistent);
    CHECK(ks_constraint(W2Type::III, 12, 0).value == KsValue::Inconsistent);
}

TEST_CASE("validate") {
    GroupParam k(2);
    CHECK_THROWS_AS(validate(descriptor(hyperbolic(1, k), W2Type::I, 0)), InconsistentError);
    CHECK_THROWS_AS(validate(descriptor(ext(IntMatrix{{1}}, 2), W2Type::II, 0)), InconsistentError);
    CHECK_THROWS_AS(validate(descriptor(hyperbolic(1, k), W2Type::III, 0)), InconsistentError);
    CHECK_THROWS_AS(validate(descriptor(hyperbolic(1, k), W2Type::II, 1)), InconsistentError);
    CHECK_THROWS_AS(validate(descriptor(hyperbolic(1, k), W2Type::II, std::nullopt)), SchemaError);
    CHECK_THROWS_AS(validate(descriptor(ext(IntMatrix{{3}}, 2), W2Type::I, 0)), CertificateError);
    ManifoldDescriptor mixed{GroupParam(3), hyperbolic(1, k), W2Type::II, 0};
    CHECK_THROWS_AS(validate(mixed), ParameterError);
    auto bare = descriptor(HermitianForm(hyperbolic(1, k).matrix()), W2Type::II, 0);
    CHECK(validate(bare).form.certified_nonsingular());
    CHECK_NOTHROW(validate(descriptor(ext(e8_matrix(), 3), W2Type::III, 1)));
    CHECK_THROWS_AS(validate(descriptor(ext(e8_matrix(), 3), W2Type::III, 0)), InconsistentError);
}

TEST_CASE("classify examples") {
    GroupParam k(2);
    HermitianForm pm = ext(IntMatrix{{1, 0}, {0, -1}}, 2);
    auto d0 = descriptor(pm, W2Type::I, 0);
    auto d1 = descriptor(pm, W2Type::I, 1);
    CHECK(classify(d0, d0, RingMatrix::identity(k, 2)).verdict == Verdict::Homeomorphic);
    Classification c = classify(d0, d1);
    CHECK(c.verdict == Verdict::NotHomeomorphic);
    REQUIRE(c.reasons.size() == 1);
    CHECK(c.reasons[0].find("Kirby-Siebenmann") != std::string::npos);
    CHECK(classify(d0, d0).verdict == Verdict::Unknown);
    CHECK(classify(d0, d0, RingMatrix::from_integers(k, IntMatrix{{0, 1}, {1, 0}})).verdict == Verdict::Unknown);
    CHECK(classify(d0, d0, RingMatrix::from_integers(k, IntMatrix{{2, 0}, {0, 1}})).verdict == Verdict::Unknown);
    CHECK_THROWS_AS(classify(d0, descriptor(ext(IntMatrix{{1, 0}, {0, -1}}, 3), W2Type::I, 0)), ParameterError);
    CHECK_THROWS_AS(classify(d0, descriptor(hyperbolic(1, k), W2Type::II, 1)), InconsistentError);
}

TEST_CASE("property: classify is reflexive and symmetric") {
    oracle::Rng rng(1111);
    for (long kv : {2L, 3L, -1L}) {
        GroupParam k(kv);
        for (int i = 0; i < 8; ++i) {
            HermitianForm base = orthogonal_sum(hyperbolic(1, k), ext(IntMatrix{{1, 0}, {0, -1}}, kv));
            RingMatrix v = oracle::random_unit_triangular(rng, k, base.rank(), 3);
            HermitianForm moved = transform(base, v);
            int ks = static_cast<int>(oracle::uniform(rng, 0, 1));
            auto d1 = descriptor(base, W2Type::I, ks);
            auto d2 = descriptor(moved, W2Type::I, ks);
            CHECK(classify(d1, d1, RingMatrix::identity(k, base.rank())).verdict == Verdict::Homeomorphic);
            CHECK(classify(d2, d1, v).verdict == Verdict::Homeomorphic);
            RingMatrix back = try_invert(v.transpose()).value().transpose();
            CHECK(classify(d1, d2, back).verdict == Verdict::Homeomorphic);
            CHECK(classify(d1, d2).verdict == classify(d2, d1).verdict);
        }
    }
}

TEST_CASE("realize") {
    auto odd = realize(ext(IntMatrix{{1, 0}, {0, -1}}, 2));
    REQUIRE(odd.size() == 2);
    CHECK(odd[0].descriptor.w2 == W2Type::I);
    CHECK(odd[0].descriptor.ks == 0);
    CHECK(odd[1].descriptor.ks == 1);

    auto spin = realize(hyperbolic(1, GroupParam(2)));
    REQUIRE(spin.size() == 1);
    CHECK(spin[0].descriptor.w2 == W2Type::II);
    CHECK(spin[0].descriptor.ks == 0);

    auto e8 = realize(ext(e8_matrix(), 3));
    REQUIRE(e8.size() == 2);
    CHECK(e8[0].descriptor.w2 == W2Type::II);
    CHECK(e8[0].descriptor.ks == 1);
    CHECK(e8[1].descriptor.w2 == W2Type::III);
    CHECK(e8[1].descriptor.ks == 1);

    GroupParam k3(3);
    auto asserted = realize(hyperbolic(1, k3).with_arf(ArfProvenance{ArfMode::Asserted, 1}));
    REQUIRE(asserted.size() == 2);
    CHECK(asserted[1].descriptor.ks == 1);
    auto unknown = realize(HermitianForm(hyperbolic(1, k3).matrix()));
    REQUIRE(unknown.size() == 2);
    CHECK(unknown[0].descriptor.ks == 0);
    CHECK_FALSE(unknown[1].descriptor.ks);
    CHECK(unknown[1].ks.depends_on_arf);

    CHECK_THROWS_AS(realize(ext(IntMatrix{{2}}, 2)), CertificateError);
}

TEST_CASE("assembly and radical") {
    AssemblyReport a3 = assembly_status(GroupParam(3));
    CHECK(a3.a4_domain == Z() + C(2));
    CHECK(a3.a4_matches());
    CHECK(assembly_status(GroupParam(2)).a4_domain == Z());
    AssemblyReport a5 = assembly_status(GroupParam(5));
    CHECK(a5.a5_domain == Z() + C(4));
    CHECK(a5.a5_matches());
    for (long kv = -12; kv <= 12; ++kv) {
        AssemblyReport r = assembly_status(GroupParam(kv));
        CHECK(r.a4_matches());
        CHECK(r.a5_matches());
    }
    CHECK(radical_description(GroupParam(2)).text == "free abelian, surjects onto Z[1/2]");
    CHECK(radical_description(GroupParam(0)).zero);
    CHECK(radical_description(GroupParam(1)).text == "free abelian, surjects onto Z[1/1] = Z");
    CHECK(radical_description(GroupParam(-3)).text == "free abelian, surjects onto Z[1/3]");
}
