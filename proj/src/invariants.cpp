#include "bsk/invariants.hpp"

#include <sstream>

#include "bsk/errors.hpp"
#include "bsk/foxchain.hpp"

namespace bsk {

namespace {

Integer k_minus_one(GroupParam k) { return Integer(static_cast<long>(k.value())) - 1; }

// Z/(k-1) with the degenerate readings: Z for k = 1, 0 for |k - 1| = 1.
AbelianGroup z_mod_k_minus_one(GroupParam k) { return AbelianGroup::from_cyclic(0, {k_minus_one(k)}); }

AbelianGroup elementary2(std::size_t dim) { return AbelianGroup::from_cyclic(0, std::vector<Integer>(dim, 2)); }

int mod2(long v) { return static_cast<int>(((v % 2) + 2) % 2); }

} // namespace

AbelianGroup homology_closed_form(GroupParam k, Coefficients c, int degree) {
    if (degree < 0 || degree > 3)
        throw PreconditionError("homology degree must be in 0..3");
    if (c == Coefficients::Z) {
        switch (degree) {
        case 0: return AbelianGroup::integers();
        case 1: return AbelianGroup::integers() + z_mod_k_minus_one(k);
        case 2: return k.value() == 1 ? AbelianGroup::integers() : AbelianGroup::trivial();
        default: return AbelianGroup::trivial();
        }
    }
    switch (degree) {
    case 0: return elementary2(1);
    case 1: return elementary2(k.odd() ? 2 : 1);
    case 2: return k.odd() ? elementary2(1) : AbelianGroup::trivial();
    default: return AbelianGroup::trivial();
    }
}

std::vector<AbelianGroup> homology_from_complex(GroupParam k, Coefficients c) {
    int modulus = c == Coefficients::Z ? 0 : 2;
    TrivialComplex t = tensor_trivial(build_complex(k), modulus);
    return homology_of_complex(t.d2, t.d1, modulus);
}

LGroupTable lgroup_table(GroupParam k) {
    return {
        k.odd() ? AbelianGroup::integers() + AbelianGroup::cyclic(2) : AbelianGroup::integers(),
        AbelianGroup::integers() + z_mod_k_minus_one(k),
        AbelianGroup::integers(),
        AbelianGroup::trivial(),
    };
}

std::string to_string(W2Type t) {
    switch (t) {
    case W2Type::I: return "I";
    case W2Type::II: return "II";
    case W2Type::III: return "III";
    }
    return "?";
}

W2Type parse_w2(const std::string& s) {
    if (s == "I")
        return W2Type::I;
    if (s == "II")
        return W2Type::II;
    if (s == "III")
        return W2Type::III;
    throw SchemaError("w2 type must be \"I\", \"II\" or \"III\", got \"" + s + "\"");
}

std::string StableBordism::str() const {
    std::string s = signature_divisor.get_str() + "Z";
    if (!h2_mod2.is_trivial())
        s += " + " + h2_mod2.str();
    return s;
}

StableBordism stable_bordism_group(GroupParam k, W2Type w2) {
    if (w2 == W2Type::I)
        throw PreconditionError("type I normal 1-types are classified by stable_classify_typeI");
    return {8, homology_from_complex(k, Coefficients::Z2)[2]};
}

std::optional<int> KsVerdict::forced() const {
    if (value == KsValue::Zero)
        return 0;
    if (value == KsValue::One)
        return 1;
    return std::nullopt;
}

KsVerdict ks_constraint(W2Type w2, long sign, std::optional<int> arf) {
    if (w2 == W2Type::I)
        return {KsValue::Free};
    if (sign % 8 != 0)
        return {KsValue::Inconsistent};
    int rochlin = mod2(sign / 8);
    if (w2 == W2Type::II)
        return {rochlin ? KsValue::One : KsValue::Zero};
    if (!arf)
        return {KsValue::Free, true};
    return {(rochlin + *arf) % 2 ? KsValue::One : KsValue::Zero};
}

namespace {
std::optional<int> known_arf(const HermitianForm& f) {
    if (f.arf())
        return f.arf()->value;
    return std::nullopt;
}
} // namespace

ManifoldDescriptor validate(const ManifoldDescriptor& d) {
    if (d.form.param() != d.k)
        throw ParameterError("descriptor form is over B(" + std::to_string(d.form.param().value()) +
                             ") but k = " + std::to_string(d.k.value()));
    ManifoldDescriptor out = d;
    out.form = d.form.with_found_inverse();
    if (!out.form.certified_nonsingular())
        throw CertificateError("descriptor form carries no verified inverse and none was found");
    if (!d.ks)
        throw SchemaError("descriptor has no Kirby-Siebenmann invariant");
    if (*d.ks != 0 && *d.ks != 1)
        throw SchemaError("Kirby-Siebenmann invariant must be 0 or 1");

    FormParity p = parity(out.form);
    if ((d.w2 == W2Type::I) != (p == FormParity::Odd))
        throw InconsistentError(d.w2 == W2Type::I ? "type I requires an odd form"
                                                  : "type " + to_string(d.w2) + " requires an even form");
    if (d.w2 == W2Type::III && !d.k.odd())
        throw InconsistentError("type III only occurs for odd k");

    KsVerdict v = ks_constraint(d.w2, form_signature(out.form), known_arf(out.form));
    if (v.value == KsValue::Inconsistent)
        throw InconsistentError("even form with signature not divisible by 8");
    if (auto forced = v.forced(); forced && *forced != *d.ks)
        throw InconsistentError("KS = " + std::to_string(*d.ks) + " contradicts the forced value " +
                                std::to_string(*forced) + " for type " + to_string(d.w2));
    return out;
}

bool stable_classify_typeI(const ManifoldDescriptor& d1, const ManifoldDescriptor& d2) {
    if (d1.k != d2.k)
        throw ParameterError("descriptors over different groups");
    if (d1.w2 != W2Type::I || d2.w2 != W2Type::I)
        throw PreconditionError("stable_classify_typeI needs two type I descriptors");
    // c_*[M] lives in H_4(B(k); Z) = 0 and imposes no condition.
    return form_signature(d1.form) == form_signature(d2.form) && d1.ks == d2.ks;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Homeomorphic: return "Homeomorphic";
    case Verdict::NotHomeomorphic: return "NotHomeomorphic";
    case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

DescriptorInvariants invariants_of(const ManifoldDescriptor& d) {
    return {to_string(d.w2), d.ks.value_or(-1), d.form.rank(),
            parity(d.form) == FormParity::Odd ? "odd" : "even", form_signature(d.form)};
}

Classification classify(const ManifoldDescriptor& d1, const ManifoldDescriptor& d2,
                        const std::optional<RingMatrix>& isometry, const std::optional<RingMatrix>& isometry_inverse) {
    if (d1.k != d2.k)
        throw ParameterError("descriptors over different groups B(" + std::to_string(d1.k.value()) + ") and B(" +
                             std::to_string(d2.k.value()) + ")");
    ManifoldDescriptor m1 = validate(d1);
    ManifoldDescriptor m2 = validate(d2);
    Classification c{Verdict::Unknown, {}, invariants_of(m1), invariants_of(m2)};

    auto differ = [&](const std::string& what, const auto& x, const auto& y) {
        if (x != y) {
            std::ostringstream os;
            os << what << " differs (" << x << " vs " << y << ")";
            c.reasons.push_back(os.str());
        }
    };
    differ("w2 type", c.first.w2, c.second.w2);
    differ("Kirby-Siebenmann invariant", c.first.ks, c.second.ks);
    differ("form rank", c.first.rank, c.second.rank);
    differ("form parity", c.first.parity, c.second.parity);
    differ("signature", c.first.signature, c.second.signature);
    if (!c.reasons.empty()) {
        c.verdict = Verdict::NotHomeomorphic;
        return c;
    }
    if (!isometry) {
        c.reasons.emplace_back("invariants agree; no isometry certificate supplied");
        return c;
    }
    try {
        if (verify_isometry(m1.form, m2.form, *isometry, isometry_inverse)) {
            c.verdict = Verdict::Homeomorphic;
            c.reasons.emplace_back("isometry certificate verified");
        } else {
            c.reasons.emplace_back("invariants agree; supplied isometry does not verify");
        }
    } catch (const CertificateError& e) {
        c.reasons.emplace_back(std::string("invariants agree; ") + e.what());
    } catch (const PreconditionError& e) {
        c.reasons.emplace_back(std::string("invariants agree; ") + e.what());
    }
    return c;
}

std::vector<RealizedClass> realize(const HermitianForm& f) {
    HermitianForm form = f.with_found_inverse();
    if (!form.certified_nonsingular())
        throw CertificateError("realization needs a form with a verified inverse");
    const GroupParam k = form.param();
    std::vector<RealizedClass> out;

    if (parity(form) == FormParity::Odd) {
        for (int ks : {0, 1})
            out.push_back({{k, form, W2Type::I, ks}, ks_constraint(W2Type::I, form_signature(form), std::nullopt)});
        return out;
    }
    const long sign = form_signature(form);
    const std::optional<int> arf = known_arf(form);
    KsVerdict spin = ks_constraint(W2Type::II, sign, arf);
    if (spin.value == KsValue::Inconsistent)
        throw InconsistentError("even nonsingular form with signature not divisible by 8");
    out.push_back({{k, form, W2Type::II, spin.forced()}, spin});
    if (k.odd()) {
        KsVerdict v = ks_constraint(W2Type::III, sign, arf);
        out.push_back({{k, form, W2Type::III, v.forced()}, v});
    }
    return out;
}

AssemblyReport assembly_status(GroupParam k) {
    LGroupTable l = lgroup_table(k);
    return {homology_closed_form(k, Coefficients::Z, 0) + homology_closed_form(k, Coefficients::Z2, 2),
            homology_closed_form(k, Coefficients::Z, 1), l.L4, l.L5};
}

RadicalDescription radical_description(GroupParam k) {
    if (k.collapses_b())
        return {true, "0 (B(0) = Z and H^2(Z; Z[Z]) = 0)"};
    std::string target = "Z[1/" + std::to_string(k.magnitude()) + "]";
    if (k.unimodular())
        target += " = Z";
    return {false, "free abelian, surjects onto " + target};
}

} // namespace bsk
