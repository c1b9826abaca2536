#pragma once

// Closed-form invariants of B(k) and the homeomorphism classification /
// realization rules for closed oriented 4-manifolds with fundamental group B(k).

#include <optional>
#include <string>
#include <vector>

#include "bsk/hermform.hpp"
#include "bsk/intlinalg.hpp"

namespace bsk {

enum class Coefficients { Z, Z2 };

/// Group (co)homology of B(k) from the closed formulas:
///   H_0 = Z,  H_1 = Z + Z/(k-1),  H_2 = Z iff k = 1,  H_i = 0 for i > 2.
/// Over Z/2, degree 2 is H^2(B(k); Z/2) = Z/2 iff k odd (same dimension as H_2(; Z/2));
/// degrees 0 and 1 follow by universal coefficients. Z/(k-1) is read as Z for k = 1 and
/// as 0 for |k - 1| = 1. Degree must be in 0..3.
AbelianGroup homology_closed_form(GroupParam k, Coefficients c, int degree);

/// H_0, H_1, H_2 from the Fox chain complex tensored down to Z or Z/2.
std::vector<AbelianGroup> homology_from_complex(GroupParam k, Coefficients c);

struct LGroupTable {
    AbelianGroup L4;
    AbelianGroup L5;
    AbelianGroup L0_symmetric;
    AbelianGroup whitehead;

    friend bool operator==(const LGroupTable&, const LGroupTable&) = default;
};

LGroupTable lgroup_table(GroupParam k);

enum class W2Type { I, II, III };

std::string to_string(W2Type t);
/// "I", "II", "III"; throws SchemaError otherwise.
W2Type parse_w2(const std::string& s);

/// 8Z + H_2(B(k); Z/2): the stable bordism group of a non type-I normal 1-type.
struct StableBordism {
    Integer signature_divisor;
    AbelianGroup h2_mod2;

    std::string str() const;
};

/// Throws PreconditionError for type I.
StableBordism stable_bordism_group(GroupParam k, W2Type w2);

enum class KsValue { Zero, One, Free, Inconsistent };

struct KsVerdict {
    KsValue value;
    /// Type III with unknown Arf: KS = sign/8 + Arf, left free.
    bool depends_on_arf = false;

    std::optional<int> forced() const;
};

/// Forced relations on the Kirby-Siebenmann invariant:
///   type II:  KS = sign/8 (mod 2);
///   type III: KS = sign/8 + Arf (mod 2);
///   type I:   no relation;
///   type II/III with sign not divisible by 8: inconsistent.
KsVerdict ks_constraint(W2Type w2, long sign, std::optional<int> arf);

struct ManifoldDescriptor {
    GroupParam k;
    /// The reduced (nonsingular) equivariant intersection form.
    HermitianForm form;
    W2Type w2;
    /// Unset only for realized type III classes whose Arf invariant is unknown.
    std::optional<int> ks;
};

/// Checks a descriptor and returns it with a nonsingularity certificate attached.
/// Throws ParameterError (form over another k), CertificateError (form not certified
/// nonsingular), SchemaError (missing KS) or InconsistentError (type/parity/KS relations).
ManifoldDescriptor validate(const ManifoldDescriptor& d);

/// Type I stable classification: same signature and KS. Throws PreconditionError for
/// other types, ParameterError for different k.
bool stable_classify_typeI(const ManifoldDescriptor& d1, const ManifoldDescriptor& d2);

enum class Verdict { Homeomorphic, NotHomeomorphic, Unknown };
std::string to_string(Verdict v);

struct DescriptorInvariants {
    std::string w2;
    int ks;
    std::size_t rank;
    std::string parity;
    long signature;

    friend bool operator==(const DescriptorInvariants&, const DescriptorInvariants&) = default;
};

DescriptorInvariants invariants_of(const ManifoldDescriptor& d);

struct Classification {
    Verdict verdict;
    std::vector<std::string> reasons;
    DescriptorInvariants first;
    DescriptorInvariants second;
};

/// NotHomeomorphic when a necessary invariant (w2 type, KS, rank, parity, signature)
/// differs; Homeomorphic when the isometry U verifies (U^T A_2 involute(U) = A_1);
/// Unknown otherwise. Descriptors are validated first.
Classification classify(const ManifoldDescriptor& d1, const ManifoldDescriptor& d2,
                        const std::optional<RingMatrix>& isometry = std::nullopt,
                        const std::optional<RingMatrix>& isometry_inverse = std::nullopt);

struct RealizedClass {
    ManifoldDescriptor descriptor;
    KsVerdict ks;
};

/// All manifolds realizing a nonsingular form: two type I classes (KS 0, 1) for an odd
/// form; one type II class for an even form when k is even; type II and type III
/// classes when k is odd. Throws CertificateError when the form is not certified
/// nonsingular.
std::vector<RealizedClass> realize(const HermitianForm& f);

struct AssemblyReport {
    AbelianGroup a4_domain;
    AbelianGroup a5_domain;
    AbelianGroup L4;
    AbelianGroup L5;

    bool a4_matches() const { return a4_domain == L4; }
    bool a5_matches() const { return a5_domain == L5; }
};

/// Domains H_0(Z) + H_2(Z/2) and H_1(Z) of the assembly maps in degrees 4 and 5,
/// set against the L-groups.
AssemblyReport assembly_status(GroupParam k);

struct RadicalDescription {
    bool zero;
    std::string text;
};

/// H^2(B(k); Z[B(k)]) described symbolically.
RadicalDescription radical_description(GroupParam k);

} // namespace bsk
