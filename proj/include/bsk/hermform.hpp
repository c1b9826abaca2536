#pragma once

// Hermitian forms over L = Z[B(k)].
//
// Conventions, fixed once for the whole library:
//   * a vector is a row of coefficients over L;
//   * s(x, y) = x * A * involute(y)^T, so s(l x, y) = l s(x, y) and s(y, x) = involute(s(x, y));
//   * A is hermitian iff A(j, i) = involute(A(i, j));
//   * U is an isometry from f to g iff U^T * A_g * involute(U) = A_f.

#include <optional>
#include <vector>

#include "bsk/intlinalg.hpp"
#include "bsk/ringmatrix.hpp"

namespace bsk {

enum class FormParity { Odd, Even };

/// How the codimension-two Arf invariant of an even form is known.
enum class ArfMode {
    /// The form is extended from an integral form, so its class comes from L_4(Z) and Arf = 0.
    ExtendedFromZ,
    /// Value supplied by the user.
    Asserted,
};

struct ArfProvenance {
    ArfMode mode;
    int value;

    friend bool operator==(const ArfProvenance&, const ArfProvenance&) = default;
};

bool check_hermitian(const RingMatrix& a);

/// A * C = C * A = I exactly.
bool verify_inverse(const RingMatrix& a, const RingMatrix& c);

/// Gauss-Jordan elimination over L using only trivial-unit pivots (+-g), with full
/// pivoting. Returns a verified two-sided inverse, or nullopt when no such pivot
/// sequence exists or the augmented determinant is not +-1. Never returns a wrong answer.
std::optional<RingMatrix> try_invert(const RingMatrix& a);

/// U^T * A * involute(U)
RingMatrix congruence(const RingMatrix& a, const RingMatrix& u);

class HermitianForm {
public:
    /// Throws PreconditionError if the matrix is not square and hermitian, CertificateError
    /// if a supplied inverse fails verification, SchemaError if an extended-from-Z Arf tag
    /// carries a non-zero value.
    explicit HermitianForm(RingMatrix matrix, std::optional<RingMatrix> inverse = std::nullopt,
                           std::optional<ArfProvenance> arf = std::nullopt);

    GroupParam param() const { return matrix_.param(); }
    std::size_t rank() const { return matrix_.rows(); }
    const RingMatrix& matrix() const { return matrix_; }
    const std::optional<RingMatrix>& inverse() const { return inverse_; }
    const std::optional<ArfProvenance>& arf() const { return arf_; }

    bool certified_nonsingular() const { return inverse_.has_value(); }
    /// Attaches a certificate found by try_invert when none is present.
    HermitianForm with_found_inverse() const;
    HermitianForm with_arf(std::optional<ArfProvenance> arf) const;

    /// s(x, y) for coefficient rows of length rank().
    GroupRingElt evaluate(const std::vector<GroupRingElt>& x, const std::vector<GroupRingElt>& y) const;

    friend bool operator==(const HermitianForm&, const HermitianForm&) = default;

private:
    RingMatrix matrix_;
    std::optional<RingMatrix> inverse_;
    std::optional<ArfProvenance> arf_;
};

/// Odd iff some diagonal entry has odd identity coefficient.
FormParity parity(const HermitianForm& f);

/// Entrywise augmentation; symmetric because augment o involute = augment.
IntMatrix augment_form(const HermitianForm& f);
long form_signature(const HermitianForm& f);

/// r copies of [[0, 1], [1, 0]], self-inverse certificate, Arf extended-from-Z.
HermitianForm hyperbolic(std::size_t r, GroupParam k);

/// Symmetric integer matrix extended to L; certificate attached when |det| = 1, Arf extended-from-Z.
HermitianForm extended_from_integers(const IntMatrix& m, GroupParam k);

/// The E8 lattice (Cartan matrix), positive definite even unimodular of rank 8.
IntMatrix e8_matrix();

/// Block diagonal. Certificates combine when both are present; Arf adds when both are known.
HermitianForm orthogonal_sum(const HermitianForm& f, const HermitianForm& g);

/// The form U^T A_f involute(U). The certificate, when present, becomes
/// involute(U)^-1 C (U^T)^-1. Certificate and Arf tag are dropped unless both
/// factors can be inverted.
HermitianForm transform(const HermitianForm& f, const RingMatrix& u);

/// U^T * A_g * involute(U) == A_f. U must come with a verified inverse: pass one, or
/// let try_invert find it. Throws CertificateError when U cannot be certified invertible,
/// ParameterError / PreconditionError on mismatched groups or ranks.
bool verify_isometry(const HermitianForm& f, const HermitianForm& g, const RingMatrix& u,
                     const std::optional<RingMatrix>& u_inverse = std::nullopt);

} // namespace bsk
