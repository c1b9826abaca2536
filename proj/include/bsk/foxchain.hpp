#pragma once

// Fox free differential calculus and the cellular chain complex of the
// universal cover of the presentation 2-complex of B(k):
//
//     0 -> L --d2--> L^2 --d1--> L -> Z -> 0,    L = Z[B(k)]
//
// Chains are row vectors and boundaries act by right multiplication, so the
// composite d1 o d2 is the matrix product d2 * d1.

#include <vector>

#include "bsk/groupring.hpp"
#include "bsk/intlinalg.hpp"
#include "bsk/ringmatrix.hpp"

namespace bsk {

/// Fox derivative d w / d x in Z[F(a,b)].
FreeRingElt fox_derivative(const FreeWord& w, Generator x);

struct FoxComplex {
    GroupParam k;
    /// C_2 -> C_1; 1x2 for k != 0, 0x1 for the circle complex of B(0) = Z.
    RingMatrix d2;
    /// C_1 -> C_0; 2x1 for k != 0, 1x1 for k = 0.
    RingMatrix d1;

    /// Rank of the free module C_degree (degree 0, 1 or 2).
    std::size_t rank(int degree) const;
};

/// Throws InternalError if d2 * d1 != 0 (never expected).
FoxComplex build_complex(GroupParam k);

/// Apply augmentation entrywise (then reduce mod 2 when modulus == 2).
struct TrivialComplex {
    IntMatrix d2;
    IntMatrix d1;
    int modulus;
};
TrivialComplex tensor_trivial(const FoxComplex& cx, int modulus);

} // namespace bsk
