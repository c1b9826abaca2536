#include "bsk/foxchain.hpp"

#include "bsk/errors.hpp"

namespace bsk {

FreeRingElt fox_derivative(const FreeWord& w, Generator x) {
    // d(x_1 ... x_n) = sum_i x_1 ... x_{i-1} d(x_i),  d x = 1,  d x^-1 = -x^-1
    FreeRingElt result;
    FreeWord prefix;
    for (Letter l : w.letters()) {
        if (generator_of(l) == x) {
            if (is_positive(l))
                result.add_term(prefix, 1);
            else
                result.add_term(prefix * FreeWord(l), -1);
        }
        prefix = prefix * FreeWord(l);
    }
    return result;
}

std::size_t FoxComplex::rank(int degree) const {
    switch (degree) {
    case 0: return d1.cols();
    case 1: return d1.rows();
    case 2: return d2.rows();
    default: return 0;
    }
}

FoxComplex build_complex(GroupParam k) {
    const GroupRingElt one(k, 1);
    const GroupRingElt a = GroupRingElt::basis(k, BSElement::gen_a(k));
    const GroupRingElt b = GroupRingElt::basis(k, BSElement::gen_b(k));

    if (k.collapses_b()) {
        // 0 -> L --(1 - a)--> L -> Z -> 0
        RingMatrix d1(k, 1, 1);
        d1(0, 0) = one - a;
        return {k, RingMatrix(k, 0, 1), std::move(d1)};
    }

    const FreeWord r = FreeWord::relator(k);
    RingMatrix d2(k, 1, 2);
    d2(0, 0) = project(fox_derivative(r, Generator::a), k);
    d2(0, 1) = project(fox_derivative(r, Generator::b), k);
    RingMatrix d1(k, 2, 1);
    d1(0, 0) = one - a;
    d1(1, 0) = one - b;

    if (!(d2 * d1).is_zero())
        throw InternalError("Fox complex of B(" + std::to_string(k.value()) + ") fails d1 o d2 = 0");
    return {k, std::move(d2), std::move(d1)};
}

TrivialComplex tensor_trivial(const FoxComplex& cx, int modulus) {
    if (modulus != 0 && modulus != 2)
        throw PreconditionError("modulus must be 0 or 2");
    IntMatrix d2 = cx.d2.augment();
    IntMatrix d1 = cx.d1.augment();
    if (modulus == 2) {
        d2 = d2.reduce_mod(2);
        d1 = d1.reduce_mod(2);
    }
    return {std::move(d2), std::move(d1), modulus};
}

} // namespace bsk
