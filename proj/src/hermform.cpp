#include "bsk/hermform.hpp"

#include <numeric>
#include <utility>

#include "bsk/errors.hpp"

namespace bsk {

bool check_hermitian(const RingMatrix& a) {
    if (!a.square())
        return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            if (a(j, i) != involute(a(i, j)))
                return false;
    return true;
}

bool verify_inverse(const RingMatrix& a, const RingMatrix& c) {
    if (a.param() != c.param() || !a.square() || !c.square() || a.rows() != c.rows())
        return false;
    const RingMatrix id = RingMatrix::identity(a.param(), a.rows());
    return a * c == id && c * a == id;
}

std::optional<RingMatrix> try_invert(const RingMatrix& a) {
    if (!a.square())
        return std::nullopt;
    const GroupParam k = a.param();
    const std::size_t n = a.rows();
    {
        Integer det = determinant(a.augment());
        if (det != 1 && det != -1)
            return std::nullopt;
    }

    RingMatrix m = a;
    RingMatrix left = RingMatrix::identity(k, n);
    std::vector<std::size_t> col_of(n);
    std::iota(col_of.begin(), col_of.end(), 0);

    auto swap_rows = [&](RingMatrix& x, std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < x.cols(); ++c)
            std::swap(x(i, c), x(j, c));
    };

    // Without a unit pivot, run one Euclid pass on monomial entries c*g of a column:
    // row_i -= q * g_i g_r^-1 * row_r leaves (c_i - q c_r) g_i in that column.
    auto euclid_step = [&](std::size_t t) {
        for (std::size_t c = t; c < n; ++c) {
            std::vector<std::size_t> rows;
            for (std::size_t r = t; r < n; ++r)
                if (m(r, c).support_size() == 1)
                    rows.push_back(r);
            if (rows.size() < 2)
                continue;
            auto coeff = [&](std::size_t r) -> const auto& { return *m(r, c).terms().begin(); };
            std::size_t best = rows[0];
            for (std::size_t r : rows)
                if (abs(coeff(r).second) < abs(coeff(best).second))
                    best = r;
            const BSElement g_inv = invert(coeff(best).first, k);
            const Integer c_best = coeff(best).second;
            for (std::size_t r : rows) {
                if (r == best)
                    continue;
                Integer q = coeff(r).second / c_best;
                if (q == 0)
                    continue;
                const GroupRingElt f = GroupRingElt::basis(k, multiply(coeff(r).first, g_inv, k), q);
                for (std::size_t j = 0; j < n; ++j) {
                    if (!m(best, j).is_zero())
                        m(r, j) -= f * m(best, j);
                    if (!left(best, j).is_zero())
                        left(r, j) -= f * left(best, j);
                }
            }
            return true;
        }
        return false;
    };

    std::size_t euclid_budget = 64 * n * n + 64;
    // trivial-unit pivot with the smallest row support, for less fill-in
    auto find_pivot = [&](std::size_t t) {
        std::optional<std::pair<std::size_t, std::size_t>> pivot;
        std::size_t best_fill = 0;
        for (std::size_t r = t; r < n; ++r)
            for (std::size_t c = t; c < n; ++c) {
                if (!as_trivial_unit(m(r, c)))
                    continue;
                std::size_t fill = 0;
                for (std::size_t j = t; j < n; ++j)
                    fill += m(r, j).support_size();
                if (!pivot || fill < best_fill) {
                    pivot = {r, c};
                    best_fill = fill;
                }
            }
        return pivot;
    };

    for (std::size_t t = 0; t < n; ++t) {
        auto pivot = find_pivot(t);
        while (!pivot) {
            if (euclid_budget == 0 || !euclid_step(t))
                return std::nullopt;
            --euclid_budget;
            pivot = find_pivot(t);
        }
        auto [pr, pc] = *pivot;
        swap_rows(m, t, pr);
        swap_rows(left, t, pr);
        if (pc != t) {
            for (std::size_t r = 0; r < n; ++r)
                std::swap(m(r, t), m(r, pc));
            std::swap(col_of[t], col_of[pc]);
        }

        const GroupRingElt scale = inverse_of(*as_trivial_unit(m(t, t)), k);
        for (std::size_t c = 0; c < n; ++c) {
            m(t, c) = scale * m(t, c);
            left(t, c) = scale * left(t, c);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == t || m(i, t).is_zero())
                continue;
            const GroupRingElt f = m(i, t);
            for (std::size_t c = 0; c < n; ++c) {
                if (!m(t, c).is_zero())
                    m(i, c) -= f * m(t, c);
                if (!left(t, c).is_zero())
                    left(i, c) -= f * left(t, c);
            }
        }
    }

    // left * A * Q = I with Q the column permutation, so A^-1 = Q * left.
    RingMatrix inverse(k, n, n);
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t c = 0; c < n; ++c)
            inverse(col_of[t], c) = left(t, c);
    if (!verify_inverse(a, inverse))
        return std::nullopt;
    return inverse;
}

RingMatrix congruence(const RingMatrix& a, const RingMatrix& u) { return u.transpose() * a * u.involute_entries(); }

HermitianForm::HermitianForm(RingMatrix matrix, std::optional<RingMatrix> inverse, std::optional<ArfProvenance> arf)
    : matrix_(std::move(matrix)), inverse_(std::move(inverse)), arf_(arf) {
    if (!matrix_.square())
        throw PreconditionError("form matrix is not square");
    if (!check_hermitian(matrix_))
        throw PreconditionError("form matrix is not hermitian");
    if (inverse_ && !verify_inverse(matrix_, *inverse_))
        throw CertificateError("supplied inverse does not invert the form matrix");
    if (arf_) {
        if (arf_->value != 0 && arf_->value != 1)
            throw SchemaError("Arf value must be 0 or 1");
        if (arf_->mode == ArfMode::ExtendedFromZ && arf_->value != 0)
            throw SchemaError("a form extended from Z has Arf invariant 0");
    }
}

HermitianForm HermitianForm::with_found_inverse() const {
    if (inverse_)
        return *this;
    HermitianForm f = *this;
    f.inverse_ = try_invert(matrix_);
    return f;
}

HermitianForm HermitianForm::with_arf(std::optional<ArfProvenance> arf) const {
    return HermitianForm(matrix_, inverse_, arf);
}

GroupRingElt HermitianForm::evaluate(const std::vector<GroupRingElt>& x, const std::vector<GroupRingElt>& y) const {
    if (x.size() != rank() || y.size() != rank())
        throw PreconditionError("vector length does not match the form rank");
    GroupRingElt s(param());
    for (std::size_t i = 0; i < rank(); ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < rank(); ++j)
            if (!y[j].is_zero() && !matrix_(i, j).is_zero())
                s += x[i] * matrix_(i, j) * involute(y[j]);
    }
    return s;
}

FormParity parity(const HermitianForm& f) {
    for (std::size_t i = 0; i < f.rank(); ++i)
        if (mpz_odd_p(identity_coefficient(f.matrix()(i, i)).get_mpz_t()))
            return FormParity::Odd;
    return FormParity::Even;
}

IntMatrix augment_form(const HermitianForm& f) { return f.matrix().augment(); }

long form_signature(const HermitianForm& f) { return signature(augment_form(f)); }

HermitianForm hyperbolic(std::size_t r, GroupParam k) {
    IntMatrix h(2 * r, 2 * r);
    for (std::size_t i = 0; i < r; ++i)
        h(2 * i, 2 * i + 1) = h(2 * i + 1, 2 * i) = 1;
    RingMatrix m = RingMatrix::from_integers(k, h);
    return HermitianForm(m, m, ArfProvenance{ArfMode::ExtendedFromZ, 0});
}

HermitianForm extended_from_integers(const IntMatrix& m, GroupParam k) {
    if (!m.symmetric())
        throw PreconditionError("integral form is not symmetric");
    std::optional<RingMatrix> inverse;
    Integer det = determinant(m);
    if (det == 1 || det == -1) {
        // U m V = I, so m^-1 = V U
        SmithForm s = smith_normal_form(m);
        inverse = RingMatrix::from_integers(k, s.V * s.U);
    }
    return HermitianForm(RingMatrix::from_integers(k, m), inverse, ArfProvenance{ArfMode::ExtendedFromZ, 0});
}

IntMatrix e8_matrix() {
    IntMatrix e(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        e(i, i) = 2;
    auto edge = [&](std::size_t i, std::size_t j) { e(i, j) = e(j, i) = -1; };
    for (std::size_t i = 0; i + 1 < 7; ++i)
        edge(i, i + 1);
    edge(4, 7);
    return e;
}

HermitianForm orthogonal_sum(const HermitianForm& f, const HermitianForm& g) {
    if (f.param() != g.param())
        throw ParameterError("orthogonal sum of forms over different groups");
    std::optional<RingMatrix> inverse;
    if (f.inverse() && g.inverse())
        inverse = direct_sum(*f.inverse(), *g.inverse());
    std::optional<ArfProvenance> arf;
    if (f.arf() && g.arf()) {
        bool extended = f.arf()->mode == ArfMode::ExtendedFromZ && g.arf()->mode == ArfMode::ExtendedFromZ;
        arf = ArfProvenance{extended ? ArfMode::ExtendedFromZ : ArfMode::Asserted,
                            (f.arf()->value + g.arf()->value) % 2};
    }
    return HermitianForm(direct_sum(f.matrix(), g.matrix()), inverse, arf);
}

HermitianForm transform(const HermitianForm& f, const RingMatrix& u) {
    RingMatrix a = congruence(f.matrix(), u);
    auto ubar_inv = try_invert(u.involute_entries());
    auto ut_inv = ubar_inv ? try_invert(u.transpose()) : std::nullopt;
    if (!ubar_inv || !ut_inv)
        return HermitianForm(std::move(a));
    std::optional<RingMatrix> inverse;
    if (f.inverse())
        inverse = *ubar_inv * *f.inverse() * *ut_inv;
    // an invertible U gives an isometric form, which has the same Arf invariant
    return HermitianForm(std::move(a), std::move(inverse), f.arf());
}

bool verify_isometry(const HermitianForm& f, const HermitianForm& g, const RingMatrix& u,
                     const std::optional<RingMatrix>& u_inverse) {
    if (f.param() != g.param() || u.param() != f.param())
        throw ParameterError("isometry between forms over different groups");
    if (f.rank() != g.rank())
        throw PreconditionError("isometry between forms of different rank");
    if (!u.square() || u.rows() != f.rank())
        throw PreconditionError("isometry matrix has the wrong shape");
    bool certified = u_inverse ? verify_inverse(u, *u_inverse) : try_invert(u).has_value();
    if (!certified)
        throw CertificateError("isometry matrix is not certified invertible");
    return congruence(g.matrix(), u) == f.matrix();
}

} // namespace bsk
