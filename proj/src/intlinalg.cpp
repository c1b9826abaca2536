#include "bsk/intlinalg.hpp"

#include <algorithm>
#include <utility>

#include "bsk/errors.hpp"

namespace bsk {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw PreconditionError("ragged matrix");
        for (long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols_if_empty) {
    IntMatrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw PreconditionError("ragged matrix");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

bool IntMatrix::symmetric() const {
    if (!square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::reduce_mod(long m) const {
    IntMatrix r = *this;
    Integer mod = m;
    for (auto& v : r.data_)
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r = *this;
    for (auto& v : r.data_)
        v = -v;
    return r;
}

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw PreconditionError("matrix shapes differ");
    IntMatrix r = x;
    for (std::size_t i = 0; i < r.data_.size(); ++i)
        r.data_[i] += y.data_[i];
    return r;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_)
        throw PreconditionError("matrix shapes do not compose");
    IntMatrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t p = 0; p < x.cols_; ++p) {
            const Integer& v = x(i, p);
            if (v == 0)
                continue;
            for (std::size_t j = 0; j < y.cols_; ++j)
                r(i, j) += v * y(p, j);
        }
    return r;
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
    std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i][j] = (*this)(i, j);
    return out;
}

IntMatrix direct_sum(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix r(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            r(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j)
            r(x.rows() + i, x.cols() + j) = y(i, j);
    return r;
}

Integer determinant(const IntMatrix& m) {
    if (!m.square())
        throw PreconditionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    // Bareiss
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------

AbelianGroup AbelianGroup::from_cyclic(std::size_t free_rank, const std::vector<Integer>& orders) {
    AbelianGroup g;
    g.free_rank_ = free_rank;
    // Diagonal matrix of the torsion orders, then Smith normal form gives the chain.
    std::vector<Integer> finite;
    for (const auto& o : orders) {
        Integer m = abs(o);
        if (m == 0)
            ++g.free_rank_;
        else if (m != 1)
            finite.push_back(m);
    }
    if (finite.empty())
        return g;
    IntMatrix d(finite.size(), finite.size());
    for (std::size_t i = 0; i < finite.size(); ++i)
        d(i, i) = finite[i];
    for (const auto& f : smith_normal_form(d).invariant_factors())
        if (f != 1)
            g.torsion_.push_back(f);
    return g;
}

AbelianGroup operator+(const AbelianGroup& x, const AbelianGroup& y) {
    std::vector<Integer> t = x.torsion_;
    t.insert(t.end(), y.torsion_.begin(), y.torsion_.end());
    return AbelianGroup::from_cyclic(x.free_rank_ + y.free_rank_, t);
}

std::string AbelianGroup::str() const {
    if (is_trivial())
        return "0";
    std::vector<std::string> parts;
    if (free_rank_ == 1)
        parts.emplace_back("Z");
    else if (free_rank_ > 1)
        parts.push_back("Z^" + std::to_string(free_rank_));
    for (const auto& t : torsion_)
        parts.push_back("Z/" + t.get_str());
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? " + " : "") + parts[i];
    return s;
}

// ---------------------------------------------------------------------------

std::size_t SmithForm::rank() const { return invariant_factors().size(); }

std::vector<Integer> SmithForm::invariant_factors() const {
    std::vector<Integer> f;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        if (D(i, i) != 0)
            f.push_back(D(i, i));
    return f;
}

namespace {

// Row/column operations applied simultaneously to D and the transform that tracks them.
struct SmithState {
    IntMatrix U, D, V;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t c = 0; c < D.cols(); ++c)
            std::swap(D(i, c), D(j, c));
        for (std::size_t c = 0; c < U.cols(); ++c)
            std::swap(U(i, c), U(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t r = 0; r < D.rows(); ++r)
            std::swap(D(r, i), D(r, j));
        for (std::size_t r = 0; r < V.rows(); ++r)
            std::swap(V(r, i), V(r, j));
    }
    // row_dst += q * row_src
    void add_row(std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0)
            return;
        for (std::size_t c = 0; c < D.cols(); ++c)
            D(dst, c) += q * D(src, c);
        for (std::size_t c = 0; c < U.cols(); ++c)
            U(dst, c) += q * U(src, c);
    }
    void add_col(std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0)
            return;
        for (std::size_t r = 0; r < D.rows(); ++r)
            D(r, dst) += q * D(r, src);
        for (std::size_t r = 0; r < V.rows(); ++r)
            V(r, dst) += q * V(r, src);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < D.cols(); ++c)
            D(i, c) = -D(i, c);
        for (std::size_t c = 0; c < U.cols(); ++c)
            U(i, c) = -U(i, c);
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithState s{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    Integer q;

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest non-zero |entry| in the trailing block
            std::size_t pr = m, pc = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (s.D(i, j) != 0 && (pr == m || mpz_cmpabs(s.D(i, j).get_mpz_t(), s.D(pr, pc).get_mpz_t()) < 0)) {
                        pr = i;
                        pc = j;
                    }
            if (pr == m)
                goto done;
            s.swap_rows(t, pr);
            s.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                mpz_fdiv_q(q.get_mpz_t(), s.D(i, t).get_mpz_t(), s.D(t, t).get_mpz_t());
                s.add_row(i, t, -q);
                if (s.D(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                mpz_fdiv_q(q.get_mpz_t(), s.D(t, j).get_mpz_t(), s.D(t, t).get_mpz_t());
                s.add_col(j, t, -q);
                if (s.D(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // divisibility: fold an offending row into the pivot row and retry
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(s.D(i, j).get_mpz_t(), s.D(t, t).get_mpz_t())) {
                        s.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (s.D(t, t) < 0)
            s.negate_row(t);
    }
done:
    return {std::move(s.U), std::move(s.D), std::move(s.V)};
}

std::size_t rank_mod2(const IntMatrix& a) {
    IntMatrix m = a.reduce_mod(2);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::swap(m(p, j), m(rank, j));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != rank && m(i, c) != 0)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    m(i, j) = (m(i, j) + m(rank, j)) % 2;
        ++rank;
    }
    return rank;
}

std::vector<AbelianGroup> homology_of_complex(const IntMatrix& d2, const IntMatrix& d1, int modulus) {
    if (modulus != 0 && modulus != 2)
        throw PreconditionError("modulus must be 0 or 2");
    if (d2.cols() != d1.rows())
        throw PreconditionError("boundary shapes do not compose");
    IntMatrix composite = d2 * d1;
    if (modulus == 2)
        composite = composite.reduce_mod(2);
    if (!composite.is_zero())
        throw PreconditionError("input is not a chain complex: d2 * d1 != 0");

    const std::size_t r2 = d2.rows(), r1 = d1.rows(), r0 = d1.cols();
    if (modulus == 2) {
        std::size_t k1 = rank_mod2(d1), k2 = rank_mod2(d2);
        auto elementary = [](std::size_t dim) { return AbelianGroup::from_cyclic(0, std::vector<Integer>(dim, 2)); };
        return {elementary(r0 - k1), elementary(r1 - k1 - k2), elementary(r2 - k2)};
    }
    SmithForm s1 = smith_normal_form(d1);
    SmithForm s2 = smith_normal_form(d2);
    const std::size_t k1 = s1.rank(), k2 = s2.rank();
    return {AbelianGroup::from_cyclic(r0 - k1, s1.invariant_factors()),
            AbelianGroup::from_cyclic(r1 - k1 - k2, s2.invariant_factors()),
            AbelianGroup::from_cyclic(r2 - k2, {})};
}

long signature(const IntMatrix& s) {
    if (!s.symmetric())
        throw PreconditionError("signature of a non-symmetric matrix");
    const std::size_t n = s.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = s(i, j);

    auto swap_index = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        std::swap(a[i], a[j]);
        for (auto& row : a)
            std::swap(row[i], row[j]);
    };

    long sig = 0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t p = i;
        while (p < n && a[p][p] == 0)
            ++p;
        if (p < n) {
            swap_index(i, p);
            const Rational pivot = a[i][i];
            sig += pivot > 0 ? 1 : -1;
            for (std::size_t r = i + 1; r < n; ++r) {
                if (a[r][i] == 0)
                    continue;
                Rational f = a[r][i] / pivot;
                for (std::size_t c = i + 1; c < n; ++c)
                    a[r][c] -= f * a[i][c];
            }
            for (std::size_t r = i + 1; r < n; ++r)
                a[r][i] = a[i][r] = 0;
            ++i;
            continue;
        }
        // every remaining diagonal entry is zero
        std::size_t q = i + 1;
        while (q < n && a[i][q] == 0)
            ++q;
        if (q == n) {
            ++i; // null direction
            continue;
        }
        // 2x2 block [[0, c], [c, 0]]: one positive and one negative direction
        swap_index(i + 1, q);
        const Rational c = a[i][i + 1];
        for (std::size_t r = i + 2; r < n; ++r)
            for (std::size_t col = i + 2; col < n; ++col)
                a[r][col] -= (a[r][i] * a[i + 1][col] + a[r][i + 1] * a[i][col]) / c;
        for (std::size_t r = i + 2; r < n; ++r)
            a[r][i] = a[i][r] = a[r][i + 1] = a[i + 1][r] = 0;
        i += 2;
    }
    return sig;
}

} // namespace bsk
