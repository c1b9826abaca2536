#include "bsk/ringmatrix.hpp"

#include <algorithm>
#include <string>

#include "bsk/errors.hpp"

namespace bsk {

RingMatrix::RingMatrix(GroupParam k, std::size_t rows, std::size_t cols)
    : k_(k), rows_(rows), cols_(cols), data_(rows * cols, GroupRingElt(k)) {}

RingMatrix RingMatrix::from_rows(GroupParam k, const std::vector<std::vector<GroupRingElt>>& rows,
                                 std::size_t cols_if_empty) {
    RingMatrix m(k, rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw PreconditionError("ragged matrix");
        for (std::size_t j = 0; j < m.cols_; ++j) {
            if (rows[i][j].param() != k)
                throw ParameterError("matrix entry over B(" + std::to_string(rows[i][j].param().value()) +
                                     ") in a matrix over B(" + std::to_string(k.value()) + ")");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

RingMatrix RingMatrix::identity(GroupParam k, std::size_t n) {
    RingMatrix m(k, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = GroupRingElt(k, 1);
    return m;
}

RingMatrix RingMatrix::from_integers(GroupParam k, const IntMatrix& src) {
    RingMatrix m(k, src.rows(), src.cols());
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j)
            m(i, j) = GroupRingElt(k, src(i, j));
    return m;
}

bool RingMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const GroupRingElt& p) { return p.is_zero(); });
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix t(k_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RingMatrix RingMatrix::involute_entries() const {
    RingMatrix m = *this;
    for (auto& p : m.data_)
        p = involute(p);
    return m;
}

RingMatrix RingMatrix::conjugate_transpose() const { return involute_entries().transpose(); }

IntMatrix RingMatrix::augment() const {
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(i, j) = bsk::augment((*this)(i, j));
    return m;
}

RingMatrix operator*(const RingMatrix& x, const RingMatrix& y) {
    if (x.k_ != y.k_)
        throw ParameterError("matrices over different groups");
    if (x.cols_ != y.rows_)
        throw PreconditionError("matrix shapes do not compose");
    RingMatrix r(x.k_, x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t p = 0; p < x.cols_; ++p) {
            const GroupRingElt& v = x(i, p);
            if (v.is_zero())
                continue;
            for (std::size_t j = 0; j < y.cols_; ++j)
                if (!y(p, j).is_zero())
                    r(i, j) += v * y(p, j);
        }
    return r;
}

namespace {
RingMatrix entrywise(const RingMatrix& x, const RingMatrix& y, bool subtract) {
    if (x.param() != y.param())
        throw ParameterError("matrices over different groups");
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw PreconditionError("matrix shapes differ");
    RingMatrix r = x;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            r(i, j) = subtract ? x(i, j) - y(i, j) : x(i, j) + y(i, j);
    return r;
}
} // namespace

RingMatrix operator+(const RingMatrix& x, const RingMatrix& y) { return entrywise(x, y, false); }
RingMatrix operator-(const RingMatrix& x, const RingMatrix& y) { return entrywise(x, y, true); }

std::vector<std::vector<GroupRingElt>> RingMatrix::to_rows() const {
    std::vector<std::vector<GroupRingElt>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out.emplace_back(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    return out;
}

RingMatrix direct_sum(const RingMatrix& x, const RingMatrix& y) {
    if (x.param() != y.param())
        throw ParameterError("direct sum of matrices over different groups");
    RingMatrix r(x.param(), x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            r(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j)
            r(x.rows() + i, x.cols() + j) = y(i, j);
    return r;
}

} // namespace bsk
