#pragma once

#include <vector>

#include "bsk/groupring.hpp"
#include "bsk/intlinalg.hpp"

namespace bsk {

/// Dense row-major matrix over Z[B(k)]. Products are ordinary (noncommutative) matrix products.
class RingMatrix {
public:
    RingMatrix(GroupParam k, std::size_t rows, std::size_t cols);
    /// Throws PreconditionError on ragged rows or entries over a different k.
    static RingMatrix from_rows(GroupParam k, const std::vector<std::vector<GroupRingElt>>& rows,
                                std::size_t cols_if_empty = 0);
    static RingMatrix identity(GroupParam k, std::size_t n);
    /// Integer matrix embedded through Z -> Z[B(k)].
    static RingMatrix from_integers(GroupParam k, const IntMatrix& m);

    GroupParam param() const { return k_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool is_zero() const;

    GroupRingElt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const GroupRingElt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RingMatrix transpose() const;
    /// Entrywise involution (no transpose).
    RingMatrix involute_entries() const;
    /// involute_entries().transpose()
    RingMatrix conjugate_transpose() const;
    /// Entrywise augmentation.
    IntMatrix augment() const;

    friend RingMatrix operator*(const RingMatrix& x, const RingMatrix& y);
    friend RingMatrix operator+(const RingMatrix& x, const RingMatrix& y);
    friend RingMatrix operator-(const RingMatrix& x, const RingMatrix& y);
    friend bool operator==(const RingMatrix& x, const RingMatrix& y) {
        return x.k_ == y.k_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

    std::vector<std::vector<GroupRingElt>> to_rows() const;

private:
    GroupParam k_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<GroupRingElt> data_;
};

RingMatrix direct_sum(const RingMatrix& x, const RingMatrix& y);

} // namespace bsk
