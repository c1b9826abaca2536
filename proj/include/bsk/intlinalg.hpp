#pragma once

// Exact integer linear algebra: Smith normal form with transforms, homology of
// short integral chain complexes, and signature of symmetric integer matrices.

#include <cstddef>
#include <string>
#include <vector>

#include "bsk/bsgroup.hpp"

namespace bsk {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Throws PreconditionError on ragged input.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols_if_empty = 0);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool symmetric() const;

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    /// Entries reduced into [0, m).
    IntMatrix reduce_mod(long m) const;
    IntMatrix operator-() const;

    friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::vector<std::vector<Integer>> to_rows() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Block diagonal sum.
IntMatrix direct_sum(const IntMatrix& x, const IntMatrix& y);
/// Determinant by fraction-free elimination; square input only.
Integer determinant(const IntMatrix& m);

/// Z^free_rank + Z/d_1 + ... + Z/d_m with d_1 | d_2 | ... and every d_i >= 2.
class AbelianGroup {
public:
    AbelianGroup() = default;
    /// Builds the canonical form from any list of cyclic orders (0 means Z, 1 and -1 are dropped).
    static AbelianGroup from_cyclic(std::size_t free_rank, const std::vector<Integer>& orders);
    static AbelianGroup trivial() { return {}; }
    static AbelianGroup integers(std::size_t rank = 1) { return from_cyclic(rank, {}); }
    static AbelianGroup cyclic(const Integer& n) { return from_cyclic(0, {n}); }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

    friend AbelianGroup operator+(const AbelianGroup& x, const AbelianGroup& y);
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

    /// "Z + Z/2", "Z^2", "0".
    std::string str() const;

private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
};

struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    std::size_t rank() const;
    /// Non-zero diagonal entries of D, in order.
    std::vector<Integer> invariant_factors() const;
};

/// U * A * V = D with U, V unimodular and D diagonal, non-negative, d_1 | d_2 | ...
SmithForm smith_normal_form(const IntMatrix& a);

/// Rank over F_2.
std::size_t rank_mod2(const IntMatrix& a);

/// Homology H_0, H_1, H_2 of Z^r2 --d2--> Z^r1 --d1--> Z^r0 with row-vector
/// chains (the composite is d2 * d1). modulus 2 gives (Z/2)^dim groups.
/// Throws PreconditionError when d2 * d1 != 0 or shapes disagree.
std::vector<AbelianGroup> homology_of_complex(const IntMatrix& d2, const IntMatrix& d1, int modulus);

/// Positive minus negative inertia, by exact congruence diagonalisation over Q.
long signature(const IntMatrix& s);

} // namespace bsk
