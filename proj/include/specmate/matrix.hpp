#pragma once

#include <vector>

#include "specmate/bigint.hpp"
#include "specmate/graph.hpp"

namespace specmate {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
        if (rows < 0 || cols < 0) throw internal_error("IntMat: negative dimension");
    }

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[index(i, j)]; }
    const Int& at(int i, int j) const { return a_[index(i, j)]; }

    IntMat transposed() const;
    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw internal_error("IntMat: index out of range");
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }

    int rows_, cols_;
    std::vector<Int> a_;
};

IntMat adjacency_matrix(const Graph& g);

// Fraction-free (Bareiss) determinant; sign as computed, no normalization.
Int det(const IntMat& m);

// Rank over F_p (p prime).
int rank_mod_p(const IntMat& m, const Int& p);

// Exact rank over the rationals.  Tries elimination modulo a fixed large
// prime first (rank can only drop mod p); a full fraction-free elimination
// settles the rest.
int rank_exact(const IntMat& m);

struct SmithDecomposition {
    std::vector<Int> d;   // diagonal, nonnegative, d[i] divides d[i+1]
    bool has_transforms;  // U, V valid only if true
    IntMat U, V;          // unimodular, U * M * V = diag(d)
};

// Smith normal form of an arbitrary integer matrix.  Pivot choice: smallest
// nonzero absolute value in the working block.  Transform accumulation is
// optional because it is the expensive part.
SmithDecomposition smith_normal_form(const IntMat& m, bool with_transforms = false);

}  // namespace specmate
