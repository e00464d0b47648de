#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "eisen/partition.hpp"
#include "eisen/rational.hpp"

namespace eisen {

/// Dense integer matrix over arbitrary-precision integers. Ambient sizes in
/// this project stay small (<= 64), so no sparse structure is needed.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols) {}

    static IntMatrix identity(int n);
    static IntMatrix zero(int n) { return IntMatrix(n, n); }
    /// Permutation matrix with entry (image[j], j) = 1, i.e. e_j -> e_{image[j]}.
    static IntMatrix permutation(const std::vector<int>& image);
    static IntMatrix elementary(int n, int i, int j, const Int& value);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }

    IntMatrix transpose() const;
    bool is_zero() const;

    /// Writes `block` with its (0,0) entry at position (i, j).
    void place(int i, int j, const IntMatrix& block);
    IntMatrix slice(int i, int j, int rows, int cols) const;

    bool operator==(const IntMatrix&) const = default;

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

/// Lie bracket ab - ba.
IntMatrix bracket(const IntMatrix& a, const IntMatrix& b);

Int trace(const IntMatrix& a);

/// Exact rank over the rationals, by fraction-free (Bareiss) elimination.
int rank(const IntMatrix& a);

/// Inverse of g over the rationals, scaled to integer entries: returns
/// (h, d) with g^{-1} = h / d. Nullopt when g is singular.
struct ScaledInverse {
    IntMatrix mat;
    Int denom;
};
std::optional<ScaledInverse> scaled_inverse(const IntMatrix& g);

/// g * n * g^{-1}, exactly. Throws std::invalid_argument when g is singular
/// or the conjugate is not integral.
IntMatrix conjugate(const IntMatrix& n, const IntMatrix& g);

bool is_nilpotent(const IntMatrix& n);

/// Jordan type of a nilpotent matrix from its rank sequence r_j = rank(n^j):
/// the number of parts >= j is r_{j-1} - r_j.
Partition jordan_partition(const IntMatrix& n);

/// Ranks of n^0, n^1, ... down to the first zero power.
std::vector<int> rank_sequence(const IntMatrix& n);

/// Matrix file format: first line "rows cols", then row-major integers.
std::optional<IntMatrix> read_matrix(const std::string& text);
std::string write_matrix(const IntMatrix& m);

} // namespace eisen
