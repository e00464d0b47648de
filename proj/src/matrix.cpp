#include "eisen/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace eisen {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::permutation(const std::vector<int>& image) {
    int n = static_cast<int>(image.size());
    IntMatrix m(n, n);
    for (int j = 0; j < n; ++j) m.at(image[j], j) = 1;
    return m;
}

IntMatrix IntMatrix::elementary(int n, int i, int j, const Int& value) {
    IntMatrix m = identity(n);
    m.at(i, j) += value;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : e_)
        if (v != 0) return false;
    return true;
}

void IntMatrix::place(int i, int j, const IntMatrix& block) {
    for (int r = 0; r < block.rows(); ++r)
        for (int c = 0; c < block.cols(); ++c) at(i + r, j + c) = block.at(r, c);
}

IntMatrix IntMatrix::slice(int i, int j, int rows, int cols) const {
    IntMatrix out(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out.at(r, c) = at(i + r, j + c);
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream ss;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) ss << ' ';
            ss << at(i, j);
        }
        ss << '\n';
    }
    return ss.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Int& bkj = b.at(k, j);
                if (bkj != 0) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum: shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference: shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

IntMatrix bracket(const IntMatrix& a, const IntMatrix& b) { return a * b - b * a; }

Int trace(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("trace: not square");
    Int t = 0;
    for (int i = 0; i < a.rows(); ++i) t += a.at(i, i);
    return t;
}

int rank(const IntMatrix& a) {
    // Bareiss fraction-free elimination; pivots stay exact divisors.
    IntMatrix m = a;
    int rows = m.rows(), cols = m.cols();
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j)) / prev;
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    return r;
}

std::optional<ScaledInverse> scaled_inverse(const IntMatrix& g) {
    if (!g.is_square()) return std::nullopt;
    int n = g.rows();
    // Gauss-Jordan over rationals on [g | I], then clear denominators.
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rat(g.at(i, j), Int(1));
        m[i][n + i] = Rat(Int(1), Int(1));
    }
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (m[i][c] != Rat(Int(0), Int(1))) {
                pivot = i;
                break;
            }
        if (pivot < 0) return std::nullopt;
        std::swap(m[c], m[pivot]);
        Rat inv = m[c][c];
        for (int j = 0; j < 2 * n; ++j) m[c][j] /= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c) continue;
            Rat f = m[i][c];
            if (f == Rat(Int(0), Int(1))) continue;
            for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    Int lcm = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Int& d = m[i][n + j].denominator();
            lcm = boost::multiprecision::lcm(lcm, d);
        }
    ScaledInverse out{IntMatrix(n, n), lcm};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& v = m[i][n + j];
            out.mat.at(i, j) = v.numerator() * (lcm / v.denominator());
        }
    return out;
}

IntMatrix conjugate(const IntMatrix& n, const IntMatrix& g) {
    auto inv = scaled_inverse(g);
    if (!inv) throw std::invalid_argument("conjugate: singular conjugator");
    IntMatrix num = g * n * inv->mat;
    IntMatrix out(num.rows(), num.cols());
    for (int i = 0; i < num.rows(); ++i)
        for (int j = 0; j < num.cols(); ++j) {
            if (num.at(i, j) % inv->denom != 0)
                throw std::invalid_argument("conjugate: result not integral");
            out.at(i, j) = num.at(i, j) / inv->denom;
        }
    return out;
}

std::vector<int> rank_sequence(const IntMatrix& n) {
    if (!n.is_square()) throw std::invalid_argument("rank_sequence: not square");
    std::vector<int> seq{n.rows()};
    IntMatrix power = n;
    for (int j = 1; j <= n.rows(); ++j) {
        int r = rank(power);
        seq.push_back(r);
        if (r == 0) break;
        power = power * n;
    }
    return seq;
}

bool is_nilpotent(const IntMatrix& n) {
    if (!n.is_square()) return false;
    return rank_sequence(n).back() == 0;
}

Partition jordan_partition(const IntMatrix& n) {
    auto seq = rank_sequence(n);
    if (seq.back() != 0) throw std::invalid_argument("jordan_partition: matrix is not nilpotent");
    std::vector<int> parts;
    // seq[j-1] - seq[j] parts of length >= j.
    for (int j = 1; j < static_cast<int>(seq.size()); ++j) {
        int count_ge_j = seq[j - 1] - seq[j];
        int count_ge_next = j + 1 < static_cast<int>(seq.size()) ? seq[j] - seq[j + 1] : 0;
        for (int t = 0; t < count_ge_j - count_ge_next; ++t) parts.push_back(j);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

std::optional<IntMatrix> read_matrix(const std::string& text) {
    std::istringstream ss(text);
    long long rows = 0, cols = 0;
    if (!(ss >> rows >> cols) || rows <= 0 || cols <= 0 || rows > 4096 || cols > 4096)
        return std::nullopt;
    IntMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            std::string tok;
            if (!(ss >> tok)) return std::nullopt;
            try {
                m.at(i, j) = Int(tok);
            } catch (const std::exception&) {
                return std::nullopt;
            }
        }
    return m;
}

std::string write_matrix(const IntMatrix& m) {
    std::ostringstream ss;
    ss << m.rows() << ' ' << m.cols() << '\n' << m.to_string();
    return ss.str();
}

} // namespace eisen
