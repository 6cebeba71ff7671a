#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace catorb {

namespace la {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kDefaultCellBudget = 4'000'000;

class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols, std::size_t cell_budget = kDefaultCellBudget)
        : rows_(rows), cols_(cols) {
        if (cols != 0 && rows > cell_budget / cols)
            throw std::length_error("IntMatrix: " + std::to_string(rows) + "x" + std::to_string(cols) +
                                    " exceeds the cell budget of " + std::to_string(cell_budget));
        data_.assign(rows * cols, 0);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

// Fraction-free integer elimination. Pivot choice: smallest nonzero
// magnitude in the current column to slow entry growth; columns without a
// pivot are skipped, so the count of pivots is the rank.
inline std::size_t rank_bareiss(IntMatrix m) {
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t best = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (m.at(i, c) == 0) continue;
            if (best == m.rows() || abs(m.at(i, c)) < abs(m.at(best, c))) best = i;
        }
        if (best == m.rows()) continue;
        if (best != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(best, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                Int t = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
                m.at(i, j) = t / prev;  // divides exactly (Sylvester identity)
            }
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    return r;
}

// Rank over GF(p). Always a lower bound for the rational rank, so
// rank_modp == cols certifies full column rank exactly; anything less needs
// the exact routes.
inline std::size_t rank_modp(const IntMatrix& src, std::uint64_t p) {
    std::vector<std::vector<std::uint64_t>> m(src.rows(), std::vector<std::uint64_t>(src.cols()));
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j) {
            Int v = src.at(i, j) % static_cast<long long>(p);
            if (v < 0) v += static_cast<long long>(p);
            m[i][j] = v.convert_to<std::uint64_t>();
        }
    auto powmod = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t acc = 1;
        while (e) {
            if (e & 1) acc = acc * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return acc;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < src.cols() && r < src.rows(); ++c) {
        std::size_t piv = src.rows();
        for (std::size_t i = r; i < src.rows(); ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == src.rows()) continue;
        std::swap(m[r], m[piv]);
        std::uint64_t inv = powmod(m[r][c], p - 2);
        for (std::size_t i = r + 1; i < src.rows(); ++i) {
            if (m[i][c] == 0) continue;
            std::uint64_t f = m[i][c] * inv % p;
            for (std::size_t j = c; j < src.cols(); ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
        }
        ++r;
    }
    return r;
}

class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols, std::size_t cell_budget = kDefaultCellBudget)
        : rows_(rows), cols_(cols) {
        if (cols != 0 && rows > cell_budget / cols)
            throw std::length_error("RatMatrix: " + std::to_string(rows) + "x" + std::to_string(cols) +
                                    " exceeds the cell budget of " + std::to_string(cell_budget));
        data_.assign(rows * cols, 0);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

// Plain Gaussian elimination over the rationals; used to cross-check the
// fraction-free route on small matrices.
inline std::size_t rank_rational(RatMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) / m.at(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = Rat(m.at(i, j));
    return out;
}

struct SolveResult {
    bool solvable = false;
    std::size_t rank_a = 0;
    std::size_t rank_ab = 0;
    std::vector<Rat> witness;  // one solution of A x = b when solvable
};

// Rank comparison of A and [A|b]; extracts a particular solution when the
// system is consistent.
inline SolveResult solve_rational(const IntMatrix& a, const std::vector<Int>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_rational: rhs length mismatch");
    SolveResult res;
    res.rank_a = rank_bareiss(a);
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = Rat(a.at(i, j));
        aug.at(i, a.cols()) = Rat(b[i]);
    }
    // forward elimination on the augmented matrix, remembering pivot columns
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < aug.cols() && r < aug.rows(); ++c) {
        std::size_t piv = aug.rows();
        for (std::size_t i = r; i < aug.rows(); ++i)
            if (aug.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == aug.rows()) continue;
        if (piv != r)
            for (std::size_t j = c; j < aug.cols(); ++j) std::swap(aug.at(r, j), aug.at(piv, j));
        for (std::size_t i = 0; i < aug.rows(); ++i) {
            if (i == r || aug.at(i, c) == 0) continue;
            Rat f = aug.at(i, c) / aug.at(r, c);
            for (std::size_t j = c; j < aug.cols(); ++j) aug.at(i, j) -= f * aug.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    res.rank_ab = r;
    std::size_t rank_a_check = 0;
    for (std::size_t c : pivot_col)
        if (c < a.cols()) ++rank_a_check;
    if (rank_a_check != res.rank_a)
        throw std::logic_error("solve_rational: elimination routes disagree on rank");
    res.solvable = res.rank_a == res.rank_ab;
    if (res.solvable) {
        res.witness.assign(a.cols(), Rat(0));
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            res.witness[pivot_col[i]] = aug.at(i, a.cols()) / aug.at(i, pivot_col[i]);
    }
    return res;
}

}  // namespace la

}  // namespace catorb
