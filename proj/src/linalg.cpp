#include "chordal/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>

namespace chordal {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::vector<std::vector<std::uint64_t>> pack_rows_gf2(const IntMatrix& m) {
    const int words = (m.cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(
        static_cast<std::size_t>(m.rows), std::vector<std::uint64_t>(static_cast<std::size_t>(words), 0));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.at(r, c) & 1) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c / 64)] ^= std::uint64_t{1} << (c % 64);
    return rows;
}

// Bareiss elimination over T with row/column pivoting; divisions stay exact.
// Returns the rank, or -1 if T = long long overflows along the way.
template <typename T, bool Checked>
int bareiss(std::vector<std::vector<T>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    T prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(piv)]);
        const auto& prow = m[static_cast<std::size_t>(rank)];
        T p = prow[static_cast<std::size_t>(col)];
        for (int r = rank + 1; r < rows; ++r) {
            auto& row = m[static_cast<std::size_t>(r)];
            T f = row[static_cast<std::size_t>(col)];
            for (int c = col; c < cols; ++c) {
                if constexpr (Checked) {
                    __int128 v = static_cast<__int128>(p) * row[static_cast<std::size_t>(c)] -
                                 static_cast<__int128>(f) * prow[static_cast<std::size_t>(c)];
                    v /= prev;
                    if (v > INT64_MAX / 2 || v < INT64_MIN / 2) return -1;
                    row[static_cast<std::size_t>(c)] = static_cast<T>(v);
                } else {
                    row[static_cast<std::size_t>(c)] = (p * row[static_cast<std::size_t>(c)] - f * prow[static_cast<std::size_t>(c)]) / prev;
                }
            }
        }
        prev = p;
        ++rank;
    }
    return rank;
}

}  // namespace

int rank_gf2(const IntMatrix& m) {
    auto rows = pack_rows_gf2(m);
    const int words = (m.cols + 63) / 64;
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        const std::size_t w = static_cast<std::size_t>(c / 64);
        const std::uint64_t b = std::uint64_t{1} << (c % 64);
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (rows[static_cast<std::size_t>(r)][w] & b) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(piv)]);
        for (int r = 0; r < m.rows; ++r)
            if (r != rank && (rows[static_cast<std::size_t>(r)][w] & b))
                for (int k = 0; k < words; ++k)
                    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] ^= rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(k)];
        ++rank;
    }
    return rank;
}

int rank_rational(const IntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::vector<std::vector<long long>> small(
        static_cast<std::size_t>(m.rows), std::vector<long long>(static_cast<std::size_t>(m.cols)));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) small[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m.at(r, c);
    int rk = bareiss<long long, true>(small);
    if (rk >= 0) return rk;
    std::vector<std::vector<BigInt>> big(
        static_cast<std::size_t>(m.rows), std::vector<BigInt>(static_cast<std::size_t>(m.cols)));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) big[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m.at(r, c);
    return bareiss<BigInt, false>(std::move(big));
}

int rank(const IntMatrix& m, FieldTag field) {
    return field == FieldTag::GF2 ? rank_gf2(m) : rank_rational(m);
}

std::vector<std::vector<std::uint64_t>> nullspace_gf2(const IntMatrix& m) {
    // Reduce [A^T | I] row-style on columns: standard kernel extraction by
    // eliminating on the rows of A directly, tracking pivot columns.
    const int words = (m.cols + 63) / 64;
    auto rows = pack_rows_gf2(m);
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        const std::size_t w = static_cast<std::size_t>(c / 64);
        const std::uint64_t b = std::uint64_t{1} << (c % 64);
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (rows[static_cast<std::size_t>(r)][w] & b) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(piv)]);
        for (int r = 0; r < m.rows; ++r)
            if (r != rank && (rows[static_cast<std::size_t>(r)][w] & b))
                for (int k = 0; k < words; ++k)
                    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] ^= rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(k)];
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<std::uint64_t> v(static_cast<std::size_t>(words), 0);
        v[static_cast<std::size_t>(free / 64)] ^= std::uint64_t{1} << (free % 64);
        for (int r = 0; r < rank; ++r) {
            const std::size_t w = static_cast<std::size_t>(free / 64);
            if (rows[static_cast<std::size_t>(r)][w] & (std::uint64_t{1} << (free % 64))) {
                int pc = pivot_col[static_cast<std::size_t>(r)];
                v[static_cast<std::size_t>(pc / 64)] ^= std::uint64_t{1} << (pc % 64);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace chordal
