#include "pglab/linalg.hpp"

#include <algorithm>

namespace pglab {

F2Matrix::F2Matrix(long rows, long cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<size_t>(rows),
            std::vector<std::uint64_t>(static_cast<size_t>((cols + 63) / 64), 0)) {}

void F2Matrix::set(long r, long c, bool v) {
    auto& w = data_[static_cast<size_t>(r)][static_cast<size_t>(c >> 6)];
    if (v)
        w |= 1ULL << (c & 63);
    else
        w &= ~(1ULL << (c & 63));
}

bool F2Matrix::get(long r, long c) const {
    return (data_[static_cast<size_t>(r)][static_cast<size_t>(c >> 6)] >> (c & 63)) & 1;
}

void F2Matrix::add_row_into(long src, long dst) {
    auto& s = data_[static_cast<size_t>(src)];
    auto& d = data_[static_cast<size_t>(dst)];
    for (size_t i = 0; i < s.size(); ++i) d[i] ^= s[i];
}

long F2Matrix::rank() const { return rank_of_rows(data_, cols_); }

long F2Matrix::rank_of_rows(const std::vector<std::vector<std::uint64_t>>& rows, long cols) {
    std::vector<std::vector<std::uint64_t>> m = rows;
    long rank = 0;
    long nrows = static_cast<long>(m.size());
    for (long c = 0; c < cols && rank < nrows; ++c) {
        long pivot = -1;
        for (long r = rank; r < nrows; ++r) {
            if ((m[static_cast<size_t>(r)][static_cast<size_t>(c >> 6)] >> (c & 63)) & 1) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(rank)]);
        for (long r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            if ((m[static_cast<size_t>(r)][static_cast<size_t>(c >> 6)] >> (c & 63)) & 1) {
                for (size_t i = 0; i < m[static_cast<size_t>(r)].size(); ++i)
                    m[static_cast<size_t>(r)][i] ^= m[static_cast<size_t>(rank)][i];
            }
        }
        ++rank;
    }
    return rank;
}

long bareiss_rank(std::vector<std::vector<BigInt>> m) {
    if (m.empty()) return 0;
    long nrows = static_cast<long>(m.size());
    long ncols = static_cast<long>(m[0].size());
    BigInt prev = 1;
    long rank = 0;
    for (long c = 0; c < ncols && rank < nrows; ++c) {
        long pivot = -1;
        for (long r = rank; r < nrows; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(rank)]);
        const BigInt piv = m[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        for (long r = rank + 1; r < nrows; ++r) {
            for (long j = c + 1; j < ncols; ++j) {
                BigInt v = m[static_cast<size_t>(r)][static_cast<size_t>(j)] * piv -
                           m[static_cast<size_t>(r)][static_cast<size_t>(c)] *
                               m[static_cast<size_t>(rank)][static_cast<size_t>(j)];
                m[static_cast<size_t>(r)][static_cast<size_t>(j)] = v / prev;
            }
            m[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

} // namespace pglab
