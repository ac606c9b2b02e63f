#pragma once

#include "pglab/rational.hpp"

#include <cstdint>
#include <vector>

namespace pglab {

// Dense F2 matrix as 64-bit word rows; rank by Gaussian elimination.
class F2Matrix {
public:
    F2Matrix(long rows, long cols);

    void set(long r, long c, bool v = true);
    bool get(long r, long c) const;
    long rows() const { return rows_; }
    long cols() const { return cols_; }

    void add_row_into(long src, long dst); // dst ^= src

    long rank() const;

    // Rank of the row space spanned jointly with another matrix's rows.
    static long rank_of_rows(const std::vector<std::vector<std::uint64_t>>& rows, long cols);

    const std::vector<std::uint64_t>& row(long r) const {
        return data_[static_cast<size_t>(r)];
    }

private:
    long rows_, cols_;
    std::vector<std::vector<std::uint64_t>> data_;
};

// Rank over Q of an integer matrix by fraction-free (Bareiss) elimination.
long bareiss_rank(std::vector<std::vector<BigInt>> m);

} // namespace pglab
