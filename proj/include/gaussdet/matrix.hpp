#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaussdet {

class NonSquareInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense square matrix with 1-based (row, column) access, matching the
/// indexing of the elimination formulas.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t size, const T& fill = T{}) : size_(size), data_(size * size, fill) {}

    /// Throws NonSquareInput unless every row has rows.size() entries.
    static SquareMatrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        SquareMatrix out(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size())
                throw NonSquareInput("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size())
                                     + " entries, expected " + std::to_string(rows.size()));
            for (std::size_t j = 0; j < rows.size(); ++j)
                out(i + 1, j + 1) = rows[i][j];
        }
        return out;
    }

    std::size_t size() const { return size_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[index(i, j)]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }

    /// Submatrix on the given 1-based rows and columns.
    SquareMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const
    {
        if (rows.size() != cols.size())
            throw NonSquareInput("row and column selections differ in size");
        SquareMatrix out(rows.size());
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b)
                out(a + 1, b + 1) = (*this)(rows[a], cols[b]);
        return out;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const
    {
        if (i < 1 || j < 1 || i > size_ || j > size_)
            throw std::out_of_range("matrix index (" + std::to_string(i) + "," + std::to_string(j)
                                    + ") outside 1.." + std::to_string(size_));
        return (i - 1) * size_ + (j - 1);
    }

    std::size_t size_ = 0;
    std::vector<T> data_;
};

} // namespace gaussdet
