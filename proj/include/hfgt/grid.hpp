#pragma once

#include <cstddef>
#include <vector>

namespace hfgt {

// Dense row-major matrix, small and value-semantic.
template <typename T>
class Grid {
public:
    Grid() = default;

    Grid(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

    T& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool operator==(const Grid&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> cells_;
};

}  // namespace hfgt
