#pragma once

#include <stdexcept>
#include <vector>

namespace concordia {

// Minimal dense matrix; just enough for the exact linear algebra here.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& init)
        : rows_(rows), cols_(cols), data_(rows * cols, init) {}

    static Matrix from_rows(std::vector<std::vector<T>> rows) {
        Matrix m;
        m.rows_ = rows.size();
        m.cols_ = rows.empty() ? 0 : rows.front().size();
        for (auto& r : rows) {
            if (r.size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
            for (auto& x : r) m.data_.push_back(std::move(x));
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return data_[index(i, j)]; }
    const T& at(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

    Matrix submatrix(const std::vector<std::size_t>& row_idx,
                     const std::vector<std::size_t>& col_idx) const {
        Matrix m;
        m.rows_ = row_idx.size();
        m.cols_ = col_idx.size();
        m.data_.reserve(m.rows_ * m.cols_);
        for (std::size_t i : row_idx)
            for (std::size_t j : col_idx) m.data_.push_back(at(i, j));
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;

    std::size_t index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
        return i * cols_ + j;
    }
};

}  // namespace concordia
