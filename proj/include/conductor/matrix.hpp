#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace conductor {

// Dense row-major matrix. Arithmetic lives with the ring policies
// (see valued_ring.hpp), since elements do not know their ring.
template <class E>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const E& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<E> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count does not match its shape");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    E& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const E& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const E& at(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
        return data_[r * cols_ + c];
    }

    const std::vector<E>& data() const { return data_; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }

    Matrix transposed() const {
        Matrix t;
        t.rows_ = cols_;
        t.cols_ = rows_;
        t.data_.reserve(data_.size());
        for (std::size_t c = 0; c < cols_; ++c)
            for (std::size_t r = 0; r < rows_; ++r) t.data_.push_back((*this)(r, c));
        return t;
    }

    // Rows [r0, r1) and columns [c0, c1).
    Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
        Matrix b;
        b.rows_ = r1 - r0;
        b.cols_ = c1 - c0;
        b.data_.reserve(b.rows_ * b.cols_);
        for (std::size_t r = r0; r < r1; ++r)
            for (std::size_t c = c0; c < c1; ++c) b.data_.push_back((*this)(r, c));
        return b;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<E> data_;
};

}  // namespace conductor
