#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace barber {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    Matrix(std::size_t dim, std::initializer_list<Complex> row_major);

    static Matrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    const std::vector<Complex>& data() const noexcept { return data_; }

    Matrix adjoint() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix& operator*=(Complex scale);

    /// Kronecker product; `*this` occupies the most significant index bits.
    Matrix kron(const Matrix& rhs) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// max_ij |a_ij - b_ij|. Dimensions must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// max_ij |(U^dagger U - I)_ij|.
double unitarity_error(const Matrix& u);

}  // namespace barber
