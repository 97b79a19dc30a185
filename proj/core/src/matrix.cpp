#include "barber/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace barber {

Matrix::Matrix(std::size_t dim, std::initializer_list<Complex> row_major)
    : dim_(dim), data_(row_major) {
    if (data_.size() != dim * dim) {
        throw std::invalid_argument("Matrix: initializer has wrong element count");
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (rhs.dim_ != dim_) throw std::invalid_argument("Matrix: dimension mismatch");
    Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex a = (*this)(r, k);
            if (a == Complex{}) continue;
            const Complex* rhs_row = &rhs.data_[k * dim_];
            Complex* out_row = &out.data_[r * dim_];
            for (std::size_t c = 0; c < dim_; ++c) out_row[c] += a * rhs_row[c];
        }
    }
    return out;
}

Matrix& Matrix::operator*=(Complex scale) {
    for (auto& v : data_) v *= scale;
    return *this;
}

Matrix Matrix::kron(const Matrix& rhs) const {
    const std::size_t d = dim_ * rhs.dim_;
    Matrix out(d);
    for (std::size_t r1 = 0; r1 < dim_; ++r1)
        for (std::size_t c1 = 0; c1 < dim_; ++c1)
            for (std::size_t r2 = 0; r2 < rhs.dim_; ++r2)
                for (std::size_t c2 = 0; c2 < rhs.dim_; ++c2)
                    out(r1 * rhs.dim_ + r2, c1 * rhs.dim_ + c2) = (*this)(r1, c1) * rhs(r2, c2);
    return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    return worst;
}

double unitarity_error(const Matrix& u) {
    return max_abs_diff(u.adjoint() * u, Matrix::identity(u.dim()));
}

}  // namespace barber
