#include "dispersive/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dispersive {

Field::Field(Grid grid, std::vector<cplx> values) : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
        throw std::invalid_argument("field: expected " + std::to_string(grid_.size()) + " samples, got " +
                                    std::to_string(values_.size()));
    }
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (!std::isfinite(values_[j].real()) || !std::isfinite(values_[j].imag())) {
            throw std::invalid_argument("field: non-finite sample at node " + std::to_string(j));
        }
    }
}

Field Field::zeros(const Grid& grid) { return Field(grid, std::vector<cplx>(grid.size())); }

Field Field::constant(const Grid& grid, cplx value) {
    return Field(grid, std::vector<cplx>(grid.size(), value));
}

void require_same_grid(const Field& a, const Field& b, const char* where) {
    if (!(a.grid() == b.grid())) throw std::invalid_argument(std::string(where) + ": fields live on different grids");
}

Field Field::operator+(const Field& other) const {
    require_same_grid(*this, other, "field +");
    std::vector<cplx> v(values_);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += other.values_[j];
    return Field(grid_, std::move(v));
}

Field Field::operator-(const Field& other) const {
    require_same_grid(*this, other, "field -");
    std::vector<cplx> v(values_);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= other.values_[j];
    return Field(grid_, std::move(v));
}

Field Field::operator*(cplx scale) const {
    std::vector<cplx> v(values_);
    for (auto& z : v) z *= scale;
    return Field(grid_, std::move(v));
}

Field Field::times(const Field& other) const {
    require_same_grid(*this, other, "field product");
    std::vector<cplx> v(values_);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] *= other.values_[j];
    return Field(grid_, std::move(v));
}

Field Field::conj() const {
    std::vector<cplx> v(values_);
    for (auto& z : v) z = std::conj(z);
    return Field(grid_, std::move(v));
}

Field Field::real_part() const {
    std::vector<cplx> v(values_.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = values_[j].real();
    return Field(grid_, std::move(v));
}

Field Field::abs() const {
    std::vector<cplx> v(values_.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = std::abs(values_[j]);
    return Field(grid_, std::move(v));
}

Field Field::times_x() const {
    std::vector<cplx> v(values_);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] *= grid_.node(j);
    return Field(grid_, std::move(v));
}

double Field::max_abs() const {
    double m = 0.0;
    for (const auto& z : values_) m = std::max(m, std::abs(z));
    return m;
}

bool Field::is_real(double tol) const {
    const double scale = max_abs();
    if (scale == 0.0) return true;
    for (const auto& z : values_) {
        if (std::abs(z.imag()) > tol * scale) return false;
    }
    return true;
}

} // namespace dispersive
