#pragma once

#include "dispersive/grid.hpp"

#include <complex>
#include <span>
#include <vector>

namespace dispersive {

using cplx = std::complex<double>;

/// Complex samples u(x_j) on a Grid. All entries are finite.
class Field {
public:
    Field(Grid grid, std::vector<cplx> values);

    static Field zeros(const Grid& grid);
    static Field constant(const Grid& grid, cplx value);

    template <class Fn>
    static Field sample(const Grid& grid, Fn&& fn) {
        std::vector<cplx> v(grid.size());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = cplx(fn(grid.node(j)));
        return Field(grid, std::move(v));
    }

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    std::span<const cplx> values() const { return values_; }
    const cplx& operator[](std::size_t j) const { return values_[j]; }

    Field operator+(const Field& other) const;
    Field operator-(const Field& other) const;
    Field operator*(cplx scale) const;
    /// Pointwise product.
    Field times(const Field& other) const;
    Field conj() const;
    Field real_part() const;
    Field abs() const;
    /// Pointwise multiplication by x_j.
    Field times_x() const;

    double max_abs() const;
    /// Largest |Im u| relative to max|u| is at most tol.
    bool is_real(double tol = 1e-10) const;

private:
    Grid grid_;
    std::vector<cplx> values_;
};

inline Field operator*(cplx scale, const Field& f) { return f * scale; }

/// Fourier coefficients c_k in FFT slot order with u(x_j) = sum_k c_k exp(i xi_k x_j).
struct SpectralField {
    Grid grid;
    std::vector<cplx> coeffs;
};

void require_same_grid(const Field& a, const Field& b, const char* where);

} // namespace dispersive
