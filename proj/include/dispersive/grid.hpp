#pragma once

#include <cstddef>
#include <vector>

namespace dispersive {

/// Uniform periodic lattice on [-L, L) with n nodes and its angular
/// frequency dual xi_k = pi k / L, k in {-n/2, ..., n/2 - 1}.
///
/// Frequencies are indexed in FFT order: slot j holds wavenumber j for
/// j < n/2 and j - n otherwise, so slot n/2 is the single Nyquist mode.
class Grid {
public:
    Grid(std::size_t n, double half_length);

    /// Lattice on which the free Schrodinger group at time t factors exactly
    /// through the discrete Fourier transform: x_j = 2 t xi_{j - n/2}, which
    /// forces L = sqrt(pi n t).
    static Grid fresnel_matched(std::size_t n, double t);

    std::size_t size() const { return n_; }
    double half_length() const { return L_; }
    double length() const { return 2.0 * L_; }
    double spacing() const { return 2.0 * L_ / static_cast<double>(n_); }

    double node(std::size_t j) const { return -L_ + static_cast<double>(j) * spacing(); }
    std::vector<double> nodes() const;

    /// Signed wavenumber of FFT slot j.
    long wavenumber(std::size_t j) const;
    double frequency(std::size_t j) const;
    std::vector<double> frequencies() const;
    double nyquist_frequency() const;
    std::size_t nyquist_slot() const { return n_ / 2; }
    std::size_t origin_node() const { return n_ / 2; }

    /// Largest |xi| kept by a dealiasing mask of the given fraction.
    long dealias_cutoff(double fraction) const;

    bool operator==(const Grid& other) const { return n_ == other.n_ && L_ == other.L_; }

private:
    std::size_t n_;
    double L_;
};

} // namespace dispersive
