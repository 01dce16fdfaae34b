#pragma once

#include <vector>

namespace skdv {

// Uniform periodic spatial grid on [-L, L) with its frequency lattice.
//
// Points x_j = -L + j*dx, j = 0..nx-1, dx = 2L/nx.  Frequencies are stored
// in signed order xi_k = pi*k/L for k = -nx/2 .. nx/2-1, so index i maps to
// k = i - nx/2.  nx must be a power of two, at least 8.
class Grid {
public:
    Grid(int nx, double half_length);

    int nx() const { return nx_; }
    double half_length() const { return L_; }
    double dx() const { return dx_; }
    double length() const { return 2.0 * L_; }

    double x(int j) const { return -L_ + dx_ * j; }
    // Signed-order frequency at storage index i (i = 0 is the Nyquist mode).
    double xi(int i) const { return xi_[i]; }
    const std::vector<double>& xi() const { return xi_; }

    // Storage index of lattice wavenumber k (k in [-nx/2, nx/2)).
    int index_of_mode(int k) const { return k + nx_ / 2; }
    int mode_of_index(int i) const { return i - nx_ / 2; }
    int nyquist_index() const { return 0; }

    double xi_max() const { return xi_[nx_ - 1]; }

    bool operator==(const Grid& o) const {
        return nx_ == o.nx_ && L_ == o.L_;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }

private:
    int nx_;
    double L_;
    double dx_;
    std::vector<double> xi_;
};

bool is_power_of_two(int n);

} // namespace skdv
