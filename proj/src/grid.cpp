#include "skdv/grid.hpp"

#include "skdv/errors.hpp"

#include <cmath>

namespace skdv {

bool is_power_of_two(int n) {
    return n > 0 && (n & (n - 1)) == 0;
}

Grid::Grid(int nx, double half_length) : nx_(nx), L_(half_length) {
    if (nx < 8 || !is_power_of_two(nx))
        throw InvalidInputError("grid point count must be a power of two >= 8");
    if (!(half_length > 0.0) || !std::isfinite(half_length))
        throw InvalidInputError("grid half-length must be positive and finite");
    dx_ = 2.0 * L_ / nx_;
    xi_.resize(nx_);
    const double base = M_PI / L_;
    for (int i = 0; i < nx_; ++i)
        xi_[i] = base * (i - nx_ / 2);
}

} // namespace skdv
