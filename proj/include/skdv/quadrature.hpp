#pragma once

#include "skdv/fft.hpp"

#include <vector>

namespace skdv {

struct QuadRule {
    std::vector<double> x;
    std::vector<double> w;
};

// Gauss-Legendre nodes and weights on [-1, 1] (Newton on the Legendre
// recurrence), cached per order.
const QuadRule& gauss_legendre(int n);
// Mapped to [a, b].
QuadRule gauss_legendre(int n, double a, double b);

// Composite trapezoid over uniformly spaced samples.
double trapezoid(const std::vector<double>& f, double h);
cplx trapezoid(const std::vector<cplx>& f, double h);

// Cumulative integral I[m] = int_{y_0}^{y_m} f dy on a uniform lattice,
// fourth order: each increment integrates the local quadratic through three
// neighbouring samples.  Needs at least 3 samples.
std::vector<cplx> cumulative_integral(const std::vector<cplx>& f, double h);

} // namespace skdv
