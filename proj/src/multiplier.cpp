#include "skdv/multiplier.hpp"

#include "skdv/errors.hpp"

#include <cmath>

namespace skdv {

void MultiplierSpec::validate() const {
    if (!(N >= 2.0) || !std::isfinite(N))
        throw InvalidInputError("multiplier cutoff N must be >= 2");
    if (!(s < 1.0) || !std::isfinite(s))
        throw InvalidInputError("multiplier index s must be < 1");
}

double smoothing_multiplier(double xi, const MultiplierSpec& M) {
    const double a = std::abs(xi);
    if (a <= M.N)
        return 1.0;
    const double tail_log = (1.0 - M.s) * (std::log(M.N) - std::log(a));
    if (a > 2.0 * M.N)
        return std::exp(tail_log); // N^{1-s} |xi|^{s-1}
    // Blend band N < |xi| <= 2N: geometric interpolation between 1 and the
    // tail, driven by a quintic smoothstep in r = log2(|xi|/N).
    const double r = std::log2(a / M.N);
    const double theta = r * r * r * (10.0 + r * (-15.0 + 6.0 * r));
    return std::exp(theta * tail_log);
}

namespace {

std::vector<cplx> multiplied_spectrum(const std::vector<cplx>& spec, const Grid& g,
                                      const MultiplierSpec& M) {
    M.validate();
    std::vector<cplx> out(spec.size());
    for (int i = 0; i < g.nx(); ++i)
        out[i] = spec[i] * smoothing_multiplier(g.xi(i), M);
    out[g.nyquist_index()] = 0.0;
    return out;
}

} // namespace

ComplexField apply_multiplier(const ComplexField& f, const MultiplierSpec& M) {
    return ComplexField::from_spectrum(f.grid(), multiplied_spectrum(f.spectrum(), f.grid(), M));
}

RealField apply_multiplier(const RealField& f, const MultiplierSpec& M) {
    return RealField::from_spectrum(f.grid(), multiplied_spectrum(f.spectrum(), f.grid(), M));
}

EquivalenceRatios multiplier_equivalence_check(const ComplexField& f,
                                               const MultiplierSpec& M) {
    M.validate();
    const double hs = sobolev_norm(f, M.s);
    if (hs == 0.0)
        throw UndefinedRatioError("multiplier_equivalence_check: zero field");
    const double h1 = sobolev_norm(apply_multiplier(f, M), 1.0);
    EquivalenceRatios r;
    r.lower = h1 / hs;
    r.upper = h1 / (std::pow(M.N, 1.0 - M.s) * hs);
    return r;
}

} // namespace skdv
