#include "skdv/trajectory_io.hpp"

#include "skdv/errors.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

namespace skdv {

namespace {

constexpr char kMagic[8] = {'S', 'K', 'D', 'V', 'S', 'N', 'A', 'P'};
constexpr std::uint32_t kVersion = 1;

void put_f64(std::ostream& os, double x) {
    os.write(reinterpret_cast<const char*>(&x), sizeof(x));
}
void put_u32(std::ostream& os, std::uint32_t x) {
    os.write(reinterpret_cast<const char*>(&x), sizeof(x));
}
double get_f64(std::istream& is) {
    double x;
    is.read(reinterpret_cast<char*>(&x), sizeof(x));
    return x;
}
std::uint32_t get_u32(std::istream& is) {
    std::uint32_t x;
    is.read(reinterpret_cast<char*>(&x), sizeof(x));
    return x;
}

} // namespace

void write_snapshot(std::ostream& os, const SystemState& state, const SystemParams& p) {
    os.write(kMagic, sizeof(kMagic));
    put_u32(os, kVersion);
    put_u32(os, static_cast<std::uint32_t>(state.u.grid().nx()));
    put_f64(os, state.u.grid().half_length());
    put_f64(os, state.t);
    put_f64(os, p.alpha);
    put_f64(os, p.beta);
    put_f64(os, p.gamma);
    put_f64(os, p.s);
    put_f64(os, p.l);
    for (const auto& z : state.u.values()) {
        put_f64(os, z.real());
        put_f64(os, z.imag());
    }
    for (double x : state.v.values()) {
        put_f64(os, x);
        put_f64(os, 0.0);
    }
    if (!os)
        throw Error("snapshot write failed");
}

SystemState read_snapshot(std::istream& is, SystemParams* p_out) {
    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(magic)) != 0)
        throw InvalidInputError("not a state snapshot");
    const std::uint32_t version = get_u32(is);
    if (version != kVersion)
        throw InvalidInputError("unsupported snapshot version");
    const int nx = static_cast<int>(get_u32(is));
    const double L = get_f64(is);
    const double t = get_f64(is);
    SystemParams p;
    p.alpha = get_f64(is);
    p.beta = get_f64(is);
    p.gamma = get_f64(is);
    p.s = get_f64(is);
    p.l = get_f64(is);
    Grid g(nx, L);
    std::vector<cplx> uv(nx);
    for (int j = 0; j < nx; ++j) {
        const double re = get_f64(is);
        const double im = get_f64(is);
        uv[j] = cplx(re, im);
    }
    std::vector<double> vv(nx);
    for (int j = 0; j < nx; ++j) {
        vv[j] = get_f64(is);
        (void)get_f64(is);
    }
    if (!is)
        throw InvalidInputError("truncated snapshot");
    if (p_out)
        *p_out = p;
    return SystemState{ComplexField::from_samples(g, std::move(uv)),
                       RealField::from_samples(g, std::move(vv)), t};
}

void write_snapshot_file(const std::string& path, const SystemState& state,
                         const SystemParams& p) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw Error("cannot open " + path + " for writing");
    write_snapshot(os, state, p);
}

SystemState read_snapshot_file(const std::string& path, SystemParams* p_out) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw Error("cannot open " + path);
    return read_snapshot(is, p_out);
}

} // namespace skdv
