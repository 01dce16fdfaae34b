#pragma once

#include "skdv/params.hpp"

#include <iosfwd>
#include <string>

namespace skdv {

// Binary state snapshot.  Layout (little-endian, IEEE doubles):
//   magic "SKDVSNAP", u32 version, u32 nx,
//   f64 L, f64 t, f64 alpha, f64 beta, f64 gamma, f64 s, f64 l,
//   nx * (f64 re, f64 im) for u, then nx * (f64 re, f64 im) for v.
// Round trips are bit exact.
void write_snapshot(std::ostream& os, const SystemState& state, const SystemParams& p);
SystemState read_snapshot(std::istream& is, SystemParams* p_out = nullptr);

void write_snapshot_file(const std::string& path, const SystemState& state,
                         const SystemParams& p);
SystemState read_snapshot_file(const std::string& path, SystemParams* p_out = nullptr);

} // namespace skdv
