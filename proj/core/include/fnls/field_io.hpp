#pragma once

#include <filesystem>

#include "fnls/lattice.hpp"

namespace fnls {

/// Binary field dump. 32-byte header: magic "FNLSFLD1", u32 node count per
/// axis, f64 box half-width, f64 spacing, 4 reserved bytes; then n^3
/// little-endian IEEE-754 doubles, row-major with z fastest.
void write_field(const std::filesystem::path& path, const ScalarField& f);

/// Reads a dump written by write_field. Throws ParseError on bad magic or
/// truncated payload.
ScalarField read_field(const std::filesystem::path& path);

} // namespace fnls
