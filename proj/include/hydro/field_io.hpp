#pragma once

#include <string>

#include "hydro/grid.hpp"

namespace hydro {

/// Metadata stored in the JSON sidecar next to every HSF1 file.
struct FieldMeta {
  std::string name;
  double time = 0.0;
  std::string provenance;
};

/// HSF1 layout: 12-byte magic "HSF1-FIELD\0\0", u32 version, u32 nx, ny, nz, u8 parity code,
/// then nx*ny*nz f64 values in z-fastest order. All integers and floats little-endian.
void write_hsf1(const std::string& path, const ScalarField& f, const FieldMeta& meta);
ScalarField read_hsf1(const std::string& path, FieldMeta* meta = nullptr);

/// Writes to a temporary sibling and renames over the target.
void write_file_atomic(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace hydro
