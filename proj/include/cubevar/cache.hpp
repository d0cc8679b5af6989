#pragma once

#include <stdexcept>
#include <string>

#include "cubevar/sieve.hpp"

namespace cubevar {

// File format: "R3CB", version byte 0x01, u64 LE x_max, x_max u32 LE counts
// (n = 1..x_max), u64 LE FNV-1a checksum over the x_max and count bytes.

struct CacheIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CacheCorruptError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_cache(const std::string& path, const CubeRepTable& table);

// Throws CacheIoError on open/short-read, CacheCorruptError on bad magic,
// version or checksum.
CubeRepTable read_cache(const std::string& path);

// x_max of a valid cache at path, or 0 if missing/invalid.
u64 probe_cache(const std::string& path);

}  // namespace cubevar
