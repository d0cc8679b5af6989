#include "cubevar/cache.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

namespace cubevar {

namespace {

constexpr char kMagic[4] = {'R', '3', 'C', 'B'};
constexpr unsigned char kVersion = 0x01;

struct Fnv1a {
  u64 h = 14695981039346656037ull;
  void add(const unsigned char* p, size_t n) {
    for (size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
  }
};

void put_u64(std::vector<unsigned char>& out, u64 v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

u64 get_u64(const unsigned char* p) {
  u64 v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<u64>(p[i]) << (8 * i);
  return v;
}

}  // namespace

void write_cache(const std::string& path, const CubeRepTable& table) {
  std::vector<unsigned char> payload;
  payload.reserve(8 + 4 * table.x_max);
  put_u64(payload, table.x_max);
  for (u64 n = 1; n <= table.x_max; ++n) {
    u32 c = table.counts[n];
    for (int i = 0; i < 4; ++i)
      payload.push_back(static_cast<unsigned char>(c >> (8 * i)));
  }
  Fnv1a sum;
  sum.add(payload.data(), payload.size());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw CacheIoError("cannot open cache for writing: " + path);
  f.write(kMagic, 4);
  char ver = static_cast<char>(kVersion);
  f.write(&ver, 1);
  f.write(reinterpret_cast<const char*>(payload.data()),
          static_cast<std::streamsize>(payload.size()));
  std::vector<unsigned char> tail;
  put_u64(tail, sum.h);
  f.write(reinterpret_cast<const char*>(tail.data()), 8);
  if (!f) throw CacheIoError("write failure: " + path);
}

CubeRepTable read_cache(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CacheIoError("cannot open cache: " + path);
  char head[5];
  if (!f.read(head, 5)) throw CacheIoError("short read (header): " + path);
  if (std::memcmp(head, kMagic, 4) != 0)
    throw CacheCorruptError("bad magic: " + path);
  if (static_cast<unsigned char>(head[4]) != kVersion)
    throw CacheCorruptError("unsupported version: " + path);
  unsigned char xb[8];
  if (!f.read(reinterpret_cast<char*>(xb), 8))
    throw CacheIoError("short read (x_max): " + path);
  u64 x_max = get_u64(xb);
  if (x_max > kMaxSieveSize) throw CacheCorruptError("x_max too large: " + path);
  std::vector<unsigned char> body(4 * x_max);
  if (x_max &&
      !f.read(reinterpret_cast<char*>(body.data()),
              static_cast<std::streamsize>(body.size())))
    throw CacheIoError("short read (counts): " + path);
  unsigned char cb[8];
  if (!f.read(reinterpret_cast<char*>(cb), 8))
    throw CacheIoError("short read (checksum): " + path);
  Fnv1a sum;
  sum.add(xb, 8);
  sum.add(body.data(), body.size());
  if (sum.h != get_u64(cb)) throw CacheCorruptError("checksum mismatch: " + path);
  if (f.peek() != std::ifstream::traits_type::eof())
    throw CacheCorruptError("trailing bytes: " + path);
  CubeRepTable t;
  t.x_max = x_max;
  t.counts.assign(x_max + 1, 0);
  for (u64 n = 1; n <= x_max; ++n) {
    const unsigned char* p = body.data() + 4 * (n - 1);
    t.counts[n] = static_cast<u32>(p[0]) | static_cast<u32>(p[1]) << 8 |
                  static_cast<u32>(p[2]) << 16 | static_cast<u32>(p[3]) << 24;
  }
  return t;
}

u64 probe_cache(const std::string& path) {
  try {
    return read_cache(path).x_max;
  } catch (const std::runtime_error&) {
    return 0;
  }
}

}  // namespace cubevar
