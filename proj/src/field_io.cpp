#include "hydro/field_io.hpp"

#include <unistd.h>

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hydro/error.hpp"

namespace hydro {

static_assert(std::endian::native == std::endian::little, "HSF1 I/O assumes a little-endian host");

namespace {

constexpr char kMagic[12] = {'H', 'S', 'F', '1', '-', 'F', 'I', 'E', 'L', 'D', '\0', '\0'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::string& out, T value) {
  char buf[sizeof(T)];
  std::memcpy(buf, &value, sizeof(T));
  out.append(buf, sizeof(T));
}

template <class T>
T get(const std::string& in, std::size_t& pos) {
  if (pos + sizeof(T) > in.size()) fail(ErrorKind::Io, "truncated HSF1 file");
  T value;
  std::memcpy(&value, in.data() + pos, sizeof(T));
  pos += sizeof(T);
  return value;
}

}  // namespace

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) fail(ErrorKind::Io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail(ErrorKind::Io, "cannot rename onto " + path);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_hsf1(const std::string& path, const ScalarField& f, const FieldMeta& meta) {
  const Grid& g = f.grid();
  std::string out;
  out.reserve(12 + 4 * 4 + 1 + f.size() * 8);
  out.append(kMagic, sizeof(kMagic));
  put<std::uint32_t>(out, kVersion);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(g.nx));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(g.ny));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(g.nz));
  put<std::uint8_t>(out, static_cast<std::uint8_t>(f.parity()));
  out.append(reinterpret_cast<const char*>(f.data()), f.size() * sizeof(double));
  write_file_atomic(path, out);

  nlohmann::json side = {{"name", meta.name},
                         {"time", meta.time},
                         {"provenance", meta.provenance},
                         {"grid", {g.nx, g.ny, g.nz}},
                         {"parity", to_string(f.parity())}};
  write_file_atomic(path + ".json", side.dump(2) + "\n");
}

ScalarField read_hsf1(const std::string& path, FieldMeta* meta) {
  const std::string in = read_file(path);
  if (in.size() < sizeof(kMagic) || std::memcmp(in.data(), kMagic, sizeof(kMagic)) != 0)
    fail(ErrorKind::Io, path + " is not an HSF1 file");
  std::size_t pos = sizeof(kMagic);
  const auto version = get<std::uint32_t>(in, pos);
  if (version != kVersion) fail(ErrorKind::Io, "unsupported HSF1 version " + std::to_string(version));
  const auto nx = get<std::uint32_t>(in, pos);
  const auto ny = get<std::uint32_t>(in, pos);
  const auto nz = get<std::uint32_t>(in, pos);
  const auto code = get<std::uint8_t>(in, pos);
  if (code > 2) fail(ErrorKind::Io, "bad parity code in " + path);
  Grid g(static_cast<int>(nx), static_cast<int>(ny), static_cast<int>(nz));
  if (in.size() - pos != g.size() * sizeof(double)) fail(ErrorKind::Io, "payload size mismatch in " + path);
  RealArray values(g.size());
  std::memcpy(values.data(), in.data() + pos, g.size() * sizeof(double));
  ScalarField f(g, std::move(values), static_cast<Parity>(code));
  if (meta) {
    *meta = FieldMeta{};
    std::ifstream side(path + ".json");
    if (side) {
      try {
        auto j = nlohmann::json::parse(side);
        meta->name = j.value("name", "");
        meta->time = j.value("time", 0.0);
        meta->provenance = j.value("provenance", "");
      } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Io, "bad sidecar for " + path + ": " + e.what());
      }
    }
  }
  return f;
}

}  // namespace hydro
