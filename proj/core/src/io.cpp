#include "mhdstress/io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "mhdstress/errors.hpp"

namespace mhdstress {
namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <class U>
void put_le(std::ostream& out, U value) {
  std::array<char, sizeof(U)> bytes{};
  for (std::size_t i = 0; i < sizeof(U); ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFFu);
  out.write(bytes.data(), bytes.size());
}

template <class U>
U get_le(std::istream& in) {
  std::array<unsigned char, sizeof(U)> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!in) throw FormatError("snapshot: unexpected end of data");
  U value = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) value |= static_cast<U>(bytes[i]) << (8 * i);
  return value;
}

void put_f64(std::ostream& out, double x) { put_le(out, std::bit_cast<std::uint64_t>(x)); }

double get_f64(std::istream& in) { return std::bit_cast<double>(get_le<std::uint64_t>(in)); }

void put_field(std::ostream& out, const SpectralField& f) {
  for (int i = 0; i < f.dim(); ++i)
    for (const auto& c : f.component(i)) {
      put_f64(out, c.real());
      put_f64(out, c.imag());
    }
}

SpectralField get_field(std::istream& in, const TorusGrid& grid) {
  SpectralField f(grid);
  for (int i = 0; i < grid.dim(); ++i)
    for (auto& c : f.component(i)) {
      const double re = get_f64(in);
      const double im = get_f64(in);
      c = {re, im};
    }
  return f;
}

}  // namespace

std::string timeseries_header(int dim) {
  std::string h = "t,energy,cross_helicity";
  for (int i = 1; i <= dim; ++i) h += ",momentum_" + std::to_string(i);
  h += ",magnetic_helicity,max_div_v,max_div_B";
  return h;
}

std::string timeseries_row(const InvariantRecord& r) {
  std::string row = fmt17(r.t) + "," + fmt17(r.energy) + "," + fmt17(r.cross_helicity);
  for (double m : r.momentum) row += "," + fmt17(m);
  row += ",";
  if (r.magnetic_helicity) row += fmt17(*r.magnetic_helicity);
  row += "," + fmt17(r.max_div_v) + "," + fmt17(r.max_div_B);
  return row;
}

void write_timeseries(std::ostream& out, std::span<const InvariantRecord> records, int dim) {
  out << timeseries_header(dim) << '\n';
  for (const auto& r : records) out << timeseries_row(r) << '\n';
}

void write_timeseries(const std::filesystem::path& path, std::span<const InvariantRecord> records, int dim) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_timeseries(out, records, dim);
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

void write_snapshot(std::ostream& out, const MhdState& s) {
  out.write("MHDC", 4);
  put_le<std::uint32_t>(out, kSnapshotVersion);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(s.grid().dim()));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(s.grid().n_points()));
  put_f64(out, s.t);
  put_field(out, s.v);
  put_field(out, s.B);
}

void write_snapshot(const std::filesystem::path& path, const MhdState& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_snapshot(out, s);
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

MhdState read_snapshot(std::istream& in) {
  char magic[4] = {};
  in.read(magic, 4);
  if (!in || std::string_view(magic, 4) != "MHDC") throw FormatError("snapshot: bad magic (expected MHDC)");
  const auto version = get_le<std::uint32_t>(in);
  if (version != kSnapshotVersion)
    throw FormatError("snapshot: unsupported version " + std::to_string(version) + " (expected " +
                      std::to_string(kSnapshotVersion) + ")");
  const auto dim = get_le<std::uint32_t>(in);
  const auto n = get_le<std::uint32_t>(in);
  const double t = get_f64(in);
  if (dim < 2 || dim > 3 || n < 8 || n > 4096) throw FormatError("snapshot: implausible grid header");
  const TorusGrid grid(static_cast<int>(dim), static_cast<int>(n));
  SpectralField v = get_field(in, grid);
  SpectralField B = get_field(in, grid);
  return MhdState(std::move(v), std::move(B), t);
}

MhdState read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return read_snapshot(in);
}

}  // namespace mhdstress
