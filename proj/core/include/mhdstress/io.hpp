#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "mhdstress/diagnostics.hpp"
#include "mhdstress/dynamics.hpp"

namespace mhdstress {

/// `t,energy,cross_helicity,momentum_1..momentum_dim,magnetic_helicity,max_div_v,max_div_B`
std::string timeseries_header(int dim);

/// One CSV row with 17 significant digits; magnetic_helicity is left empty
/// when absent.
std::string timeseries_row(const InvariantRecord& r);

void write_timeseries(std::ostream& out, std::span<const InvariantRecord> records, int dim);
void write_timeseries(const std::filesystem::path& path, std::span<const InvariantRecord> records, int dim);

/// Binary snapshot, little-endian:
///   "MHDC", u32 version (= 1), u32 dim, u32 n_points, f64 t,
///   then v and B, component-major, each n^dim complex coefficients as
///   (re, im) f64 pairs in storage order (axis 1 fastest, FFT index order).
inline constexpr std::uint32_t kSnapshotVersion = 1;

void write_snapshot(std::ostream& out, const MhdState& s);
void write_snapshot(const std::filesystem::path& path, const MhdState& s);

/// Throws FormatError on bad magic, unsupported version, or truncation.
MhdState read_snapshot(std::istream& in);
MhdState read_snapshot(const std::filesystem::path& path);

}  // namespace mhdstress
