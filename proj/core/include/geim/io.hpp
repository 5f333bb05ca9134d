#pragma once
#include <filesystem>
#include <string>

#include "geim/eim.hpp"
#include "geim/geim.hpp"
#include "geim/pde.hpp"
#include "geim/sensors.hpp"

namespace geim {

/// All numeric output is printed with 17 significant digits so that doubles
/// round-trip exactly and reruns are byte-identical.
std::string fmt_double(double v);

void write_field_csv(const std::filesystem::path& path, const Field& f);
Field read_field_csv(const std::filesystem::path& path);

/// Dictionary manifest: id, kind, center, radius.
void write_dictionary_manifest(const std::filesystem::path& path, const Dictionary& d);

/// Versioned text bundles; loading reproduces interpolants bit-for-bit.
void save_geim_model(const std::filesystem::path& path, const GeimModel& m);
GeimModel load_geim_model(const std::filesystem::path& path);
void save_eim_model(const std::filesystem::path& path, const EimModel& m);
EimModel load_eim_model(const std::filesystem::path& path);

/// Snapshot directory: manifest.csv (index, alpha, beta, gamma, file) plus
/// one field file per snapshot.
void save_snapshots(const std::filesystem::path& dir, const SnapshotSet& set);
SnapshotSet load_snapshots(const std::filesystem::path& dir);

}  // namespace geim
