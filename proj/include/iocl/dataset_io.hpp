#ifndef IOCL_DATASET_IO_HPP
#define IOCL_DATASET_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "iocl/matrix.hpp"
#include "iocl/sim.hpp"

namespace iocl::io {

using json = nlohmann::json;

/// Matrices serialize as row-major nested arrays; vectors as flat arrays.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const std::string& field);
json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j, const std::string& field);

/// Dataset layout: one JSON-lines file (one trajectory record per line) plus
/// a sidecar meta header at <stem>.meta.json next to it.
std::filesystem::path meta_path_for(const std::filesystem::path& dataset_path);

void write_dataset(const sim::TrajectoryDataset& ds, const std::filesystem::path& dataset_path);
sim::TrajectoryDataset read_dataset(const std::filesystem::path& dataset_path);

/// Writes text via a temporary file and rename, so readers never observe a
/// partially written artifact.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

std::string read_text(const std::filesystem::path& path);

}  // namespace iocl::io

#endif  // IOCL_DATASET_IO_HPP
