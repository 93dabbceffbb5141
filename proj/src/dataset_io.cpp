#include "iocl/dataset_io.hpp"

#include <fstream>
#include <sstream>

namespace iocl::io {

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ConfigError(field + ": expected a nested array (rows of numbers)");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols) {
      throw ConfigError(field + ": ragged rows in matrix");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (!j[i][c].is_number()) throw ConfigError(field + ": non-numeric entry");
      m(i, c) = j[i][c].get<double>();
    }
  }
  check_finite(m, field);
  return m;
}

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

Vector vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError(field + ": expected an array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!j[i].is_number()) throw ConfigError(field + ": non-numeric entry");
    v(i) = j[i].get<double>();
  }
  check_finite(v, field);
  return v;
}

std::filesystem::path meta_path_for(const std::filesystem::path& dataset_path) {
  std::filesystem::path p = dataset_path;
  p.replace_extension(".meta.json");
  return p;
}

namespace {

json seq_to_json(const std::vector<Vector>& seq) {
  json arr = json::array();
  for (const auto& v : seq) arr.push_back(vector_to_json(v));
  return arr;
}

std::vector<Vector> seq_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError(field + ": expected an array of vectors");
  std::vector<Vector> seq;
  seq.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    seq.push_back(vector_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return seq;
}

}  // namespace

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_dataset(const sim::TrajectoryDataset& ds, const std::filesystem::path& dataset_path) {
  json meta{{"schema_version", ds.meta.schema_version},
            {"model", sim::to_string(ds.meta.model)},
            {"T", ds.meta.T},
            {"N", ds.meta.N},
            {"dims", {{"n", ds.meta.n}, {"m", ds.meta.m}, {"d", ds.meta.d}}},
            {"seed", ds.meta.seed},
            {"has_latents", ds.meta.has_latents},
            {"finite_horizon", ds.meta.finite_horizon}};
  write_text_atomic(meta_path_for(dataset_path), meta.dump(2) + "\n");

  std::ostringstream lines;
  for (const auto& traj : ds.trajectories) {
    json rec{{"y", seq_to_json(traj.y)}};
    if (traj.x.has_value()) rec["x"] = seq_to_json(*traj.x);
    if (traj.u.has_value()) rec["u"] = seq_to_json(*traj.u);
    lines << rec.dump() << "\n";
  }
  write_text_atomic(dataset_path, lines.str());
}

sim::TrajectoryDataset read_dataset(const std::filesystem::path& dataset_path) {
  const json meta = json::parse(read_text(meta_path_for(dataset_path)));
  sim::TrajectoryDataset ds;
  ds.meta.schema_version = meta.at("schema_version").get<std::string>();
  if (ds.meta.schema_version != "iocl-v1") {
    throw ConfigError("dataset meta: unsupported schema_version " + ds.meta.schema_version);
  }
  const std::string model = meta.at("model").get<std::string>();
  if (model != "a" && model != "b") throw ConfigError("dataset meta: model must be 'a' or 'b'");
  ds.meta.model = model == "a" ? sim::ObsModel::a : sim::ObsModel::b;
  ds.meta.T = meta.at("T").get<long>();
  ds.meta.N = meta.at("N").get<long>();
  ds.meta.n = meta.at("dims").at("n").get<long>();
  ds.meta.m = meta.at("dims").at("m").get<long>();
  ds.meta.d = meta.at("dims").at("d").get<long>();
  ds.meta.seed = meta.at("seed").get<std::uint64_t>();
  ds.meta.has_latents = meta.at("has_latents").get<bool>();
  ds.meta.finite_horizon = meta.value("finite_horizon", false);

  std::ifstream in(dataset_path);
  if (!in) throw std::runtime_error("cannot open dataset: " + dataset_path.string());
  std::string line;
  long index = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json rec = json::parse(line);
    sim::Trajectory traj;
    const std::string where = "trajectory " + std::to_string(index);
    traj.y = seq_from_json(rec.at("y"), where + ".y");
    if (static_cast<long>(traj.y.size()) != ds.meta.T + 1) {
      throw ConfigError(where + ": y length inconsistent with meta T");
    }
    if (rec.contains("x")) {
      traj.x = seq_from_json(rec["x"], where + ".x");
      if (static_cast<long>(traj.x->size()) != ds.meta.T + 1) {
        throw ConfigError(where + ": x length inconsistent with meta T");
      }
    }
    if (rec.contains("u")) {
      traj.u = seq_from_json(rec["u"], where + ".u");
      if (static_cast<long>(traj.u->size()) != ds.meta.T) {
        throw ConfigError(where + ": u length inconsistent with meta T");
      }
    }
    ds.trajectories.push_back(std::move(traj));
    ++index;
  }
  if (static_cast<long>(ds.trajectories.size()) != ds.meta.N) {
    throw ConfigError("dataset: trajectory count inconsistent with meta N");
  }
  return ds;
}

}  // namespace iocl::io
