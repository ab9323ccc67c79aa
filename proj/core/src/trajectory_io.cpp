#include "s2rg/trajectory_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "s2rg/errors.hpp"

namespace s2rg {

using nlohmann::json;

std::string check_trajectory(const Trajectory& traj) {
  if (traj.steps.empty()) return "trajectory must contain at least one step";
  size_t sd = traj.steps.front().state.size();
  size_t ad = traj.steps.front().action.size();
  if (sd == 0) return "state_dim must be >= 1";
  if (ad == 0) return "action_dim must be >= 1";
  if (traj.terminal_state.size() != sd) return "terminal_state dimension mismatch";
  auto all_finite = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(),
                       [](double x) { return std::isfinite(x); });
  };
  for (size_t t = 0; t < traj.steps.size(); ++t) {
    const Step& s = traj.steps[t];
    if (s.state.size() != sd || s.action.size() != ad)
      return "step " + std::to_string(t) + " dimension mismatch";
    if (!all_finite(s.state) || !all_finite(s.action) || !std::isfinite(s.reward))
      return "step " + std::to_string(t) + " contains non-finite values";
  }
  if (!all_finite(traj.terminal_state)) return "terminal_state contains non-finite values";
  return {};
}

std::string format_double(double value) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

void append_vector(std::string& out, const std::vector<double>& v) {
  out += '[';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_double(v[i]);
  }
  out += ']';
}

json parse_line(const std::string& line, const std::filesystem::path& path,
                size_t lineno) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw ArtifactError(ArtifactError::Kind::schema_violation,
                        path.string() + ":" + std::to_string(lineno) +
                            ": not a JSON object");
  }
  return j;
}

std::vector<double> read_vector(const json& j, const char* key, size_t dim,
                                const std::filesystem::path& path, size_t lineno) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_array()) {
    throw ArtifactError(ArtifactError::Kind::schema_violation,
                        path.string() + ":" + std::to_string(lineno) +
                            ": missing array \"" + key + "\"");
  }
  std::vector<double> v;
  v.reserve(it->size());
  for (const auto& x : *it) {
    if (!x.is_number()) {
      throw ArtifactError(ArtifactError::Kind::schema_violation,
                          path.string() + ":" + std::to_string(lineno) +
                              ": non-numeric entry in \"" + key + "\"");
    }
    v.push_back(x.get<double>());
  }
  if (v.size() != dim) {
    throw ArtifactError(ArtifactError::Kind::schema_violation,
                        path.string() + ":" + std::to_string(lineno) +
                            ": \"" + key + "\" has length " +
                            std::to_string(v.size()) + ", expected " +
                            std::to_string(dim));
  }
  return v;
}

}  // namespace

void traj_save(const Trajectory& traj, const std::filesystem::path& path) {
  if (std::string err = check_trajectory(traj); !err.empty()) {
    throw ArtifactError(ArtifactError::Kind::schema_violation,
                        "refusing to save invalid trajectory: " + err);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());

  json header = {{"version", kTrajFormatVersion},
                 {"state_dim", traj.state_dim()},
                 {"action_dim", traj.action_dim()},
                 {"meta", traj.meta}};
  out << header.dump() << '\n';

  std::string line;
  for (const Step& s : traj.steps) {
    line.clear();
    line += "{\"s\":";
    append_vector(line, s.state);
    line += ",\"a\":";
    append_vector(line, s.action);
    line += ",\"r\":";
    line += format_double(s.reward);
    line += '}';
    out << line << '\n';
  }
  line.clear();
  line += "{\"s_T\":";
  append_vector(line, traj.terminal_state);
  line += '}';
  out << line << '\n';
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

Trajectory traj_load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path.string());

  std::string line;
  size_t lineno = 0;
  if (!std::getline(in, line)) {
    throw ArtifactError(ArtifactError::Kind::schema_violation,
                        path.string() + ": empty file");
  }
  ++lineno;
  json header = parse_line(line, path, lineno);
  if (!header.contains("version") || !header["version"].is_number_integer()) {
    throw ArtifactError(ArtifactError::Kind::schema_violation,
                        path.string() + ": header missing integer \"version\"");
  }
  int version = header["version"].get<int>();
  if (version != kTrajFormatVersion) {
    throw ArtifactError(ArtifactError::Kind::version_mismatch,
                        path.string() + ": unsupported format version " +
                            std::to_string(version));
  }
  if (!header.contains("state_dim") || !header.contains("action_dim")) {
    throw ArtifactError(ArtifactError::Kind::schema_violation,
                        path.string() + ": header missing dims");
  }
  size_t sd = header["state_dim"].get<size_t>();
  size_t ad = header["action_dim"].get<size_t>();

  Trajectory traj;
  if (header.contains("meta")) {
    for (auto& [k, v] : header["meta"].items()) {
      if (!v.is_string()) {
        throw ArtifactError(ArtifactError::Kind::schema_violation,
                            path.string() + ": meta values must be strings");
      }
      traj.meta[k] = v.get<std::string>();
    }
  }

  bool saw_trailer = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j = parse_line(line, path, lineno);
    if (j.contains("s_T")) {
      traj.terminal_state = read_vector(j, "s_T", sd, path, lineno);
      saw_trailer = true;
      break;
    }
    Step step;
    step.state = read_vector(j, "s", sd, path, lineno);
    step.action = read_vector(j, "a", ad, path, lineno);
    auto r = j.find("r");
    if (r == j.end() || !r->is_number()) {
      throw ArtifactError(ArtifactError::Kind::schema_violation,
                          path.string() + ":" + std::to_string(lineno) +
                              ": missing numeric \"r\"");
    }
    step.reward = r->get<double>();
    traj.steps.push_back(std::move(step));
  }
  if (!saw_trailer) {
    throw ArtifactError(ArtifactError::Kind::schema_violation,
                        path.string() + ": truncated file (no s_T trailer)");
  }
  if (std::string err = check_trajectory(traj); !err.empty()) {
    throw ArtifactError(ArtifactError::Kind::schema_violation,
                        path.string() + ": " + err);
  }
  return traj;
}

std::vector<Trajectory> load_recording_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw IoError("not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && name.ends_with(kTrajExtension)) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<Trajectory> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(traj_load(f));
  return out;
}

}  // namespace s2rg
