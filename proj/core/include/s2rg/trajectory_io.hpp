#pragma once

#include <filesystem>
#include <vector>

#include "s2rg/types.hpp"

namespace s2rg {

// Trajectory container format, extension ".traj.jsonl": one JSON object
// per line. Line 1 is a header {"version":1,"state_dim":..,"action_dim":..,
// "meta":{..}}, then one {"s":[..],"a":[..],"r":..} line per step, and a
// final {"s_T":[..]} trailer. Floats are written as shortest decimal that
// round-trips bit-exactly.
inline constexpr int kTrajFormatVersion = 1;
inline constexpr const char* kTrajExtension = ".traj.jsonl";

void traj_save(const Trajectory& traj, const std::filesystem::path& path);
Trajectory traj_load(const std::filesystem::path& path);

// Loads every *.traj.jsonl under `dir` in lexicographic filename order.
std::vector<Trajectory> load_recording_dir(const std::filesystem::path& dir);

// Shortest decimal representation that parses back to the same double.
// Infinities become "inf"/"-inf" (used by CSV logs, not by trajectories,
// whose entries must be finite).
std::string format_double(double value);

}  // namespace s2rg
