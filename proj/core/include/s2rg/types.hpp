#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace s2rg {

// Task-level description of an environment family.
struct MdpSpec {
  int state_dim = 0;
  int action_dim = 0;
  double gamma = 1.0;
  int horizon = 1;  // max steps per episode

  bool valid() const {
    return state_dim >= 1 && action_dim >= 1 && gamma >= 0.0 && gamma <= 1.0 &&
           horizon >= 1;
  }
};

// One transition record: state s_t, action a_t, reward r_t.
struct Step {
  std::vector<double> state;
  std::vector<double> action;
  double reward = 0.0;

  bool operator==(const Step&) const = default;
};

// Episode record (s_0, a_0, r_0, ..., s_T). `steps` holds t = 0..T-1,
// `terminal_state` holds s_T. Meta carries string tags such as env id,
// seed, and policy id.
struct Trajectory {
  std::vector<Step> steps;
  std::vector<double> terminal_state;
  std::map<std::string, std::string> meta;

  int length() const { return static_cast<int>(steps.size()); }
  int state_dim() const {
    return steps.empty() ? static_cast<int>(terminal_state.size())
                         : static_cast<int>(steps.front().state.size());
  }
  int action_dim() const {
    return steps.empty() ? 0 : static_cast<int>(steps.front().action.size());
  }

  bool operator==(const Trajectory&) const = default;
};

// Validates the structural invariants (length >= 1, consistent dims,
// finite entries). Returns an error description, empty when valid.
std::string check_trajectory(const Trajectory& traj);

}  // namespace s2rg
