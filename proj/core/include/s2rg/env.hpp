#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "s2rg/rng.hpp"
#include "s2rg/types.hpp"

namespace s2rg {

// Named physical parameters, already clamped to validity. BlockRotate2D
// uses {inertia, damping, torque_scale, friction, gravity_bias}; the
// linear system uses matrix entries named a<i>_<j> / b<i>_<j>.
using ParamMap = std::map<std::string, double>;

// Wraps an angle into (-pi, pi].
double wrap_angle(double theta);

enum class TerminationKind { max_successes, drop, timeout };

const char* termination_name(TerminationKind kind);

inline constexpr int kMaxSuccesses = 50;

struct EpisodeOutcome {
  int successes = 0;
  TerminationKind terminated_by = TerminationKind::timeout;
};

struct StepOutcome {
  double reward = 0.0;
  bool success_event = false;
  bool dropped = false;
};

// Episode-scoped environment: holds the current state, advances one step
// at a time. Copies are independent; run one instance per episode.
class EnvInterface {
 public:
  virtual ~EnvInterface() = default;

  virtual int state_dim() const = 0;
  virtual int action_dim() const = 0;
  // Marks state dimensions that live on the circle (-pi, pi]; their
  // next-state deltas are wrapped differences.
  virtual std::vector<bool> angular_dims() const = 0;
  virtual const std::string& name() const = 0;

  virtual std::vector<double> reset(RngStream& rng) = 0;
  virtual StepOutcome step(std::span<const double> action, RngStream& rng) = 0;
  virtual const std::vector<double>& state() const = 0;
};

// 1-DoF torque-controlled block rotation toward resampled goal angles.
// State [theta, omega, theta_goal]; action is a 1-vector in [-1, 1].
// Semi-implicit Euler at dt = 0.05 s. Success when the wrapped distance
// to the goal drops below 0.1 rad; the episode-terminating failure is an
// angular-velocity blowup past 20 rad/s.
class BlockRotate2D final : public EnvInterface {
 public:
  static constexpr double kDt = 0.05;
  static constexpr double kSuccessTolerance = 0.1;
  static constexpr double kDropSpeed = 20.0;
  static constexpr double kSuccessBonus = 5.0;

  struct Params {
    double inertia = 0.0;
    double damping = 0.0;
    double torque_scale = 0.0;
    double friction = 0.0;
    double gravity_bias = 0.0;
  };

  explicit BlockRotate2D(const Params& params);

  int state_dim() const override { return 3; }
  int action_dim() const override { return 1; }
  std::vector<bool> angular_dims() const override {
    return {true, false, true};
  }
  const std::string& name() const override;

  std::vector<double> reset(RngStream& rng) override;
  StepOutcome step(std::span<const double> action, RngStream& rng) override;
  const std::vector<double>& state() const override { return state_; }

  // Applies torque with the OU wind torque added; used by the
  // custom-physics wrapper.
  StepOutcome step_with_extra_torque(std::span<const double> action,
                                     double extra_torque, RngStream& rng);

 private:
  Params params_;
  std::vector<double> state_;  // [theta, omega, theta_goal]
};

// Discrete-time linear dynamics s' = A s + B a with reward -|s'|^2.
// No success events; episodes end only at the horizon. Exists to make
// dynamics-model learning analytically checkable.
class LinearSystem final : public EnvInterface {
 public:
  LinearSystem(int state_dim, int action_dim, std::vector<double> a_rowmajor,
               std::vector<double> b_rowmajor);

  int state_dim() const override { return state_dim_; }
  int action_dim() const override { return action_dim_; }
  std::vector<bool> angular_dims() const override {
    return std::vector<bool>(state_dim_, false);
  }
  const std::string& name() const override;

  std::vector<double> reset(RngStream& rng) override;
  StepOutcome step(std::span<const double> action, RngStream& rng) override;
  const std::vector<double>& state() const override { return state_; }

  // Wind enters as an additive bias on every state dimension.
  StepOutcome step_with_state_bias(std::span<const double> action, double bias,
                                   RngStream& rng);

 private:
  int state_dim_;
  int action_dim_;
  std::vector<double> a_;  // state_dim x state_dim, row-major
  std::vector<double> b_;  // state_dim x action_dim, row-major
  std::vector<double> state_;
};

using PolicyFn =
    std::function<std::vector<double>(std::span<const double> state)>;

// Runs one episode: reset, then step with the policy until 50 successes,
// a drop, or the horizon. Returns the recorded trajectory (states as
// visited, actions as issued by the policy, per-step rewards) and the
// episode outcome.
std::pair<Trajectory, EpisodeOutcome> run_episode(EnvInterface& env,
                                                  const PolicyFn& policy,
                                                  int horizon, RngStream& rng);

// Hand-tuned PD controller for BlockRotate2D, used as the behavioral
// recording policy and as a performance reference in tests.
std::vector<double> pd_oracle_act(std::span<const double> state);

// Stabilizing linear feedback a_j = -k s_j for the linear system (clipped
// by the env); behavioral recorder for linear_system runs.
std::vector<double> linear_feedback_act(std::span<const double> state,
                                        int action_dim);

// Builds the behavioral policy for an environment family by name
// ("pd" for block_rotate2d, linear feedback otherwise).
PolicyFn make_behavioral_policy(const std::string& env_name, int action_dim);

}  // namespace s2rg
