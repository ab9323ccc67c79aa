#include "s2rg/env.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "s2rg/errors.hpp"

namespace s2rg {

namespace {

constexpr double kPi = std::numbers::pi;

double clip(double x, double lo, double hi) {
  return std::min(std::max(x, lo), hi);
}

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

void check_action(std::span<const double> action, int expected_dim) {
  if (static_cast<int>(action.size()) != expected_dim) {
    throw ArtifactError(ArtifactError::Kind::dimension_mismatch,
                        "action dimension " + std::to_string(action.size()) +
                            ", expected " + std::to_string(expected_dim));
  }
  for (double a : action) {
    if (!std::isfinite(a)) throw NumericalError("non-finite action");
  }
}

}  // namespace

double wrap_angle(double theta) {
  double w = std::remainder(theta, 2.0 * kPi);  // [-pi, pi]
  if (w <= -kPi) w = kPi;                       // map -pi to +pi
  return w;
}

const char* termination_name(TerminationKind kind) {
  switch (kind) {
    case TerminationKind::max_successes: return "max_successes";
    case TerminationKind::drop: return "drop";
    case TerminationKind::timeout: return "timeout";
  }
  return "unknown";
}

BlockRotate2D::BlockRotate2D(const Params& params) : params_(params) {
  if (!(params.inertia > 0.0) || !(params.torque_scale > 0.0) ||
      params.damping < 0.0 || params.friction < 0.0 ||
      !std::isfinite(params.gravity_bias)) {
    throw ConfigError("invalid BlockRotate2D parameters");
  }
  state_ = {0.0, 0.0, 0.0};
}

const std::string& BlockRotate2D::name() const {
  static const std::string n = "block_rotate2d";
  return n;
}

std::vector<double> BlockRotate2D::reset(RngStream& rng) {
  state_[0] = rng.uniform_angle();
  state_[1] = 0.0;
  state_[2] = rng.uniform_angle();
  return state_;
}

StepOutcome BlockRotate2D::step(std::span<const double> action,
                                RngStream& rng) {
  return step_with_extra_torque(action, 0.0, rng);
}

StepOutcome BlockRotate2D::step_with_extra_torque(
    std::span<const double> action, double extra_torque, RngStream& rng) {
  check_action(action, 1);
  double a = clip(action[0], -1.0, 1.0);
  double theta = state_[0];
  double omega = state_[1];
  double goal = state_[2];

  double torque = params_.torque_scale * a - params_.damping * omega -
                  params_.friction * sign(omega) - params_.gravity_bias +
                  extra_torque;
  double omega_next = omega + kDt * torque / params_.inertia;
  double theta_next = wrap_angle(theta + kDt * omega_next);

  double goal_err = wrap_angle(theta_next - goal);
  bool success = std::abs(goal_err) < kSuccessTolerance;

  StepOutcome out;
  out.reward = -std::abs(goal_err) + (success ? kSuccessBonus : 0.0);
  out.success_event = success;
  out.dropped = std::abs(omega_next) > kDropSpeed;

  state_[0] = theta_next;
  state_[1] = omega_next;
  if (success) state_[2] = rng.uniform_angle();
  return out;
}

LinearSystem::LinearSystem(int state_dim, int action_dim,
                           std::vector<double> a_rowmajor,
                           std::vector<double> b_rowmajor)
    : state_dim_(state_dim),
      action_dim_(action_dim),
      a_(std::move(a_rowmajor)),
      b_(std::move(b_rowmajor)) {
  if (state_dim_ < 1 || action_dim_ < 1 ||
      a_.size() != static_cast<size_t>(state_dim_ * state_dim_) ||
      b_.size() != static_cast<size_t>(state_dim_ * action_dim_)) {
    throw ConfigError("invalid LinearSystem dimensions");
  }
  for (double x : a_)
    if (!std::isfinite(x)) throw ConfigError("non-finite A entry");
  for (double x : b_)
    if (!std::isfinite(x)) throw ConfigError("non-finite B entry");
  state_.assign(state_dim_, 0.0);
}

const std::string& LinearSystem::name() const {
  static const std::string n = "linear_system";
  return n;
}

std::vector<double> LinearSystem::reset(RngStream& rng) {
  for (double& x : state_) x = rng.uniform(-1.0, 1.0);
  return state_;
}

StepOutcome LinearSystem::step(std::span<const double> action,
                               RngStream& rng) {
  return step_with_state_bias(action, 0.0, rng);
}

StepOutcome LinearSystem::step_with_state_bias(std::span<const double> action,
                                               double bias, RngStream&) {
  check_action(action, action_dim_);
  std::vector<double> next(state_dim_, 0.0);
  for (int i = 0; i < state_dim_; ++i) {
    double acc = bias;
    for (int j = 0; j < state_dim_; ++j) acc += a_[i * state_dim_ + j] * state_[j];
    for (int j = 0; j < action_dim_; ++j)
      acc += b_[i * action_dim_ + j] * clip(action[j], -1.0, 1.0);
    next[i] = acc;
  }
  double norm2 = 0.0;
  for (double x : next) norm2 += x * x;
  state_ = std::move(next);
  StepOutcome out;
  out.reward = -norm2;
  return out;
}

std::pair<Trajectory, EpisodeOutcome> run_episode(EnvInterface& env,
                                                  const PolicyFn& policy,
                                                  int horizon, RngStream& rng) {
  Trajectory traj;
  EpisodeOutcome outcome;
  env.reset(rng);
  for (int t = 0; t < horizon; ++t) {
    Step step;
    step.state = env.state();
    step.action = policy(step.state);
    if (static_cast<int>(step.action.size()) != env.action_dim()) {
      throw ArtifactError(
          ArtifactError::Kind::dimension_mismatch,
          "policy produced action of dimension " +
              std::to_string(step.action.size()) + ", env expects " +
              std::to_string(env.action_dim()));
    }
    StepOutcome out = env.step(step.action, rng);
    step.reward = out.reward;
    traj.steps.push_back(std::move(step));
    if (out.success_event) ++outcome.successes;
    if (outcome.successes >= kMaxSuccesses) {
      outcome.terminated_by = TerminationKind::max_successes;
      break;
    }
    if (out.dropped) {
      outcome.terminated_by = TerminationKind::drop;
      break;
    }
  }
  traj.terminal_state = env.state();
  traj.meta["env"] = env.name();
  return {std::move(traj), outcome};
}

std::vector<double> pd_oracle_act(std::span<const double> state) {
  // Gains frozen after hand tuning against the calibration dynamics.
  constexpr double kP = 1.6;
  constexpr double kD = 0.45;
  double err = wrap_angle(state[2] - state[0]);
  double a = kP * err - kD * state[1];
  return {clip(a, -1.0, 1.0)};
}

std::vector<double> linear_feedback_act(std::span<const double> state,
                                        int action_dim) {
  std::vector<double> a(action_dim, 0.0);
  for (int j = 0; j < action_dim; ++j) {
    double s = j < static_cast<int>(state.size()) ? state[j] : 0.0;
    a[j] = clip(-0.5 * s, -1.0, 1.0);
  }
  return a;
}

PolicyFn make_behavioral_policy(const std::string& env_name, int action_dim) {
  if (env_name == "block_rotate2d") {
    return [](std::span<const double> s) { return pd_oracle_act(s); };
  }
  return [action_dim](std::span<const double> s) {
    return linear_feedback_act(s, action_dim);
  };
}

}  // namespace s2rg
