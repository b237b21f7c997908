#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "kcenter/core/error.hpp"

namespace kcenter {

enum class ScheduleMode { Combinatorial, Omega2, Tradeoff, OmegaGeneral };

constexpr std::string_view to_string(ScheduleMode m) {
  switch (m) {
    case ScheduleMode::Combinatorial: return "combinatorial";
    case ScheduleMode::Omega2: return "omega2";
    case ScheduleMode::Tradeoff: return "tradeoff";
    case ScheduleMode::OmegaGeneral: return "omega_general";
  }
  return "unknown";
}

/// Sampling exponents delta_0..delta_{L-1} and exponents t_0..t_L with t_i = delta_i + t_{i+1}.
struct DeltaSchedule {
  std::vector<double> deltas;
  std::vector<double> t_values;
  ScheduleMode mode = ScheduleMode::Combinatorial;

  std::size_t levels() const noexcept { return deltas.size(); }
};

namespace detail {

/// Fills deltas[level] from the top level down; `next(i, t_prev)` gives delta_{k-i}.
/// `levels` = number of deltas, `k` = index base so that delta index = k - i.
template <typename Next>
DeltaSchedule build_schedule(std::size_t k, std::size_t levels, double t_base, ScheduleMode mode, Next&& next) {
  DeltaSchedule s;
  s.mode = mode;
  s.deltas.assign(levels, 0.0);
  s.t_values.assign(levels + 1, 0.0);
  s.t_values[levels] = t_base;
  // level j = k - i  <=>  i = k - j
  for (std::size_t j = levels; j-- > 0;) {
    const std::size_t i = k - j;
    s.deltas[j] = next(i, s.t_values[j + 1]);
    s.t_values[j] = s.deltas[j] + s.t_values[j + 1];
  }
  return s;
}

}  // namespace detail

/// All levels at 1/2: the shared-sample schedule of the combinatorial algorithm.
inline DeltaSchedule plan_deltas_combinatorial(std::size_t k) {
  require(k >= 1, ErrorCode::InvalidArgument, "k must be >= 1");
  return detail::build_schedule(k, k, 1.0, ScheduleMode::Combinatorial, [](std::size_t, double) { return 0.5; });
}

inline DeltaSchedule plan_deltas_omega2(std::size_t k) {
  require(k >= 1, ErrorCode::InvalidArgument, "k must be >= 1");
  return detail::build_schedule(k, k, 1.0, ScheduleMode::Omega2, [](std::size_t i, double t_prev) {
    if (i <= 2) return 1.0 / 3.0;
    if (i == 3) return 4.0 / 9.0;
    return (static_cast<double>(i) - t_prev) / static_cast<double>(i + 1);
  });
}

inline DeltaSchedule plan_deltas_omega_general(std::size_t k, double omega) {
  require(k >= 1, ErrorCode::InvalidArgument, "k must be >= 1");
  require(omega >= 2.0 && omega <= 3.0, ErrorCode::InvalidArgument, "omega must lie in [2,3]");
  const double w = omega;
  return detail::build_schedule(k, k, 1.0, ScheduleMode::OmegaGeneral, [w](std::size_t i, double t_prev) {
    const double di = static_cast<double>(i);
    if (i == 1) return (2 * w - 3) / (3 * w - 3);
    if (i == 2) return (w * w - 3 * w + 3) / (3 * w - 3);
    if (i == 3) return 2 * w / (3 * w + 3);
    if (i <= 13) return (di - t_prev + (w - 2)) / (di + 1);
    return (di - t_prev) / (di + 1);
  });
}

/// l levels with t_l = k - l + 1 and delta_{k-i} = (i - t_{k-i+1} + 1) / (i + 1).
inline DeltaSchedule plan_deltas_tradeoff(std::size_t k, std::size_t l) {
  require(l >= 1 && l <= k, ErrorCode::InvalidArgument, "tradeoff schedule needs 1 <= l <= k");
  return detail::build_schedule(k, l, static_cast<double>(k - l + 1), ScheduleMode::Tradeoff,
                                [](std::size_t i, double t_prev) {
                                  return (static_cast<double>(i) - t_prev + 1.0) / static_cast<double>(i + 1);
                                });
}

}  // namespace kcenter
