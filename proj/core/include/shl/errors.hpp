#pragma once

#include <stdexcept>
#include <string>

namespace shl {

/// Evaluation landed within the exclusion radius of a square-root branch
/// point x±1. Callers re-sample; under the Poisson driver this is a
/// probability-zero event.
struct BranchPointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature could not meet its error target within the panel
/// budget.
struct QuadratureNonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A windowed drift integral was requested below its validity floor
/// n >= max(4, 2|Re z|).
struct WindowTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Expected event count exceeds the configured memory budget.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Injection time collides with an existing arrival time.
struct DuplicateTimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A tracer's real excursion left the region where the finite event window
/// dominates the drift tail; rerun the realization with a larger window.
struct WindowExceeded : std::runtime_error {
  WindowExceeded(double at_time, double re, double window, double suggested)
      : std::runtime_error("tracer |Re| = " + std::to_string(re) +
                           " exceeded window/2 = " + std::to_string(window / 2) +
                           " at t = " + std::to_string(at_time) +
                           "; rerun with window >= " + std::to_string(suggested)),
        time(at_time),
        real_part(re),
        window(window),
        suggested_window(suggested) {}
  double time;
  double real_part;
  double window;
  double suggested_window;
};

/// extract_particle was asked for an injection the log does not carry.
struct MissingInjection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// No forward-image point landed in the requested height band although the
/// tree crosses it; the source grid needs refinement.
struct GridTooCoarse : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace shl
