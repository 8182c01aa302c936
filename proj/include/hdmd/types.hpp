#pragma once

#include <Eigen/Dense>

namespace hdmd {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Execution mode for the data-parallel kernels. Serial is the reference
/// implementation; Parallel dispatches to the OpenMP variants (falling back
/// to serial below a per-kernel size threshold). Both produce bitwise
/// identical results.
enum class ExecMode { Serial, Parallel };

ExecMode exec_mode();
void set_exec_mode(ExecMode mode);

} // namespace hdmd
