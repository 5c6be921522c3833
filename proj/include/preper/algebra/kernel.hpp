#pragma once

namespace preper {

/// Selects the plain loop or the OpenMP loop for kernels that have both.
enum class Kernel { serial, openmp };

}  // namespace preper
