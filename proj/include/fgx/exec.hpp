#pragma once

namespace fgx {

// Selects the OpenMP kernels or the single-threaded path. Both produce
// bit-identical results; every output element is computed independently
// with the same arithmetic order.
enum class Exec { serial, parallel };

int max_threads() noexcept;

}  // namespace fgx
