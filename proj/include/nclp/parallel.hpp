#pragma once

namespace nclp {

/// Thread count for a parallel region: `requested` if positive, otherwise the
/// OpenMP default. NCLP_THREADS, when set to a positive integer, caps the result.
int resolve_threads(int requested = 0);

}  // namespace nclp
