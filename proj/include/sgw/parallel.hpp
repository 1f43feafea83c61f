#pragma once

namespace sgw {

/// Worker threads for data-parallel kernels: hardware concurrency, capped by SGW_THREADS.
int thread_count();

}  // namespace sgw
