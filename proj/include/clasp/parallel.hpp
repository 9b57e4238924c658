#pragma once

#include <cstddef>
#include <functional>

namespace clasp {

/// worker count: CLASP_THREADS when set, hardware concurrency otherwise
unsigned worker_count();

/// run fn(0..n-1) across workers; rethrows the first exception
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace clasp
