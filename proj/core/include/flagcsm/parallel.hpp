#pragma once

#include <cstddef>
#include <functional>

namespace flagcsm {

// Worker count for library loops. Defaults to FLAGCSM_THREADS if set, else 1.
void set_thread_count(int n);
int thread_count();

// Runs body(i) for i in [0, count); rethrows the first exception.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace flagcsm
