#ifndef DFSMC_PARALLEL_HPP
#define DFSMC_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace dfsmc {

// Thread cap from DFSMC_THREADS (0 or unset = hardware concurrency).
int thread_budget();

// Runs fn(i) for i in [0,n). Work items must write only to their own output
// slots; results are then identical for any thread count.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace dfsmc

#endif
