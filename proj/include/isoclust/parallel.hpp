#ifndef ISOCLUST_PARALLEL_HPP
#define ISOCLUST_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace isoclust {

// Worker count used by parallel_for. 0 means "auto": the ISOCLUST_THREADS
// environment variable if set and nonzero, else hardware concurrency.
void set_thread_count(std::size_t n);
std::size_t thread_count();

// Runs body(i) for i in [0, n). Each index must write only its own outputs;
// results are then independent of the worker count. Nested calls from a
// worker run serially. grain is the minimum number of indices per worker.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t grain = 256);

}  // namespace isoclust

#endif  // ISOCLUST_PARALLEL_HPP
