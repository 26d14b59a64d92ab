#pragma once

#include <functional>

namespace plancalc {

// Worker count: PLANCALC_THREADS if set and positive, else hardware concurrency.
int thread_count();
// Runs fn(i) for i in [0, n). Results must be written to disjoint slots;
// the first exception thrown by any task is rethrown after all workers stop.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace plancalc
