#pragma once

#include <functional>

namespace lqa {

/// Run body(0..count-1) on up to `jobs` threads. Each index runs exactly once;
/// the first exception thrown by any body is rethrown after all threads join.
void parallel_for(int count, int jobs, const std::function<void(int)>& body);

} // namespace lqa
