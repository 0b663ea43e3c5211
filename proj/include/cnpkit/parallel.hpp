#pragma once

#include <cstddef>
#include <functional>

namespace cnpkit {

enum class Execution { serial, parallel };

/// Runs body(k) for k in [0, n). The parallel path distributes indices over
/// OpenMP threads; the serial path is the reference it is tested against.
/// Bodies must write only to their own slot. The exception thrown for the
/// lowest index, if any, is rethrown after the loop.
void for_each_index(std::size_t n, Execution exec, const std::function<void(std::size_t)>& body);

/// Number of threads the parallel path will use.
int worker_threads();

}  // namespace cnpkit
