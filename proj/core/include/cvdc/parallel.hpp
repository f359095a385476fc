// Copyright 2026 The cvdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace cvdc {

/// Worker count for scans: `requested` if positive, otherwise the hardware
/// concurrency, capped by the CVDC_THREADS environment variable when set.
int resolve_threads(int requested = 0);

/// Calls body(i) for i in [0, n) on up to `threads` workers. Indices are
/// split into contiguous blocks, so callers writing into slot i of a
/// pre-sized container get output independent of the thread count. The
/// first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace cvdc
