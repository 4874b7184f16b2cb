// Copyright 2026 The Qentro Authors
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

#ifndef QENTRO_PARALLEL_H
#define QENTRO_PARALLEL_H

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace qentro {

inline unsigned worker_count(size_t units) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<size_t>(hw, std::max<size_t>(units, 1)));
}

/// Counts indices in [0, n) for which `pred(index)` holds. Work is split into
/// contiguous chunks; the sum does not depend on the number of workers.
template <typename Pred>
uint64_t parallel_count(size_t n, Pred pred) {
    unsigned workers = worker_count(n / 1024 + 1);
    if (workers <= 1) {
        uint64_t total = 0;
        for (size_t i = 0; i < n; i++) {
            total += pred(i) ? 1 : 0;
        }
        return total;
    }
    std::vector<uint64_t> partial(workers, 0);
    std::vector<std::thread> threads;
    size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; w++) {
        threads.emplace_back([&, w] {
            size_t begin = w * chunk;
            size_t end = std::min(n, begin + chunk);
            uint64_t local = 0;
            for (size_t i = begin; i < end; i++) {
                local += pred(i) ? 1 : 0;
            }
            partial[w] = local;
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    uint64_t total = 0;
    for (auto v : partial) {
        total += v;
    }
    return total;
}

/// Evaluates `fn(index)` for every index in [0, n); result slot i holds fn(i).
template <typename T, typename Fn>
std::vector<T> parallel_map(size_t n, Fn fn) {
    std::vector<T> out(n);
    unsigned workers = worker_count(n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; i++) {
            out[i] = fn(i);
        }
        return out;
    }
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; w++) {
        threads.emplace_back([&, w] {
            for (size_t i = w; i < n; i += workers) {
                out[i] = fn(i);
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    return out;
}

}  // namespace qentro

#endif
