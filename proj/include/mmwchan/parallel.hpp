// SPDX-License-Identifier: Apache-2.0
//
// mmwchan - directional millimeter-wave channel measurement processing
// Copyright (C) 2026 The mmwchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace mmwchan
{

// Worker count: MMWCHAN_NUM_THREADS when set to a positive integer, else the hardware concurrency.
inline std::size_t workerCount()
{
    if (const char *env = std::getenv("MMWCHAN_NUM_THREADS"))
    {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Evaluate fn(0..n-1) and return the results in index order. Work is spread over
// workerCount() threads; the result never depends on the schedule. The first exception
// (by index) is rethrown.
template <typename Fn>
auto parallelMap(std::size_t n, Fn &&fn) -> std::vector<std::invoke_result_t<Fn &, std::size_t>>
{
    using R = std::invoke_result_t<Fn &, std::size_t>;
    std::vector<std::optional<R>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    const std::size_t workers = std::min(workerCount(), n);

    auto run = [&](std::size_t begin, std::size_t stride)
    {
        for (std::size_t i = begin; i < n; i += stride)
        {
            try
            {
                slots[i].emplace(fn(i));
            }
            catch (...)
            {
                errors[i] = std::current_exception();
            }
        }
    };

    if (workers <= 1)
        run(0, 1);
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(run, w, workers);
    }

    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<R> out;
    out.reserve(n);
    for (auto &s : slots)
        out.push_back(std::move(*s));
    return out;
}

} // namespace mmwchan
