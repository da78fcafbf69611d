// Copyright 2026 The ckw Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CKW_KERNELS_HPP_
#define CKW_KERNELS_HPP_

// Data-parallel building blocks. Every kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::omp that produces
// bit-identical results: reductions resolve ties by the lowest index and do
// not depend on thread scheduling. Exceptions thrown by the callback are
// rethrown on the calling thread (the one from the lowest failing index).

#include <cstddef>
#include <exception>
#include <limits>
#include <vector>

#include <omp.h>

namespace ckw {

enum class Execution { kSerial, kParallel };

struct ArgMaxResult {
  std::size_t index = 0;
  double value = -std::numeric_limits<double>::infinity();
  bool empty = true;
};

namespace kernels {

// Threads OpenMP will use for a parallel region (honors OMP_NUM_THREADS).
int MaxThreads();

namespace serial {

// First index attaining the max of value_at(i) over [0, count);
// value_at must not return NaN.
template <class Fn>
ArgMaxResult ArgMax(std::size_t count, Fn&& value_at) {
  ArgMaxResult best;
  for (std::size_t i = 0; i < count; ++i) {
    const double v = value_at(i);
    if (best.empty || v > best.value) best = {i, v, false};
  }
  return best;
}

template <class T, class Fn>
void Map(std::size_t count, Fn&& fn, std::vector<T>& out) {
  out.resize(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
}

}  // namespace serial

namespace omp {

template <class Fn>
ArgMaxResult ArgMax(std::size_t count, Fn&& value_at) {
  const int threads = MaxThreads();
  std::vector<ArgMaxResult> partial(static_cast<std::size_t>(threads));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  std::vector<std::size_t> error_index(static_cast<std::size_t>(threads), count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel num_threads(threads)
  {
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
    ArgMaxResult local;
#pragma omp for schedule(static)
    for (long long i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      if (errors[tid]) continue;
      try {
        const double v = value_at(idx);
        if (local.empty || v > local.value) local = {idx, v, false};
      } catch (...) {
        errors[tid] = std::current_exception();
        error_index[tid] = idx;
      }
    }
    partial[tid] = local;
  }
  std::size_t first_error = count;
  std::exception_ptr error;
  for (std::size_t t = 0; t < errors.size(); ++t) {
    if (errors[t] && error_index[t] < first_error) {
      first_error = error_index[t];
      error = errors[t];
    }
  }
  if (error) std::rethrow_exception(error);

  ArgMaxResult best;
  for (const ArgMaxResult& p : partial) {
    if (p.empty) continue;
    if (best.empty || p.value > best.value ||
        (p.value == best.value && p.index < best.index)) {
      best = p;
    }
  }
  return best;
}

template <class T, class Fn>
void Map(std::size_t count, Fn&& fn, std::vector<T>& out) {
  out.resize(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(MaxThreads())
  for (long long i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = fn(idx);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace omp

template <class Fn>
ArgMaxResult ArgMax(Execution exec, std::size_t count, Fn&& value_at) {
  return exec == Execution::kParallel ? omp::ArgMax(count, value_at)
                                      : serial::ArgMax(count, value_at);
}

template <class T, class Fn>
void Map(Execution exec, std::size_t count, Fn&& fn, std::vector<T>& out) {
  if (exec == Execution::kParallel) {
    omp::Map(count, fn, out);
  } else {
    serial::Map(count, fn, out);
  }
}

}  // namespace kernels
}  // namespace ckw

#endif  // CKW_KERNELS_HPP_
