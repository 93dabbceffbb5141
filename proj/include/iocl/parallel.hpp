#ifndef IOCL_PARALLEL_HPP
#define IOCL_PARALLEL_HPP

#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace iocl {

/// Runs body(i) for i in [0, n) across OpenMP threads. Exceptions thrown in
/// the loop body are captured and the first one rethrown after the join,
/// since exceptions must not cross an OpenMP region boundary.
template <typename Body>
void parallel_for_index(long n, const Body& body) {
  std::exception_ptr first_error = nullptr;
  std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

/// Serial reference loop with the same signature, kept so results of the
/// parallel kernels can be checked against a plain implementation.
template <typename Body>
void serial_for_index(long n, const Body& body) {
  for (long i = 0; i < n; ++i) body(i);
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int k) {
#ifdef _OPENMP
  if (k > 0) omp_set_num_threads(k);
#else
  (void)k;
#endif
}

}  // namespace iocl

#endif  // IOCL_PARALLEL_HPP
