#pragma once

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace asgf {

/// Fixed-size pool for data-parallel loops. Work items are indices pulled
/// from a shared atomic cursor; the submitting thread participates, so a
/// pool with worker_count == 1 runs everything inline with zero threads.
/// The first exception thrown by any task is rethrown on the caller.
class ThreadPool {
 public:
  explicit ThreadPool(int worker_count);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  int worker_count() const { return worker_count_; }

  /// Runs fn(i) for i in [0, count). Blocks until all indices are done.
  void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

 private:
  void worker_loop();
  void run_indices();

  int worker_count_ = 1;
  std::vector<std::thread> threads_;

  std::mutex mutex_;
  std::condition_variable work_ready_;
  std::condition_variable work_done_;
  const std::function<void(std::size_t)>* job_ = nullptr;
  std::size_t job_count_ = 0;
  std::size_t next_index_ = 0;
  std::size_t remaining_ = 0;
  std::uint64_t generation_ = 0;
  std::exception_ptr first_error_;
  bool stopping_ = false;
};

}  // namespace asgf
