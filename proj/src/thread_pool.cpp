#include "asgf/thread_pool.hpp"

#include <algorithm>

namespace asgf {

ThreadPool::ThreadPool(int worker_count)
    : worker_count_(std::max(1, worker_count)) {
  threads_.reserve(worker_count_ - 1);
  for (int i = 0; i + 1 < worker_count_; ++i) {
    threads_.emplace_back([this] { worker_loop(); });
  }
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
  }
  work_ready_.notify_all();
  for (auto& t : threads_) t.join();
}

void ThreadPool::run_indices() {
  for (;;) {
    std::size_t index;
    const std::function<void(std::size_t)>* job;
    {
      std::lock_guard lock(mutex_);
      if (next_index_ >= job_count_) return;
      index = next_index_++;
      job = job_;
    }
    std::exception_ptr error;
    try {
      (*job)(index);
    } catch (...) {
      error = std::current_exception();
    }
    {
      std::lock_guard lock(mutex_);
      if (error && !first_error_) first_error_ = error;
      if (--remaining_ == 0) work_done_.notify_all();
    }
  }
}

void ThreadPool::worker_loop() {
  std::uint64_t seen_generation = 0;
  for (;;) {
    {
      std::unique_lock lock(mutex_);
      work_ready_.wait(lock, [&] { return stopping_ || generation_ != seen_generation; });
      if (stopping_) return;
      seen_generation = generation_;
    }
    run_indices();
  }
}

void ThreadPool::parallel_for(std::size_t count,
                              const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  if (worker_count_ == 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  {
    std::lock_guard lock(mutex_);
    job_ = &fn;
    job_count_ = count;
    next_index_ = 0;
    remaining_ = count;
    ++generation_;
  }
  work_ready_.notify_all();
  run_indices();
  std::exception_ptr error;
  {
    std::unique_lock lock(mutex_);
    work_done_.wait(lock, [&] { return remaining_ == 0; });
    error = std::exchange(first_error_, nullptr);
    job_ = nullptr;
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace asgf
