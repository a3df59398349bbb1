#include "socgrad/bench/pool.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace socgrad::bench {

std::size_t worker_count(std::size_t count) {
  if (count <= 1) {
    return count;
  }
  std::size_t workers = std::thread::hardware_concurrency();
  if (workers == 0) {
    workers = 1;
  }
  if (const char* env = std::getenv("SOCGRAD_THREADS")) {
    std::size_t pos = 0;
    unsigned long parsed = 0;
    try {
      parsed = std::stoul(env, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || env[pos] != '\0' || parsed == 0) {
      throw std::runtime_error(
          std::string("SOCGRAD_THREADS must be a positive integer, got '") +
          env + "'");
    }
    workers = parsed;
  }
  return std::min(workers, count);
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& body) {
  const std::size_t workers = worker_count(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) {
        return;
      }
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) {
          first_error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back(run);
  }
  for (auto& t : threads) {
    t.join();
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
}

}  // namespace socgrad::bench
