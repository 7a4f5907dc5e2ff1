#include "dhym/parallel.hpp"

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace dhym {

namespace {
std::atomic<int> g_jobs{1};
}

void set_worker_count(int jobs) { g_jobs.store(jobs < 1 ? 1 : jobs); }
int worker_count() { return g_jobs.load(); }

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& fn) {
  const int jobs = worker_count();
  if (jobs <= 1 || count < 64) {
    fn(0, count);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace dhym
