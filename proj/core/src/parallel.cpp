#include "typespace/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace typespace {

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t, std::size_t, int)>& fn) {
  const auto w = static_cast<std::size_t>(std::max(1, workers));
  if (w == 1 || n < 2) {
    fn(0, n, 0);
    return;
  }
  const std::size_t chunks = std::min(w, n);
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> threads;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = n * c / chunks;
    const std::size_t end = n * (c + 1) / chunks;
    threads.emplace_back([&, c, begin, end] {
      try {
        fn(begin, end, static_cast<int>(c));
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace typespace
