#include "isoclust/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace isoclust {

namespace {

std::atomic<std::size_t> g_requested{0};
thread_local bool t_in_worker = false;

std::size_t env_threads() {
    const char* raw = std::getenv("ISOCLUST_THREADS");
    if (raw == nullptr || *raw == '\0') {
        return 0;
    }
    try {
        return static_cast<std::size_t>(std::stoul(raw));
    } catch (const std::exception&) {
        return 0;
    }
}

}  // namespace

void set_thread_count(std::size_t n) { g_requested.store(n); }

std::size_t thread_count() {
    std::size_t n = g_requested.load();
    if (n == 0) {
        n = env_threads();
    }
    if (n == 0) {
        n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t grain) {
    const std::size_t workers = std::min(thread_count(), n / std::max<std::size_t>(1, grain));
    if (t_in_worker || workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const std::size_t chunk = std::clamp<std::size_t>(grain / 4, 1, 64);

    auto work = [&] {
        t_in_worker = true;
        try {
            for (;;) {
                const std::size_t begin = next.fetch_add(chunk);
                if (begin >= n) break;
                const std::size_t end = std::min(n, begin + chunk);
                for (std::size_t i = begin; i < end; ++i) {
                    body(i);
                }
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(n);
        }
        t_in_worker = false;
    };

    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) {
        pool.emplace_back(work);
    }
    work();
    pool.clear();
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace isoclust
