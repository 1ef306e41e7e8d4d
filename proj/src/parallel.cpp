#include "braidchar/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace braidchar {

std::size_t worker_count()
{
    std::size_t requested = 0;
    if (const char* env = std::getenv("BRAIDCHAR_THREADS")) {
        try {
            requested = static_cast<std::size_t>(std::stoul(env));
        } catch (const std::exception&) {
            requested = 0;
        }
    }
    if (requested == 0)
        requested = std::max(1u, std::thread::hardware_concurrency());
    return requested;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body)
{
    const auto workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(workers - 1);
    for (std::size_t t = 1; t < workers; ++t)
        threads.emplace_back(run);
    run();
    for (auto& t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace braidchar
