#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace sdiff {

/// Worker count: SD_THREADS if set to a positive integer, otherwise the hardware concurrency.
inline unsigned thread_count()
{
	if (char const *env = std::getenv("SD_THREADS"))
	{
		char *end = nullptr;
		long v = std::strtol(env, &end, 10);
		if (end != env && *end == '\0' && v > 0)
			return (unsigned)v;
	}
	unsigned hw = std::thread::hardware_concurrency();
	return hw == 0 ? 1 : hw;
}

/// Runs body(i) for i in [0, n) on up to thread_count() workers; the first exception is rethrown.
inline void parallel_for(std::size_t n, std::function<void(std::size_t)> const &body)
{
	unsigned workers = std::min<std::size_t>(thread_count(), n);
	if (workers <= 1)
	{
		for (std::size_t i = 0; i < n; ++i)
			body(i);
		return;
	}
	std::atomic<std::size_t> next{0};
	std::exception_ptr error;
	std::mutex error_mutex;
	std::vector<std::thread> pool;
	for (unsigned w = 0; w < workers; ++w)
		pool.emplace_back([&] {
			for (;;)
			{
				std::size_t i = next.fetch_add(1);
				if (i >= n)
					return;
				try
				{
					body(i);
				}
				catch (...)
				{
					std::lock_guard lock(error_mutex);
					if (!error)
						error = std::current_exception();
					next.store(n);
				}
			}
		});
	for (auto &t : pool)
		t.join();
	if (error)
		std::rethrow_exception(error);
}

} // namespace sdiff
