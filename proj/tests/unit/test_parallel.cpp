#include <gtest/gtest.h>

#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "minnaert/parallel.hpp"

using namespace minnaert;

TEST(Parallel, EachIndexRunsOnce) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(Parallel, RethrowsJobExceptions) {
    EXPECT_THROW(parallel_for(50, 3,
                              [](std::size_t i) {
                                  if (i == 17) throw std::runtime_error("boom");
                              }),
                 std::runtime_error);
}

TEST(Parallel, WorkerCountFromEnvironment) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    setenv("MINNAERT_THREADS", "1", 1);
    EXPECT_EQ(worker_count_from_env(), 1u);
    setenv("MINNAERT_THREADS", "100000", 1);
    EXPECT_EQ(worker_count_from_env(), hw);
    setenv("MINNAERT_THREADS", "0", 1);
    EXPECT_EQ(worker_count_from_env(), 1u);
    unsetenv("MINNAERT_THREADS");
    EXPECT_GE(worker_count_from_env(), 1u);
}
