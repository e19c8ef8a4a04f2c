// Copyright 2026 The vbraid Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "vbraid/error.hpp"
#include "vbraid/free_auto.hpp"
#include "vbraid/oracle.hpp"
#include "vbraid/presentations.hpp"
#include "vbraid/schreier.hpp"
#include "vbraid/vp_normalize.hpp"

namespace {

  using namespace vbraid;

  std::vector<Word> sample(int n, int length, int count) {
    Presentation      p = presentation(Group::VB, n);
    std::vector<Word> out;
    for (int k = 0; k < count; ++k) {
      out.push_back(random_word(p, static_cast<std::uint64_t>(k + 1), length));
    }
    return out;
  }

  void BM_RewriteToVp(benchmark::State& state) {
    auto const words = sample(static_cast<int>(state.range(0)),
                              static_cast<int>(state.range(1)), 64);
    std::size_t k = 0;
    for (auto _ : state) {
      benchmark::DoNotOptimize(rewrite_to_vp(words[k++ % words.size()]));
    }
  }
  BENCHMARK(BM_RewriteToVp)->Args({3, 16})->Args({5, 32})->Args({8, 64});

  // Normal forms are memoized per thread, so after the first pass over the
  // pool this measures the warm-cache cost.
  void BM_NormalizeWarm(benchmark::State& state) {
    std::vector<Word> words;
    for (Word const& w : sample(static_cast<int>(state.range(0)),
                                static_cast<int>(state.range(1)), 256)) {
      try {
        (void)normalize(w);
        words.push_back(w);
      } catch (Error const&) {
      }
    }
    std::size_t k = 0;
    for (auto _ : state) {
      benchmark::DoNotOptimize(normalize(words[k++ % words.size()]));
    }
    state.counters["pool"] = static_cast<double>(words.size());
  }
  BENCHMARK(BM_NormalizeWarm)->Args({3, 8})->Args({3, 16})->Args({4, 8});

  void BM_WbImage(benchmark::State& state) {
    auto const words = sample(static_cast<int>(state.range(0)),
                              static_cast<int>(state.range(1)), 64);
    std::size_t k = 0;
    for (auto _ : state) {
      benchmark::DoNotOptimize(wb_image(words[k++ % words.size()]));
    }
  }
  BENCHMARK(BM_WbImage)->Args({3, 16})->Args({6, 32});

  void BM_OracleBraidRelation(benchmark::State& state) {
    Presentation p  = presentation(Group::VB, 3);
    Word         w1 = parse("s1 s2 s1 r1 r2", Group::VB, 3);
    Word         w2 = parse("s2 s1 s2 r1 r2", Group::VB, 3);
    for (auto _ : state) {
      benchmark::DoNotOptimize(bounded_equal(p, w1, w2));
    }
  }
  BENCHMARK(BM_OracleBraidRelation);

  void BM_OracleUnknown(benchmark::State& state) {
    Presentation p  = presentation(Group::VB, 3);
    Word         w1 = parse("r1 s2 s1", Group::VB, 3);
    Word         w2 = parse("s2 s1 r2", Group::VB, 3);
    auto const   budget = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(bounded_equal(p, w1, w2, budget));
    }
  }
  BENCHMARK(BM_OracleUnknown)->Arg(100)->Arg(1000);

}  // namespace
BENCHMARK_MAIN();
