#include <benchmark/benchmark.h>

#include <random>

#include "icgr/cgr.hpp"
#include "icgr/codec.hpp"
#include "icgr/icgr.hpp"

namespace {

icgr::Sequence random_bases(std::size_t n, std::uint64_t seed = 42) {
  std::mt19937_64 rng(seed);
  icgr::Sequence s(n);
  for (auto& b : s) b = static_cast<icgr::Nucleotide>(rng() & 3);
  return s;
}

void BM_Encode(benchmark::State& state) {
  const auto s = random_bases(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(icgr::encode(s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Encode)->RangeMultiplier(8)->Range(64, 1 << 15);

void BM_EncodeTrajectory(benchmark::State& state) {
  const auto s = random_bases(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(icgr::encode_trajectory(s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EncodeTrajectory)->RangeMultiplier(8)->Range(64, 4096);

void BM_Decode(benchmark::State& state) {
  const auto tri = icgr::encode(random_bases(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(icgr::decode(tri));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Decode)->RangeMultiplier(8)->Range(64, 1 << 15);

void BM_DecodeStepwise(benchmark::State& state) {
  const auto tri = icgr::encode(random_bases(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(icgr::decode_stepwise(tri));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DecodeStepwise)->RangeMultiplier(8)->Range(64, 4096);

// Whole pipeline on 1M bases: chunk, serialize, parse, decode.
void BM_ChunkedPipeline(benchmark::State& state) {
  const icgr::SequenceRecord record{"bench", random_bases(1'000'000), 0};
  const auto block = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    const auto encoded = icgr::chunk_encode(record, block);
    const std::string bytes = icgr::write_binary(std::span(&encoded, 1));
    const auto back = icgr::read_binary(bytes);
    benchmark::DoNotOptimize(icgr::decode_record(back.front()));
  }
  state.SetItemsProcessed(state.iterations() * 1'000'000);
}
BENCHMARK(BM_ChunkedPipeline)->Arg(64)->Arg(1024)->Arg(16384)->Unit(benchmark::kMillisecond);

void BM_Fcgr(benchmark::State& state) {
  const auto s = random_bases(1'000'000);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(icgr::fcgr(s, k));
  state.SetItemsProcessed(state.iterations() * 1'000'000);
}
BENCHMARK(BM_Fcgr)->Arg(4)->Arg(7)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
