#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "normlat/catalog.hpp"
#include "normlat/char_table.hpp"
#include "normlat/generation.hpp"
#include "normlat/moebius.hpp"

using namespace normlat;

namespace {

const Group& cached_group(const std::string& name) {
  static std::map<std::string, Group> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, group_from_catalog(name)).first;
  return it->second;
}

const NormalLattice& cached_lattice(const std::string& name) {
  static std::map<std::string, NormalLattice> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, enumerate_normal_subgroups(cached_group(name))).first;
  return it->second;
}

void BM_group_construction(benchmark::State& state, const std::string& name) {
  for (auto _ : state) {
    Group g = group_from_catalog(name);
    benchmark::DoNotOptimize(g.order);
  }
}

void BM_lattice_enumeration(benchmark::State& state, const std::string& name) {
  const Group& g = cached_group(name);
  for (auto _ : state) {
    NormalLattice lat = enumerate_normal_subgroups(g);
    benchmark::DoNotOptimize(lat.nodes.size());
  }
}

void BM_moebius_closed_table(benchmark::State& state, const std::string& name) {
  const Group& g = cached_group(name);
  const NormalLattice& lat = cached_lattice(name);
  for (auto _ : state) {
    MoebiusTable t = moebius_closed_table(g, lat);
    benchmark::DoNotOptimize(t.values.size());
  }
}

void BM_moebius_recursive(benchmark::State& state, const std::string& name) {
  const NormalLattice& lat = cached_lattice(name);
  for (auto _ : state) {
    MoebiusTable t = moebius_recursive(lat);
    benchmark::DoNotOptimize(t.values.size());
  }
}

void BM_character_table(benchmark::State& state, const std::string& name) {
  const Group& g = cached_group(name);
  for (auto _ : state) {
    CharacterTable ct = character_table(g);
    benchmark::DoNotOptimize(ct.characters.size());
  }
}

void BM_tuple_counts(benchmark::State& state, const std::string& name) {
  const Group& g = cached_group(name);
  const NormalLattice& lat = cached_lattice(name);
  const unsigned r = static_cast<unsigned>(lat.classes.size());
  for (auto _ : state) {
    GenerationReport rep = generation_report(g, lat, r);
    benchmark::DoNotOptimize(rep.fk.size());
  }
}

void BM_generating_number_bruteforce(benchmark::State& state,
                                     const std::string& name) {
  const Group& g = cached_group(name);
  const NormalLattice& lat = cached_lattice(name);
  for (auto _ : state) {
    unsigned n = class_generating_number_bruteforce(g, lat);
    benchmark::DoNotOptimize(n);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_group_construction, S4, "S4");
BENCHMARK_CAPTURE(BM_group_construction, A5xC3, "A5xC3");
BENCHMARK_CAPTURE(BM_lattice_enumeration, S4, "S4");
BENCHMARK_CAPTURE(BM_lattice_enumeration, C2_4, "C2^4");
BENCHMARK_CAPTURE(BM_lattice_enumeration, S3xS3, "S3xS3");
BENCHMARK_CAPTURE(BM_lattice_enumeration, C2xA5, "C2xA5");
BENCHMARK_CAPTURE(BM_moebius_recursive, C2_4, "C2^4");
BENCHMARK_CAPTURE(BM_moebius_closed_table, C2_4, "C2^4");
BENCHMARK_CAPTURE(BM_moebius_closed_table, S3xS3, "S3xS3");
BENCHMARK_CAPTURE(BM_character_table, SL23, "SL23");
BENCHMARK_CAPTURE(BM_character_table, A5, "A5");
BENCHMARK_CAPTURE(BM_character_table, A5xC3, "A5xC3");
BENCHMARK_CAPTURE(BM_tuple_counts, S4, "S4");
BENCHMARK_CAPTURE(BM_tuple_counts, C2_3xC3, "C2^3xC3");
BENCHMARK_CAPTURE(BM_generating_number_bruteforce, C2_4, "C2^4");
BENCHMARK_MAIN();
