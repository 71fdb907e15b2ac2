/* Copyright 2026 The encat Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <benchmark/benchmark.h>

#include <string>

#include "encat/document.hpp"
#include "encat/equiv.hpp"
#include "encat/instances.hpp"
#include "encat/monoidal.hpp"

namespace {

using namespace encat;

void BM_CheckMonoidalTrop(benchmark::State& state) {
  BaseV v = build_trop(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_monoidal(v.monoidal));
}
BENCHMARK(BM_CheckMonoidalTrop)->DenseRange(3, 6);

void BM_CheckBaseCyc(benchmark::State& state) {
  BaseV v = build_cyc(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_base(v));
}
BENCHMARK(BM_CheckBaseCyc)->Arg(3)->Arg(8)->Arg(12);

void BM_RoundtripCylinderTensored(benchmark::State& state) {
  BaseV v = build_trop(4);
  VStructureData vs = self_vstructure(v);
  CylinderAssignment cyl = self_cylinder(v);
  for (auto _ : state)
    benchmark::DoNotOptimize(roundtrip_cylinder_tensored(vs, cyl));
}
BENCHMARK(BM_RoundtripCylinderTensored);

void BM_RoundtripModuleCylinderPoset(benchmark::State& state) {
  ClosedVModuleData pm = build_poset_module(poset_diamond());
  for (auto _ : state)
    benchmark::DoNotOptimize(roundtrip_module_cylinder(pm.tensor_closed));
}
BENCHMARK(BM_RoundtripModuleCylinderPoset);

void BM_BimoduleCompletion(benchmark::State& state) {
  ClosedVModuleData cm = state.range(0) == 0
                             ? build_poset_module(poset_diamond())
                             : module_self(build_trop(3));
  const SymmetryData& sym = *cm.tensor_closed.module.v.symmetry;
  for (auto _ : state) benchmark::DoNotOptimize(bimodule_completion(cm, sym));
}
BENCHMARK(BM_BimoduleCompletion)->Arg(0)->Arg(1);

void BM_SerializeParseBimodule(benchmark::State& state) {
  ClosedVModuleData pm = build_poset_module(poset_diamond());
  Document d{bimodule_completion(pm, *pm.tensor_closed.module.v.symmetry)};
  std::string text = serialize_document(d);
  for (auto _ : state) {
    Document back = parse_document(text);
    benchmark::DoNotOptimize(serialize_document(back));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_SerializeParseBimodule);

}  // namespace

BENCHMARK_MAIN();
