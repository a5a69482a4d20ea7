// Copyright 2026 The clqnn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <string_view>

#include "clqnn/kernels/kernels.hpp"

namespace clqnn::kernels {

const KernelTable *avx2_kernels_compiled();

namespace {

const KernelTable *&active_slot() {
    static const KernelTable *slot = [] {
        const char *env = std::getenv("CLQNN_KERNELS");
        if (env != nullptr && std::string_view(env) == "scalar") {
            return &scalar_kernels();
        }
        const KernelTable *simd = avx2_kernels();
        return simd != nullptr ? simd : &scalar_kernels();
    }();
    return slot;
}

} // namespace

const KernelTable *avx2_kernels() {
#if defined(__x86_64__) || defined(__i386__)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return avx2_kernels_compiled();
    }
#endif
    return nullptr;
}

const KernelTable &active_kernels() { return *active_slot(); }

void set_active_kernels(const KernelTable &table) { active_slot() = &table; }

} // namespace clqnn::kernels
