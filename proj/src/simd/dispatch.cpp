// Copyright 2026 The quditsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qudit/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace qudit::simd {

bool isa_supported(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar:
        return true;
    case Isa::Avx2:
#if defined(QUDIT_HAVE_AVX2)
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    }
    return false;
}

Isa detect_isa() noexcept {
    if (const char *env = std::getenv("QUDIT_ISA");
        env != nullptr && std::string_view(env) == "scalar") {
        return Isa::Scalar;
    }
    return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

const KernelTable &kernels(Isa isa) {
    if (!isa_supported(isa)) {
        throw DomainError("requested SIMD kernels are not supported on this CPU");
    }
    switch (isa) {
#if defined(QUDIT_HAVE_AVX2)
    case Isa::Avx2:
        return detail::avx2_table;
#endif
    default:
        return detail::scalar_table;
    }
}

namespace {
std::atomic<const KernelTable *> &active_slot() {
    static std::atomic<const KernelTable *> slot{&kernels(detect_isa())};
    return slot;
}
} // namespace

const KernelTable &kernels() noexcept {
    return *active_slot().load(std::memory_order_acquire);
}

void set_active_isa(Isa isa) {
    active_slot().store(&kernels(isa), std::memory_order_release);
}

} // namespace qudit::simd
