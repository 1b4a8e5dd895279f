#pragma once

#include <string>

namespace flocknet::kern {

enum class Backend { scalar, avx2 };

// Best backend the running CPU supports. AVX2 requires both compile-time
// support in this build and a runtime CPUID check.
Backend best_backend();

bool backend_available(Backend be);

const char* backend_name(Backend be);
Backend backend_from_string(const std::string& s);  // "auto" maps to best

}  // namespace flocknet::kern
