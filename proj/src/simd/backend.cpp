#include "flocknet/simd/backend.hpp"

#include "flocknet/errors.hpp"

namespace flocknet::kern {

namespace {

bool runtime_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

}  // namespace

bool backend_available(Backend be) {
    switch (be) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
            return runtime_has_avx2();
    }
    return false;
}

Backend best_backend() {
    if (backend_available(Backend::avx2)) return Backend::avx2;
    return Backend::scalar;
}

const char* backend_name(Backend be) {
    switch (be) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "?";
}

Backend backend_from_string(const std::string& s) {
    if (s == "auto") return best_backend();
    if (s == "scalar") return Backend::scalar;
    if (s == "avx2") {
        if (!backend_available(Backend::avx2))
            throw Error("backend avx2 requested but not available on this CPU");
        return Backend::avx2;
    }
    throw Error("unknown backend '" + s + "' (expected auto, scalar, or avx2)");
}

}  // namespace flocknet::kern
