#pragma once

#include <string>
#include <vector>

namespace edgechroma::kernels {

/// Implementation variant for the arithmetic inner loops. All backends
/// produce bit-identical results; AVX2 is selected automatically when the
/// CPU supports it. The EDGECHROMA_BACKEND environment variable ("scalar"
/// or "avx2") overrides the automatic choice.
enum class Backend {
    scalar,
    avx2,
};

/// Backend currently in use.
Backend active_backend();

/// Whether a backend can run on this machine.
bool backend_available(Backend backend);

/// Force a specific backend (primarily for equivalence tests).
/// Throws std::invalid_argument if it is not available.
void use_backend(Backend backend);

/// Human-readable backend name ("scalar", "avx2").
std::string backend_name(Backend backend);

std::vector<Backend> available_backends();

}  // namespace edgechroma::kernels
