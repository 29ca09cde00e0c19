#pragma once

namespace fratio {

/// Worker count used by every OpenMP kernel in the library.
///
/// Defaults to FRATIO_JOBS when set, otherwise the OpenMP default.
/// Results never depend on this value: kernels reduce deterministically.
int jobs();
void set_jobs(int n);

} // namespace fratio
