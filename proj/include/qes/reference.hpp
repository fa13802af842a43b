#pragma once

#include "qes/sectors.hpp"
#include "qes/spectral.hpp"

// Serial implementations of the parallel kernels. Same arithmetic, same
// policies, one thread, no batching; the test suite holds the parallel
// kernels to bitwise agreement with these.
namespace qes::reference {

Spectrum eigenvalues_serial(const TridiagonalH1& matrix, double tol);

std::vector<SectorLabel> enumerate_sectors_serial(const Model& model, long max_photons);

}  // namespace qes::reference
