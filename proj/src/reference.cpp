#include "qes/reference.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <set>

#include "qes/errors.hpp"

namespace qes::reference {

// One root at a time, public counting API, stored-domain brackets. The
// bracket endpoints stay exact power-of-two multiples of the batched
// kernel's working-domain endpoints, so the two routes agree bitwise.
Spectrum eigenvalues_serial(const TridiagonalH1& t, double tol) {
  if (!(tol >= 4 * DBL_EPSILON))
    fail(errc::tolerance_too_small,
         "tolerance must be at least 4*eps; the bisection cannot certify tighter brackets");

  Spectrum sp;
  sp.scale_log2 = t.scale_log2;
  sp.method = Spectrum::Method::sturm_bisection;
  if (t.dim == 1) {
    sp.eigenvalues = {0.0};
    return sp;
  }

  const double bound = t.inf_norm();
  const double pad = std::ldexp(bound, -50);
  const double lo0 = -(bound + pad);
  const double hi0 = bound + pad;
  const double tol_abs = tol * std::max(1.0, bound);

  long iters = 0;
  double width = hi0 - lo0;
  while (width > tol_abs && iters < 1100) {
    width *= 0.5;
    ++iters;
  }

  sp.eigenvalues.resize(t.dim);
  for (long k = 0; k < t.dim; ++k) {
    double lo = lo0, hi = hi0;
    for (long it = 0; it < iters; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (sturm_count(t, mid) >= k + 1)
        hi = mid;
      else
        lo = mid;
    }
    sp.eigenvalues[k] = 0.5 * (lo + hi);
  }

  std::sort(sp.eigenvalues.begin(), sp.eigenvalues.end());
  sp.certified_width = width;
  return sp;
}

namespace {

void scan_tail(const Model& model, MonomialState& state, std::size_t pos, long budget,
               std::set<SectorLabel>& found) {
  const std::size_t na = state.i.size();
  const std::size_t total = na + state.j.size();
  if (pos == total) {
    found.insert(canonicalize(model, state));
    return;
  }
  long& slot = pos < na ? state.i[pos] : state.j[pos - na];
  for (long v = 0; v <= budget; ++v) {
    slot = v;
    scan_tail(model, state, pos + 1, budget - v, found);
  }
  slot = 0;
}

}  // namespace

std::vector<SectorLabel> enumerate_sectors_serial(const Model& model, long max_photons) {
  if (max_photons < 0) return {};
  std::set<SectorLabel> found;
  MonomialState state;
  state.i.assign(model.modes_a(), 0);
  state.j.assign(model.modes_b(), 0);
  scan_tail(model, state, 0, max_photons, found);
  return {found.begin(), found.end()};
}

}  // namespace qes::reference
