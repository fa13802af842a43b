#include "qes/spectral.hpp"

#include <algorithm>
#include <cfloat>
#include <climits>
#include <cmath>
#include <limits>

#include "qes/errors.hpp"

extern "C" void dsterf_(const int* n, double* d, double* e, int* info);

namespace qes {

namespace {

constexpr int kLanes = 8;
constexpr double kWindowHi = 0x1p256;
constexpr double kWindowLo = 0x1p-256;
constexpr double kShrink = 0x1p-256;
constexpr double kGrow = 0x1p256;

// Off-diagonal squares renormalized by one power of two so every magnitude is
// O(1). Powers of two commute with IEEE rounding, so a count in the working
// domain equals the count in the stored domain at the scaled probe.
struct Working {
  std::vector<double> hsq;
  int shift = 0;       // stored value = working value * 2^shift
  double bound = 0.0;  // Gershgorin radius of the working matrix
};

Working make_working(const TridiagonalH1& t) {
  Working w;
  double hmax = 0.0;
  for (double h : t.offdiag) hmax = std::max(hmax, h);
  w.shift = hmax > 0.0 ? std::ilogb(hmax) : 0;
  w.hsq.resize(t.offdiag.size());
  double prev = 0.0;
  for (std::size_t s = 0; s < t.offdiag.size(); ++s) {
    const double h = std::ldexp(t.offdiag[s], -w.shift);
    w.hsq[s] = h * h;
    w.bound = std::max(w.bound, prev + h);
    prev = h;
  }
  w.bound = std::max(w.bound, prev);
  return w;
}

// One Sturm pass: number of sign agreements between consecutive minors of
// e*I - H, which equals the number of eigenvalues strictly below e. An exact
// zero minor takes the sign opposite to its predecessor; a zero minor of the
// s-th leading submatrix forces delta_{s+1} = -h^2 * delta_{s-1}, so this is
// the sign an infinitesimal downward shift of e would produce.
// The running pair is pulled back into [2^-256, 2^256] by power-of-two
// factors; with O(1) entries a single conditional per step is enough to keep
// every intermediate finite and every sign intact.
long count_once(const std::vector<double>& hsq, double e) {
  // At e = 0 the count is closed form: the diagonal vanishes, so every odd
  // minor is exactly zero and the even minors alternate sign, giving one
  // agreement per minor pair. The loop below must not see this probe: the
  // rescue scaling fires on each zero minor and inflates the surviving one
  // faster than one shrink per step can pull it back.
  if (e == 0.0) return static_cast<long>((hsq.size() + 1) / 2);
  int sp = 1;
  int sd = e > 0.0 ? 1 : (e < 0.0 ? -1 : -sp);
  long agree = sp == sd ? 1 : 0;
  double p = 1.0, d = e;
  for (double h2 : hsq) {
    const double next = e * d - h2 * p;
    const int sn = next > 0.0 ? 1 : (next < 0.0 ? -1 : -sd);
    const double mag = std::fabs(next);
    const double f = mag > kWindowHi ? kShrink : (mag < kWindowLo ? kGrow : 1.0);
    p = d * f;
    d = next * f;
    sp = sd;
    sd = sn;
    if (sp == sd) ++agree;
  }
  return agree;
}

// Eight probes advanced in lockstep through one sweep of the squares. The
// lane arithmetic is identical to count_once step for step, so batched and
// scalar counts agree bitwise; lanes that hit an exact zero minor (tracked
// through minmag) are redone on the scalar path, whose explicit sign rule
// covers zeros. A flagged lane also covers a probe of exactly 0.0, where the
// lane sign convention differs from the scalar path.
#if defined(__GNUC__) || defined(__clang__)

typedef double VecD __attribute__((vector_size(sizeof(double) * kLanes)));
typedef long long VecM __attribute__((vector_size(sizeof(long long) * kLanes)));

VecD splat(double x) {
  VecD v;
  for (int l = 0; l < kLanes; ++l) v[l] = x;
  return v;
}

void count_batch(const std::vector<double>& hsq, const double* probe, long* out) {
  const VecM abs_mask = ~(VecM)splat(-0.0);
  const VecD one = splat(1.0);
  const VecD zero = splat(0.0);
  const VecD shrink = splat(kShrink);
  const VecD grow = splat(kGrow);
  const VecD whi = splat(kWindowHi);
  const VecD wlo = splat(kWindowLo);

  VecD e;
  for (int l = 0; l < kLanes; ++l) e[l] = probe[l];
  VecD p = one;
  VecD d = e;
  VecD minmag = (VecD)((VecM)e & abs_mask);
  VecD agree = (e >= zero) ? one : zero;

  const double* __restrict sq = hsq.data();
  const std::size_t steps = hsq.size();
  for (std::size_t s = 0; s < steps; ++s) {
    const VecD h2 = splat(sq[s]);
    const VecD next = e * d - h2 * p;
    const VecD mag = (VecD)((VecM)next & abs_mask);
    minmag = (mag < minmag) ? mag : minmag;
    const VecD f = (mag > whi) ? shrink : ((mag < wlo) ? grow : one);
    const VecD pn = d * f;
    const VecD dn = next * f;
    agree += ((pn >= zero) == (dn >= zero)) ? one : zero;
    p = pn;
    d = dn;
  }
  for (int l = 0; l < kLanes; ++l)
    out[l] = minmag[l] == 0.0 ? count_once(hsq, probe[l]) : static_cast<long>(agree[l]);
}

#else

void count_batch(const std::vector<double>& hsq, const double* probe, long* out) {
  double p[kLanes], d[kLanes], agree[kLanes], minmag[kLanes];
  for (int l = 0; l < kLanes; ++l) {
    p[l] = 1.0;
    d[l] = probe[l];
    agree[l] = std::signbit(probe[l]) ? 0.0 : 1.0;
    minmag[l] = std::fabs(probe[l]);
  }
  const double* __restrict sq = hsq.data();
  const std::size_t steps = hsq.size();
  for (std::size_t s = 0; s < steps; ++s) {
    const double h2 = sq[s];
    for (int l = 0; l < kLanes; ++l) {
      const double next = probe[l] * d[l] - h2 * p[l];
      const double mag = std::fabs(next);
      minmag[l] = std::min(minmag[l], mag);
      const double f = mag > kWindowHi ? kShrink : (mag < kWindowLo ? kGrow : 1.0);
      const double pn = d[l] * f;
      const double dn = next * f;
      agree[l] += (pn >= 0.0) == (dn >= 0.0) ? 1.0 : 0.0;
      p[l] = pn;
      d[l] = dn;
    }
  }
  for (int l = 0; l < kLanes; ++l)
    out[l] = minmag[l] == 0.0 ? count_once(hsq, probe[l]) : static_cast<long>(agree[l]);
}

#endif

void check_tolerance(double tol) {
  if (!(tol >= 4 * DBL_EPSILON))
    fail(errc::tolerance_too_small,
         "tolerance must be at least 4*eps; the bisection cannot certify tighter brackets");
}

}  // namespace

std::vector<double> char_poly_sequence(const TridiagonalH1& t, double e) {
  std::vector<double> out;
  out.reserve(t.dim + 1);
  out.push_back(1.0);
  out.push_back(e);
  double p = 1.0, d = e;
  for (long s = 0; s + 1 < t.dim; ++s) {
    const double h = t.offdiag[s];
    const double next = e * d - (h * h) * p;
    p = d;
    d = next;
    // keep the dominant member of the pair inside [2^-512, 2^512]
    double mag = std::max(std::fabs(d), std::fabs(p));
    while (mag > 0x1p512) {
      d *= 0x1p-512;
      p *= 0x1p-512;
      mag = std::max(std::fabs(d), std::fabs(p));
    }
    while (mag != 0.0 && mag < 0x1p-512) {
      d *= 0x1p512;
      p *= 0x1p512;
      mag = std::max(std::fabs(d), std::fabs(p));
    }
    out.push_back(d);
  }
  return out;
}

long sturm_count(const TridiagonalH1& t, double e) {
  if (t.dim == 1) return e > 0.0 ? 1 : 0;
  const Working w = make_working(t);
  return count_once(w.hsq, std::ldexp(e, -w.shift));
}

Spectrum eigenvalues(const TridiagonalH1& t, double tol) {
  check_tolerance(tol);
  Spectrum sp;
  sp.scale_log2 = t.scale_log2;
  sp.method = Spectrum::Method::sturm_bisection;
  if (t.dim == 1) {
    sp.eigenvalues = {0.0};
    return sp;
  }

  const Working w = make_working(t);
  const double pad = std::ldexp(w.bound, -50);
  const double lo0 = -(w.bound + pad);
  const double hi0 = w.bound + pad;
  const double tol_working = tol * std::max(std::ldexp(1.0, -w.shift), w.bound);

  long iters = 0;
  double width = hi0 - lo0;
  while (width > tol_working && iters < 1100) {
    width *= 0.5;
    ++iters;
  }

  const long dim = t.dim;
  sp.eigenvalues.assign(dim, 0.0);
  const long nbatch = (dim + kLanes - 1) / kLanes;

  // the first midpoint is exactly 0.5*(lo0+hi0) = +0.0 for every lane, so one
  // scalar count serves all batches
  const long cnt0 = iters > 0 ? count_once(w.hsq, 0.0) : 0;

#pragma omp parallel for schedule(dynamic)
  for (long batch = 0; batch < nbatch; ++batch) {
    const long k0 = batch * kLanes;
    double lo[kLanes], hi[kLanes], mid[kLanes];
    long cnt[kLanes];
    for (int l = 0; l < kLanes; ++l) {
      lo[l] = lo0;
      hi[l] = hi0;
      if (iters > 0) {
        if (cnt0 >= k0 + l + 1)
          hi[l] = 0.0;
        else
          lo[l] = 0.0;
      }
    }
    for (long it = 1; it < iters; ++it) {
      for (int l = 0; l < kLanes; ++l) mid[l] = 0.5 * (lo[l] + hi[l]);
      count_batch(w.hsq, mid, cnt);
      for (int l = 0; l < kLanes; ++l) {
        // eigenvalue k0+l sits below mid iff at least k0+l+1 others do
        if (cnt[l] >= k0 + l + 1)
          hi[l] = mid[l];
        else
          lo[l] = mid[l];
      }
    }
    const int lanes = static_cast<int>(std::min<long>(kLanes, dim - k0));
    for (int l = 0; l < lanes; ++l)
      sp.eigenvalues[k0 + l] = std::ldexp(0.5 * (lo[l] + hi[l]), w.shift);
  }

  std::sort(sp.eigenvalues.begin(), sp.eigenvalues.end());
  sp.certified_width = std::ldexp(width, w.shift);

  if (dim <= 2000) {
    const Spectrum dense = dense_eigenvalues(t);
    // covers the certified error of both routes
    const double limit =
        (10.0 * tol + static_cast<double>(dim) * DBL_EPSILON) * std::ldexp(w.bound, w.shift);
    for (long k = 0; k < dim; ++k)
      if (!(std::fabs(sp.eigenvalues[k] - dense.eigenvalues[k]) <= limit))
        fail(errc::cross_check_failed,
             "bisection and dense routes disagree at index " + std::to_string(k));
  }
  return sp;
}

Spectrum dense_eigenvalues(const TridiagonalH1& t) {
  Spectrum sp;
  sp.scale_log2 = t.scale_log2;
  sp.method = Spectrum::Method::dense_crosscheck;
  if (t.dim == 1) {
    sp.eigenvalues = {0.0};
    return sp;
  }
  if (t.dim > INT_MAX) fail(errc::bad_input, "dimension too large for the dense route");

  const Working w = make_working(t);
  std::vector<double> diag(t.dim, 0.0);
  std::vector<double> off(t.dim - 1);
  for (long s = 0; s + 1 < t.dim; ++s) off[s] = std::ldexp(t.offdiag[s], -w.shift);

  int n = static_cast<int>(t.dim);
  int info = 0;
  dsterf_(&n, diag.data(), off.data(), &info);
  if (info != 0)
    fail(errc::cross_check_failed, "implicit-shift iteration failed, info=" + std::to_string(info));

  std::sort(diag.begin(), diag.end());
  sp.eigenvalues.resize(t.dim);
  for (long k = 0; k < t.dim; ++k) sp.eigenvalues[k] = std::ldexp(diag[k], w.shift);
  sp.certified_width = static_cast<double>(t.dim) * DBL_EPSILON * std::ldexp(w.bound, w.shift);
  return sp;
}

std::vector<TotalLevel> full_spectrum(const Model& model, const SectorLabel& sector, double tol) {
  const std::vector<MonomialState> basis = sector_basis(model, sector);
  const double e0 = quantum_numbers(model, basis[0]).e0.get_d();
  const TridiagonalH1 t = build_tridiagonal(model, sector);
  const Spectrum sp = eigenvalues(t, tol);

  std::vector<TotalLevel> levels;
  levels.reserve(sp.eigenvalues.size());
  for (double value : sp.eigenvalues) {
    const double lambda = std::ldexp(value, sp.scale_log2);
    levels.push_back({e0 + model.g * lambda, lambda});
  }
  return levels;
}

std::vector<double> poly_spectrum(const TridiagonalH1& t, const std::vector<double>& coeffs,
                                  double tol) {
  if (coeffs.empty()) fail(errc::bad_input, "polynomial needs at least one coefficient");
  const Spectrum sp = eigenvalues(t, tol);
  std::vector<double> out;
  out.reserve(sp.eigenvalues.size());
  for (double value : sp.eigenvalues) {
    const double lambda = std::ldexp(value, sp.scale_log2);
    double acc = coeffs.back();
    for (std::size_t pos = coeffs.size() - 1; pos-- > 0;) acc = acc * lambda + coeffs[pos];
    out.push_back(acc);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qes
