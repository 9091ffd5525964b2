#pragma once

#include <bura/barycentric.hpp>
#include <bura/scalar.hpp>

#include <cmath>
#include <vector>

namespace bura {

/// Partial-fraction form C + sum b_i / (t - d_i) of a degree-(k,k) rational
/// with k simple real negative poles ordered 0 > d_1 > d_2 > ... > d_k.
/// `residue_sign_warnings` lists indices (1-based) whose residue sign differs
/// from the sign every converged minimax element of t^alpha exhibits; the
/// condition is diagnostic, not structural.
template <typename Real>
struct PartialFractionForm {
  Real constant;
  Vector<Real> poles;
  Vector<Real> residues;
  std::vector<int> residue_sign_warnings;

  int order() const { return static_cast<int>(poles.size()); }

  Real operator()(const Real& t) const {
    Real acc = constant;
    for (Eigen::Index i = 0; i < poles.size(); ++i) acc += residues[i] / (t - poles[i]);
    return acc;
  }
};

namespace detail {

/// Denominator of the second barycentric form, q(t) = sum w_i / (t - x_i).
/// Its zeros off the support set are the poles of the rational.
template <typename Real>
Real bary_denominator(const BarycentricRational<Real>& r, const Real& t) {
  Real den(0);
  for (Eigen::Index i = 0; i < r.support.size(); ++i) den += r.weights[i] / (t - r.support[i]);
  return den;
}

template <typename Real>
Real bary_denominator_derivative(const BarycentricRational<Real>& r, const Real& t) {
  Real den(0);
  for (Eigen::Index i = 0; i < r.support.size(); ++i) {
    const Real d = t - r.support[i];
    den -= r.weights[i] / (d * d);
  }
  return den;
}

template <typename Real>
Real bary_numerator(const BarycentricRational<Real>& r, const Real& t) {
  Real num(0);
  for (Eigen::Index i = 0; i < r.support.size(); ++i)
    num += r.weights[i] * r.values[i] / (t - r.support[i]);
  return num;
}

/// Locates one root of q in the bracket (t_lo, t_hi) with q(t_lo), q(t_hi) of
/// opposite sign: bisection to tighten, then Newton polished to the working
/// precision, falling back to bisection whenever Newton leaves the bracket.
template <typename Real>
Real polish_root(const BarycentricRational<Real>& r, Real t_lo, Real t_hi) {
  using std::abs;
  Real f_lo = bary_denominator(r, t_lo);
  Real t = (t_lo + t_hi) / 2;
  for (int it = 0; it < 8; ++it) {
    const Real f = bary_denominator(r, t);
    if (f == 0) return t;
    if ((f > 0) == (f_lo > 0)) {
      t_lo = t;
      f_lo = f;
    } else {
      t_hi = t;
    }
    t = (t_lo + t_hi) / 2;
  }
  const Real u = unit_roundoff(t);
  for (int it = 0; it < 200; ++it) {
    const Real f = bary_denominator(r, t);
    if (f == 0) break;
    const Real df = bary_denominator_derivative(r, t);
    Real step = df == 0 ? Real(0) : f / df;
    Real t_next = t - step;
    if (!(t_next > t_lo && t_next < t_hi) || step == 0) {
      // bisect on sign
      if ((f > 0) == (f_lo > 0)) {
        t_lo = t;
        f_lo = f;
      } else {
        t_hi = t;
      }
      t_next = (t_lo + t_hi) / 2;
      if (t_next == t) break;
    }
    if (abs(t_next - t) <= abs(t) * u * 4) {
      t = t_next;
      break;
    }
    t = t_next;
  }
  return t;
}

}  // namespace detail

/// Options for the pole scan on the negative real axis. The scan window in
/// u = -t is [10^log10_min, 10^log10_max]; with log10_min <= 0 sentinel
/// values the window is derived from the working precision.
struct PoleScanOptions {
  double scan_log10_min = 0.0;  // <= 0: automatic from working precision
  double scan_log10_max = 6.0;
  int points_per_decade = 200;
  int max_widenings = 3;
};

/// Extracts the partial-fraction form of a barycentric rational whose poles
/// all lie on the negative real axis (the structure every minimax element of
/// t^alpha on [0,1] has). Poles are bracketed by a sign scan of the
/// barycentric denominator on a log-spaced grid in -t and polished by a
/// bisection-guarded Newton iteration at working precision; residues follow
/// from b_i = n(d_i)/q'(d_i) and the constant from C = r(infinity).
///
/// Throws PoleExtractionError when fewer than k negative real poles are
/// found after widening the scan window — the signature of complex or
/// non-negative poles.
template <typename Real>
PartialFractionForm<Real> pole_residues(const BarycentricRational<Real>& r,
                                        const PoleScanOptions& opts = {}) {
  using std::abs;
  using std::pow;
  validate(r);
  const int k = r.degree();
  const Real wsum = r.weights.sum();
  if (wsum == 0)
    throw PoleExtractionError("pole_residues: weights sum to zero, numerator degree < k");

  double lo10 = opts.scan_log10_min > 0 ? -opts.scan_log10_min
                                        : -(1.7 * working_digits<Real>() + 12.0);
  double hi10 = opts.scan_log10_max;
  int per_decade = opts.points_per_decade;

  std::vector<Real> roots;
  for (int attempt = 0;; ++attempt) {
    roots.clear();
    const long steps = static_cast<long>((hi10 - lo10) * per_decade) + 1;
    Real prev_t = -pow(Real(10), Real(lo10));
    Real prev_q = detail::bary_denominator(r, prev_t);
    for (long s = 1; s < steps; ++s) {
      const Real t = -pow(Real(10), Real(lo10 + (hi10 - lo10) * double(s) / double(steps - 1)));
      const Real q = detail::bary_denominator(r, t);
      if (q == 0) {
        roots.push_back(t);
      } else if ((q > 0) != (prev_q > 0)) {
        // grid descends from -10^lo10 toward -10^hi10, so t < prev_t
        roots.push_back(detail::polish_root(r, t, prev_t));
      }
      prev_t = t;
      prev_q = q;
    }
    if (static_cast<int>(roots.size()) == k) break;
    if (static_cast<int>(roots.size()) > k)
      throw PoleExtractionError("pole_residues: more sign changes than poles; scan unstable");
    if (attempt >= opts.max_widenings)
      throw PoleExtractionError(
          "pole_residues: found " + std::to_string(roots.size()) + " of " + std::to_string(k) +
          " negative real poles; complex or non-negative poles violate the BURA structure");
    lo10 -= 12.0;
    hi10 += 6.0;
    per_decade *= 2;
  }

  PartialFractionForm<Real> pf;
  pf.constant = r.weights.dot(r.values) / wsum;
  pf.poles.resize(k);
  pf.residues.resize(k);
  // scan order is by descending t (ascending |t|), matching 0 > d_1 > ... > d_k
  for (int i = 0; i < k; ++i) {
    const Real d = roots[i];
    if (!(d < 0)) throw PoleExtractionError("pole_residues: non-negative pole");
    pf.poles[i] = d;
    pf.residues[i] =
        detail::bary_numerator(r, d) / detail::bary_denominator_derivative(r, d);
    if (pf.residues[i] >= 0) pf.residue_sign_warnings.push_back(i + 1);
  }
  for (int i = 0; i + 1 < k; ++i)
    if (!(pf.poles[i] > pf.poles[i + 1]))
      throw PoleExtractionError("pole_residues: poles not strictly ordered");
  return pf;
}

}  // namespace bura
