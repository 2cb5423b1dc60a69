#include "regpair/currents.hpp"

#include <cmath>

#include "regpair/roots.hpp"

namespace regpair {

Cx eval_cx(const RationalFunction1& f, const Cx& t) {
  if (f.is_zero()) throw PreconditionError("evaluating the zero function");
  Cx n = f.num.eval(t);
  Cx d = f.den.eval(t);
  if (n == Cx(0.0) || d == Cx(0.0))
    throw PreconditionError("evaluation at a zero/pole");
  Cx v = f.lead.to_complex() * n / d;
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw PreconditionError("non-finite evaluation");
  return v;
}

Cx dlog_cx(const RationalFunction1& f, const Cx& t) {
  if (f.is_zero()) throw PreconditionError("dlog of the zero function");
  Cx n = f.num.eval(t);
  Cx d = f.den.eval(t);
  if (n == Cx(0.0) || d == Cx(0.0))
    throw PreconditionError("dlog at a zero/pole");
  Cx v = f.num.derivative().eval(t) / n - f.den.derivative().eval(t) / d;
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw PreconditionError("non-finite logarithmic derivative");
  return v;
}

namespace {

double log_abs(const RationalFunction1& f, const Cx& t) {
  return std::log(std::abs(eval_cx(f, t)));
}

void check_m(size_t m) {
  if (m < 1 || m > 3)
    throw PreconditionError("current evaluation supports 1 to 3 functions");
}

}  // namespace

FormSample r_current_eval(const std::vector<RationalFunction1>& fs, const Cx& t0) {
  check_m(fs.size());
  const int m = static_cast<int>(fs.size());
  if (m == 1) {
    return {0, {log_abs(fs[0], t0)}};
  }
  std::vector<double> logs(m);
  std::vector<Cx> L(m);
  for (int k = 0; k < m; ++k) {
    logs[k] = log_abs(fs[k], t0);
    L[k] = dlog_cx(fs[k], t0);
  }
  if (m == 2) {
    // darg f = Im(L) dx + Re(L) dy
    double cx = logs[0] * L[1].imag() - logs[1] * L[0].imag();
    double cy = logs[0] * L[1].real() - logs[1] * L[0].real();
    return {1, {cx, cy}};
  }
  // m == 3: both wedge blocks have dx^dy coefficient Im(La conj(Lb)).
  static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                  {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  static const double signs[6] = {1, 1, 1, -1, -1, -1};
  double acc = 0.0;
  for (int s = 0; s < 6; ++s) {
    const int* p = perms[s];
    double wedge = std::imag(L[p[1]] * std::conj(L[p[2]]));
    acc += signs[s] * logs[p[0]] * (0.5 + 1.0 / 6.0) * wedge;
  }
  return {2, {acc}};
}

HoloFormSample omega_eval(const std::vector<RationalFunction1>& fs, const Cx& t0) {
  check_m(fs.size());
  const int m = static_cast<int>(fs.size());
  if (m >= 2) {
    // dt ^ dt = 0 on a curve
    for (const auto& f : fs) (void)dlog_cx(f, t0);  // still reject singular t0
    return {m, Cx(0.0, 0.0)};
  }
  return {1, dlog_cx(fs[0], t0)};
}

namespace {

void reject_singular_neighborhood(const std::vector<RationalFunction1>& fs, const Cx& t0,
                                  double radius) {
  for (const auto& f : fs) {
    if (f.is_zero()) throw PreconditionError("zero function");
    for (const Polynomial1* p : {&f.num, &f.den}) {
      if (p->degree() < 1) continue;
      for (const Cx& r : numeric_roots(*p)) {
        if (std::abs(r - t0) <= radius)
          throw PreconditionError("zero/pole inside the finite-difference neighborhood");
      }
    }
  }
}

}  // namespace

DRelationResult d_relation_check(const std::vector<RationalFunction1>& fs, const Cx& t0,
                                 double h) {
  if (h <= 0) throw PreconditionError("d_relation_check: h must be positive");
  if (fs.size() == 1) {
    const RationalFunction1& f = fs[0];
    if (f.is_zero()) throw PreconditionError("zero function");
    bool constant = f.is_constant();
    if (!constant) reject_singular_neighborhood(fs, t0, 2.0 * h);
    double fdx = (log_abs(f, t0 + Cx(h, 0)) - log_abs(f, t0 - Cx(h, 0))) / (2 * h);
    double fdy = (log_abs(f, t0 + Cx(0, h)) - log_abs(f, t0 - Cx(0, h))) / (2 * h);
    Cx L = dlog_cx(f, t0);
    // d log|f| = Re(L) dx - Im(L) dy
    double residual = std::abs(fdx - L.real()) + std::abs(fdy + L.imag());
    return {residual, residual / (h * h), constant};
  }
  if (fs.size() == 2) {
    bool structural_zero =
        fs[0] == fs[1] || (fs[0].is_constant() && fs[1].is_constant());
    if (!structural_zero) reject_singular_neighborhood(fs, t0, 2.0 * h);
    // Stokes loop around the square with corners t0 + (+-h +- ih);
    // the R_2 1-form is closed on a curve, so the residual is quadrature error.
    auto one_form = [&](const Cx& t, const Cx& dir) {
      FormSample s = r_current_eval(fs, t);
      return s.coeffs[0] * dir.real() + s.coeffs[1] * dir.imag();
    };
    const Cx corners[4] = {t0 + Cx(h, -h), t0 + Cx(h, h), t0 + Cx(-h, h), t0 + Cx(-h, -h)};
    double loop = 0.0;
    for (int e = 0; e < 4; ++e) {
      Cx a = corners[e];
      Cx b = corners[(e + 1) % 4];
      Cx dir = b - a;
      Cx mid = (a + b) * 0.5;
      loop += (one_form(a, dir) + 4.0 * one_form(mid, dir) + one_form(b, dir)) / 6.0;
    }
    double residual = std::abs(loop);
    return {residual, residual / (h * h), structural_zero};
  }
  throw PreconditionError("d_relation_check supports m = 1 or 2");
}

}  // namespace regpair
