#include "multispace/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace multispace {
namespace {

double simpson(double a, double fa, double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

struct Budget {
  std::size_t remaining;
};

double refine(const std::function<double(double)>& f, double a, double fa, double b,
              double fb, double m, double fm, double whole, double eps, Budget& budget) {
  if (budget.remaining == 0) {
    throw std::runtime_error("adaptive_simpson: subdivision cap exhausted before convergence");
  }
  --budget.remaining;
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  if (!std::isfinite(flm) || !std::isfinite(frm)) {
    throw std::runtime_error("adaptive_simpson: integrand returned a non-finite value");
  }
  const double left = simpson(a, fa, flm, m, fm);
  const double right = simpson(m, fm, frm, b, fb);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * eps) {
    return left + right + delta / 15.0;
  }
  return refine(f, a, fa, m, fm, lm, flm, left, 0.5 * eps, budget) +
         refine(f, m, fm, b, fb, rm, frm, right, 0.5 * eps, budget);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double rel_tol, std::size_t max_subdivisions) {
  if (!(rel_tol > 0.0)) {
    throw std::invalid_argument("adaptive_simpson: rel_tol must be positive");
  }
  if (!(lo <= hi)) {
    throw std::invalid_argument("adaptive_simpson: lo must not exceed hi");
  }
  if (lo == hi) return 0.0;

  const double fa = f(lo);
  const double fb = f(hi);
  const double m = 0.5 * (lo + hi);
  const double fm = f(m);
  if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm)) {
    throw std::runtime_error("adaptive_simpson: integrand returned a non-finite value");
  }
  const double whole = simpson(lo, fa, fm, hi, fb);

  // A coarse composite pass fixes the magnitude used to convert the relative
  // tolerance into an absolute budget (an L1-style scale, so nearly-cancelling
  // integrands still get a positive budget).
  double scale = 0.0;
  const int panels = 8;
  for (int i = 0; i < panels; ++i) {
    const double a = lo + (hi - lo) * i / panels;
    const double b = lo + (hi - lo) * (i + 1) / panels;
    const double pm = 0.5 * (a + b);
    scale += std::fabs(simpson(a, f(a), f(pm), b, f(b)));
  }
  if (!(scale > 0.0)) scale = std::fabs(whole);
  if (!(scale > 0.0)) scale = 1.0;

  Budget budget{max_subdivisions};
  return refine(f, lo, fa, hi, fb, m, fm, whole, rel_tol * scale, budget);
}

}  // namespace multispace
