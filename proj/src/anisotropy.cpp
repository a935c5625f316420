#include "anip/anisotropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace anip {

double harmonic_mean(const std::vector<double>& p) {
  if (p.empty()) throw std::invalid_argument("harmonic_mean: empty vector");
  double inv_sum = 0.0;
  for (double pi : p) {
    if (!(pi > 0.0)) throw std::invalid_argument("harmonic_mean: entries must be > 0");
    inv_sum += 1.0 / pi;
  }
  return static_cast<double>(p.size()) / inv_sum;
}

AnisotropyParams validate_exponents(const std::vector<double>& p, int n) {
  if (n < 1) throw std::invalid_argument("validate_exponents: N must be >= 1");
  if (static_cast<int>(p.size()) != n)
    throw std::invalid_argument("validate_exponents: length(p) != N");
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(p[i]))
      throw std::invalid_argument("validate_exponents: p[" + std::to_string(i) + "] is not finite");
    if (!(p[i] > 1.0))
      throw std::invalid_argument("validate_exponents: p[" + std::to_string(i) + "] <= 1");
    if (i > 0 && p[i] < p[i - 1])
      throw std::invalid_argument("validate_exponents: exponents not ascending");
  }

  AnisotropyParams out;
  out.n = n;
  out.p = p;
  out.pbar = harmonic_mean(p);
  out.pbar2 = out.pbar * (1.0 + 2.0 / n);
  out.lambda = n * (out.pbar - 2.0) + out.pbar;
  out.alpha = n / out.lambda;
  out.alpha_i.resize(n);
  out.pconj.resize(n);
  for (int i = 0; i < n; ++i) {
    out.alpha_i[i] = (1.0 + 2.0 * out.alpha) / p[i] - out.alpha;
    out.pconj[i] = p[i] / (p[i] - 1.0);
  }
  out.in_range = (2.0 < p.front()) && (p.back() < out.pbar * (1.0 + 1.0 / n)) && (out.pbar < n);
  return out;
}

BarenblattExponents barenblatt_exponents(const AnisotropyParams& params) {
  return {params.lambda, params.alpha, params.alpha_i};
}

}  // namespace anip
