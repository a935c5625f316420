#pragma once

#include <vector>

namespace anip {

/// Exponent vector p_1 <= ... <= p_N and every scalar derived from it.
/// All derived quantities are computed once at construction and frozen;
/// instances are immutable and freely shareable across threads.
struct AnisotropyParams {
  int n = 0;                     // spatial dimension N
  std::vector<double> p;         // ascending exponents, p_i > 1
  double pbar = 0.0;             // harmonic mean N (sum 1/p_i)^-1
  double pbar2 = 0.0;            // pbar (1 + 2/N)
  double lambda = 0.0;           // N (pbar - 2) + pbar
  double alpha = 0.0;            // N / lambda
  std::vector<double> alpha_i;   // (1 + 2 alpha)/p_i - alpha
  std::vector<double> pconj;     // p_i / (p_i - 1)
  bool in_range = false;         // 2 < p_1, p_N < pbar (1 + 1/N), pbar < N
};

/// Harmonic mean N (sum 1/p_i)^-1. Requires every entry > 0.
double harmonic_mean(const std::vector<double>& p);

/// Builds fully populated params from an ascending exponent vector.
/// Construction succeeds for any ascending p with p_i > 1, even outside
/// the range flagged by in_range (the solver is used more broadly than
/// the Harnack theory). Rejects non-ascending input instead of sorting,
/// so axis identities stay stable. Throws std::invalid_argument.
AnisotropyParams validate_exponents(const std::vector<double>& p, int n);

struct BarenblattExponents {
  double lambda = 0.0;
  double alpha = 0.0;
  std::vector<double> alpha_i;
};

/// The scaling triple (lambda, alpha, alpha_i); sum(alpha_i) == alpha.
BarenblattExponents barenblatt_exponents(const AnisotropyParams& params);

}  // namespace anip
