#include "dianorm/norms.hpp"

#include "dianorm/decomposition.hpp"

namespace dianorm {

double nuclear_norm(const ComplexMatrix& x) {
  double s = 0.0;
  for (double sigma : singular_values(x)) s += sigma;
  return s;
}

double frobenius_norm(const ComplexMatrix& x) { return entrywise_frobenius(x); }

double spectral_norm(const ComplexMatrix& x) {
  const auto sigma = singular_values(x);
  return sigma.empty() ? 0.0 : sigma.front();
}

}  // namespace dianorm
