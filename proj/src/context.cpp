#include "qkloc/context.hpp"

#include <numeric>
#include <string>

#include "qkloc/errors.hpp"

namespace qkloc {

AlgebraContext::AlgebraContext(int dimension, int root_order)
    : dimension_(dimension), root_order_(root_order), field_(&CyclotomicField::get(root_order)) {}

std::shared_ptr<const AlgebraContext> AlgebraContext::create(int dimension, int root_order) {
  if (dimension < 0) throw ConfigurationError("dimension N must be non-negative");
  if (root_order < 1) throw ConfigurationError("root order M must be positive");
  return std::shared_ptr<const AlgebraContext>(new AlgebraContext(dimension, root_order));
}

int default_root_order(int max_degree) {
  int m = 1;
  for (int k = 2; k <= max_degree; ++k) m = std::lcm(m, k);
  return m;
}

void require_same_session(const AlgebraContext& a, const AlgebraContext& b) {
  if (!a.same_session(b)) {
    throw ConfigurationError("session mismatch: (N=" + std::to_string(a.dimension()) +
                             ", M=" + std::to_string(a.root_order()) + ") vs (N=" +
                             std::to_string(b.dimension()) + ", M=" + std::to_string(b.root_order()) +
                             ")");
  }
}

void require_root(const AlgebraContext& ctx, int m) {
  if (m < 1 || ctx.root_order() % m != 0) {
    throw RootOrderExceeded("root order " + std::to_string(ctx.root_order()) +
                            " is not divisible by " + std::to_string(m));
  }
}

}  // namespace qkloc
