#pragma once

#include <memory>

#include "qkloc/cyclotomic.hpp"

namespace qkloc {

/// Session-wide parameters shared by every value: the dimension N of CP^N
/// (so N+1 torus variables Lambda_0..Lambda_N) and the root order M. Torus
/// exponents live in (1/M)Z and roots of unity in Q(zeta_M).
class AlgebraContext {
 public:
  static std::shared_ptr<const AlgebraContext> create(int dimension, int root_order);

  int dimension() const noexcept { return dimension_; }
  int num_vars() const noexcept { return dimension_ + 1; }
  int root_order() const noexcept { return root_order_; }
  const CyclotomicField& field() const noexcept { return *field_; }

  bool same_session(const AlgebraContext& other) const noexcept {
    return dimension_ == other.dimension_ && root_order_ == other.root_order_;
  }

 private:
  AlgebraContext(int dimension, int root_order);

  int dimension_;
  int root_order_;
  const CyclotomicField* field_;
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

// lcm(1..max_degree); 1 for max_degree <= 1.
int default_root_order(int max_degree);

// Throws ConfigurationError unless a and b describe the same session.
void require_same_session(const AlgebraContext& a, const AlgebraContext& b);

// Throws RootOrderExceeded unless m divides the root order.
void require_root(const AlgebraContext& ctx, int m);

}  // namespace qkloc
