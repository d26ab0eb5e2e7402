#pragma once
// Ring operations on Schur vectors: multiplication through the LR engine,
// complete homogeneous / elementary images, supports, and the h-difference
// positivity criterion.

#include <cstdlib>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "schurpos/lr.hpp"

namespace schurpos {

// Process-wide cache of straight-shape products keyed by the unordered pair.
// Fills are idempotent, so concurrent computation of the same key is safe;
// whoever inserts first wins. The entry cap is read from SCHURPOS_MEMO_MAX
// once; past the cap the cache stops growing and callers recompute.
class ProductCache {
 public:
  static ProductCache& instance() {
    static ProductCache cache;
    return cache;
  }

  std::shared_ptr<const SchurVector> get(const Partition& mu,
                                         const Partition& nu) {
    auto key = canonical_key(mu, nu);
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    auto value = std::make_shared<const SchurVector>(
        skew_schur_expand(star_concatenate(whole(key.first), whole(key.second))));
    {
      std::unique_lock lock(mutex_);
      if (map_.size() < cap_) {
        auto [it, inserted] = map_.try_emplace(std::move(key), value);
        return it->second;
      }
    }
    return value;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  ProductCache() {
    if (const char* env = std::getenv("SCHURPOS_MEMO_MAX")) {
      long v = std::atol(env);
      if (v >= 0) cap_ = static_cast<std::size_t>(v);
    }
  }

  static std::pair<Partition, Partition> canonical_key(const Partition& mu,
                                                       const Partition& nu) {
    return mu < nu ? std::make_pair(nu, mu) : std::make_pair(mu, nu);
  }

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::pair<Partition, Partition>,
                     std::shared_ptr<const SchurVector>, PartitionPairHash>
      map_;
  std::size_t cap_ = 100000;
};

// Expansion of s_mu * s_nu, without touching the shared cache.
inline SchurVector schur_product_uncached(const Partition& mu,
                                          const Partition& nu) {
  return skew_schur_expand(star_concatenate(whole(mu), whole(nu)));
}

inline std::shared_ptr<const SchurVector> schur_product(const Partition& mu,
                                                        const Partition& nu) {
  return ProductCache::instance().get(mu, nu);
}

// Bilinear extension of basis multiplication.
inline SchurVector multiply(const SchurVector& a, const SchurVector& b) {
  SchurVector out;
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) {
      coeff_t scale = checked_mul(cp, cq);
      auto prod = schur_product(p, q);
      for (const auto& [theta, c] : prod->terms())
        out.add_term(theta, checked_mul(scale, c));
    }
  return out;
}

// Product of two skew Schur functions, computed as the expansion of their
// disjoint concatenation.
inline SchurVector multiply_skew(const SkewShape& a, const SkewShape& b) {
  return skew_schur_expand(star_concatenate(a, b));
}

// Partitions appearing with nonzero coefficient in s_mu s_nu, in increasing
// lexicographic order.
inline std::vector<Partition> support(const Partition& mu,
                                      const Partition& nu) {
  auto prod = schur_product(mu, nu);
  std::vector<Partition> out;
  out.reserve(prod->term_count());
  for (const auto& [p, c] : prod->terms()) out.push_back(p);
  return out;
}

inline std::vector<Partition> support(const SkewShape& a, const SkewShape& b) {
  SchurVector prod = multiply_skew(a, b);
  std::vector<Partition> out;
  out.reserve(prod.term_count());
  for (const auto& [p, c] : prod.terms()) out.push_back(p);
  return out;
}

// h_mu = product of the one-row Schur functions of the parts.
inline SchurVector h_to_schur(const Partition& mu) {
  SchurVector v = SchurVector::one();
  for (int i = 0; i < mu.length(); ++i)
    v = multiply(v, SchurVector::basis(Partition{mu.part(i)}));
  return v;
}

// e_mu = product of the one-column Schur functions of the parts.
inline SchurVector e_to_schur(const Partition& mu) {
  SchurVector v = SchurVector::one();
  for (int i = 0; i < mu.length(); ++i)
    v = multiply(v, SchurVector::basis(Partition::rectangle(1, mu.part(i))));
  return v;
}

// h_theta - h_pi is Schur-positive exactly when theta is dominated by pi.
// The explicit expansions agree with this shortcut; the test suite
// cross-validates.
inline bool h_difference_positive(const Partition& theta,
                                  const Partition& pi) {
  if (theta.sum() != pi.sum())
    fail(errc::sum_mismatch, "h difference needs equal weights");
  return dominance_leq(theta, pi);
}

}  // namespace schurpos
