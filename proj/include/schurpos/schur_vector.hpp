#pragma once
// Sparse integer linear combinations of Schur functions. Only linear
// structure lives here; multiplication needs the Littlewood-Richardson
// engine and sits in algebra.hpp.

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "schurpos/partition.hpp"

namespace schurpos {

class SchurVector {
 public:
  using Terms = std::map<Partition, coeff_t>;

  SchurVector() = default;

  static SchurVector basis(Partition p, coeff_t c = 1) {
    SchurVector v;
    if (c != 0) v.terms_.emplace(std::move(p), c);
    return v;
  }

  // Adopts a term map; zero coefficients are dropped.
  static SchurVector from_terms(Terms t) {
    SchurVector v;
    v.terms_ = std::move(t);
    std::erase_if(v.terms_, [](const auto& kv) { return kv.second == 0; });
    return v;
  }

  static SchurVector one() { return basis(Partition{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  coeff_t coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
  }

  // Adds c*s_p, dropping the term if the coefficient cancels.
  void add_term(const Partition& p, coeff_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  SchurVector& operator+=(const SchurVector& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }

  SchurVector& operator-=(const SchurVector& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, checked_mul(c, -1));
    return *this;
  }

  SchurVector& operator*=(coeff_t k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [p, c] : terms_) c = checked_mul(c, k);
    return *this;
  }

  friend SchurVector operator+(SchurVector a, const SchurVector& b) {
    a += b;
    return a;
  }
  friend SchurVector operator-(SchurVector a, const SchurVector& b) {
    a -= b;
    return a;
  }
  friend SchurVector operator-(SchurVector a) {
    a *= -1;
    return a;
  }
  friend SchurVector operator*(SchurVector a, coeff_t k) {
    a *= k;
    return a;
  }
  friend SchurVector operator*(coeff_t k, SchurVector a) {
    a *= k;
    return a;
  }

  friend bool operator==(const SchurVector& a, const SchurVector& b) = default;

 private:
  Terms terms_;
};

// All stored coefficients strictly positive, or the zero vector. Zero counts
// as positive so that "difference is Schur-positive" accepts equal products;
// poset construction adds its own nonzero test for strict order.
inline bool is_schur_positive(const SchurVector& v) {
  for (const auto& [p, c] : v.terms())
    if (c < 0) return false;
  return true;
}

// Coefficientwise a <= b, without materializing the difference.
inline bool dominated_by(const SchurVector& a, const SchurVector& b) {
  for (const auto& [p, c] : a.terms())
    if (c > b.coefficient(p)) return false;
  return true;
}

// The involution sending s_mu to s_{mu'}.
inline SchurVector omega(const SchurVector& v) {
  SchurVector out;
  for (const auto& [p, c] : v.terms()) out.add_term(conjugate(p), c);
  return out;
}

inline std::string to_string(const SchurVector& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [p, c] : v.terms()) {
    if (!s.empty()) s += c >= 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    coeff_t a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + "*";
    s += "s[" + to_string(p) + "]";
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const SchurVector& v) {
  return os << to_string(v);
}

}  // namespace schurpos
