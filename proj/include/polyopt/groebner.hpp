#pragma once

// Buchberger's algorithm over Q and the ideal toolkit built on it.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "polyopt/mpoly.hpp"

namespace polyopt {

/// Reduced Groebner basis (monic, sorted by increasing leading monomial). The
/// unit ideal yields {1}; the zero ideal yields {}.
std::vector<MPoly> groebner_basis(const std::vector<MPoly>& generators, const MonomialOrder& order);

/// Full normal form of p modulo `basis` under `order` (exact, not up to scaling).
MPoly normal_form(const MPoly& p, const std::vector<MPoly>& basis, const MonomialOrder& order);

/// Repeated normal forms against one fixed basis.
class NormalFormer {
 public:
  NormalFormer(const std::vector<MPoly>& basis, const MonomialOrder& order);
  MPoly operator()(const MPoly& p) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Counters for the Buchberger loop, accumulated per thread.
struct GroebnerStats {
  std::size_t bases = 0;
  std::size_t pairs = 0;
  std::size_t zero_reductions = 0;
};
GroebnerStats& groebner_stats();

class Ideal {
 public:
  Ideal() = default;
  /// Zero generators are dropped.
  Ideal(RingPtr ring, std::vector<MPoly> generators);

  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->size(); }
  const std::vector<MPoly>& generators() const { return gens_; }

  /// Cached reduced basis; computed at most once per order and ideal value.
  const std::vector<MPoly>& basis(const MonomialOrder& order) const;
  /// Grevlex basis.
  const std::vector<MPoly>& basis() const;

  bool is_unit() const;
  bool contains(const MPoly& p) const;
  /// Ideal with extra generators (cache not shared).
  Ideal plus(const std::vector<MPoly>& more) const;
  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const std::vector<MPoly>>> bases;
  };

  RingPtr ring_;
  std::vector<MPoly> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Krull dimension, -1 for the unit ideal.
int dimension(const Ideal& ideal);
/// Size of the largest variable subset carrying no leading monomial.
int dimension_from_leading_monomials(const std::vector<Monomial>& leading, std::size_t nvars);
bool is_zero_dimensional(const Ideal& ideal);

/// I ∩ Q[remaining variables], expressed in the same ring.
Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::size_t>& drop);

/// I : g^inf. Throws std::invalid_argument for g = 0.
Ideal saturate(const Ideal& ideal, const MPoly& g);
/// I : J^inf as the intersection of I : g^inf over the generators of J.
Ideal saturate_ideal(const Ideal& ideal, const Ideal& by);
/// I ∩ J
Ideal intersect(const Ideal& a, const Ideal& b);

/// True iff Q[free]-module Q[X]/I is finite, i.e. for every other variable
/// X_i the ideal holds a polynomial monic in X_i with coefficients in Q[free].
bool is_noether_position(const Ideal& ideal, const std::vector<std::size_t>& free_vars);
/// Noether position with respect to X_1..X_d. Throws std::invalid_argument
/// when dimension(I) != d.
bool noether_position_check(const Ideal& ideal, int d);

}  // namespace polyopt
