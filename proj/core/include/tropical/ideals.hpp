#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tropical/polynomial.hpp"

namespace tropical {

/// Finitely generated ideal. Generators are stored fully closed, without duplicates;
/// -inf generators are dropped.
class Ideal {
 public:
  Ideal(std::size_t arity, const std::vector<Polynomial>& generators);

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

 private:
  std::size_t arity_;
  std::vector<Polynomial> gens_;
};

struct MembershipResult {
  bool found = false;
  std::vector<Polynomial> combiners;  // one per generator when found
  /// Always true: a negative answer only means no combination was found within the
  /// degree bound.
  bool heuristic = true;
};

MembershipResult ideal_member_syntactic(const Polynomial& f, const Ideal& ideal);

bool is_proper(const Ideal& ideal);

struct Witness {
  std::vector<TropicalNumber> point;
};
struct EmptinessProof {
  Polynomial generator;  // a tangible constant generator
};
std::variant<Witness, EmptinessProof> weak_nullstellensatz(const Ideal& ideal);

bool is_ghost_potent(const Polynomial& f);

struct RadicalCertificate {
  unsigned m = 1;
  std::vector<Polynomial> combiners;  // one per generator
};

/// Decides whether the full closure of f lies in the radical of a univariate ideal and
/// returns a certificate f̃^m = ⊕ h_j g_j when it does.
std::optional<RadicalCertificate> radical_member_1d(const Polynomial& f, const Ideal& ideal);

/// Evaluation points used to confirm certificates: a tangible grid spanning every corner,
/// its ghost copy, the corners themselves in both tags, and -inf.
std::vector<TropicalNumber> certificate_grid(const std::vector<Polynomial>& polys, std::size_t min_points);

}  // namespace tropical
