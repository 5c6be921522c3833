#pragma once

#include <array>
#include <string>
#include <vector>

#include "preper/algebra/unipoly.hpp"
#include "preper/dynatomic/dynatomic.hpp"
#include "preper/p1dyn/map.hpp"

namespace preper {

/// One-parameter family [F : G] with coefficients in Q[param], together with
/// the values where it is excluded and the rational map param -> a that
/// identifies it with the family A member phi_a.
struct MapFamily {
  char id;
  std::string param;
  QuadForms<QPoly> forms;
  std::vector<Rational> excluded;
  bool excludes_infinity = false;
  QPoly a_num, a_den;  ///< a = a_num(param) / a_den(param)
};

/// Families 'A', 'B', 'C', 'D', 'T'. Throws std::out_of_range otherwise.
const MapFamily& family(char id);
const std::vector<char>& family_ids();

/// Exact substitution; throws std::domain_error naming the exclusion.
QuadRatMap family_specialize(const MapFamily& fam, const Rational& value);

/// Parameter transform to family A; throws std::domain_error at a pole or
/// excluded value.
Rational parameter_to_a(const MapFamily& fam, const Rational& value);

/// Phi*_n of the family over Q[param].
DynatomicPoly<QPoly> family_dynatomic(const MapFamily& fam, int n);

}  // namespace preper

namespace preper {

/// Preimage condition phi(w) = num / den for a family member, cleared of
/// denominators: den(param) F(w) - num(param) G(w), as Q[param][w], with its
/// discriminant in w.
struct PreimageCurve {
  QQPoly equation;
  QPoly discriminant;
};
PreimageCurve preimage_curve(const MapFamily& fam, const QPoly& num, const QPoly& den);

}  // namespace preper
