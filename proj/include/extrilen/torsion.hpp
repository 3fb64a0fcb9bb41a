#pragma once

#include <vector>

#include "extrilen/schur.hpp"

namespace extrilen {

/// sub(f) ⊆ f and add(f) is closed under Θ-extensions.
bool is_torsion_free(const Instance& inst, const Subcat& f);
/// fac(t) ⊆ t and add(t) is closed under Θ-extensions.
bool is_torsion(const Instance& inst, const Subcat& t);

/// Exhaustive over subsets of indecomposables, in mask order of canonical
/// indices (so the zero subcategory comes first).
std::vector<Subcat> enumerate_torsion_free(const Instance& inst);
std::vector<Subcat> enumerate_torsion(const Instance& inst);

enum class PerpDirection {
  kLeftOfTorsionFree,  // F ↦ ⊥F
  kRightOfTorsion,     // T ↦ T⊥
};

/// Throws std::invalid_argument if the input fails its class test.
Subcat perp_pair(const Instance& inst, const Subcat& s, PerpDirection direction);

// The cofinal-extension operations require monobrick arguments and throw
// std::invalid_argument otherwise.

/// n contains m, each member of n has a Θ-inflation into a single member of
/// m, and each member of n is left Schurian for sub(m). Reflexive.
bool is_cofinal_extension(const Instance& inst, const BrickSet& m, const BrickSet& n);

/// simp(f_theta(m)). Checks that the result is a cofinal extension of m and a
/// fixed point of the closure; throws std::logic_error otherwise.
BrickSet cofinal_closure(const Instance& inst, const BrickSet& m);

/// Union of every monobrick n ⊇ m that is a cofinal extension of m. Pass the
/// instance's monobricks to avoid re-enumerating them.
BrickSet cofinal_closure_bruteforce(const Instance& inst, const BrickSet& m,
                                    const std::vector<BrickSet>* monobricks = nullptr);

bool is_cofinally_closed(const Instance& inst, const BrickSet& m);

/// Checks the correspondence between torsion-free classes and cofinally
/// closed monobricks, torsion-free ⊆ left Schur, the closure square
/// f_theta(filt(m)) = filt(closure(m)), closure against the brute-force
/// union, idempotence and uniqueness of cofinally closed extensions.
VerificationReport verify_torsion_free_classification(const Instance& inst);

}  // namespace extrilen
