#pragma once

#include <string>
#include <vector>

#include "extrilen/bricks.hpp"
#include "extrilen/subcat.hpp"

namespace extrilen {

/// Nonzero members M of `w` admitting no conflation A >-> M ->> C with A and
/// C nonzero members of `w`. Decomposable members are tested too.
ObjSet simp(const Instance& inst, const ObjSet& w);
/// Simple indecomposables of add(w); decomposables are never simple there.
IndecSet simp(const Instance& inst, const Subcat& w);

/// Every morphism n -> c with c in w.support is zero or a Θ-inflation.
bool is_left_schurian_for(const Instance& inst, IndecIndex n, const Subcat& w);
/// Every morphism c -> n with c in w.support is zero or a Θ-deflation.
bool is_right_schurian_for(const Instance& inst, IndecIndex n, const Subcat& w);

/// Closed under Θ-extensions and every simple object is left Schurian for
/// the subcategory. A decomposable simple (possible only in a set that is not
/// additively closed) counts as left Schurian only if Hom from each of its
/// summands into the subcategory vanishes, since class data cannot decide
/// whether a nonzero map out of a direct sum is an inflation.
bool is_left_schur(const Instance& inst, const ObjSet& e);
bool is_left_schur(const Instance& inst, const Subcat& e);
bool is_right_schur(const Instance& inst, const ObjSet& e);
bool is_right_schur(const Instance& inst, const Subcat& e);

struct VerificationReport {
  std::string summary;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct SchurBijectionOptions {
  /// Also scan every additively closed candidate (all subsets of
  /// indecomposables) for left Schur subcategories, independently of the
  /// monobrick route. Skipped above `exhaustive_limit` indecomposables.
  bool exhaustive = true;
  std::size_t exhaustive_limit = 16;
};

/// Checks that simp and filt are mutually inverse between monobricks and
/// left Schur subcategories.
VerificationReport verify_schur_bijection(const Instance& inst,
                                          const SchurBijectionOptions& options = {});

/// Simple objects of an ObjSet that are all indecomposable, as a BrickSet.
/// Throws std::logic_error if a simple object is decomposable.
BrickSet simple_indecomposables(const Instance& inst, const ObjSet& w);

}  // namespace extrilen
