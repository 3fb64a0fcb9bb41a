#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "extrilen/instance.hpp"

namespace extrilen {

/// A set of pairwise non-isomorphic bricks.
using BrickSet = IndecSet;

// Each predicate throws std::invalid_argument if a member is not flagged as a
// brick.

/// Every morphism between members is zero or a Θ-inflation.
bool is_monobrick(const Instance& inst, const BrickSet& m);
/// Every morphism between members is zero or a Θ-deflation.
bool is_epibrick(const Instance& inst, const BrickSet& m);
/// No nonzero morphisms between distinct members.
bool is_semibrick(const Instance& inst, const BrickSet& m);

/// Decides whether `candidate` may join `members`, given `members` already
/// satisfies the property.
using BrickExtensionTest =
    std::function<bool(const Instance&, const BrickSet& members, IndecIndex candidate)>;

/// All subsets of the instance's bricks satisfying a downward-closed property,
/// found by depth-first search that never extends a failing set. Ordered by
/// size, then lexicographically in canonical index order.
std::vector<BrickSet> enumerate_brick_sets(const Instance& inst, const BrickExtensionTest& test);

std::vector<BrickSet> enumerate_monobricks(const Instance& inst);
std::vector<BrickSet> enumerate_epibricks(const Instance& inst);
std::vector<BrickSet> enumerate_semibricks(const Instance& inst);

/// Θ₁ ⊂ Θ₂ ⊂ ... built from minimal-length objects by adding, at each length
/// n, the objects with no nonzero morphisms to or from the previous stratum.
struct Stratification {
  int base_theta = 0;
  /// strata[k] holds the stratum at length base_theta + k.
  std::vector<BrickSet> strata;
  BrickSet infinity;
  /// Set when the minimal length is not 1.
  std::optional<std::string> warning;
};

Stratification theta_stratification(const Instance& inst);

/// `s` is a semibrick whose filtration closure holds every indecomposable.
bool check_simple_minded(const Instance& inst, const BrickSet& s);

/// `{a, b}` in canonical order, or `∅`.
std::string render_set(const Instance& inst, const IndecSet& s);

}  // namespace extrilen
