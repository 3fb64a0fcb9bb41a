#pragma once

// Closure operators over subcategories. A Subcat is the additive closure of a
// set of indecomposables; an ObjSet is an explicit bounded set of objects for
// results that need not be closed under summands.

#include "extrilen/instance.hpp"

namespace extrilen {

struct Subcat {
  IndecSet support;

  auto operator<=>(const Subcat&) const = default;
};

bool in_add(const Obj& x, const Subcat& s);

/// Objects of add(s) with theta <= theta_bound, including zero.
ObjSet add_closure(const Instance& inst, const Subcat& s);

/// The objects b of every conflation a >-> b ->> c with a in `first` and c in
/// `last`, theta(b) <= theta_bound. Zero counts as a member of every set.
ObjSet theta_extension_step(const Instance& inst, const ObjSet& first, const ObjSet& last);
ObjSet theta_extension_step(const Instance& inst, const Subcat& first, const Subcat& last);

/// Least set containing zero and `x` closed under theta_extension_step.
/// Throws std::domain_error if `x` has a member above the theta bound.
ObjSet filt(const Instance& inst, const ObjSet& x);
ObjSet filt(const Instance& inst, const Subcat& x);

Subcat indec_support(const ObjSet& x);
bool is_additively_closed(const Instance& inst, const ObjSet& x);

/// Indecomposables admitting a Θ-inflation into an object of `s`.
Subcat sub(const Instance& inst, const Subcat& s);
Subcat sub(const Instance& inst, const ObjSet& s);
/// Indecomposables admitting a Θ-deflation from an object of `s`.
Subcat fac(const Instance& inst, const Subcat& s);
Subcat fac(const Instance& inst, const ObjSet& s);

/// Smallest torsion-free class containing `s`: filt(sub(s)).
ObjSet f_theta(const Instance& inst, const Subcat& s);
ObjSet f_theta(const Instance& inst, const ObjSet& s);
/// Smallest torsion class containing `s`: filt(fac(s)).
ObjSet t_theta(const Instance& inst, const Subcat& s);
ObjSet t_theta(const Instance& inst, const ObjSet& s);

/// {M : Hom(M, s) = 0}
Subcat left_perp(const Instance& inst, const Subcat& s);
/// {M : Hom(s, M) = 0}
Subcat right_perp(const Instance& inst, const Subcat& s);

/// Indecomposables as single-summand objects.
ObjSet as_objects(const IndecSet& s);

bool is_subset(const ObjSet& small, const ObjSet& big);

}  // namespace extrilen
