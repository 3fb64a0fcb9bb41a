#include "extrilen/subcat.hpp"

#include <algorithm>

namespace extrilen {

namespace {

bool member(const ObjSet& s, const Obj& x) { return x.is_zero() || s.contains(x); }

}  // namespace

bool in_add(const Obj& x, const Subcat& s) {
  return std::all_of(x.summands().begin(), x.summands().end(),
                     [&](IndecIndex i) { return s.support.contains(i); });
}

ObjSet add_closure(const Instance& inst, const Subcat& s) {
  ObjSet out;
  for (const auto& x : inst.universe()) {
    if (in_add(x, s)) out.insert(x);
  }
  return out;
}

ObjSet as_objects(const IndecSet& s) {
  ObjSet out;
  for (IndecIndex i : s) out.insert(Obj::single(i));
  return out;
}

bool is_subset(const ObjSet& small, const ObjSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

ObjSet theta_extension_step(const Instance& inst, const ObjSet& first, const ObjSet& last) {
  ObjSet out;
  for (const auto& c : inst.conflations()) {
    if (inst.theta(c.b) > inst.theta_bound()) continue;
    if (member(first, c.a) && member(last, c.c)) out.insert(c.b);
  }
  return out;
}

ObjSet theta_extension_step(const Instance& inst, const Subcat& first, const Subcat& last) {
  return theta_extension_step(inst, add_closure(inst, first), add_closure(inst, last));
}

ObjSet filt(const Instance& inst, const ObjSet& x) {
  for (const auto& obj : x) {
    if (inst.theta(obj) > inst.theta_bound()) {
      throw std::domain_error("object " + inst.render(obj) + " lies above theta_bound");
    }
  }
  ObjSet closed = x;
  closed.insert(Obj{});
  while (true) {
    const ObjSet next = theta_extension_step(inst, closed, closed);
    const std::size_t before = closed.size();
    closed.insert(next.begin(), next.end());
    if (closed.size() == before) return closed;
  }
}

ObjSet filt(const Instance& inst, const Subcat& x) { return filt(inst, as_objects(x.support)); }

Subcat indec_support(const ObjSet& x) {
  Subcat out;
  for (const auto& obj : x) out.support.insert(obj.summands().begin(), obj.summands().end());
  return out;
}

bool is_additively_closed(const Instance& inst, const ObjSet& x) {
  ObjSet with_zero = x;
  with_zero.insert(Obj{});
  return with_zero == add_closure(inst, indec_support(x));
}

namespace {

template <typename Pred>
Subcat scan_ends(const Instance& inst, bool first_end, Pred middle_ok) {
  Subcat out;
  for (const auto& c : inst.conflations()) {
    const Obj& end = first_end ? c.a : c.c;
    if (end.is_indecomposable() && middle_ok(c.b)) out.support.insert(end.summands().front());
  }
  return out;
}

}  // namespace

Subcat sub(const Instance& inst, const Subcat& s) {
  return scan_ends(inst, true, [&](const Obj& b) { return in_add(b, s); });
}

Subcat sub(const Instance& inst, const ObjSet& s) {
  return scan_ends(inst, true, [&](const Obj& b) { return s.contains(b); });
}

Subcat fac(const Instance& inst, const Subcat& s) {
  return scan_ends(inst, false, [&](const Obj& b) { return in_add(b, s); });
}

Subcat fac(const Instance& inst, const ObjSet& s) {
  return scan_ends(inst, false, [&](const Obj& b) { return s.contains(b); });
}

ObjSet f_theta(const Instance& inst, const Subcat& s) { return filt(inst, sub(inst, s)); }
ObjSet f_theta(const Instance& inst, const ObjSet& s) { return filt(inst, sub(inst, s)); }
ObjSet t_theta(const Instance& inst, const Subcat& s) { return filt(inst, fac(inst, s)); }
ObjSet t_theta(const Instance& inst, const ObjSet& s) { return filt(inst, fac(inst, s)); }

Subcat left_perp(const Instance& inst, const Subcat& s) {
  Subcat out;
  for (IndecIndex m : inst.all_indecomposables()) {
    if (std::none_of(s.support.begin(), s.support.end(),
                     [&](IndecIndex x) { return inst.has_hom(m, x); })) {
      out.support.insert(m);
    }
  }
  return out;
}

Subcat right_perp(const Instance& inst, const Subcat& s) {
  Subcat out;
  for (IndecIndex m : inst.all_indecomposables()) {
    if (std::none_of(s.support.begin(), s.support.end(),
                     [&](IndecIndex x) { return inst.has_hom(x, m); })) {
      out.support.insert(m);
    }
  }
  return out;
}

}  // namespace extrilen
