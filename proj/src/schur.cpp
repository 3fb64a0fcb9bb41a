#include "extrilen/schur.hpp"

#include <algorithm>

namespace extrilen {

ObjSet simp(const Instance& inst, const ObjSet& w) {
  ObjSet out;
  for (const auto& m : w) {
    if (m.is_zero()) continue;
    const bool splits = std::any_of(
        inst.conflations().begin(), inst.conflations().end(), [&](const Conflation& c) {
          return c.b == m && !c.a.is_zero() && !c.c.is_zero() && w.contains(c.a) &&
                 w.contains(c.c);
        });
    if (!splits) out.insert(m);
  }
  return out;
}

IndecSet simp(const Instance& inst, const Subcat& w) {
  IndecSet out;
  for (IndecIndex m : w.support) {
    const Obj x = Obj::single(m);
    const bool splits = std::any_of(
        inst.conflations().begin(), inst.conflations().end(), [&](const Conflation& c) {
          return c.b == x && !c.a.is_zero() && !c.c.is_zero() && in_add(c.a, w) &&
                 in_add(c.c, w);
        });
    if (!splits) out.insert(m);
  }
  return out;
}

bool is_left_schurian_for(const Instance& inst, IndecIndex n, const Subcat& w) {
  return std::all_of(w.support.begin(), w.support.end(), [&](IndecIndex c) {
    const auto classes = inst.classes_between(n, c);
    return std::all_of(classes.begin(), classes.end(),
                       [](const MorClass* f) { return f->is_inflation; });
  });
}

bool is_right_schurian_for(const Instance& inst, IndecIndex n, const Subcat& w) {
  return std::all_of(w.support.begin(), w.support.end(), [&](IndecIndex c) {
    const auto classes = inst.classes_between(c, n);
    return std::all_of(classes.begin(), classes.end(),
                       [](const MorClass* f) { return f->is_deflation; });
  });
}

namespace {

bool extension_closed(const Instance& inst, const ObjSet& e) {
  ObjSet with_zero = e;
  with_zero.insert(Obj{});
  return is_subset(theta_extension_step(inst, with_zero, with_zero), with_zero);
}

bool decomposable_orthogonal(const Instance& inst, const Obj& m, const Subcat& w, bool left) {
  return std::all_of(m.summands().begin(), m.summands().end(), [&](IndecIndex s) {
    return std::none_of(w.support.begin(), w.support.end(), [&](IndecIndex c) {
      return left ? inst.has_hom(s, c) : inst.has_hom(c, s);
    });
  });
}

bool schur_impl(const Instance& inst, const ObjSet& e, bool left) {
  if (!extension_closed(inst, e)) return false;
  const Subcat support = indec_support(e);
  for (const auto& m : simp(inst, e)) {
    const bool ok = m.is_indecomposable()
                        ? (left ? is_left_schurian_for(inst, m.summands().front(), support)
                                : is_right_schurian_for(inst, m.summands().front(), support))
                        : decomposable_orthogonal(inst, m, support, left);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool is_left_schur(const Instance& inst, const ObjSet& e) { return schur_impl(inst, e, true); }
bool is_left_schur(const Instance& inst, const Subcat& e) {
  return schur_impl(inst, add_closure(inst, e), true);
}
bool is_right_schur(const Instance& inst, const ObjSet& e) { return schur_impl(inst, e, false); }
bool is_right_schur(const Instance& inst, const Subcat& e) {
  return schur_impl(inst, add_closure(inst, e), false);
}

BrickSet simple_indecomposables(const Instance& inst, const ObjSet& w) {
  BrickSet out;
  for (const auto& m : simp(inst, w)) {
    if (!m.is_indecomposable()) {
      throw std::logic_error("decomposable simple object " + inst.render(m));
    }
    out.insert(m.summands().front());
  }
  return out;
}

VerificationReport verify_schur_bijection(const Instance& inst,
                                          const SchurBijectionOptions& options) {
  VerificationReport report;
  const auto monobricks = enumerate_monobricks(inst);

  std::set<ObjSet> images;
  for (const auto& m : monobricks) {
    const ObjSet e = filt(inst, Subcat{m});
    images.insert(e);
    if (!is_left_schur(inst, e)) {
      report.failures.push_back("filt of monobrick " + render_set(inst, m) + " is not left Schur");
    }
    const ObjSet simples = simp(inst, e);
    if (simples != as_objects(m)) {
      report.failures.push_back("simp(filt(" + render_set(inst, m) + ")) = " +
                                render_set(inst, indec_support(simples).support) +
                                " differs from the monobrick");
    }
  }
  if (images.size() != monobricks.size()) {
    report.failures.push_back("filt is not injective on monobricks");
  }

  if (options.exhaustive && inst.size() <= options.exhaustive_limit) {
    const std::size_t n = inst.size();
    std::size_t found = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Subcat candidate;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1U) candidate.support.insert(static_cast<IndecIndex>(i));
      }
      const ObjSet e = add_closure(inst, candidate);
      if (!is_left_schur(inst, e)) continue;
      ++found;
      const ObjSet simples = simp(inst, e);
      const Subcat simple_support = indec_support(simples);
      const bool indecomposable_simples = std::all_of(
          simples.begin(), simples.end(), [](const Obj& x) { return x.is_indecomposable(); });
      const bool all_bricks =
          std::all_of(simple_support.support.begin(), simple_support.support.end(),
                      [&](IndecIndex i) { return inst.object(i).is_brick; });
      if (!indecomposable_simples || !all_bricks ||
          !is_monobrick(inst, simple_support.support)) {
        report.failures.push_back("simp of left Schur add" + render_set(inst, candidate.support) +
                                  " is not a monobrick");
        continue;
      }
      if (filt(inst, simples) != e) {
        report.failures.push_back("filt(simp(add" + render_set(inst, candidate.support) +
                                  ")) differs from the subcategory");
      }
      if (!images.contains(e)) {
        report.failures.push_back("left Schur add" + render_set(inst, candidate.support) +
                                  " is not the filt of any monobrick");
      }
    }
    const auto add_closed_images = std::count_if(
        images.begin(), images.end(), [&](const ObjSet& e) { return is_additively_closed(inst, e); });
    if (static_cast<std::size_t>(add_closed_images) != found) {
      report.failures.push_back("exhaustive scan found " + std::to_string(found) +
                                " additively closed left Schur subcategories, monobrick route gives " +
                                std::to_string(add_closed_images));
    }
  }

  report.summary = std::to_string(monobricks.size()) + " monobricks, " +
                   std::to_string(images.size()) + " left Schur subcategories";
  return report;
}

}  // namespace extrilen
