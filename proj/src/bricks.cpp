#include "extrilen/bricks.hpp"

#include <algorithm>

#include "extrilen/subcat.hpp"

namespace extrilen {

namespace {

void require_bricks(const Instance& inst, const BrickSet& m) {
  for (IndecIndex x : m) {
    if (!inst.object(x).is_brick) {
      throw std::invalid_argument("object " + inst.id(x) + " is not flagged as a brick");
    }
  }
}

template <typename Pred>
bool all_classes(const Instance& inst, IndecIndex src, IndecIndex dst, Pred pred) {
  const auto classes = inst.classes_between(src, dst);
  return std::all_of(classes.begin(), classes.end(), [&](const MorClass* m) { return pred(*m); });
}

bool joins_monobrick(const Instance& inst, const BrickSet& m, IndecIndex y) {
  auto infl = [](const MorClass& f) { return f.is_inflation; };
  if (!all_classes(inst, y, y, infl)) return false;
  return std::all_of(m.begin(), m.end(), [&](IndecIndex x) {
    return all_classes(inst, x, y, infl) && all_classes(inst, y, x, infl);
  });
}

bool joins_epibrick(const Instance& inst, const BrickSet& m, IndecIndex y) {
  auto defl = [](const MorClass& f) { return f.is_deflation; };
  if (!all_classes(inst, y, y, defl)) return false;
  return std::all_of(m.begin(), m.end(), [&](IndecIndex x) {
    return all_classes(inst, x, y, defl) && all_classes(inst, y, x, defl);
  });
}

bool joins_semibrick(const Instance& inst, const BrickSet& m, IndecIndex y) {
  return std::none_of(m.begin(), m.end(), [&](IndecIndex x) {
    return x != y && (inst.has_hom(x, y) || inst.has_hom(y, x));
  });
}

bool check_by_extension(const Instance& inst, const BrickSet& m, const BrickExtensionTest& test) {
  require_bricks(inst, m);
  BrickSet built;
  for (IndecIndex y : m) {
    if (!test(inst, built, y)) return false;
    built.insert(y);
  }
  return true;
}

}  // namespace

bool is_monobrick(const Instance& inst, const BrickSet& m) {
  return check_by_extension(inst, m, joins_monobrick);
}

bool is_epibrick(const Instance& inst, const BrickSet& m) {
  return check_by_extension(inst, m, joins_epibrick);
}

bool is_semibrick(const Instance& inst, const BrickSet& m) {
  return check_by_extension(inst, m, joins_semibrick);
}

std::vector<BrickSet> enumerate_brick_sets(const Instance& inst, const BrickExtensionTest& test) {
  const auto bricks = inst.bricks();
  const std::vector<IndecIndex> pool(bricks.begin(), bricks.end());
  std::vector<BrickSet> found;
  BrickSet current;
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    found.push_back(current);
    for (std::size_t k = from; k < pool.size(); ++k) {
      if (!test(inst, current, pool[k])) continue;
      current.insert(pool[k]);
      self(self, k + 1);
      current.erase(pool[k]);
    }
  };
  dfs(dfs, 0);
  std::sort(found.begin(), found.end(), [](const BrickSet& x, const BrickSet& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return found;
}

std::vector<BrickSet> enumerate_monobricks(const Instance& inst) {
  return enumerate_brick_sets(inst, joins_monobrick);
}

std::vector<BrickSet> enumerate_epibricks(const Instance& inst) {
  return enumerate_brick_sets(inst, joins_epibrick);
}

std::vector<BrickSet> enumerate_semibricks(const Instance& inst) {
  return enumerate_brick_sets(inst, joins_semibrick);
}

Stratification theta_stratification(const Instance& inst) {
  Stratification out;
  if (inst.size() == 0) return out;

  int min_theta = inst.theta(0);
  int max_theta = min_theta;
  for (const auto& o : inst.objects()) {
    min_theta = std::min(min_theta, o.theta);
    max_theta = std::max(max_theta, o.theta);
  }
  out.base_theta = min_theta;
  if (min_theta != 1) {
    out.warning = "minimal theta is " + std::to_string(min_theta) +
                  ", not 1; strata are indexed from the minimal length";
  }

  BrickSet current;
  for (IndecIndex i : inst.all_indecomposables()) {
    if (inst.theta(i) == min_theta) current.insert(i);
  }
  out.strata.push_back(current);

  const int top = std::min(max_theta, inst.theta_bound());
  for (int n = min_theta + 1; n <= top; ++n) {
    BrickSet added;
    for (IndecIndex m : inst.all_indecomposables()) {
      if (inst.theta(m) != n) continue;
      const bool orthogonal = std::none_of(current.begin(), current.end(), [&](IndecIndex x) {
        return inst.has_hom(m, x) || inst.has_hom(x, m);
      });
      if (orthogonal) added.insert(m);
    }
    current.insert(added.begin(), added.end());
    out.strata.push_back(current);
  }
  out.infinity = current;
  return out;
}

bool check_simple_minded(const Instance& inst, const BrickSet& s) {
  if (!is_semibrick(inst, s)) return false;
  const ObjSet closure = filt(inst, Subcat{s});
  const auto all = inst.all_indecomposables();
  return std::all_of(all.begin(), all.end(),
                     [&](IndecIndex i) { return closure.contains(Obj::single(i)); });
}

std::string render_set(const Instance& inst, const IndecSet& s) {
  if (s.empty()) return "∅";
  std::string out = "{";
  bool first = true;
  for (IndecIndex i : s) {
    if (!first) out += ", ";
    out += inst.id(i);
    first = false;
  }
  return out + "}";
}

}  // namespace extrilen
