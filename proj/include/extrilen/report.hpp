#pragma once

#include <string>
#include <vector>

#include "extrilen/torsion.hpp"

namespace extrilen {

/// One line of the monobrick table.
struct ReportRow {
  BrickSet monobrick;
  IndecSet filt_support;
  bool filt_add_closed = false;
  /// Explicit members of filt(monobrick); only rendered when not add-closed.
  ObjSet filt_objects;
  bool torsion_free = false;
  BrickSet closure;

  bool closure_is_itself() const { return closure == monobrick; }
};

/// One row per monobrick, in enumeration order. Throws std::logic_error if a
/// row is torsion-free without being its own closure or vice versa.
std::vector<ReportRow> build_report(const Instance& inst);

enum class ReportFormat { kHuman, kMachine };

std::string emit_table(const Instance& inst, ReportFormat format);
std::string emit_table(const Instance& inst, const std::vector<ReportRow>& rows, ReportFormat format);

/// `add({a, b})`, `0`, or an explicit object list when not add-closed.
std::string render_filt(const Instance& inst, const ObjSet& x);

/// `a+b` in canonical order, or `0` for the empty set.
std::string join_ids(const Instance& inst, const IndecSet& s);

}  // namespace extrilen
