#include "extrilen/report.hpp"

#include <algorithm>
#include <sstream>

namespace extrilen {

std::vector<ReportRow> build_report(const Instance& inst) {
  std::vector<ReportRow> rows;
  for (const auto& m : enumerate_monobricks(inst)) {
    ReportRow row;
    row.monobrick = m;
    row.filt_objects = filt(inst, Subcat{m});
    const Subcat support = indec_support(row.filt_objects);
    row.filt_support = support.support;
    row.filt_add_closed = is_additively_closed(inst, row.filt_objects);
    row.torsion_free = row.filt_add_closed && is_torsion_free(inst, support);
    row.closure = cofinal_closure(inst, m);
    if (row.torsion_free != row.closure_is_itself()) {
      throw std::logic_error("row " + render_set(inst, m) +
                             ": torsion-free flag disagrees with cofinal closure");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string join_ids(const Instance& inst, const IndecSet& s) {
  if (s.empty()) return "0";
  std::string out;
  for (IndecIndex i : s) {
    if (!out.empty()) out += '+';
    out += inst.id(i);
  }
  return out;
}

std::string render_filt(const Instance& inst, const ObjSet& x) {
  const Subcat support = indec_support(x);
  if (is_additively_closed(inst, x)) {
    if (support.support.empty()) return "0";
    return "add(" + render_set(inst, support.support) + ")";
  }
  std::vector<Obj> members;
  for (const auto& obj : x) {
    if (!obj.is_zero()) members.push_back(obj);
  }
  std::stable_sort(members.begin(), members.end(), [&](const Obj& a, const Obj& b) {
    return inst.theta(a) < inst.theta(b);
  });
  std::string out = "{";
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k > 0) out += ", ";
    out += inst.render(members[k]);
  }
  return out + "}";
}

namespace {

std::string human_monobrick(const Instance& inst, const BrickSet& m) {
  return m.empty() ? "0" : render_set(inst, m);
}

// Display width in code points, so that multi-byte ids and ∅ line up.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char ch) { return (static_cast<unsigned char>(ch) & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width - std::min(width, display_width(s)), ' ');
}

}  // namespace

std::string emit_table(const Instance& inst, const std::vector<ReportRow>& rows,
                       ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::kMachine) {
    out << "#extrilen-report v1\n";
    for (const auto& row : rows) {
      out << "monobrick=" << join_ids(inst, row.monobrick)
          << " filt=" << join_ids(inst, row.filt_support)
          << " add_closed=" << (row.filt_add_closed ? 1 : 0)
          << " torf=" << (row.torsion_free ? 1 : 0)
          << " closure=" << (row.closure_is_itself() ? "itself" : join_ids(inst, row.closure))
          << '\n';
    }
    return out.str();
  }

  std::vector<std::vector<std::string>> cells{
      {"monobrick M", "left Schur subcategory Filt M", "torsion-free?", "closure"}};
  std::vector<std::string> warnings;
  for (const auto& row : rows) {
    cells.push_back({human_monobrick(inst, row.monobrick),
                     render_filt(inst, row.filt_objects), row.torsion_free ? "Yes" : "No",
                     row.closure_is_itself() ? "itself" : render_set(inst, row.closure)});
    if (!row.filt_add_closed) {
      warnings.push_back("warning: Filt " + render_set(inst, row.monobrick) +
                         " is not additively closed; members listed explicitly");
    }
  }
  std::vector<std::size_t> widths(4, 0);
  for (const auto& line : cells) {
    for (std::size_t k = 0; k < 4; ++k) widths[k] = std::max(widths[k], display_width(line[k]));
  }
  auto rule = [&] {
    out << '+';
    for (auto w : widths) out << std::string(w + 2, '-') << '+';
    out << '\n';
  };
  out << "instance: " << inst.name() << '\n';
  rule();
  for (std::size_t r = 0; r < cells.size(); ++r) {
    out << '|';
    for (std::size_t k = 0; k < 4; ++k) out << ' ' << pad(cells[r][k], widths[k]) << " |";
    out << '\n';
    if (r == 0) rule();
  }
  rule();
  const auto torf = std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return r.torsion_free; });
  out << rows.size() << " monobricks, " << torf << " torsion-free\n";
  for (const auto& w : warnings) out << w << '\n';
  return out.str();
}

std::string emit_table(const Instance& inst, ReportFormat format) {
  return emit_table(inst, build_report(inst), format);
}

}  // namespace extrilen
