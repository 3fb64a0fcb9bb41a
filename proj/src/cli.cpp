#include "extrilen/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "extrilen/builtins.hpp"
#include "extrilen/report.hpp"

namespace extrilen {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance resolve_instance(const std::string& arg) {
  constexpr std::string_view prefix = "builtin:";
  if (arg.starts_with(prefix)) {
    try {
      return builtin_instance(std::string_view(arg).substr(prefix.size()));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  std::ifstream probe(arg);
  if (!probe) throw UsageError("cannot open instance file: " + arg);
  return load_instance_file(arg);
}

// Loads and validates; on violations prints them and returns nullopt.
std::optional<Instance> load_valid(const std::string& arg, std::ostream& err) {
  Instance inst = resolve_instance(arg);
  const auto report = validate_instance(inst);
  if (report.empty()) return inst;
  err << "instance " << inst.name() << " is invalid:\n";
  for (const auto& v : report) err << "  " << v.message << '\n';
  return std::nullopt;
}

Subcat parse_ids(const Instance& inst, const std::vector<std::string>& ids) {
  Subcat s;
  for (const auto& id : ids) {
    auto idx = inst.find(id);
    if (!idx) throw UsageError("unknown object id: " + id);
    s.support.insert(*idx);
  }
  return s;
}

int run_validate(const std::string& arg, std::ostream& out) {
  std::optional<Instance> loaded;
  try {
    loaded = resolve_instance(arg);
  } catch (const LoadError& e) {
    out << "invalid: " << e.what() << '\n';
    return kFailed;
  }
  const Instance& inst = *loaded;
  const auto report = validate_instance(inst);
  for (const auto& v : report) out << v.message << '\n';
  if (!report.empty()) {
    out << "invalid: " << report.size() << " violation(s)\n";
    return kFailed;
  }
  out << "valid: " << inst.name() << " (" << inst.size() << " indecomposables, "
      << inst.morphisms().size() << " morphism classes, " << inst.conflations().size()
      << " conflations up to theta " << inst.theta_bound() << ")\n";
  return kOk;
}

int run_enumerate(const std::string& kind, const Instance& inst, std::ostream& out) {
  auto print_sets = [&](const std::vector<BrickSet>& sets) {
    for (const auto& s : sets) out << render_set(inst, s) << '\n';
  };
  auto print_classes = [&](const std::vector<Subcat>& classes) {
    for (const auto& c : classes) out << render_filt(inst, add_closure(inst, c)) << '\n';
  };
  if (kind == "bricks") {
    const auto bricks = inst.bricks();
    if (bricks.empty()) out << "∅\n";
    for (IndecIndex b : bricks) out << inst.id(b) << '\n';
  } else if (kind == "monobricks") {
    print_sets(enumerate_monobricks(inst));
  } else if (kind == "semibricks") {
    print_sets(enumerate_semibricks(inst));
  } else if (kind == "epibricks") {
    print_sets(enumerate_epibricks(inst));
  } else if (kind == "torf") {
    print_classes(enumerate_torsion_free(inst));
  } else if (kind == "tors") {
    print_classes(enumerate_torsion(inst));
  } else if (kind == "lschur") {
    for (const auto& m : enumerate_monobricks(inst)) out << render_filt(inst, filt(inst, Subcat{m})) << '\n';
  }
  return kOk;
}

int run_closure(const std::string& op, const Instance& inst, const std::vector<std::string>& ids,
                std::ostream& out, std::ostream& err) {
  const Subcat s = parse_ids(inst, ids);
  if (op == "filt") {
    out << render_filt(inst, filt(inst, s)) << '\n';
  } else if (op == "sub") {
    out << render_set(inst, sub(inst, s).support) << '\n';
  } else if (op == "fac") {
    out << render_set(inst, fac(inst, s).support) << '\n';
  } else if (op == "ftheta") {
    out << render_filt(inst, f_theta(inst, s)) << '\n';
  } else if (op == "ttheta") {
    out << render_filt(inst, t_theta(inst, s)) << '\n';
  } else if (op == "cofinal") {
    for (IndecIndex i : s.support) {
      if (!inst.object(i).is_brick) {
        err << "error: " << inst.id(i) << " is not a brick\n";
        return kFailed;
      }
    }
    if (!is_monobrick(inst, s.support)) {
      err << "error: " << render_set(inst, s.support) << " is not a monobrick\n";
      return kFailed;
    }
    out << render_set(inst, cofinal_closure(inst, s.support)) << '\n';
  }
  return kOk;
}

int run_stratify(const Instance& inst, std::ostream& out, std::ostream& err) {
  const auto strat = theta_stratification(inst);
  if (strat.warning) err << "warning: " << *strat.warning << '\n';
  for (std::size_t k = 0; k < strat.strata.size(); ++k) {
    out << "theta_" << strat.base_theta + static_cast<int>(k) << " = "
        << render_set(inst, strat.strata[k]) << '\n';
  }
  out << "theta_inf = " << render_set(inst, strat.infinity) << '\n';
  const bool sms = check_simple_minded(inst, strat.infinity);
  out << "simple-minded system: " << (sms ? "yes" : "no") << '\n';
  return sms ? kOk : kFailed;
}

int run_verify(const std::string& which, const Instance& inst, std::ostream& out) {
  const VerificationReport report =
      which == "bijection37" ? verify_schur_bijection(inst) : verify_torsion_free_classification(inst);
  for (const auto& f : report.failures) out << "failure: " << f << '\n';
  out << (report.passed() ? "verified: " : "FAILED: ") << report.summary << '\n';
  return report.passed() ? kOk : kFailed;
}

int run_report(const Instance& inst, const std::string& format, const std::string& path,
               std::ostream& out) {
  const auto rows = build_report(inst);
  const auto torf = std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return r.torsion_free; });
  const auto itself = std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return r.closure_is_itself(); });
  if (torf != itself) throw std::logic_error("torsion-free count differs from cofinally closed count");

  const std::string text =
      emit_table(inst, rows, format == "machine" ? ReportFormat::kMachine : ReportFormat::kHuman);
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + path);
    file << text;
  }
  return kOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monobricks, Schur subcategories and torsion-free classes of finite length categories",
               "extrilen"};
  app.require_subcommand(1);

  std::string inst_arg;
  std::string kind;
  std::vector<std::string> ids;
  std::string format = "human";
  std::string out_path;

  auto* validate = app.add_subcommand("validate", "Check an instance file or builtin:NAME");
  validate->add_option("instance", inst_arg, "Instance file or builtin:NAME")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List brick sets or classes of subcategories");
  enumerate->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"bricks", "monobricks", "semibricks", "epibricks", "torf", "tors", "lschur"}));
  enumerate->add_option("instance", inst_arg)->required();

  auto* closure = app.add_subcommand("closure", "Apply a closure operator to a set of indecomposables");
  closure->add_option("op", kind)
      ->required()
      ->check(CLI::IsMember({"filt", "sub", "fac", "ftheta", "ttheta", "cofinal"}));
  closure->add_option("instance", inst_arg)->required();
  closure->add_option("ids", ids);

  auto* stratify = app.add_subcommand("stratify", "Compute the length stratification");
  stratify->add_option("instance", inst_arg)->required();

  auto* verify = app.add_subcommand("verify", "Check a classification over the whole instance");
  verify->add_option("which", kind)->required()->check(CLI::IsMember({"bijection37", "theoremA"}));
  verify->add_option("instance", inst_arg)->required();

  auto* report = app.add_subcommand("report", "Print the monobrick table");
  report->add_option("instance", inst_arg)->required();
  report->add_option("--format", format)->check(CLI::IsMember({"human", "machine"}));
  report->add_option("--out", out_path, "Write the table to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return run_validate(inst_arg, out);

    std::optional<Instance> inst = load_valid(inst_arg, err);
    if (!inst) return kFailed;
    if (enumerate->parsed()) return run_enumerate(kind, *inst, out);
    if (closure->parsed()) return run_closure(kind, *inst, ids, out, err);
    if (stratify->parsed()) return run_stratify(*inst, out, err);
    if (verify->parsed()) return run_verify(kind, *inst, out);
    if (report->parsed()) return run_report(*inst, format, out_path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const LoadError& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace extrilen
