#include "extrilen/instance.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

namespace extrilen {

// ---------------------------------------------------------------------------
// Obj

Obj::Obj(std::vector<IndecIndex> summands) : summands_(std::move(summands)) {
  std::sort(summands_.begin(), summands_.end());
}

Obj Obj::operator+(const Obj& other) const {
  std::vector<IndecIndex> merged;
  merged.reserve(summands_.size() + other.summands_.size());
  std::merge(summands_.begin(), summands_.end(), other.summands_.begin(),
             other.summands_.end(), std::back_inserter(merged));
  Obj out;
  out.summands_ = std::move(merged);
  return out;
}

bool Obj::has_summand(const Obj& part) const {
  return std::includes(summands_.begin(), summands_.end(), part.summands_.begin(),
                       part.summands_.end());
}

Obj Obj::without(const Obj& part) const {
  std::vector<IndecIndex> rest;
  std::set_difference(summands_.begin(), summands_.end(), part.summands_.begin(),
                      part.summands_.end(), std::back_inserter(rest));
  Obj out;
  out.summands_ = std::move(rest);
  return out;
}

// ---------------------------------------------------------------------------
// Instance

namespace {

void check_unique(const std::vector<std::string>& ids, std::string_view what) {
  std::set<std::string_view> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) {
      throw LoadError("duplicate " + std::string(what) + " id: " + id);
    }
  }
}

}  // namespace

Instance Instance::build(const InstanceSpec& spec) {
  Instance inst;
  inst.name_ = spec.name;

  std::vector<std::string> object_ids;
  for (const auto& o : spec.objects) object_ids.push_back(o.id);
  check_unique(object_ids, "object");
  std::vector<std::string> morphism_ids;
  for (const auto& m : spec.morphisms) morphism_ids.push_back(m.id);
  check_unique(morphism_ids, "morphism");

  inst.objects_ = spec.objects;
  std::sort(inst.objects_.begin(), inst.objects_.end(),
            [](const IndecObject& x, const IndecObject& y) {
              return std::tie(x.theta, x.id) < std::tie(y.theta, y.id);
            });

  auto resolve_id = [&](const std::string& id, const std::string& context) {
    auto idx = inst.find(id);
    if (!idx) throw LoadError("dangling reference: " + id + " in " + context);
    return *idx;
  };
  auto resolve_obj = [&](const ObjSpec& spec_obj, const std::string& context) {
    std::vector<IndecIndex> summands;
    for (const auto& id : spec_obj) summands.push_back(resolve_id(id, context));
    return Obj(std::move(summands));
  };

  for (const auto& m : spec.morphisms) {
    const std::string context = "morphism " + m.id;
    inst.morphisms_.push_back(MorClass{m.id, resolve_id(m.src, context),
                                       resolve_id(m.dst, context),
                                       resolve_obj(m.image, context), m.is_inflation,
                                       m.is_deflation});
  }
  std::sort(inst.morphisms_.begin(), inst.morphisms_.end(),
            [](const MorClass& x, const MorClass& y) { return x.id < y.id; });

  const std::size_t n = inst.objects_.size();
  inst.hom_.assign(n, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t k = 0; k < inst.morphisms_.size(); ++k) {
    const auto& m = inst.morphisms_[k];
    inst.hom_[m.src][m.dst].push_back(k);
  }

  for (const auto& c : spec.conflations) {
    inst.declared_.insert(Conflation{resolve_obj(c.a, "conflation"),
                                     resolve_obj(c.b, "conflation"),
                                     resolve_obj(c.c, "conflation")});
  }

  int max_theta = 0;
  for (const auto& o : inst.objects_) max_theta = std::max(max_theta, o.theta);
  inst.theta_bound_ = spec.theta_bound.value_or(2 * max_theta);

  inst.synthesize_conflations();
  inst.build_universe();
  return inst;
}

void Instance::synthesize_conflations() {
  std::vector<Conflation> generators;
  for (const auto& c : declared_) {
    if (!c.is_zero()) generators.push_back(c);
  }
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    const Obj x = Obj::single(static_cast<IndecIndex>(i));
    generators.push_back({x, x, Obj{}});
    generators.push_back({Obj{}, x, x});
  }
  // Generators whose middle has nonpositive length would let the sum closure
  // run forever on invalid data; the validator reports those objects.
  std::erase_if(generators, [&](const Conflation& g) { return theta(g.b) <= 0; });

  std::set<Conflation> closed;
  std::deque<Conflation> frontier;
  for (const auto& g : generators) {
    if (theta(g.b) <= theta_bound_ && closed.insert(g).second) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    const Conflation t = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      if (theta(t.b) + theta(g.b) > theta_bound_) continue;
      Conflation u = t + g;
      if (closed.insert(u).second) frontier.push_back(std::move(u));
    }
  }
  closed.insert(declared_.begin(), declared_.end());
  closed.erase(Conflation{});
  conflations_.assign(closed.begin(), closed.end());
}

void Instance::build_universe() {
  universe_.clear();
  std::vector<IndecIndex> current;
  auto extend = [&](auto&& self, IndecIndex from, int budget) -> void {
    universe_.insert(Obj(current));
    for (std::size_t i = from; i < objects_.size(); ++i) {
      const int t = objects_[i].theta;
      if (t <= 0 || t > budget) continue;
      current.push_back(static_cast<IndecIndex>(i));
      self(self, static_cast<IndecIndex>(i), budget - t);
      current.pop_back();
    }
  };
  extend(extend, 0, theta_bound_);
}

std::optional<IndecIndex> Instance::find(std::string_view id) const {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i].id == id) return static_cast<IndecIndex>(i);
  }
  return std::nullopt;
}

IndecIndex Instance::index_of(std::string_view id) const {
  auto idx = find(id);
  if (!idx) throw std::invalid_argument("unknown object id: " + std::string(id));
  return *idx;
}

int Instance::theta(const Obj& x) const {
  int total = 0;
  for (IndecIndex i : x.summands()) total += objects_.at(i).theta;
  return total;
}

std::vector<const MorClass*> Instance::classes_between(IndecIndex src, IndecIndex dst) const {
  std::vector<const MorClass*> out;
  for (std::size_t k : hom_.at(src).at(dst)) out.push_back(&morphisms_[k]);
  return out;
}

bool Instance::has_hom(IndecIndex src, IndecIndex dst) const {
  return !hom_.at(src).at(dst).empty();
}

IndecSet Instance::all_indecomposables() const {
  IndecSet out;
  for (std::size_t i = 0; i < objects_.size(); ++i) out.insert(static_cast<IndecIndex>(i));
  return out;
}

IndecSet Instance::bricks() const {
  IndecSet out;
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i].is_brick) out.insert(static_cast<IndecIndex>(i));
  }
  return out;
}

std::string Instance::render(const Obj& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  for (IndecIndex i : x.summands()) {
    if (!out.empty()) out += '+';
    out += objects_.at(i).id;
  }
  return out;
}

std::string Instance::render(const Conflation& c) const {
  return render(c.a) + " >-> " + render(c.b) + " ->> " + render(c.c);
}

bool operator==(const Instance& lhs, const Instance& rhs) {
  return lhs.name_ == rhs.name_ && lhs.theta_bound_ == rhs.theta_bound_ &&
         lhs.objects_ == rhs.objects_ && lhs.morphisms_ == rhs.morphisms_ &&
         lhs.declared_ == rhs.declared_;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

enum class Section { kNone, kObjects, kMorphisms, kConflations, kMeta };

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  InstanceSpec run() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no_;
      parse_line(text_.substr(pos, end - pos));
      pos = end + 1;
    }
    return std::move(spec_);
  }

 private:
  [[noreturn]] void fail(std::size_t column, const std::string& what) const {
    std::ostringstream msg;
    msg << "syntax error at line " << line_no_ << ", column " << column << ": " << what;
    throw LoadError(msg.str());
  }

  void parse_line(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = tokenize(line);
    if (tokens.empty()) return;

    const auto& first = tokens.front();
    if (tokens.size() == 1 && first.text.size() >= 2 && first.text.front() == '[' &&
        first.text.back() == ']') {
      const auto header = first.text.substr(1, first.text.size() - 2);
      if (header == "objects") section_ = Section::kObjects;
      else if (header == "morphisms") section_ = Section::kMorphisms;
      else if (header == "conflations") section_ = Section::kConflations;
      else if (header == "meta") section_ = Section::kMeta;
      else fail(first.column, "unknown section '" + std::string(header) + "'");
      return;
    }

    switch (section_) {
      case Section::kNone: fail(first.column, "content before any section header");
      case Section::kObjects: parse_object(tokens); break;
      case Section::kMorphisms: parse_morphism(tokens); break;
      case Section::kConflations: parse_conflation(tokens); break;
      case Section::kMeta: parse_meta(line, tokens); break;
    }
  }

  std::string parse_id(const Token& tok) const {
    if (tok.text.empty() || tok.text == "0" || tok.text.find('+') != std::string_view::npos ||
        tok.text.find('=') != std::string_view::npos) {
      fail(tok.column, "invalid identifier '" + std::string(tok.text) + "'");
    }
    return std::string(tok.text);
  }

  ObjSpec parse_obj(const Token& tok, std::string_view text) const {
    if (text == "0") return {};
    ObjSpec out;
    std::size_t pos = 0;
    while (true) {
      const std::size_t plus = text.find('+', pos);
      const auto part = text.substr(pos, plus == std::string_view::npos ? plus : plus - pos);
      if (part.empty() || part == "0") {
        fail(tok.column, "malformed object '" + std::string(text) + "'");
      }
      out.emplace_back(part);
      if (plus == std::string_view::npos) break;
      pos = plus + 1;
    }
    return out;
  }

  int parse_int(const Token& tok, std::string_view digits) const {
    int value = 0;
    const auto* begin = digits.data();
    const auto* end = begin + digits.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || digits.empty()) {
      fail(tok.column, "expected integer, got '" + std::string(digits) + "'");
    }
    return value;
  }

  std::string_view value_of(const Token& tok, std::string_view key) const {
    const std::string prefix = std::string(key) + "=";
    if (!tok.text.starts_with(prefix)) fail(tok.column, "expected '" + prefix + "...'");
    return tok.text.substr(prefix.size());
  }

  bool parse_flag(const Token& tok, std::string_view key) const {
    const auto v = value_of(tok, key);
    if (v == "0") return false;
    if (v == "1") return true;
    fail(tok.column, "expected " + std::string(key) + "=0 or " + std::string(key) + "=1");
  }

  void parse_object(const std::vector<Token>& t) {
    if (t.size() != 3) fail(t.front().column, "object line needs: id theta brick={0|1}");
    spec_.objects.push_back(
        IndecObject{parse_id(t[0]), parse_int(t[1], t[1].text), parse_flag(t[2], "brick")});
  }

  void parse_morphism(const std::vector<Token>& t) {
    if (t.size() != 7 || t[2].text != "->") {
      fail(t.front().column,
           "morphism line needs: id src -> dst image=<obj> inflation={0|1} deflation={0|1}");
    }
    MorphismSpec m;
    m.id = parse_id(t[0]);
    m.src = parse_id(t[1]);
    m.dst = parse_id(t[3]);
    m.image = parse_obj(t[4], value_of(t[4], "image"));
    m.is_inflation = parse_flag(t[5], "inflation");
    m.is_deflation = parse_flag(t[6], "deflation");
    spec_.morphisms.push_back(std::move(m));
  }

  void parse_conflation(const std::vector<Token>& t) {
    if (t.size() != 5 || t[1].text != ">->" || t[3].text != "->>") {
      fail(t.front().column, "conflation line needs: <obj> >-> <obj> ->> <obj>");
    }
    spec_.conflations.push_back(ConflationSpec{parse_obj(t[0], t[0].text),
                                               parse_obj(t[2], t[2].text),
                                               parse_obj(t[4], t[4].text)});
  }

  void parse_meta(std::string_view line, const std::vector<Token>& t) {
    const auto& tok = t.front();
    if (tok.text.starts_with("name=")) {
      // The name runs to the end of the line.
      auto rest = line.substr(line.find("name=") + 5);
      while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t')) rest.remove_suffix(1);
      spec_.name = std::string(rest);
      return;
    }
    if (t.size() != 1) fail(t[1].column, "unexpected token in meta line");
    if (tok.text.starts_with("theta_bound=")) {
      const int bound = parse_int(tok, value_of(tok, "theta_bound"));
      if (bound < 1) fail(tok.column, "theta_bound must be a positive integer");
      spec_.theta_bound = bound;
      return;
    }
    fail(tok.column, "unknown meta key in '" + std::string(tok.text) + "'");
  }

  std::string_view text_;
  std::size_t line_no_ = 0;
  Section section_ = Section::kNone;
  InstanceSpec spec_;
};

}  // namespace

InstanceSpec parse_instance(std::string_view text) { return Parser(text).run(); }

Instance load_instance(std::string_view text) { return Instance::build(parse_instance(text)); }

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_instance(buf.str());
}

// ---------------------------------------------------------------------------
// Emission

std::string emit_instance(const Instance& inst) {
  auto section = [](std::ostringstream& out, std::string_view header,
                    std::vector<std::string> lines) {
    std::sort(lines.begin(), lines.end());
    out << '[' << header << "]\n";
    for (const auto& l : lines) out << l << '\n';
  };

  std::ostringstream out;
  std::vector<std::string> lines;
  for (const auto& o : inst.objects()) {
    lines.push_back(o.id + " " + std::to_string(o.theta) + " brick=" + (o.is_brick ? "1" : "0"));
  }
  section(out, "objects", std::move(lines));

  lines.clear();
  for (const auto& m : inst.morphisms()) {
    lines.push_back(m.id + " " + inst.id(m.src) + " -> " + inst.id(m.dst) +
                    " image=" + inst.render(m.image) +
                    " inflation=" + (m.is_inflation ? "1" : "0") +
                    " deflation=" + (m.is_deflation ? "1" : "0"));
  }
  section(out, "morphisms", std::move(lines));

  lines.clear();
  for (const auto& c : inst.declared_conflations()) lines.push_back(inst.render(c));
  section(out, "conflations", std::move(lines));

  std::vector<std::string> meta{"name=" + inst.name()};
  if (inst.theta_bound() > 0) meta.push_back("theta_bound=" + std::to_string(inst.theta_bound()));
  section(out, "meta", std::move(meta));
  return out.str();
}

// ---------------------------------------------------------------------------
// Validation

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNonpositiveTheta: return "nonpositive theta";
    case ViolationKind::kBoundTooSmall: return "theta bound too small";
    case ViolationKind::kZeroImage: return "zero image";
    case ViolationKind::kImageTooLong: return "image too long";
    case ViolationKind::kInconsistentInflationFlag: return "inconsistent inflation flag";
    case ViolationKind::kInconsistentDeflationFlag: return "inconsistent deflation flag";
    case ViolationKind::kMissingInflationWitness: return "missing inflation witness";
    case ViolationKind::kMissingDeflationWitness: return "missing deflation witness";
    case ViolationKind::kUnstableConflation: return "unstable conflation";
    case ViolationKind::kZeroConflation: return "zero conflation";
    case ViolationKind::kBrickViolation: return "brick violation";
  }
  return "unknown";
}

std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> report;
  auto add = [&](ViolationKind kind, const std::string& detail) {
    report.push_back({kind, std::string(to_string(kind)) + ": " + detail});
  };

  for (const auto& o : inst.objects()) {
    if (o.theta < 1) add(ViolationKind::kNonpositiveTheta, o.id + " has theta " + std::to_string(o.theta));
    if (o.theta > inst.theta_bound()) {
      add(ViolationKind::kBoundTooSmall, o.id + " has theta " + std::to_string(o.theta) +
                                             " > theta_bound " + std::to_string(inst.theta_bound()));
    }
  }

  auto witnessed = [&](const Obj& a, const Obj& b, bool inflation) {
    for (const auto& c : inst.conflations()) {
      if (inflation && c.a == a && c.b == b && inst.theta(c.c) == inst.theta(b) - inst.theta(a)) return true;
      if (!inflation && c.b == a && c.c == b && inst.theta(c.a) == inst.theta(a) - inst.theta(b)) return true;
    }
    return false;
  };

  for (const auto& m : inst.morphisms()) {
    const int t_src = inst.theta(m.src);
    const int t_dst = inst.theta(m.dst);
    const int t_img = inst.theta(m.image);
    const std::string arrow = m.id + " (" + inst.id(m.src) + " -> " + inst.id(m.dst) + ")";
    if (m.image.is_zero()) add(ViolationKind::kZeroImage, arrow);
    if (t_img > std::min(t_src, t_dst)) {
      add(ViolationKind::kImageTooLong, arrow + " image " + inst.render(m.image));
    }
    if (m.is_inflation != (t_img == t_src)) {
      add(ViolationKind::kInconsistentInflationFlag,
          arrow + " inflation=" + (m.is_inflation ? "1" : "0") + " but theta(image)=" +
              std::to_string(t_img) + ", theta(src)=" + std::to_string(t_src));
    }
    if (m.is_deflation != (t_img == t_dst)) {
      add(ViolationKind::kInconsistentDeflationFlag,
          arrow + " deflation=" + (m.is_deflation ? "1" : "0") + " but theta(image)=" +
              std::to_string(t_img) + ", theta(dst)=" + std::to_string(t_dst));
    }
    const Obj src = Obj::single(m.src);
    const Obj dst = Obj::single(m.dst);
    if (m.is_inflation && !witnessed(src, dst, true)) {
      add(ViolationKind::kMissingInflationWitness, arrow + " has no conflation " +
                                                       inst.id(m.src) + " >-> " + inst.id(m.dst) + " ->> ?");
    }
    if (m.is_deflation && !witnessed(src, dst, false)) {
      add(ViolationKind::kMissingDeflationWitness, arrow + " has no conflation ? >-> " +
                                                       inst.id(m.src) + " ->> " + inst.id(m.dst));
    }
  }

  for (const auto& c : inst.declared_conflations()) {
    if (c.is_zero()) {
      add(ViolationKind::kZeroConflation, inst.render(c));
      continue;
    }
    if (inst.theta(c.b) != inst.theta(c.a) + inst.theta(c.c)) {
      add(ViolationKind::kUnstableConflation,
          inst.render(c) + " has theta " + std::to_string(inst.theta(c.b)) + " != " +
              std::to_string(inst.theta(c.a)) + " + " + std::to_string(inst.theta(c.c)));
    }
  }

  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto x = static_cast<IndecIndex>(i);
    if (!inst.object(x).is_brick) continue;
    for (const MorClass* m : inst.classes_between(x, x)) {
      if (!(m->is_inflation && m->is_deflation)) {
        add(ViolationKind::kBrickViolation,
            inst.id(x) + " is flagged brick but endomorphism class " + m->id + " is not an isomorphism");
      }
    }
  }
  return report;
}

}  // namespace extrilen
