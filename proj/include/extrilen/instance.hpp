#pragma once

// Finite presentation of an extriangulated length category: indecomposables
// with their lengths, nonzero morphism classes with their image data, and the
// stable conflations at object level.

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace extrilen {

/// Position of an indecomposable in an Instance, in canonical (theta, id) order.
using IndecIndex = std::uint16_t;
using IndecSet = std::set<IndecIndex>;

/// A formal finite direct sum of indecomposables. The empty sum is the zero
/// object. Summands are kept sorted so equal objects compare equal.
class Obj {
 public:
  Obj() = default;
  explicit Obj(std::vector<IndecIndex> summands);

  static Obj single(IndecIndex i) { return Obj(std::vector<IndecIndex>{i}); }

  bool is_zero() const { return summands_.empty(); }
  bool is_indecomposable() const { return summands_.size() == 1; }
  const std::vector<IndecIndex>& summands() const { return summands_; }

  Obj operator+(const Obj& other) const;

  /// True if `part` is a direct summand (sub-multiset) of this object.
  bool has_summand(const Obj& part) const;
  /// Removes the summands of `part`; requires has_summand(part).
  Obj without(const Obj& part) const;

  auto operator<=>(const Obj&) const = default;

 private:
  std::vector<IndecIndex> summands_;
};

using ObjSet = std::set<Obj>;

struct IndecObject {
  std::string id;
  int theta = 0;
  bool is_brick = false;

  auto operator<=>(const IndecObject&) const = default;
};

/// Nonzero morphism class up to scalar, with its Θ-decomposition image.
struct MorClass {
  std::string id;
  IndecIndex src = 0;
  IndecIndex dst = 0;
  Obj image;
  bool is_inflation = false;
  bool is_deflation = false;

  auto operator<=>(const MorClass&) const = default;
};

/// A stable conflation a >-> b ->> c at object level.
struct Conflation {
  Obj a;
  Obj b;
  Obj c;

  Conflation operator+(const Conflation& other) const {
    return {a + other.a, b + other.b, c + other.c};
  }
  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }

  auto operator<=>(const Conflation&) const = default;
};

// String-keyed form of an instance, as read from a file or produced by a
// generator. Instance::build resolves the ids.
using ObjSpec = std::vector<std::string>;

struct MorphismSpec {
  std::string id;
  std::string src;
  std::string dst;
  ObjSpec image;
  bool is_inflation = false;
  bool is_deflation = false;
};

struct ConflationSpec {
  ObjSpec a;
  ObjSpec b;
  ObjSpec c;
};

struct InstanceSpec {
  std::string name;
  std::optional<int> theta_bound;
  std::vector<IndecObject> objects;
  std::vector<MorphismSpec> morphisms;
  std::vector<ConflationSpec> conflations;
};

/// Raised for malformed instance files and unresolvable references.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Instance {
 public:
  /// Resolves ids, sorts everything canonically and synthesizes the split
  /// conflations and direct sums of declared ones up to the theta bound.
  /// Throws LoadError on duplicate ids or dangling references.
  static Instance build(const InstanceSpec& spec);

  const std::string& name() const { return name_; }
  int theta_bound() const { return theta_bound_; }

  std::size_t size() const { return objects_.size(); }
  const std::vector<IndecObject>& objects() const { return objects_; }
  const IndecObject& object(IndecIndex i) const { return objects_.at(i); }
  const std::string& id(IndecIndex i) const { return objects_.at(i).id; }
  std::optional<IndecIndex> find(std::string_view id) const;
  /// Like find, but throws std::invalid_argument naming the unknown id.
  IndecIndex index_of(std::string_view id) const;

  int theta(IndecIndex i) const { return objects_.at(i).theta; }
  int theta(const Obj& x) const;

  const std::vector<MorClass>& morphisms() const { return morphisms_; }
  /// Morphism classes src -> dst (possibly none: Hom vanishes).
  std::vector<const MorClass*> classes_between(IndecIndex src, IndecIndex dst) const;
  bool has_hom(IndecIndex src, IndecIndex dst) const;

  /// Conflations as listed in the source, without synthesized ones.
  const std::set<Conflation>& declared_conflations() const { return declared_; }
  /// Every conflation known to the instance: declared ones, splits and
  /// direct sums, restricted to theta(middle) <= theta_bound for synthesized
  /// entries.
  const std::vector<Conflation>& conflations() const { return conflations_; }

  /// All objects with theta <= theta_bound, including zero.
  const ObjSet& universe() const { return universe_; }

  IndecSet all_indecomposables() const;
  IndecSet bricks() const;

  /// `id+id+...` or `0`.
  std::string render(const Obj& x) const;
  std::string render(const Conflation& c) const;

  friend bool operator==(const Instance& lhs, const Instance& rhs);

 private:
  Instance() = default;

  void synthesize_conflations();
  void build_universe();

  std::string name_;
  int theta_bound_ = 0;
  std::vector<IndecObject> objects_;
  std::vector<MorClass> morphisms_;
  std::vector<std::vector<std::vector<std::size_t>>> hom_;  // [src][dst] -> morphism positions
  std::set<Conflation> declared_;
  std::vector<Conflation> conflations_;
  ObjSet universe_;
};

/// Parses the line-oriented instance format. Throws LoadError with line and
/// column on syntax errors.
InstanceSpec parse_instance(std::string_view text);
Instance load_instance(std::string_view text);
Instance load_instance_file(const std::string& path);

/// Canonical text form: sections in fixed order, each section sorted.
std::string emit_instance(const Instance& inst);

enum class ViolationKind {
  kNonpositiveTheta,
  kBoundTooSmall,
  kZeroImage,
  kImageTooLong,
  kInconsistentInflationFlag,
  kInconsistentDeflationFlag,
  kMissingInflationWitness,
  kMissingDeflationWitness,
  kUnstableConflation,
  kZeroConflation,
  kBrickViolation,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

/// Checks the length-category axioms visible at this level of data.
/// Never throws; an empty result means the instance is valid.
std::vector<Violation> validate_instance(const Instance& inst);

}  // namespace extrilen
