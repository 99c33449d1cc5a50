#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "df/coxeter.hpp"

namespace df {

/// A group together with a finite ball of its elements. All census answers are
/// relative to that ball.
class GroupModel {
 public:
  using Element = std::vector<std::int64_t>;

  virtual ~GroupModel() = default;

  virtual std::string kind() const = 0;
  virtual Element identity() const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element inverse(const Element& a) const = 0;
  virtual bool has_infinite_order(const Element& a) const = 0;
  virtual std::string format(const Element& a) const = 0;
  /// Ball elements in a deterministic order, identity first.
  virtual std::vector<Element> ball() const = 0;
  /// A generating set of the whole group.
  virtual std::vector<Element> generators() const = 0;
  /// True when the ball provably contains the whole group.
  virtual bool saturated() const = 0;
  /// Some K with t^k and t^k x outside the ball for every infinite-order t,
  /// every x and every |k| > K.
  virtual std::size_t power_bound() const = 0;
};

/// W_K with the ball of normal forms of length <= radius.
std::unique_ptr<GroupModel> make_racg_model(const CoxeterSystem& sys, std::size_t radius);
/// W_K over an explicitly supplied element list; words are normalized on entry,
/// so any spelling of the same elements yields the same model.
std::unique_ptr<GroupModel> make_racg_model_from_words(const CoxeterSystem& sys,
                                                       const std::vector<CoxWord>& words,
                                                       bool saturated = false);
/// Z^n x| C_2 with (v,s)(w,t) = (v + s w, st), ball max|v_i| <= radius.
std::unique_ptr<GroupModel> make_crystal_model(int n, int radius);

struct InvolutionClass {
  GroupModel::Element representative;
  std::vector<GroupModel::Element> members;
};

/// Order-2 ball elements, partitioned by conjugation with ball elements (only
/// conjugates that land in the ball are followed). Classes sorted by representative.
std::vector<InvolutionClass> involutions(const GroupModel& g);

struct DihedralRecord {
  GroupModel::Element x;
  GroupModel::Element y;
  GroupModel::Element translation;  ///< x y, of infinite order
  std::vector<GroupModel::Element> members;  ///< <x,y> intersected with the ball
  std::size_t conjugacy_class = 0;
  bool maximal_in_ball = false;
};

enum class Confidence { exact, ball_lower_bound };
enum class Verdict { pass, fail, inconclusive };

std::string to_string(Confidence c);
std::string to_string(Verdict v);

struct MidCount {
  std::size_t count = 0;
  Confidence confidence = Confidence::ball_lower_bound;
  std::vector<std::size_t> representatives;  ///< record indices, one per counted class
};

struct PropertyReport {
  Verdict centralizers = Verdict::inconclusive;  ///< C_{1 in fin}
  Verdict unique_maximal = Verdict::inconclusive;  ///< M_{fbc in vc}
  std::vector<std::string> witnesses;
};

struct Census {
  std::string model;
  std::size_t ball_size = 0;
  std::vector<InvolutionClass> involution_classes;
  std::vector<DihedralRecord> dihedrals;
  std::size_t dihedral_classes = 0;
  MidCount mid;
  PropertyReport properties;
};

struct CensusOptions {
  /// Bound on involution pairs examined.
  std::size_t max_pairs = 400'000;
};

/// Infinite dihedral subgroups generated by pairs of ball involutions,
/// deduplicated by their ball intersection and classified up to ball conjugacy.
/// Throws CapExceeded when the pair budget is exceeded.
std::vector<DihedralRecord> dihedral_subgroups(const GroupModel& g, const CensusOptions& opts = {});
MidCount mid_count(const GroupModel& g, const CensusOptions& opts = {});
PropertyReport property_checks(const GroupModel& g, const CensusOptions& opts = {});

/// Everything above in one pass.
Census run_census(const GroupModel& g, const CensusOptions& opts = {});

}  // namespace df
