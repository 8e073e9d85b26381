#pragma once

// The rule labeling and decreasingness of local diagrams.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ddc/peaks.hpp"
#include "ddc/rewrite.hpp"

namespace ddc {

/// Rule index → natural label. Labels are compared by >ℕ and ⩾ℕ.
class IndexMap {
 public:
  IndexMap() = default;
  explicit IndexMap(std::vector<unsigned> labels) : labels_(std::move(labels)) {}

  /// Throws Error for an index outside the map.
  unsigned operator()(std::size_t rule_index) const;
  std::size_t size() const { return labels_.size(); }
  const std::vector<unsigned>& labels() const { return labels_; }

  bool operator==(const IndexMap&) const = default;

 private:
  std::vector<unsigned> labels_;
};

/// The label of the applied rule, whatever the step's direction.
unsigned label_step(const IndexMap& i, const Step& st);
std::vector<unsigned> label_conversion(const IndexMap& i, const Conversion& c);

/// One half of a local diagram, read from the peak's endpoint towards the
/// common meeting term: conv1, an optional forward step, conv2.
struct DiagramSide {
  Conversion conv1;
  std::optional<Step> step;
  Conversion conv2;

  explicit DiagramSide(Term start) : conv1(start), conv2(std::move(start)) {}
  DiagramSide(Conversion c1, std::optional<Step> s, Conversion c2)
      : conv1(std::move(c1)), step(std::move(s)), conv2(std::move(c2)) {}

  const Term& start() const { return conv1.start; }
  const Term& end() const { return conv2.end(); }
  /// Every term on the side, in order.
  std::vector<Term> terms() const;
};

/// t ↔* t′ →⁼ t″ ↔* (meet) *↔ u″ ⁼← u′ *↔ u for the peak t ← s → u.
struct Diagram {
  LocalPeak peak;
  DiagramSide left;
  DiagramSide right;

  Diagram mirrored() const { return {peak.mirrored(), right, left}; }
};

/// nullopt if the diagram is a well-formed local diagram of its peak,
/// otherwise the first defect.
std::optional<std::string> structural_error(const Diagram& d);

struct SideLabels {
  std::vector<unsigned> conv1;
  std::optional<unsigned> step;
  std::vector<unsigned> conv2;
};

/// Label conditions of extended local decreasingness over >ℕ and ⩾ℕ, for a
/// peak labelled (α, β). Returns the first failing condition.
std::optional<std::string> eld_label_failure(unsigned alpha, unsigned beta,
                                             const SideLabels& left,
                                             const SideLabels& right);

enum class DiagramStatus { Ok, Structural, Labels };

struct DiagramCheck {
  DiagramStatus status = DiagramStatus::Ok;
  std::string reason;

  bool ok() const { return status == DiagramStatus::Ok; }
};

DiagramCheck check_eld_diagram(const IndexMap& i, const Diagram& d);

struct Split {
  std::vector<unsigned> first;   // all < α
  std::vector<unsigned> middle;  // at most one label, ⩽ β
  std::vector<unsigned> last;    // all < α or < β

  bool operator==(const Split&) const = default;
};

/// Maximal prefix below α, then one label ⩽ β if the next one qualifies,
/// then the remainder. nullopt if the remainder is not below max(α, β).
std::optional<Split> greedy_split(unsigned alpha, unsigned beta,
                                  std::span<const unsigned> sigma);

/// Valley version for the peak t ← s → u: `left` is a forward sequence from
/// t and `right` one from u, meeting in a common term. Returns the first
/// defect, structural or label-related.
DiagramCheck check_valley(const IndexMap& i, const LocalPeak& peak,
                          const Conversion& left, const Conversion& right);

/// Wraps a valley as a conversion diagram using the greedy splits; nullopt
/// if either split fails.
std::optional<Diagram> valley_to_diagram(const IndexMap& i,
                                         const LocalPeak& peak,
                                         const Conversion& left,
                                         const Conversion& right);

struct FanResult {
  bool ok = true;
  std::optional<Term> offending;
};

/// Every term of the diagram must be reachable from `source` within
/// `bound` steps. Throws ResourceExhausted from the reachability search.
FanResult check_fan(const Trs& R, const Term& source, const Diagram& d,
                    std::size_t bound, std::size_t node_cap = kDefaultNodeCap);

}  // namespace ddc
