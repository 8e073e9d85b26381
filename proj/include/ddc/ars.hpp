#pragma once

// Finite labeled abstract rewrite systems and decreasingness checks on them.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ddc/rewrite.hpp"

namespace ddc::ars {

struct Edge {
  std::string source;
  std::string label;
  std::string target;

  auto operator<=>(const Edge&) const = default;
  bool operator==(const Edge&) const = default;
};

class FiniteArs {
 public:
  FiniteArs() = default;
  /// Throws Error if an edge mentions an unknown object or label.
  FiniteArs(std::set<std::string> objects, std::set<std::string> labels,
            std::set<Edge> edges);
  /// Objects and labels are taken from the edges plus `extra_labels`.
  static FiniteArs from_edges(std::set<Edge> edges,
                              std::set<std::string> extra_labels = {});

  const std::set<std::string>& objects() const { return objects_; }
  const std::set<std::string>& labels() const { return labels_; }
  const std::set<Edge>& edges() const { return edges_; }

  /// Unlabeled pairs of →_label.
  std::set<std::pair<std::string, std::string>> relation(
      const std::string& label) const;

 private:
  std::set<std::string> objects_;
  std::set<std::string> labels_;
  std::set<Edge> edges_;
};

/// (a, b) ∈ strict means a > b; (a, b) ∈ weak means a ⩾ b.
using LabelRelation = std::set<std::pair<std::string, std::string>>;

struct LabelOrders {
  LabelRelation strict;
  LabelRelation weak;

  /// Transitive closure of `strict` and reflexive-transitive closure of
  /// `weak` over `labels`.
  static LabelOrders closed(const LabelRelation& strict,
                            const LabelRelation& weak,
                            const std::set<std::string>& labels);
  /// `strict` closed, weak order = identity on `labels`.
  static LabelOrders with_identity_weak(const LabelRelation& strict,
                                        const std::set<std::string>& labels);

  bool greater(const std::string& a, const std::string& b) const {
    return strict.contains({a, b});
  }
  bool geq(const std::string& a, const std::string& b) const {
    return a == b || weak.contains({a, b});
  }
};

struct OrderViolation {
  std::string kind;  // strict-irreflexive, strict-transitive, weak-reflexive,
                     // weak-transitive, incompatible
  std::vector<std::string> witness;
  std::string to_string() const;
};

/// First violated requirement, if any. For incompatibility the witness is
/// (a, b, c, d) with a ⩾ b > c ⩾ d but not a > d.
std::optional<OrderViolation> validate(const LabelOrders& ord,
                                       const std::set<std::string>& labels);

enum class Which { Strict, Weak };

/// ▽S: every β with α > β (resp. α ⩾ β) for some α ∈ S. Under the weak
/// relation S itself is included.
std::set<std::string> down_set(const LabelOrders& ord, Which which,
                               const std::set<std::string>& S,
                               const std::set<std::string>& labels);

/// ⇒_α := →_{▽⩽α}.
FiniteArs coarsen(const FiniteArs& A, const LabelOrders& ord);

struct WitnessStep {
  std::string from;
  std::string label;
  std::string to;
  Direction dir;
  int segment;  // 0..4 in the order of the five-segment pattern
};

struct PeakResult {
  Edge left;   // a →_α b
  Edge right;  // a →_β c
  std::optional<std::vector<WitnessStep>> witness;
};

struct EldReport {
  bool ok = true;
  std::vector<PeakResult> peaks;
};

constexpr std::size_t kDefaultMaxLen = 4;

/// Searches, for every peak b ←_α a →_β c, a conversion
/// b ↔*_{▽<α} · →⁼_{▽⩽β} · ↔*_{▽<αβ} · ←⁼_{▽⩽α} · ↔*_{▽<β} c with every
/// starred segment at most `maxlen` steps long. A missing witness means
/// none exists within the bound.
EldReport check_eld(const FiniteArs& A, const LabelOrders& ord,
                    std::size_t maxlen = kDefaultMaxLen);

bool confluent_bruteforce(const FiniteArs& A);

struct ArsInput {
  FiniteArs ars;
  LabelOrders orders;
};

/// Line format: `source label target` edges, optionally under `[EDGES]`,
/// and `a b` order pairs under `[STRICT]` (a > b) or `[WEAK]` (a ⩾ b).
/// `#` starts a comment. The orders are closed as in LabelOrders::closed.
ArsInput parse_ars(std::string_view text);

}  // namespace ddc::ars
