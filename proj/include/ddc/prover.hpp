#pragma once

// Small-scale search for certificates accepted by `check`: valley joins by
// bounded rewriting, a rule labeling by backtracking, and a linear
// interpretation for the duplicating rules.

#include <cstddef>
#include <optional>
#include <vector>

#include "ddc/certificate.hpp"

namespace ddc {

struct ProverConfig {
  enum class Target { Valley, Conv };

  unsigned join_depth = 3;
  unsigned max_label = 2;
  unsigned coeff_bound = 2;
  Target mode = Target::Valley;
  std::size_t candidate_cap = 64;
  std::size_t node_cap = kDefaultNodeCap;
};

/// Two forward rewrite sequences from peak_left and peak_right meeting in a
/// common term.
struct Join {
  Conversion left;
  Conversion right;
};

/// Joins with sides of length ⩽ depth, shortest total length first,
/// at most `cap` of them. Throws ResourceExhausted once more than
/// `node_cap` sequences have been enumerated.
std::vector<Join> find_joins(const Trs& R, const CriticalPeak& cp,
                             unsigned depth, std::size_t cap = 64,
                             std::size_t node_cap = kDefaultNodeCap);

/// A labeling under which every peak has a candidate join that is
/// decreasing in the valley sense. Rules are assigned in index order,
/// labels ascending from 0 to max_label.
std::optional<IndexMap> assign_labels(const Trs& R,
                                      const std::vector<CriticalPeak>& peaks,
                                      const std::vector<std::vector<Join>>& joins,
                                      unsigned max_label);

/// linear-rl for linear systems, otherwise valley-rl or conv-rl per
/// `cfg.mode`. nullopt if any search fails or the system is not
/// left-linear.
std::optional<Certificate> prove(const Trs& R, const ProverConfig& cfg = {});

}  // namespace ddc
