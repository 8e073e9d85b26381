#include "ddc/prover.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace ddc {

namespace {

// All forward rewrite sequences from `start` of length ⩽ depth that never
// revisit a term, shortest first.
std::vector<Conversion> sequences(const Trs& R, const Term& start,
                                  unsigned depth, std::size_t node_cap) {
  std::vector<Conversion> out{Conversion(start)};
  std::size_t layer_begin = 0;
  for (unsigned d = 0; d < depth; ++d) {
    const std::size_t layer_end = out.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (Step& st : one_step_rewrites(R, out[k].end())) {
        const auto terms = out[k].terms();
        if (std::find(terms.begin(), terms.end(), st.target) != terms.end()) {
          continue;
        }
        Conversion c = out[k];
        c.steps.push_back(std::move(st));
        out.push_back(std::move(c));
        if (out.size() > node_cap) {
          throw ResourceExhausted("join search exceeded " +
                                  std::to_string(node_cap) + " sequences");
        }
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

std::vector<unsigned> rule_indices(const Conversion& c) {
  std::vector<unsigned> out;
  for (const Step& st : c.steps) out.push_back(static_cast<unsigned>(st.rule_index));
  return out;
}

struct PeakConstraint {
  unsigned inner;
  unsigned outer;
  std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> joins;
  std::size_t decided_at;  // last rule index the constraint depends on
};

bool valley_ok(const std::vector<unsigned>& labels, const PeakConstraint& pc) {
  auto lab = [&](const std::vector<unsigned>& rules) {
    std::vector<unsigned> out;
    for (unsigned r : rules) out.push_back(labels[r]);
    return out;
  };
  const unsigned alpha = labels[pc.inner];
  const unsigned beta = labels[pc.outer];
  return std::any_of(pc.joins.begin(), pc.joins.end(), [&](const auto& j) {
    return greedy_split(alpha, beta, lab(j.first)) &&
           greedy_split(beta, alpha, lab(j.second));
  });
}

bool backtrack(std::size_t rule, std::vector<unsigned>& labels,
               const std::vector<PeakConstraint>& cs, unsigned max_label) {
  if (rule == labels.size()) return true;
  for (unsigned v = 0; v <= max_label; ++v) {
    labels[rule] = v;
    bool ok = true;
    for (const PeakConstraint& pc : cs) {
      if (pc.decided_at == rule && !valley_ok(labels, pc)) {
        ok = false;
        break;
      }
    }
    if (ok && backtrack(rule + 1, labels, cs, max_label)) return true;
  }
  return false;
}

Term peak_triple(const Term& s, const Term& l, const Term& r) {
  return Term::fun("#peak", {s, l, r});
}

std::vector<StepSpec> to_specs(std::span<const Step> steps) {
  std::vector<StepSpec> out;
  for (const Step& st : steps) {
    out.push_back(StepSpec{st.rule_index + 1, st.pos, Direction::Forward,
                           st.target, std::nullopt});
  }
  return out;
}

ConvSide to_conv_side(const DiagramSide& side) {
  ConvSide out;
  out.conv1 = to_specs(side.conv1.steps);
  if (side.step) out.step = to_specs(std::span(&*side.step, 1)).front();
  out.conv2 = to_specs(side.conv2.steps);
  return out;
}

}  // namespace

std::vector<Join> find_joins(const Trs& R, const CriticalPeak& cp,
                             unsigned depth, std::size_t cap,
                             std::size_t node_cap) {
  const auto left = sequences(R, cp.peak_left, depth, node_cap);
  const auto right = sequences(R, cp.peak_right, depth, node_cap);
  std::multimap<Term, std::size_t> right_by_end;
  for (std::size_t j = 0; j < right.size(); ++j) {
    right_by_end.emplace(right[j].end(), j);
  }
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < left.size(); ++i) {
    auto [lo, hi] = right_by_end.equal_range(left[i].end());
    for (auto it = lo; it != hi; ++it) {
      const std::size_t j = it->second;
      pairs.emplace_back(left[i].size() + right[j].size(), left[i].size(), i, j);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<Join> out;
  for (const auto& [total, llen, i, j] : pairs) {
    if (out.size() >= cap) break;
    out.push_back(Join{left[i], right[j]});
  }
  return out;
}

std::optional<IndexMap> assign_labels(const Trs& R,
                                      const std::vector<CriticalPeak>& peaks,
                                      const std::vector<std::vector<Join>>& joins,
                                      unsigned max_label) {
  std::vector<PeakConstraint> cs;
  for (std::size_t k = 0; k < peaks.size(); ++k) {
    if (peaks[k].trivial()) continue;
    PeakConstraint pc{static_cast<unsigned>(peaks[k].inner_index),
                      static_cast<unsigned>(peaks[k].outer_index), {}, 0};
    std::size_t last = std::max(pc.inner, pc.outer);
    for (const Join& j : joins.at(k)) {
      auto l = rule_indices(j.left);
      auto r = rule_indices(j.right);
      for (unsigned x : l) last = std::max<std::size_t>(last, x);
      for (unsigned x : r) last = std::max<std::size_t>(last, x);
      pc.joins.emplace_back(std::move(l), std::move(r));
    }
    if (pc.joins.empty()) return std::nullopt;
    pc.decided_at = last;
    cs.push_back(std::move(pc));
  }
  std::vector<unsigned> labels(R.size(), 0);
  if (!backtrack(0, labels, cs, max_label)) return std::nullopt;
  return IndexMap(std::move(labels));
}

std::optional<Certificate> prove(const Trs& R, const ProverConfig& cfg) {
  const Linearity lin = linearity(R);
  if (lin == Linearity::Neither) return std::nullopt;

  Certificate cert;
  if (lin == Linearity::Linear) {
    cert.mode = Mode::LinearRl;
  } else {
    cert.mode = cfg.mode == ProverConfig::Target::Conv ? Mode::ConvRl
                                                       : Mode::ValleyRl;
    auto [rd, rnd] = split_duplicating(R);
    auto ip = search_interpretation(rd, rnd, cfg.coeff_bound);
    if (!ip) return std::nullopt;
    cert.relterm = std::move(*ip);
  }

  // One orientation per overlap; check() derives the mirror.
  std::vector<CriticalPeak> kept;
  std::vector<Term> seen;
  for (CriticalPeak& cp : critical_peaks(R)) {
    if (cp.trivial()) continue;
    Term mirror = peak_triple(cp.peak_source, cp.peak_right, cp.peak_left);
    bool dup = std::any_of(seen.begin(), seen.end(), [&](const Term& t) {
      return variant_renaming(t, mirror).has_value();
    });
    if (dup) continue;
    seen.push_back(peak_triple(cp.peak_source, cp.peak_left, cp.peak_right));
    kept.push_back(std::move(cp));
  }

  std::vector<std::vector<Join>> joins;
  for (const CriticalPeak& cp : kept) {
    joins.push_back(find_joins(R, cp, cfg.join_depth, cfg.candidate_cap,
                               cfg.node_cap));
  }
  auto labels = assign_labels(R, kept, joins, cfg.max_label);
  if (!labels) return std::nullopt;
  cert.labels = *labels;

  std::size_t longest = 0;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const LocalPeak peak = kept[k].as_local_peak();
    for (const Join& j : joins[k]) {
      if (!check_valley(cert.labels, peak, j.left, j.right).ok()) continue;
      longest = std::max({longest, j.left.size(), j.right.size()});
      if (cert.mode == Mode::ValleyRl) {
        cert.peaks.push_back(PeakEntry{kept[k].peak_source,
                                       ValleySide{to_specs(j.left.steps)},
                                       ValleySide{to_specs(j.right.steps)}});
      } else {
        auto d = valley_to_diagram(cert.labels, peak, j.left, j.right);
        cert.peaks.push_back(PeakEntry{kept[k].peak_source,
                                       to_conv_side(d->left),
                                       to_conv_side(d->right)});
      }
      break;
    }
  }
  if (cert.mode == Mode::ConvRl) cert.fan_bound = longest + 1;
  return cert;
}

}  // namespace ddc
