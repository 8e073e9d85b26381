#include "ddc/labeling.hpp"

#include <algorithm>

namespace ddc {

unsigned IndexMap::operator()(std::size_t rule_index) const {
  if (rule_index >= labels_.size()) {
    throw Error("no label for rule " + std::to_string(rule_index + 1));
  }
  return labels_[rule_index];
}

unsigned label_step(const IndexMap& i, const Step& st) {
  return i(st.rule_index);
}

std::vector<unsigned> label_conversion(const IndexMap& i, const Conversion& c) {
  std::vector<unsigned> out;
  out.reserve(c.size());
  for (const Step& st : c.steps) out.push_back(label_step(i, st));
  return out;
}

std::vector<Term> DiagramSide::terms() const {
  std::vector<Term> out = conv1.terms();
  if (step) out.push_back(step->target);
  for (const Step& st : conv2.steps) out.push_back(st.target);
  return out;
}

namespace {

std::optional<std::string> side_error(const DiagramSide& side,
                                      const Term& start, const char* name) {
  const std::string n = name;
  if (!(side.conv1.start == start)) {
    return n + " side does not start at the peak endpoint " + start.to_string();
  }
  if (!validate_conversion(side.conv1)) return n + " conv1 is not a conversion";
  const Term* cur = &side.conv1.end();
  if (side.step) {
    if (side.step->dir != Direction::Forward) {
      return n + " middle step must be a forward step";
    }
    if (!(side.step->source == *cur) || !validate_step(*side.step)) {
      return n + " middle step is invalid";
    }
    cur = &side.step->target;
  }
  if (!(side.conv2.start == *cur)) return n + " conv2 is not chained";
  if (!validate_conversion(side.conv2)) return n + " conv2 is not a conversion";
  return std::nullopt;
}

bool all_below(const std::vector<unsigned>& ls, unsigned bound) {
  return std::all_of(ls.begin(), ls.end(), [&](unsigned l) { return l < bound; });
}

}  // namespace

std::optional<std::string> structural_error(const Diagram& d) {
  if (!d.peak.valid()) return "peak is not a valid local peak";
  if (auto e = side_error(d.left, d.peak.left.target, "left")) return e;
  if (auto e = side_error(d.right, d.peak.right.target, "right")) return e;
  if (!(d.left.end() == d.right.end())) {
    return "sides end in " + d.left.end().to_string() + " and " +
           d.right.end().to_string();
  }
  return std::nullopt;
}

std::optional<std::string> eld_label_failure(unsigned alpha, unsigned beta,
                                             const SideLabels& left,
                                             const SideLabels& right) {
  const unsigned top = std::max(alpha, beta);
  if (!all_below(left.conv1, alpha)) return "left conv1 not below α";
  if (left.step && *left.step > beta) return "left step exceeds β";
  if (!all_below(left.conv2, top)) return "left conv2 not below α or β";
  if (!all_below(right.conv1, beta)) return "right conv1 not below β";
  if (right.step && *right.step > alpha) return "right step exceeds α";
  if (!all_below(right.conv2, top)) return "right conv2 not below α or β";
  return std::nullopt;
}

DiagramCheck check_eld_diagram(const IndexMap& i, const Diagram& d) {
  if (auto e = structural_error(d)) return {DiagramStatus::Structural, *e};
  auto labels_of = [&](const DiagramSide& s) {
    SideLabels out{label_conversion(i, s.conv1), std::nullopt,
                   label_conversion(i, s.conv2)};
    if (s.step) out.step = label_step(i, *s.step);
    return out;
  };
  const unsigned alpha = label_step(i, d.peak.left);
  const unsigned beta = label_step(i, d.peak.right);
  if (auto e = eld_label_failure(alpha, beta, labels_of(d.left),
                                 labels_of(d.right))) {
    return {DiagramStatus::Labels,
            *e + " (peak labels " + std::to_string(alpha) + ", " +
                std::to_string(beta) + ")"};
  }
  return {};
}

std::optional<Split> greedy_split(unsigned alpha, unsigned beta,
                                  std::span<const unsigned> sigma) {
  std::size_t k = 0;
  while (k < sigma.size() && sigma[k] < alpha) ++k;
  Split s;
  s.first.assign(sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(k));
  if (k < sigma.size() && sigma[k] <= beta) s.middle.push_back(sigma[k++]);
  s.last.assign(sigma.begin() + static_cast<std::ptrdiff_t>(k), sigma.end());
  if (!all_below(s.last, std::max(alpha, beta))) return std::nullopt;
  return s;
}

namespace {

std::optional<std::string> valley_side_error(const Conversion& c,
                                             const Term& start,
                                             const char* name) {
  const std::string n = name;
  if (!(c.start == start)) return n + " sequence does not start at the peak";
  for (const Step& st : c.steps) {
    if (st.dir != Direction::Forward) {
      return n + " sequence contains a backward step";
    }
  }
  if (!validate_conversion(c)) return n + " sequence is not a rewrite sequence";
  return std::nullopt;
}

}  // namespace

DiagramCheck check_valley(const IndexMap& i, const LocalPeak& peak,
                          const Conversion& left, const Conversion& right) {
  if (!peak.valid()) {
    return {DiagramStatus::Structural, "peak is not a valid local peak"};
  }
  if (auto e = valley_side_error(left, peak.left.target, "left")) {
    return {DiagramStatus::Structural, *e};
  }
  if (auto e = valley_side_error(right, peak.right.target, "right")) {
    return {DiagramStatus::Structural, *e};
  }
  if (!(left.end() == right.end())) {
    return {DiagramStatus::Structural, "sequences do not meet"};
  }
  const unsigned alpha = label_step(i, peak.left);
  const unsigned beta = label_step(i, peak.right);
  if (!greedy_split(alpha, beta, label_conversion(i, left))) {
    return {DiagramStatus::Labels, "left sequence admits no decreasing split"};
  }
  if (!greedy_split(beta, alpha, label_conversion(i, right))) {
    return {DiagramStatus::Labels, "right sequence admits no decreasing split"};
  }
  return {};
}

namespace {

DiagramSide split_side(const Conversion& c, const Split& s) {
  const auto n1 = static_cast<std::ptrdiff_t>(s.first.size());
  const auto n2 = static_cast<std::ptrdiff_t>(s.middle.size());
  Conversion c1(c.start, {c.steps.begin(), c.steps.begin() + n1});
  std::optional<Step> mid;
  if (n2) mid = c.steps[static_cast<std::size_t>(n1)];
  Term mid_end = mid ? mid->target : c1.end();
  Conversion c2(std::move(mid_end), {c.steps.begin() + n1 + n2, c.steps.end()});
  return {std::move(c1), std::move(mid), std::move(c2)};
}

}  // namespace

std::optional<Diagram> valley_to_diagram(const IndexMap& i,
                                         const LocalPeak& peak,
                                         const Conversion& left,
                                         const Conversion& right) {
  const unsigned alpha = label_step(i, peak.left);
  const unsigned beta = label_step(i, peak.right);
  auto ls = greedy_split(alpha, beta, label_conversion(i, left));
  auto rs = greedy_split(beta, alpha, label_conversion(i, right));
  if (!ls || !rs) return std::nullopt;
  return Diagram{peak, split_side(left, *ls), split_side(right, *rs)};
}

FanResult check_fan(const Trs& R, const Term& source, const Diagram& d,
                    std::size_t bound, std::size_t node_cap) {
  TermSet reach = reachable_within(R, source, bound, node_cap);
  for (const DiagramSide* side : {&d.left, &d.right}) {
    for (const Term& t : side->terms()) {
      if (!reach.contains(t)) return {false, t};
    }
  }
  return {};
}

}  // namespace ddc
