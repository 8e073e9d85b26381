#include "ddc/certificate.hpp"

namespace ddc {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Accept:
      return "ACCEPT";
    case VerdictKind::AcceptConditional:
      return "ACCEPT-CONDITIONAL";
    case VerdictKind::Reject:
      return "REJECT";
    case VerdictKind::Error:
      return "ERROR";
  }
  return "?";
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::None:
      return "none";
    case Reason::LabelMap:
      return "label-map";
    case Reason::ModeGate:
      return "mode-gate";
    case Reason::RelativeTermination:
      return "relative-termination";
    case Reason::UnmatchedPeak:
      return "unmatched-peak";
    case Reason::InvalidDiagram:
      return "invalid-diagram";
    case Reason::NotDecreasing:
      return "not-decreasing";
    case Reason::FanViolation:
      return "fan-violation";
    case Reason::ResourceExhausted:
      return "resource-exhausted";
  }
  return "?";
}

int Verdict::exit_code() const {
  switch (kind) {
    case VerdictKind::Accept:
      return 0;
    case VerdictKind::AcceptConditional:
      return 3;
    case VerdictKind::Reject:
      return 1;
    case VerdictKind::Error:
      return 2;
  }
  return 2;
}

std::string Verdict::to_string() const {
  std::string out = ddc::to_string(kind);
  if (reason != Reason::None) out += " [" + ddc::to_string(reason) + "]";
  if (peak) out += " critical peak #" + std::to_string(*peak + 1);
  if (!detail.empty()) out += ": " + detail;
  if (offending) out += " (offending term " + offending->to_string() + ")";
  return out;
}

namespace {

Substitution rename_values(const Substitution& s, const Substitution& rho) {
  Substitution out;
  for (const auto& [x, t] : s) out.emplace(x, apply_subst(t, rho));
  return out;
}

/// Builds the annotated step leaving `from`; nullopt with `err` set if the
/// spec does not describe a valid step.
std::optional<Step> build_step(const Trs& R, const Term& from,
                               const StepSpec& spec, const Substitution& rho,
                               std::string& err) {
  if (spec.rule == 0 || spec.rule > R.size()) {
    err = "step refers to unknown rule " + std::to_string(spec.rule);
    return std::nullopt;
  }
  const std::size_t idx = spec.rule - 1;
  Term to = apply_subst(spec.to, rho);
  if (spec.subst) {
    Step st{from, idx, R.rule(idx), spec.pos, rename_values(*spec.subst, rho),
            spec.dir, to};
    if (validate_step(st)) return st;
  } else if (auto st = derive_step(from, to, R.rule(idx), idx, spec.pos,
                                   spec.dir)) {
    return st;
  }
  err = "invalid step from " + from.to_string() + " to " + to.to_string() +
        " with rule " + std::to_string(spec.rule) + " at " +
        spec.pos.to_string();
  return std::nullopt;
}

std::optional<Conversion> build_conversion(const Trs& R, const Term& start,
                                           const std::vector<StepSpec>& specs,
                                           const Substitution& rho,
                                           std::string& err) {
  Conversion c(start);
  for (const StepSpec& spec : specs) {
    auto st = build_step(R, c.end(), spec, rho, err);
    if (!st) return std::nullopt;
    c.steps.push_back(std::move(*st));
  }
  return c;
}

std::optional<DiagramSide> build_conv_side(const Trs& R, const Term& start,
                                           const ConvSide& side,
                                           const Substitution& rho,
                                           std::string& err) {
  auto c1 = build_conversion(R, start, side.conv1, rho, err);
  if (!c1) return std::nullopt;
  std::optional<Step> mid;
  if (side.step) {
    if (side.step->dir != Direction::Forward) {
      err = "middle step must be a forward step";
      return std::nullopt;
    }
    mid = build_step(R, c1->end(), *side.step, rho, err);
    if (!mid) return std::nullopt;
  }
  auto c2 = build_conversion(R, mid ? mid->target : c1->end(), side.conv2, rho,
                             err);
  if (!c2) return std::nullopt;
  return DiagramSide(std::move(*c1), std::move(mid), std::move(*c2));
}

const StepSpec* first_step(const SideSpec& side) {
  if (const auto* v = std::get_if<ValleySide>(&side)) {
    return v->seq.empty() ? nullptr : &v->seq.front();
  }
  const auto& c = std::get<ConvSide>(side);
  if (!c.conv1.empty()) return &c.conv1.front();
  if (c.step) return &*c.step;
  return c.conv2.empty() ? nullptr : &c.conv2.front();
}

bool side_kind_matches(const SideSpec& side, Mode mode) {
  return std::holds_alternative<ValleySide>(side) == (mode == Mode::ValleyRl);
}

struct PeakOutcome {
  std::vector<Diagram> passing;  // empty in valley mode (no fan check)
  bool passed = false;
  Reason reason = Reason::UnmatchedPeak;
  std::string detail = "no certificate entry matches this peak";
};

int severity(Reason r) {
  switch (r) {
    case Reason::InvalidDiagram:
      return 1;
    case Reason::NotDecreasing:
      return 2;
    default:
      return 0;
  }
}

// Reports the first failure of the most advanced kind: a diagram that is
// well-formed but not decreasing says more than a malformed one.
void note_failure(PeakOutcome& out, Reason r, std::string detail) {
  if (severity(r) > severity(out.reason)) {
    out.reason = r;
    out.detail = std::move(detail);
  }
}

PeakOutcome check_peak(const Trs& R, const Certificate& c,
                       const CriticalPeak& cp) {
  PeakOutcome out;
  const LocalPeak peak = cp.as_local_peak();
  std::vector<PeakEntry> candidates;
  for (const PeakEntry& e : c.peaks) candidates.push_back(e);
  for (const PeakEntry& e : c.peaks) candidates.push_back(e.mirrored());

  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const PeakEntry& e = candidates[k];
    const std::string which = "entry " + std::to_string(k % c.peaks.size() + 1) +
                              (k >= c.peaks.size() ? " (mirrored)" : "");
    if (!side_kind_matches(e.left, c.mode) || !side_kind_matches(e.right, c.mode)) {
      continue;
    }
    auto rho = match_entry(R, cp, e);
    if (!rho) continue;
    std::string err;
    if (c.mode == Mode::ValleyRl) {
      const auto& l = std::get<ValleySide>(e.left);
      const auto& r = std::get<ValleySide>(e.right);
      auto lc = build_conversion(R, cp.peak_left, l.seq, *rho, err);
      auto rc = lc ? build_conversion(R, cp.peak_right, r.seq, *rho, err)
                   : std::nullopt;
      if (!lc || !rc) {
        note_failure(out, Reason::InvalidDiagram, which + ": " + err);
        continue;
      }
      DiagramCheck res = check_valley(c.labels, peak, *lc, *rc);
      if (!res.ok()) {
        note_failure(out,
                     res.status == DiagramStatus::Structural
                         ? Reason::InvalidDiagram
                         : Reason::NotDecreasing,
                     which + ": " + res.reason);
        continue;
      }
      out.passed = true;
      return out;
    }
    auto ls = build_conv_side(R, cp.peak_left, std::get<ConvSide>(e.left),
                              *rho, err);
    auto rs = ls ? build_conv_side(R, cp.peak_right,
                                   std::get<ConvSide>(e.right), *rho, err)
                 : std::nullopt;
    if (!ls || !rs) {
      note_failure(out, Reason::InvalidDiagram, which + ": " + err);
      continue;
    }
    Diagram d{peak, std::move(*ls), std::move(*rs)};
    DiagramCheck res = check_eld_diagram(c.labels, d);
    if (!res.ok()) {
      note_failure(out,
                   res.status == DiagramStatus::Structural
                       ? Reason::InvalidDiagram
                       : Reason::NotDecreasing,
                   which + ": " + res.reason);
      continue;
    }
    out.passed = true;
    out.passing.push_back(std::move(d));
  }
  return out;
}

Verdict reject(Reason r, std::string detail,
               std::optional<std::size_t> peak = std::nullopt) {
  return Verdict{VerdictKind::Reject, r, peak, std::move(detail), std::nullopt};
}

}  // namespace

std::optional<Substitution> match_entry(const Trs& R, const CriticalPeak& cp,
                                        const PeakEntry& e) {
  auto rho = variant_renaming(e.source, cp.peak_source);
  if (!rho) return std::nullopt;
  std::string err;
  for (const auto& [side, start] :
       {std::pair{&e.left, &cp.peak_left}, std::pair{&e.right, &cp.peak_right}}) {
    if (const StepSpec* st = first_step(*side)) {
      if (!build_step(R, *start, *st, *rho, err)) return std::nullopt;
    }
  }
  return rho;
}

Verdict check(const Trs& R, const Certificate& c, const CheckOptions& opts) {
  if (c.labels.size() != R.size()) {
    return reject(Reason::LabelMap,
                  "certificate labels " + std::to_string(c.labels.size()) +
                      " rules, the system has " + std::to_string(R.size()));
  }

  const Linearity lin = linearity(R);
  if (c.mode == Mode::LinearRl && lin != Linearity::Linear) {
    return reject(Reason::ModeGate,
                  "linear-rl needs a linear system, this one is " + to_string(lin));
  }
  if (c.mode != Mode::LinearRl && lin == Linearity::Neither) {
    return reject(Reason::ModeGate,
                  to_string(c.mode) + " needs a left-linear system");
  }

  bool conditional = false;
  if (c.mode != Mode::LinearRl) {
    if (std::holds_alternative<AssumedTermination>(c.relterm)) {
      conditional = true;
    } else if (const auto* ip = std::get_if<PolyInterpretation>(&c.relterm)) {
      auto [rd, rnd] = split_duplicating(R);
      try {
        RelativeResult res = verify_relative(rd, rnd, *ip);
        if (!res.ok) return reject(Reason::RelativeTermination, res.reason);
      } catch (const Error& e) {
        return reject(Reason::RelativeTermination, e.what());
      }
    } else {
      return reject(Reason::RelativeTermination, "no relative termination proof");
    }
  }

  try {
    const std::vector<CriticalPeak> cps = critical_peaks(R);
    std::vector<PeakOutcome> outcomes(cps.size());
    for (std::size_t k = 0; k < cps.size(); ++k) {
      if (cps[k].trivial()) continue;
      outcomes[k] = check_peak(R, c, cps[k]);
      if (!outcomes[k].passed) {
        return reject(outcomes[k].reason,
                      cps[k].to_string() + "; " + outcomes[k].detail, k);
      }
    }

    if (c.mode == Mode::ConvRl) {
      if (!c.fan_bound) return reject(Reason::FanViolation, "no fan bound given");
      for (std::size_t k = 0; k < cps.size(); ++k) {
        if (cps[k].trivial()) continue;
        std::optional<Term> offending;
        bool fan_ok = false;
        for (const Diagram& d : outcomes[k].passing) {
          FanResult fr = check_fan(R, cps[k].peak_source, d, *c.fan_bound,
                                   opts.node_cap);
          if (fr.ok) {
            fan_ok = true;
            break;
          }
          if (!offending) offending = fr.offending;
        }
        if (!fan_ok) {
          Verdict v = reject(Reason::FanViolation,
                             cps[k].to_string() + "; " +
                                 (offending ? offending->to_string() : "?") +
                                 " is not reachable from " +
                                 cps[k].peak_source.to_string() + " within " +
                                 std::to_string(*c.fan_bound) + " steps",
                             k);
          v.offending = offending;
          return v;
        }
      }
    }
  } catch (const ResourceExhausted& e) {
    return Verdict{VerdictKind::Error, Reason::ResourceExhausted, std::nullopt,
                   e.what(), std::nullopt};
  }

  if (conditional) {
    return Verdict{VerdictKind::AcceptConditional, Reason::None, std::nullopt,
                   "relative termination of the duplicating rules assumed",
                   std::nullopt};
  }
  return Verdict{};
}

}  // namespace ddc
