#pragma once

// Confluence certificates for the rule labeling: data model, the TRS and
// certificate input formats, and the checking pipeline.
//
// A certificate names a mode, a label per rule, relative-termination
// evidence, an optional fan bound, and candidate joins for critical peaks.
// The checker recomputes the critical peaks itself and looks for a
// candidate join of each one among the entries, modulo variable renaming
// and mirroring.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ddc/labeling.hpp"
#include "ddc/peaks.hpp"
#include "ddc/relterm.hpp"
#include "ddc/term.hpp"

namespace ddc {

enum class Mode { LinearRl, ValleyRl, ConvRl };

std::string to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view s);

/// A step as written in a certificate. Its source is implicit: the end of
/// the preceding step, or the peak endpoint the side starts from.
struct StepSpec {
  std::size_t rule = 1;  // 1-based index into the TRS
  Position pos;
  Direction dir = Direction::Forward;
  Term to = Term::var("_");
  std::optional<Substitution> subst;

  bool operator==(const StepSpec&) const = default;
};

/// conversion, optional middle step, conversion (conv-rl and linear-rl).
struct ConvSide {
  std::vector<StepSpec> conv1;
  std::optional<StepSpec> step;
  std::vector<StepSpec> conv2;

  bool operator==(const ConvSide&) const = default;
};

/// Plain forward rewrite sequence (valley-rl).
struct ValleySide {
  std::vector<StepSpec> seq;

  bool operator==(const ValleySide&) const = default;
};

using SideSpec = std::variant<ConvSide, ValleySide>;

struct PeakEntry {
  Term source;
  SideSpec left;
  SideSpec right;

  bool operator==(const PeakEntry&) const = default;
  PeakEntry mirrored() const { return {source, right, left}; }
};

struct AssumedTermination {
  bool operator==(const AssumedTermination&) const = default;
};

using RelTermEvidence =
    std::variant<std::monostate, AssumedTermination, PolyInterpretation>;

struct Certificate {
  Mode mode = Mode::LinearRl;
  IndexMap labels;
  RelTermEvidence relterm;
  std::optional<std::size_t> fan_bound;
  std::vector<PeakEntry> peaks;

  bool operator==(const Certificate&) const = default;
};

/// Cops-style TRS: `(VAR x y ...)` and `(RULES l -> r ...)` blocks,
/// `(COMMENT ...)` ignored, `;` comments to end of line. Throws ParseError
/// or ArityClash.
Trs parse_trs(std::string_view text);

/// Structural parse of the JSON certificate. Throws ParseError for JSON
/// syntax and SchemaError for schema violations.
Certificate parse_certificate(std::string_view text);
std::string serialize_certificate(const Certificate& c, int indent = 2);

/// The renaming ρ with e.source·ρ = cp.peak_source, provided both sides of
/// the entry, renamed by ρ, can start from cp.peak_left and cp.peak_right
/// respectively (their first steps are valid from there).
std::optional<Substitution> match_entry(const Trs& R, const CriticalPeak& cp,
                                        const PeakEntry& e);

enum class VerdictKind { Accept, AcceptConditional, Reject, Error };

enum class Reason {
  None,
  LabelMap,
  ModeGate,
  RelativeTermination,
  UnmatchedPeak,
  InvalidDiagram,
  NotDecreasing,
  FanViolation,
  ResourceExhausted,
};

std::string to_string(VerdictKind k);
std::string to_string(Reason r);

struct Verdict {
  VerdictKind kind = VerdictKind::Accept;
  Reason reason = Reason::None;
  std::optional<std::size_t> peak;  // index into critical_peaks(R)
  std::string detail;
  std::optional<Term> offending;

  bool accepted() const {
    return kind == VerdictKind::Accept || kind == VerdictKind::AcceptConditional;
  }
  /// 0 Accept, 3 AcceptConditional, 1 Reject, 2 Error.
  int exit_code() const;
  std::string to_string() const;
};

struct CheckOptions {
  std::size_t node_cap = kDefaultNodeCap;
};

/// Mode gate, relative termination, critical peaks, decreasing joins, fan
/// property, in that order; the first failure decides a rejection.
Verdict check(const Trs& R, const Certificate& c, const CheckOptions& opts = {});

}  // namespace ddc
