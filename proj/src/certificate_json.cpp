#include <json.hpp>

#include "ddc/certificate.hpp"

namespace ddc {

using nlohmann::json;

std::string to_string(Mode m) {
  switch (m) {
    case Mode::LinearRl:
      return "linear-rl";
    case Mode::ValleyRl:
      return "valley-rl";
    case Mode::ConvRl:
      return "conv-rl";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "linear-rl") return Mode::LinearRl;
  if (s == "valley-rl") return Mode::ValleyRl;
  if (s == "conv-rl") return Mode::ConvRl;
  return std::nullopt;
}

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw SchemaError(what, path.empty() ? "/" : path);
}

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(path, std::string("missing field `") + key + "`");
  return *it;
}

const json* optional_field(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::uint64_t nat(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) {
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
      return j.get<std::uint64_t>();
    }
    schema(path, "expected a natural number");
  }
  return j.get<std::uint64_t>();
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array");
  return j;
}

std::string string(const json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string");
  return j.get<std::string>();
}

Term term_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) schema(path, "expected a term object");
  if (auto it = j.find("var"); it != j.end()) {
    if (j.size() != 1) schema(path, "a variable has only the `var` field");
    return Term::var(string(*it, path + "/var"));
  }
  auto it = j.find("fun");
  if (it == j.end()) schema(path, "expected `var` or `fun`");
  std::string f = string(*it, path + "/fun");
  std::vector<Term> args;
  if (const json* a = optional_field(j, "args")) {
    array(*a, path + "/args");
    for (std::size_t i = 0; i < a->size(); ++i) {
      args.push_back(term_from_json((*a)[i], path + "/args/" + std::to_string(i)));
    }
  }
  return Term::fun(std::move(f), std::move(args));
}

json term_to_json(const Term& t) {
  if (t.is_var()) return json{{"var", t.name()}};
  json args = json::array();
  for (const Term& a : t.args()) args.push_back(term_to_json(a));
  return json{{"fun", t.name()}, {"args", std::move(args)}};
}

StepSpec step_from_json(const json& j, const std::string& path) {
  StepSpec st;
  st.rule = nat(field(j, path, "rule"), path + "/rule");
  if (st.rule == 0) schema(path + "/rule", "rule indices are 1-based");
  const json& pos = array(field(j, path, "pos"), path + "/pos");
  std::vector<unsigned> steps;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    auto p = nat(pos[i], path + "/pos/" + std::to_string(i));
    if (p == 0) schema(path + "/pos/" + std::to_string(i), "positions are 1-based");
    steps.push_back(static_cast<unsigned>(p));
  }
  st.pos = Position(std::move(steps));
  std::string dir = string(field(j, path, "dir"), path + "/dir");
  if (dir == "fw") {
    st.dir = Direction::Forward;
  } else if (dir == "bw") {
    st.dir = Direction::Backward;
  } else {
    schema(path + "/dir", "expected \"fw\" or \"bw\"");
  }
  st.to = term_from_json(field(j, path, "to"), path + "/to");
  if (const json* s = optional_field(j, "subst")) {
    if (!s->is_object()) schema(path + "/subst", "expected an object");
    Substitution sigma;
    for (const auto& [x, t] : s->items()) {
      sigma.emplace(x, term_from_json(t, path + "/subst/" + x));
    }
    st.subst = std::move(sigma);
  }
  return st;
}

json step_to_json(const StepSpec& st) {
  json pos = json::array();
  for (unsigned p : st.pos.steps()) pos.push_back(p);
  json j{{"rule", st.rule},
         {"pos", std::move(pos)},
         {"dir", st.dir == Direction::Forward ? "fw" : "bw"},
         {"to", term_to_json(st.to)}};
  if (st.subst) {
    json s = json::object();
    for (const auto& [x, t] : *st.subst) s[x] = term_to_json(t);
    j["subst"] = std::move(s);
  }
  return j;
}

std::vector<StepSpec> steps_from_json(const json& j, const std::string& path) {
  array(j, path);
  std::vector<StepSpec> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(step_from_json(j[i], path + "/" + std::to_string(i)));
  }
  return out;
}

json steps_to_json(const std::vector<StepSpec>& steps) {
  json out = json::array();
  for (const StepSpec& st : steps) out.push_back(step_to_json(st));
  return out;
}

SideSpec side_from_json(const json& j, const std::string& path, Mode mode) {
  if (!j.is_object()) schema(path, "expected an object");
  if (mode == Mode::ValleyRl) {
    return ValleySide{steps_from_json(field(j, path, "seq"), path + "/seq")};
  }
  ConvSide side;
  side.conv1 = steps_from_json(field(j, path, "conv1"), path + "/conv1");
  if (const json* st = optional_field(j, "step")) {
    side.step = step_from_json(*st, path + "/step");
  }
  side.conv2 = steps_from_json(field(j, path, "conv2"), path + "/conv2");
  return side;
}

json side_to_json(const SideSpec& side) {
  if (const auto* v = std::get_if<ValleySide>(&side)) {
    return json{{"seq", steps_to_json(v->seq)}};
  }
  const auto& c = std::get<ConvSide>(side);
  return json{{"conv1", steps_to_json(c.conv1)},
              {"step", c.step ? step_to_json(*c.step) : json(nullptr)},
              {"conv2", steps_to_json(c.conv2)}};
}

PolyInterpretation interpretation_from_json(const json& j,
                                            const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  PolyInterpretation ip;
  for (const auto& [f, v] : j.items()) {
    const std::string p = path + "/" + f;
    array(v, p);
    if (v.empty()) schema(p, "expected [c, a1, ..., an]");
    SymbolInterpretation si;
    si.constant = nat(v[0], p + "/0");
    for (std::size_t i = 1; i < v.size(); ++i) {
      si.coefficients.push_back(nat(v[i], p + "/" + std::to_string(i)));
    }
    ip.symbols.emplace(f, std::move(si));
  }
  return ip;
}

json interpretation_to_json(const PolyInterpretation& ip) {
  json out = json::object();
  for (const auto& [f, si] : ip.symbols) {
    json v = json::array({si.constant});
    for (auto a : si.coefficients) v.push_back(a);
    out[f] = std::move(v);
  }
  return out;
}

}  // namespace

Certificate parse_certificate(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset only; report it as the column of line 1
    throw ParseError(e.what(), 1, e.byte);
  }
  if (!j.is_object()) schema("", "expected a JSON object");
  Certificate c;
  auto mode = parse_mode(string(field(j, "", "mode"), "/mode"));
  if (!mode) schema("/mode", "expected linear-rl, valley-rl or conv-rl");
  c.mode = *mode;

  const json& labels = array(field(j, "", "labels"), "/labels");
  std::vector<unsigned> ls;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    ls.push_back(static_cast<unsigned>(nat(labels[i], "/labels/" + std::to_string(i))));
  }
  c.labels = IndexMap(std::move(ls));

  const json* rt = optional_field(j, "relative_termination");
  if (c.mode == Mode::LinearRl) {
    if (rt) schema("/relative_termination", "must be null in linear-rl mode");
  } else if (!rt) {
    schema("/relative_termination", "required in " + to_string(c.mode) + " mode");
  } else if (rt->is_string()) {
    if (rt->get<std::string>() != "assumed") {
      schema("/relative_termination", "expected \"assumed\" or an interpretation");
    }
    c.relterm = AssumedTermination{};
  } else {
    c.relterm = interpretation_from_json(
        field(*rt, "/relative_termination", "interpretation"),
        "/relative_termination/interpretation");
  }

  const json* fb = optional_field(j, "fan_bound");
  if (c.mode == Mode::ConvRl) {
    if (!fb) schema("/fan_bound", "required in conv-rl mode");
    c.fan_bound = nat(*fb, "/fan_bound");
  } else if (fb) {
    schema("/fan_bound", "only allowed in conv-rl mode");
  }

  const json& peaks = array(field(j, "", "peaks"), "/peaks");
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    const std::string p = "/peaks/" + std::to_string(i);
    const json& e = peaks[i];
    c.peaks.push_back(PeakEntry{
        term_from_json(field(e, p, "source"), p + "/source"),
        side_from_json(field(e, p, "left"), p + "/left", c.mode),
        side_from_json(field(e, p, "right"), p + "/right", c.mode)});
  }
  return c;
}

std::string serialize_certificate(const Certificate& c, int indent) {
  json j;
  j["mode"] = to_string(c.mode);
  j["labels"] = c.labels.labels();
  if (std::holds_alternative<AssumedTermination>(c.relterm)) {
    j["relative_termination"] = "assumed";
  } else if (const auto* ip = std::get_if<PolyInterpretation>(&c.relterm)) {
    j["relative_termination"] = json{{"interpretation", interpretation_to_json(*ip)}};
  } else {
    j["relative_termination"] = nullptr;
  }
  j["fan_bound"] = c.fan_bound ? json(*c.fan_bound) : json(nullptr);
  json peaks = json::array();
  for (const PeakEntry& e : c.peaks) {
    peaks.push_back(json{{"source", term_to_json(e.source)},
                         {"left", side_to_json(e.left)},
                         {"right", side_to_json(e.right)}});
  }
  j["peaks"] = std::move(peaks);
  return j.dump(indent);
}

}  // namespace ddc
