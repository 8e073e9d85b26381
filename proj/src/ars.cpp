#include "ddc/ars.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <tuple>

namespace ddc::ars {

FiniteArs::FiniteArs(std::set<std::string> objects,
                     std::set<std::string> labels, std::set<Edge> edges)
    : objects_(std::move(objects)),
      labels_(std::move(labels)),
      edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (!objects_.contains(e.source) || !objects_.contains(e.target)) {
      throw Error("edge " + e.source + " " + e.label + " " + e.target +
                  " has an unknown endpoint");
    }
    if (!labels_.contains(e.label)) {
      throw Error("edge uses unknown label " + e.label);
    }
  }
}

FiniteArs FiniteArs::from_edges(std::set<Edge> edges,
                                std::set<std::string> extra_labels) {
  std::set<std::string> objects;
  for (const Edge& e : edges) {
    objects.insert(e.source);
    objects.insert(e.target);
    extra_labels.insert(e.label);
  }
  return FiniteArs(std::move(objects), std::move(extra_labels),
                   std::move(edges));
}

std::set<std::pair<std::string, std::string>> FiniteArs::relation(
    const std::string& label) const {
  std::set<std::pair<std::string, std::string>> out;
  for (const Edge& e : edges_) {
    if (e.label == label) out.emplace(e.source, e.target);
  }
  return out;
}

namespace {

LabelRelation transitive_closure(LabelRelation rel,
                                 const std::set<std::string>& labels) {
  for (const auto& k : labels) {
    for (const auto& i : labels) {
      if (!rel.contains({i, k})) continue;
      for (const auto& j : labels) {
        if (rel.contains({k, j})) rel.emplace(i, j);
      }
    }
  }
  return rel;
}

}  // namespace

LabelOrders LabelOrders::closed(const LabelRelation& strict,
                                const LabelRelation& weak,
                                const std::set<std::string>& labels) {
  LabelRelation w = weak;
  for (const auto& l : labels) w.emplace(l, l);
  return {transitive_closure(strict, labels), transitive_closure(w, labels)};
}

LabelOrders LabelOrders::with_identity_weak(
    const LabelRelation& strict, const std::set<std::string>& labels) {
  return closed(strict, {}, labels);
}

std::string OrderViolation::to_string() const {
  std::string out = kind;
  if (!witness.empty()) {
    out += " (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) out += ", ";
      out += witness[i];
    }
    out += ")";
  }
  return out;
}

std::optional<OrderViolation> validate(const LabelOrders& ord,
                                       const std::set<std::string>& labels) {
  for (const auto& [a, b] : ord.strict) {
    if (a == b) return OrderViolation{"strict-irreflexive", {a}};
  }
  for (const auto& [a, b] : ord.strict) {
    for (const auto& [c, d] : ord.strict) {
      if (b == c && !ord.strict.contains({a, d})) {
        return OrderViolation{"strict-transitive", {a, b, d}};
      }
    }
  }
  for (const auto& l : labels) {
    if (!ord.weak.contains({l, l})) return OrderViolation{"weak-reflexive", {l}};
  }
  for (const auto& [a, b] : ord.weak) {
    for (const auto& [c, d] : ord.weak) {
      if (b == c && !ord.weak.contains({a, d})) {
        return OrderViolation{"weak-transitive", {a, b, d}};
      }
    }
  }
  // ⩾ · > · ⩾ ⊆ >
  for (const auto& [b, c] : ord.strict) {
    for (const auto& a : labels) {
      if (!ord.geq(a, b)) continue;
      for (const auto& d : labels) {
        if (ord.geq(c, d) && !ord.greater(a, d)) {
          return OrderViolation{"incompatible", {a, b, c, d}};
        }
      }
    }
  }
  return std::nullopt;
}

std::set<std::string> down_set(const LabelOrders& ord, Which which,
                               const std::set<std::string>& S,
                               const std::set<std::string>& labels) {
  std::set<std::string> out;
  for (const auto& alpha : S) {
    if (which == Which::Weak) out.insert(alpha);
    for (const auto& beta : labels) {
      if (which == Which::Strict ? ord.greater(alpha, beta)
                                 : ord.geq(alpha, beta)) {
        out.insert(beta);
      }
    }
  }
  return out;
}

FiniteArs coarsen(const FiniteArs& A, const LabelOrders& ord) {
  std::set<Edge> edges;
  for (const auto& alpha : A.labels()) {
    for (const Edge& e : A.edges()) {
      if (ord.geq(alpha, e.label)) edges.insert(Edge{e.source, alpha, e.target});
    }
  }
  return FiniteArs(A.objects(), A.labels(), std::move(edges));
}

namespace {

struct State {
  std::string obj;
  int seg;
  std::size_t len;
  auto operator<=>(const State&) const = default;
};

struct Parent {
  State from;
  WitnessStep step;
  bool has_step;
};

std::optional<std::vector<WitnessStep>> find_witness(
    const FiniteArs& A, const LabelOrders& ord, const Edge& left,
    const Edge& right, std::size_t maxlen) {
  const std::string& alpha = left.label;
  const std::string& beta = right.label;
  const auto& L = A.labels();
  const std::set<std::string> allowed[5] = {
      down_set(ord, Which::Strict, {alpha}, L),
      down_set(ord, Which::Weak, {beta}, L),
      down_set(ord, Which::Strict, {alpha, beta}, L),
      down_set(ord, Which::Weak, {alpha}, L),
      down_set(ord, Which::Strict, {beta}, L),
  };

  std::map<State, Parent> parent;
  std::deque<State> queue;
  const State start{left.target, 0, 0};
  parent.emplace(start, Parent{start, {}, false});
  queue.push_back(start);

  auto push = [&](const State& from, State to, std::optional<WitnessStep> st) {
    if (parent.contains(to)) return;
    parent.emplace(to, Parent{from, st.value_or(WitnessStep{}), st.has_value()});
    queue.push_back(std::move(to));
  };

  while (!queue.empty()) {
    State cur = queue.front();
    queue.pop_front();
    if (cur.seg == 4 && cur.obj == right.target) {
      std::vector<WitnessStep> path;
      State s = cur;
      while (!(s == start)) {
        const Parent& p = parent.at(s);
        if (p.has_step) path.push_back(p.step);
        s = p.from;
      }
      return std::vector<WitnessStep>(path.rbegin(), path.rend());
    }
    if (cur.seg < 4) push(cur, State{cur.obj, cur.seg + 1, 0}, std::nullopt);
    const auto& ok = allowed[cur.seg];
    for (const Edge& e : A.edges()) {
      if (!ok.contains(e.label)) continue;
      switch (cur.seg) {
        case 0:
        case 2:
        case 4:
          if (cur.len >= maxlen) break;
          if (e.source == cur.obj) {
            push(cur, State{e.target, cur.seg, cur.len + 1},
                 WitnessStep{e.source, e.label, e.target, Direction::Forward,
                             cur.seg});
          }
          if (e.target == cur.obj) {
            push(cur, State{e.source, cur.seg, cur.len + 1},
                 WitnessStep{e.target, e.label, e.source, Direction::Backward,
                             cur.seg});
          }
          break;
        case 1:
          if (e.source == cur.obj) {
            push(cur, State{e.target, 2, 0},
                 WitnessStep{e.source, e.label, e.target, Direction::Forward, 1});
          }
          break;
        case 3:
          if (e.target == cur.obj) {
            push(cur, State{e.source, 4, 0},
                 WitnessStep{e.target, e.label, e.source, Direction::Backward,
                             3});
          }
          break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

EldReport check_eld(const FiniteArs& A, const LabelOrders& ord,
                    std::size_t maxlen) {
  EldReport report;
  for (const Edge& l : A.edges()) {
    for (const Edge& r : A.edges()) {
      if (l.source != r.source) continue;
      PeakResult res{l, r, find_witness(A, ord, l, r, maxlen)};
      report.ok = report.ok && res.witness.has_value();
      report.peaks.push_back(std::move(res));
    }
  }
  return report;
}

bool confluent_bruteforce(const FiniteArs& A) {
  std::map<std::string, std::set<std::string>> succ;
  for (const Edge& e : A.edges()) succ[e.source].insert(e.target);
  std::map<std::string, std::set<std::string>> reach;
  for (const auto& o : A.objects()) {
    std::set<std::string>& seen = reach[o];
    std::deque<std::string> queue{o};
    seen.insert(o);
    while (!queue.empty()) {
      std::string cur = queue.front();
      queue.pop_front();
      for (const auto& n : succ[cur]) {
        if (seen.insert(n).second) queue.push_back(n);
      }
    }
  }
  for (const auto& [s, rs] : reach) {
    for (const auto& t : rs) {
      for (const auto& u : rs) {
        const auto& rt = reach[t];
        const auto& ru = reach[u];
        bool joinable = false;
        for (const auto& v : rt) {
          if (ru.contains(v)) {
            joinable = true;
            break;
          }
        }
        if (!joinable) return false;
      }
    }
  }
  return true;
}

ArsInput parse_ars(std::string_view text) {
  enum class Section { Edges, Strict, Weak } section = Section::Edges;
  std::set<Edge> edges;
  std::set<std::string> labels;
  LabelRelation strict, weak;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty()) continue;
    if (w.size() == 1 && w[0].front() == '[' && w[0].back() == ']') {
      if (w[0] == "[EDGES]") {
        section = Section::Edges;
      } else if (w[0] == "[STRICT]") {
        section = Section::Strict;
      } else if (w[0] == "[WEAK]") {
        section = Section::Weak;
      } else {
        throw ParseError("unknown section " + w[0], lineno, 1);
      }
      continue;
    }
    if (section == Section::Edges) {
      if (w.size() != 3) {
        throw ParseError("expected `source label target`", lineno, 1);
      }
      edges.insert(Edge{w[0], w[1], w[2]});
      labels.insert(w[1]);
    } else {
      if (w.size() != 2) throw ParseError("expected a label pair", lineno, 1);
      (section == Section::Strict ? strict : weak).emplace(w[0], w[1]);
      labels.insert(w[0]);
      labels.insert(w[1]);
    }
  }
  FiniteArs ars = FiniteArs::from_edges(std::move(edges), labels);
  LabelOrders ord = LabelOrders::closed(strict, weak, ars.labels());
  return {std::move(ars), std::move(ord)};
}

}  // namespace ddc::ars
