#include "mccgs/render.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mccgs/problem.hpp"

namespace mccgs {

using nlohmann::json;

namespace {

std::string variety(const PNode& n) {
  if (n.ideal.is_zero()) return "V(0)";
  std::string s = "V(";
  for (std::size_t i = 0; i < n.ideal.gb().size(); ++i) {
    if (i) s += ", ";
    s += n.ideal.gb()[i].to_string();
  }
  return s + ")";
}

std::string describe_node(const PNode& n) {
  std::vector<std::string> parts;
  for (const auto& c : n.children)
    if (!c.pad) parts.push_back(describe_node(c));
  if (parts.empty()) return variety(n);
  std::string s = variety(n) + " \\ ";
  if (parts.size() == 1 && n.children.size() == 1 && n.children[0].children.empty()) return s + parts[0];
  s += "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " U " : "") + parts[i];
  return s + ")";
}

// Basis in display order, ascending by lpp.
std::vector<std::string> basis_strings(const Segment& s) {
  std::vector<std::string> out;
  if (s.B.empty()) return {"0"};
  for (auto it = s.B.rbegin(); it != s.B.rend(); ++it) out.push_back(it->to_string());
  return out;
}

std::vector<std::string> lpp_strings(const Segment& s, const ParametricRings& R) {
  std::vector<std::string> out;
  for (const auto& m : s.lpps) out.push_back(Poly::monomial(R.full, m, 1).to_string());
  return out;
}

std::string bracket(const std::vector<std::string>& items) {
  std::string s = "[";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + "]";
}

json node_json(const PNode& n) {
  json ideal = json::array();
  if (n.pad) {
    ideal.push_back("1");
  } else {
    for (const auto& g : n.ideal.gb()) ideal.push_back(g.to_string());
  }
  json kids = json::array();
  for (const auto& c : n.children) kids.push_back(node_json(c));
  return json{{"ideal", ideal}, {"children", kids}};
}

PNode node_from_json(const json& j, const RingPtr& R) {
  PNode n;
  std::vector<Poly> gens;
  for (const auto& g : j.at("ideal")) gens.push_back(parse_poly(g.get<std::string>(), R));
  n.ideal = Ideal(R, gens);
  n.pad = n.ideal.is_unit();
  for (const auto& c : j.at("children")) n.children.push_back(node_from_json(c, R));
  return n;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void dot_nodes(const PNode& n, const std::string& parent, const std::string& id, std::ostringstream& os) {
  std::string label = n.pad ? "[1]" : n.ideal.to_string();
  os << "    " << id << " [label=\"" << dot_escape(label) << "\"];\n";
  os << "    " << parent << " -> " << id << ";\n";
  for (std::size_t i = 0; i < n.children.size(); ++i)
    dot_nodes(n.children[i], id, id + "_" + std::to_string(i), os);
}

}  // namespace

std::string describe(const PTree& T) {
  if (T.children.empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < T.children.size(); ++i) s += (i ? " U " : "") + describe_node(T.children[i]);
  return s;
}

std::string render_text(const MccgsTree& T) {
  const auto& R = T.rings;
  std::ostringstream os;
  os << "# vars " << bracket(R.space.vars) << " " << order_name(R.x_order) << ", params "
     << bracket(R.space.params) << " " << order_name(R.a_order) << "\n";
  os << "# " << T.segments.size() << (T.segments.size() == 1 ? " segment" : " segments") << " from "
     << T.diagnostics.leaves << (T.diagnostics.leaves == 1 ? " leaf" : " leaves")
     << (T.diagnostics.certified ? "" : ", canonicity not certified") << "\n";
  for (const auto& u : T.diagnostics.unmerged) os << "# unmerged: " << u << "\n";
  for (const auto& s : T.segments)
    os << bracket(lpp_strings(s, R)) << " | " << bracket(basis_strings(s)) << " | " << describe(s.tree) << "\n";
  return os.str();
}

std::string render_json(const MccgsTree& T) {
  const auto& R = T.rings;
  json segs = json::array();
  for (const auto& s : T.segments) {
    json tree = json::array();
    for (const auto& c : s.tree.children) tree.push_back(node_json(c));
    segs.push_back(json{{"lpp", lpp_strings(s, R)},
                        {"basis", s.B.empty() ? std::vector<std::string>{} : basis_strings(s)},
                        {"tree", tree},
                        {"certified", s.tree.certified}});
  }
  json doc{{"vars", R.space.vars},
           {"params", R.space.params},
           {"order_x", order_name(R.x_order)},
           {"order_a", order_name(R.a_order)},
           {"segments", segs},
           {"diagnostics",
            {{"certified", T.diagnostics.certified},
             {"addcase_agreed", T.diagnostics.addcase_agreed},
             {"leaves", T.diagnostics.leaves},
             {"unmerged", T.diagnostics.unmerged}}}};
  return doc.dump(2) + "\n";
}

MccgsTree parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
    VarSpace space{doc.at("vars").get<std::vector<std::string>>(), doc.at("params").get<std::vector<std::string>>()};
    MccgsTree T{ParametricRings::make(space, parse_order(doc.at("order_x").get<std::string>()),
                                      parse_order(doc.at("order_a").get<std::string>())),
                {},
                {}};
    for (const auto& s : doc.at("segments")) {
      Segment seg;
      for (const auto& b : s.at("basis")) seg.B.push_back(parse_poly(b.get<std::string>(), T.rings.full));
      std::reverse(seg.B.begin(), seg.B.end());
      seg.lpps = lpp_set(seg.B, T.rings);
      seg.tree.ring = T.rings.params;
      seg.tree.certified = s.at("certified").get<bool>();
      for (const auto& c : s.at("tree")) seg.tree.children.push_back(node_from_json(c, T.rings.params));
      T.segments.push_back(std::move(seg));
    }
    const json& d = doc.at("diagnostics");
    T.diagnostics.certified = d.at("certified").get<bool>();
    T.diagnostics.addcase_agreed = d.at("addcase_agreed").get<bool>();
    T.diagnostics.leaves = d.at("leaves").get<std::size_t>();
    T.diagnostics.unmerged = d.at("unmerged").get<std::vector<std::string>>();
    return T;
  } catch (const json::exception& e) {
    throw ProblemError(std::string("invalid tree JSON: ") + e.what());
  }
}

std::string render_dot(const MccgsTree& T) {
  const auto& R = T.rings;
  std::ostringstream os;
  os << "digraph mccgs {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < T.segments.size(); ++i) {
    const Segment& s = T.segments[i];
    std::string root = "s" + std::to_string(i);
    os << "  subgraph cluster_" << i << " {\n";
    os << "    label=\"" << dot_escape(bracket(lpp_strings(s, R)) + " : " + bracket(basis_strings(s))) << "\";\n";
    os << "    " << root << " [label=\"segment " << i + 1 << "\", shape=ellipse];\n";
    for (std::size_t k = 0; k < s.tree.children.size(); ++k)
      dot_nodes(s.tree.children[k], root, root + "_" + std::to_string(k), os);
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace mccgs
