#include "talpha/io.hpp"

#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace talpha {

namespace {

std::string where(int line) { return "line " + std::to_string(line) + ": "; }

// Reads the next integer token, failing with the line number.
long long integer(std::istringstream& in, int line, const std::string& what) {
  long long x = 0;
  if (!(in >> x)) throw InvalidInput(where(line) + "expected " + what);
  return x;
}

void no_trailing(std::istringstream& in, int line) {
  std::string rest;
  if (in >> rest) throw InvalidInput(where(line) + "unexpected token '" + rest + "'");
}

std::ifstream open(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open " + path);
  return f;
}

Json vertices(const std::vector<Vertex>& vs) {
  Json a = Json::array();
  for (Vertex v : vs) a.push_back(v + 1);
  return a;
}

Json paths(const std::vector<std::vector<Vertex>>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(vertices(p));
  return a;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string text;
  int line = 0, n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, text)) {
    ++line;
    std::istringstream ls(text);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw InvalidInput(where(line) + "second header");
      std::string kind;
      if (!(ls >> kind) || kind != "edge") throw InvalidInput(where(line) + "expected 'p edge <n> <m>'");
      const long long nn = integer(ls, line, "vertex count");
      m = integer(ls, line, "edge count");
      no_trailing(ls, line);
      if (nn < 0 || nn > 1'000'000 || m < 0) throw InvalidInput(where(line) + "bad header counts");
      n = static_cast<int>(nn);
    } else if (tag == "e") {
      if (n < 0) throw InvalidInput(where(line) + "edge before header");
      const long long u = integer(ls, line, "edge end"), v = integer(ls, line, "edge end");
      no_trailing(ls, line);
      if (u < 1 || v < 1 || u > n || v > n) throw InvalidInput(where(line) + "vertex out of range");
      if (u == v) throw InvalidInput(where(line) + "self-loop");
      const Edge e{static_cast<Vertex>(std::min(u, v) - 1), static_cast<Vertex>(std::max(u, v) - 1)};
      if (!seen.insert(e).second) throw InvalidInput(where(line) + "repeated edge");
      edges.push_back(e);
    } else {
      throw InvalidInput(where(line) + "unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw InvalidInput("missing 'p edge' header");
  if (static_cast<long long>(edges.size()) != m)
    throw InvalidInput("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto whole = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos || s.find('-', 1) != std::string::npos)
      throw InvalidInput("not a rational: '" + text + "'");
    return s;
  };
  if (slash == std::string::npos) return Rational(boost::multiprecision::mpz_int(whole(text)));
  const boost::multiprecision::mpz_int p(whole(text.substr(0, slash))), q(whole(text.substr(slash + 1)));
  if (q == 0) throw InvalidInput("zero denominator in '" + text + "'");
  return Rational(p, q);
}

std::vector<Rational> read_weights(std::istream& in, int n) {
  std::string text;
  int line = 0;
  bool defaulted = false;
  std::vector<std::optional<Rational>> w(static_cast<std::size_t>(n));
  while (std::getline(in, text)) {
    ++line;
    std::istringstream ls(text);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "default") {
      std::string value;
      if (!(ls >> value) || value != "0") throw InvalidInput(where(line) + "only 'default 0' is supported");
      no_trailing(ls, line);
      defaulted = true;
    } else if (tag == "w") {
      const long long v = integer(ls, line, "vertex");
      std::string num, den;
      if (!(ls >> num >> den)) throw InvalidInput(where(line) + "expected 'w <v> <numerator> <denominator>'");
      no_trailing(ls, line);
      if (v < 1 || v > n) throw InvalidInput(where(line) + "vertex out of range");
      if (w[v - 1]) throw InvalidInput(where(line) + "repeated vertex");
      const Rational d = parse_rational(den);
      if (d == 0) throw InvalidInput(where(line) + "zero denominator");
      const Rational r = parse_rational(num) / d;
      if (r < 0) throw InvalidInput(where(line) + "negative weight");
      w[v - 1] = r;
    } else {
      throw InvalidInput(where(line) + "unknown line type '" + tag + "'");
    }
  }
  std::vector<Rational> out;
  for (int v = 0; v < n; ++v) {
    if (!w[v] && !defaulted) throw InvalidInput("no weight for vertex " + std::to_string(v + 1));
    out.push_back(w[v].value_or(Rational(0)));
  }
  return out;
}

void write_weights(std::ostream& out, const std::vector<Rational>& w) {
  for (std::size_t v = 0; v < w.size(); ++v)
    out << "w " << v + 1 << ' ' << numerator(w[v]) << ' ' << denominator(w[v]) << '\n';
}

Graph load_graph(const std::string& path) {
  auto f = open(path);
  return read_graph(f);
}

std::vector<Rational> load_weights(const std::string& path, int n) {
  auto f = open(path);
  return read_weights(f, n);
}

TreeDecomposition load_td(const std::string& path) {
  auto f = open(path);
  return read_td(f);
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const VertexSet& s) { return vertices(s.to_vector()); }

Json to_json(const std::vector<VertexSet>& sets) {
  Json a = Json::array();
  for (const auto& s : sets) a.push_back(to_json(s));
  return a;
}

Json to_json(const Transcript& t) {
  Json a = Json::array();
  for (const auto& c : t) a.push_back({{"claim", c.id}, {"ok", c.ok}, {"detail", c.detail}});
  return a;
}

Json to_json(const Graph& g, const Witness& w) {
  Json roles = Json::object();
  const auto& a = w.anchors;
  switch (w.kind) {
    case StructureKind::c4:
      roles["cycle"] = vertices(a);
      break;
    case StructureKind::diamond:
      roles["shared_edge"] = vertices({a[0], a[1]});
      roles["tips"] = vertices({a[2], a[3]});
      break;
    case StructureKind::theta:
      roles["ends"] = vertices(a);
      roles["paths"] = paths(w.paths);
      break;
    case StructureKind::pyramid:
      roles["apex"] = a[0] + 1;
      roles["base"] = vertices({a[1], a[2], a[3]});
      roles["paths"] = paths(w.paths);
      break;
    case StructureKind::prism:
      roles["triangle_a"] = vertices({a[0], a[1], a[2]});
      roles["triangle_b"] = vertices({a[3], a[4], a[5]});
      roles["paths"] = paths(w.paths);
      break;
    case StructureKind::wheel:
      roles["hub"] = a[0] + 1;
      roles["hole"] = vertices(w.paths.at(0));
      break;
  }
  Json j{{"kind", to_string(w.kind)}, {"vertices", roles}};
  if (w.kind == StructureKind::wheel)
    j["flags"] = {{"spokes", w.flags.spokes}, {"even", w.flags.even},          {"bug", w.flags.bug},
                  {"twin", w.flags.twin},     {"universal", w.flags.universal}, {"line", w.flags.line},
                  {"proper", w.flags.proper}};
  j["verified"] = !verify_witness(g, w).has_value();
  return j;
}

Json to_json(const ClassReport& r, const Graph& g) {
  Json j{{"c", to_string(r.c)}, {"c_star", to_string(r.c_star)}};
  j["witness"] = r.witness ? to_json(g, *r.witness) : Json(nullptr);
  if (r.c_star_witness && r.witness && r.c_star_witness->kind != r.witness->kind)
    j["c_star_witness"] = to_json(g, *r.c_star_witness);
  return j;
}

Json to_json(const CliqueCover& c) {
  return {{"cliques", to_json(c.cliques)}, {"size", c.size()}, {"alpha_lower_bound", c.alpha_lower_bound}};
}

Json to_json(const AtomTree& t) {
  if (t.atoms.empty()) return nullptr;
  std::function<Json(int)> node = [&](int i) {
    Json children = Json::array();
    for (int c : t.atoms[i].children) children.push_back(node(c));
    return Json{{"atom", to_json(t.atoms[i].vertices)},
                {"cut_clique", to_json(t.atoms[i].cut_clique)},
                {"children", children}};
  };
  return node(t.root());
}

std::string route_family(const std::string& route) {
  const std::string head = route.substr(0, route.find('/'));
  if (head == "centroid") return "wheelfree";
  return head;
}

Json to_json(const BalancedSeparator& s) {
  Json weights = Json::array();
  for (const auto& w : s.component_weights) weights.push_back(to_json(w));
  return {{"vertices", to_json(s.x)},
          {"clique_cover", to_json(s.cover)},
          {"threshold", to_json(s.threshold)},
          {"component_weights", weights},
          {"route", route_family(s.route)},
          {"route_detail", s.route},
          {"assertions", to_json(s.assertions)}};
}

Json to_json(const HubDivision& hd) {
  Json order = Json::array();
  for (Vertex v : hd.order) order.push_back(v + 1);
  Json members = Json::array();
  for (const auto& m : hd.collection.members)
    members.push_back({{"centre", m.v + 1}, {"a", to_json(m.s.a)}, {"c", to_json(m.s.c)}, {"b", to_json(m.s.b)}});
  Json weights = Json::object();
  for (Vertex v : hd.bag.bag) weights[std::to_string(v + 1)] = to_json(hd.bag.weights[v]);
  Json outside = Json::array();
  for (std::size_t i = 0; i < hd.bag.outside.size(); ++i)
    outside.push_back({{"component", to_json(hd.bag.outside[i])},
                       {"anchor", hd.collection.members[hd.bag.anchor[i]].v + 1}});
  return {{"ordering", order},
          {"hubs", to_json(hd.hubs)},
          {"unbalanced", to_json(hd.unbalanced)},
          {"m", hd.m()},
          {"M", to_json(hd.m_set)},
          {"collection", members},
          {"bag", to_json(hd.bag.bag)},
          {"weights", weights},
          {"outside", outside},
          {"bag_hubs", to_json(hd.bag_hubs)},
          {"assertions", to_json(hd.transcript)}};
}

Json to_json(const TreeDecomposition& td) {
  Json edges = Json::array();
  for (auto [s, t] : td.edges) edges.push_back({s + 1, t + 1});
  return {{"n", td.n}, {"bags", to_json(td.bags)}, {"edges", edges}};
}

Json to_json(const TdStats& s) {
  return {{"width", s.width},
          {"independence", s.independence},
          {"cover", s.cover},
          {"cover_lower", s.cover_lower},
          {"cover_exact", s.cover_exact}};
}

Json to_json(const PipelineResult& r) {
  Json atoms = Json::array();
  for (const auto& a : r.atoms) {
    Json j{{"vertices", to_json(a.vertices)}, {"route", a.route}};
    if (a.route == "separators")
      j["build"] = {{"k", a.k},
                    {"oracle_calls", a.build.oracle_calls},
                    {"max_oracle_cover", a.build.max_oracle_cover},
                    {"depth", a.build.depth},
                    {"guard_hits", a.build.guard_hits}};
    atoms.push_back(j);
  }
  Json repaired = Json::array();
  for (int i : r.repaired) repaired.push_back(i);
  return {{"stats", to_json(r.stats)},
          {"atoms", atoms},
          {"repaired_atoms", repaired},
          {"assertions", to_json(r.assertions)}};
}

Json to_json(const MwisResult& r) {
  return {{"method", r.method}, {"value", to_json(r.value)}, {"set", to_json(r.set)}};
}

}  // namespace talpha
