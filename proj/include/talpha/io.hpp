#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "talpha/balsep.hpp"
#include "talpha/hub_division.hpp"
#include "talpha/mwis.hpp"
#include "talpha/structures.hpp"
#include "talpha/treedec.hpp"

namespace talpha {

using Json = nlohmann::ordered_json;

/// DIMACS-like: "c" comments, "p edge <n> <m>", "e <u> <v>" (1-based).
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

/// "w <v> <num> <den>" per vertex (1-based); vertices without a line are an
/// error unless a "default 0" line is present.
std::vector<Rational> read_weights(std::istream& in, int n);
void write_weights(std::ostream& out, const std::vector<Rational>& w);

/// Accepts "p/q" or an integer.
Rational parse_rational(const std::string& text);

Graph load_graph(const std::string& path);
std::vector<Rational> load_weights(const std::string& path, int n);
TreeDecomposition load_td(const std::string& path);

// JSON views. Vertices are reported 1-based, rationals as "p/q" strings.
Json to_json(const Rational& r);
Json to_json(const VertexSet& s);
Json to_json(const std::vector<VertexSet>& sets);
Json to_json(const Transcript& t);
Json to_json(const Graph& g, const Witness& w);
Json to_json(const ClassReport& r, const Graph& g);
Json to_json(const CliqueCover& c);
Json to_json(const AtomTree& t);
Json to_json(const BalancedSeparator& s);
Json to_json(const HubDivision& hd);
Json to_json(const TreeDecomposition& td);
Json to_json(const TdStats& s);
Json to_json(const PipelineResult& r);
Json to_json(const MwisResult& r);

/// Separator route family: wheelfree, central_bag, clique_cutset or fallback.
std::string route_family(const std::string& route);

}  // namespace talpha
