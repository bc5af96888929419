#include "tokenlab/export.hpp"

#include <algorithm>
#include <sstream>

namespace tokenlab {

namespace {

bool highlighted(const DotOptions& options, Vertex v) {
  return std::find(options.highlight.begin(), options.highlight.end(), v) != options.highlight.end();
}

std::string dot_body(const Graph& g, const DotOptions& options,
                     const std::vector<TokenVertex>* labels) {
  std::ostringstream out;
  out << "graph " << options.name << " {\n";
  for (Vertex v = 1; v <= g.order(); ++v) {
    out << "  " << v;
    std::vector<std::string> attrs;
    if (labels)
      attrs.push_back("label=\"" + (*labels)[static_cast<std::size_t>(v - 1)].to_string() + "\"");
    if (highlighted(options, v)) {
      attrs.emplace_back("witness=true");
      attrs.emplace_back("style=filled");
    }
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i)
        out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  for (const Edge& e : g.edges())
    out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

void write_tuple(std::ostringstream& out, const std::vector<Vertex>& values) {
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i)
    out << (i ? "," : "") << values[i];
  out << ']';
}

std::string json_head(const Graph& g) {
  std::ostringstream out;
  out << "{\"order\": " << g.order() << ", \"edges\": [";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    out << (i ? ", " : "") << '[' << e.u << ',' << e.v << ']';
  }
  out << ']';
  return out.str();
}

} // namespace

std::string to_dot(const Graph& g, const DotOptions& options) { return dot_body(g, options, nullptr); }

std::string to_dot(const DerivedGraph& dg, const DotOptions& options) {
  return dot_body(dg.graph(), options, &dg.labels());
}

std::string to_json(const Graph& g) { return json_head(g) + "}"; }

std::string to_json(const DerivedGraph& dg) {
  return json_head(dg.graph()) + ", \"kind\": \"" + to_string(dg.kind()) +
         "\", \"labels\": " + tokens_to_json(dg.labels()) + "}";
}

std::string tokens_to_json(const std::vector<TokenVertex>& tokens) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i)
      out << ", ";
    write_tuple(out, tokens[i].elements());
  }
  out << ']';
  return out.str();
}

} // namespace tokenlab
