// Copyright 2026 The oneext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oneext/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "oneext/errors.hpp"

namespace oneext {

// ---- Graph -------------------------------------------------------------------

std::size_t Graph::max_degree() const noexcept {
  std::size_t d = 0;
  for (auto x : degrees_) d = std::max(d, x);
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u)
    for (Vertex v : adjacency_[u])
      if (static_cast<std::size_t>(v) > u) out.push_back({static_cast<Vertex>(u), v});
  return out;
}

std::string Graph::label(Vertex v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_[static_cast<std::size_t>(v)];
}

std::optional<Vertex> Graph::find_label(std::string_view name) const {
  auto it = label_index_.find(std::string(name));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

// ---- GraphBuilder ------------------------------------------------------------

GraphBuilder::GraphBuilder(std::size_t n) : adjacency_(n), labels_(n) {}

void GraphBuilder::check(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= adjacency_.size())
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(adjacency_.size()) +
                          ")");
}

Vertex GraphBuilder::add_vertex(std::string label) {
  adjacency_.emplace_back();
  labels_.push_back(std::move(label));
  return static_cast<Vertex>(adjacency_.size() - 1);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw InvalidArgument("self-loop on vertex " + std::to_string(u));
  adjacency_[static_cast<std::size_t>(u)].insert(v);
  adjacency_[static_cast<std::size_t>(v)].insert(u);
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  check(u);
  check(v);
  return adjacency_[static_cast<std::size_t>(u)].count(v) != 0;
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (!adjacency_[static_cast<std::size_t>(u)].erase(v))
    throw InvalidArgument("no edge " + std::to_string(u) + "-" + std::to_string(v));
  adjacency_[static_cast<std::size_t>(v)].erase(u);
}

std::size_t GraphBuilder::degree(Vertex v) const {
  check(v);
  return adjacency_[static_cast<std::size_t>(v)].size();
}

void GraphBuilder::set_label(Vertex v, std::string label) {
  check(v);
  labels_[static_cast<std::size_t>(v)] = std::move(label);
}

Vertex GraphBuilder::append(const Graph& g, std::string_view label_prefix) {
  const auto offset = static_cast<Vertex>(adjacency_.size());
  const bool labelled = g.has_labels() || !label_prefix.empty();
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    add_vertex(labelled ? std::string(label_prefix) + g.label(static_cast<Vertex>(v)) : std::string());
  for (const Edge& e : g.edges()) add_edge(offset + e.u, offset + e.v);
  return offset;
}

Graph GraphBuilder::build() && {
  Graph g;
  const std::size_t n = adjacency_.size();
  std::size_t labelled = 0;
  for (const auto& l : labels_) labelled += !l.empty();
  if (labelled != 0 && labelled != n)
    throw InvalidArgument("either every vertex or no vertex must carry a label (" + std::to_string(labelled) + " of " +
                          std::to_string(n) + " labelled)");
  if (labelled) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!g.label_index_.emplace(labels_[v], static_cast<Vertex>(v)).second)
        throw InvalidArgument("duplicate vertex label '" + labels_[v] + "'");
    }
    g.labels_ = std::move(labels_);
  }
  g.adjacency_.reserve(n);
  g.degrees_.reserve(n);
  std::size_t twice_m = 0;
  for (const auto& nbrs : adjacency_) {
    VertexSet s(n);
    for (Vertex w : nbrs) s.insert(w);
    g.adjacency_.push_back(std::move(s));
    g.degrees_.push_back(nbrs.size());
    twice_m += nbrs.size();
  }
  g.edge_count_ = twice_m / 2;
  return g;
}

// ---- text format -------------------------------------------------------------

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line) {
  long long value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0, seen = 0;
  std::vector<std::pair<std::size_t, std::pair<long long, long long>>> edges;
  std::vector<std::pair<std::size_t, std::pair<long long, std::string>>> labels;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok[0].front() == '#') {
      if (tok[0] == "#" && tok.size() >= 2 && tok[1] == "label") {
        if (tok.size() != 4) throw ParseError(line_no, "label line must be '# label <v> <name>'");
        labels.push_back({line_no, {to_int(tok[2], line_no), std::string(tok[3])}});
      }
      continue;
    }
    if (tok.size() != 2) throw ParseError(line_no, "expected two integers");
    long long a = to_int(tok[0], line_no), b = to_int(tok[1], line_no);
    if (!have_header) {
      if (a < 0 || b < 0) throw ParseError(line_no, "negative count in header");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (++seen > m) throw ParseError(line_no, "more edge lines than the declared " + std::to_string(m));
    edges.push_back({line_no, {a, b}});
  }
  if (!have_header) throw ParseError(0, "missing 'n m' header");
  if (seen != m)
    throw ParseError(0, "declared " + std::to_string(m) + " edges but found " + std::to_string(seen));

  GraphBuilder b(static_cast<std::size_t>(n));
  for (const auto& [ln, e] : edges) {
    auto [u, v] = e;
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(ln, "vertex id out of range [0, " + std::to_string(n) + ")");
    if (u == v) throw ParseError(ln, "self-loop on vertex " + std::to_string(u));
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::vector<bool> labelled(static_cast<std::size_t>(n), false);
  for (const auto& [ln, l] : labels) {
    if (l.first < 0 || l.first >= n) throw ParseError(ln, "label for out-of-range vertex");
    if (labelled[static_cast<std::size_t>(l.first)]) throw ParseError(ln, "vertex labelled twice");
    labelled[static_cast<std::size_t>(l.first)] = true;
    b.set_label(static_cast<Vertex>(l.first), l.second);
  }
  try {
    return std::move(b).build();
  } catch (const InvalidArgument& e) {
    throw ParseError(0, e.what());
  }
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  if (g.has_labels())
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      out << "# label " << v << ' ' << g.label(static_cast<Vertex>(v)) << '\n';
  return out.str();
}

void write_graph_file(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
  out << serialize_graph(g);
}

// ---- operations --------------------------------------------------------------

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() > g.vertex_count())
    for (Vertex v : keep)
      if (!g.contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " not in graph");
  InducedSubgraph out;
  out.from_original.assign(g.vertex_count(), -1);
  for (Vertex v : keep) {
    out.from_original[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.to_original.size());
    out.to_original.push_back(v);
  }
  GraphBuilder b(out.to_original.size());
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    const Vertex v = out.to_original[i];
    if (g.has_labels()) b.set_label(static_cast<Vertex>(i), g.label(v));
    for (Vertex w : g.neighbors(v)) {
      const Vertex j = out.from_original[static_cast<std::size_t>(w)];
      if (j > static_cast<Vertex>(i)) b.add_edge(static_cast<Vertex>(i), j);
    }
  }
  out.graph = std::move(b).build();
  return out;
}

VertexSet non_neighborhood(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " not in graph");
  return g.vertices() - g.neighbors(v);
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " not in graph");
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DegeneracyOrder out;
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.degree(static_cast<Vertex>(v));
    queue.insert({deg[v], static_cast<Vertex>(v)});
  }
  std::vector<bool> removed(n, false);
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    out.order.push_back(v);
    out.degeneracy = std::max(out.degeneracy, d);
    removed[static_cast<std::size_t>(v)] = true;
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (removed[wi]) continue;
      queue.erase({deg[wi], w});
      queue.insert({--deg[wi], w});
    }
  }
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) throw InvalidArgument("vertex set universe does not match graph order");
  for (Vertex v : s) {
    if (!g.contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " not in graph");
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

VertexSet make_set(const Graph& g, std::initializer_list<Vertex> members) {
  VertexSet s(g.vertex_count());
  for (Vertex v : members) {
    if (!g.contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " not in graph");
    s.insert(v);
  }
  return s;
}

}  // namespace oneext
