#include "nonrep/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace nonrep {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

FlagLabeledGraph::FlagLabeledGraph(Directedness d, int vertex_count)
    : directedness_(d) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  incidence_.resize(static_cast<std::size_t>(vertex_count));
  vertex_names_.resize(static_cast<std::size_t>(vertex_count));
}

int FlagLabeledGraph::add_vertex(std::string name) {
  const int id = vertex_count();
  if (!name.empty()) {
    if (vertex_index_.count(name)) throw GraphError("duplicate vertex name: " + name);
    vertex_index_.emplace(name, id);
  }
  incidence_.emplace_back();
  vertex_names_.push_back(std::move(name));
  return id;
}

int FlagLabeledGraph::add_flag_edge(int u, int v, int label_u, int label_v) {
  if (!contains(u) || !contains(v)) throw GraphError("edge endpoint is not a vertex");
  if (label_u < 0 || label_v < 0) throw GraphError("labels must be non-negative");
  const int id = edge_count();
  edges_.push_back(FlagEdge{u, v, label_u, label_v, id});
  incidence_[static_cast<std::size_t>(u)].push_back(Flag{id, 0});
  incidence_[static_cast<std::size_t>(v)].push_back(Flag{id, 1});
  return id;
}

int FlagLabeledGraph::intern_vertex(std::string_view name) {
  if (auto found = find_vertex(name)) return *found;
  return add_vertex(std::string(name));
}

int FlagLabeledGraph::intern_label(std::string_view name) {
  if (auto found = find_label(name)) return *found;
  const int id = static_cast<int>(label_names_.size());
  label_names_.emplace_back(name);
  label_index_.emplace(std::string(name), id);
  return id;
}

std::optional<int> FlagLabeledGraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FlagLabeledGraph::find_label(std::string_view name) const {
  auto it = label_index_.find(std::string(name));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::string FlagLabeledGraph::vertex_name(int v) const {
  const auto& name = vertex_names_.at(static_cast<std::size_t>(v));
  return name.empty() ? std::to_string(v) : name;
}

std::string FlagLabeledGraph::label_name(int label) const {
  if (label >= 0 && static_cast<std::size_t>(label) < label_names_.size())
    return label_names_[static_cast<std::size_t>(label)];
  return std::to_string(label);
}

std::optional<Traversal> FlagLabeledGraph::leaving(Flag f) const {
  if (f.end == 0) return Traversal{f.edge, false};
  if (directed()) return std::nullopt;
  return Traversal{f.edge, true};
}

bool FlagLabeledGraph::edge_labeled() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const FlagEdge& e) { return e.label_u == e.label_v; });
}

bool FlagLabeledGraph::has_self_loop() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const FlagEdge& e) { return e.is_loop(); });
}

std::vector<LabelGroup> group_flags_by_label(const FlagLabeledGraph& g, int v) {
  if (!g.contains(v)) throw GraphError("unknown vertex " + std::to_string(v));
  std::vector<LabelGroup> groups;
  std::unordered_map<int, std::size_t> slot;
  for (const Flag& f : g.flags(v)) {
    const int label = g.label_at(f);
    auto [it, inserted] = slot.try_emplace(label, groups.size());
    if (inserted) groups.push_back(LabelGroup{label, {}});
    groups[it->second].flags.push_back(f);
  }
  return groups;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(std::move(tok));
  return out;
}

}  // namespace

FlagLabeledGraph parse_labeled_graph(std::istream& in) {
  std::optional<FlagLabeledGraph> g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "graph") {
      if (g) throw ParseError(lineno, "duplicate graph header");
      if (tokens.size() != 2) throw ParseError(lineno, "malformed graph header");
      if (tokens[1] == "directed")
        g.emplace(Directedness::directed);
      else if (tokens[1] == "undirected")
        g.emplace(Directedness::undirected);
      else
        throw ParseError(lineno, "unknown directedness '" + tokens[1] + "'");
      continue;
    }
    if (!g) throw ParseError(lineno, "expected 'graph directed' or 'graph undirected' header");
    if (tokens[0] == "edge" && tokens.size() == 4) {
      const int u = g->intern_vertex(tokens[1]);
      const int v = g->intern_vertex(tokens[2]);
      g->add_edge(u, v, g->intern_label(tokens[3]));
    } else if (tokens[0] == "flagedge" && tokens.size() == 5) {
      const int u = g->intern_vertex(tokens[1]);
      const int v = g->intern_vertex(tokens[2]);
      const int lu = g->intern_label(tokens[3]);
      const int lv = g->intern_label(tokens[4]);
      g->add_flag_edge(u, v, lu, lv);
    } else {
      throw ParseError(lineno, "malformed line");
    }
  }
  if (!g) throw ParseError(lineno + 1, "missing graph header");
  return std::move(*g);
}

FlagLabeledGraph parse_labeled_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_labeled_graph(in);
}

std::string serialize_labeled_graph(const FlagLabeledGraph& g) {
  std::ostringstream out;
  out << "graph " << (g.directed() ? "directed" : "undirected") << '\n';
  for (const FlagEdge& e : g.edges()) {
    if (e.label_u == e.label_v) {
      out << "edge " << g.vertex_name(e.u) << ' ' << g.vertex_name(e.v) << ' '
          << g.label_name(e.label_u) << '\n';
    } else {
      out << "flagedge " << g.vertex_name(e.u) << ' ' << g.vertex_name(e.v) << ' '
          << g.label_name(e.label_u) << ' ' << g.label_name(e.label_v) << '\n';
    }
  }
  return out.str();
}

int Digraph::add_node() {
  out_.emplace_back();
  return node_count() - 1;
}

int Digraph::add_arc(int from, int to) {
  if (from < 0 || to < 0 || from >= node_count() || to >= node_count())
    throw GraphError("arc endpoint out of range");
  const int id = arc_count();
  arcs_.emplace_back(from, to);
  out_[static_cast<std::size_t>(from)].push_back(id);
  return id;
}

SccResult strongly_connected_components(const Digraph& g) {
  const int n = g.node_count();
  SccResult result;
  result.component.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  // (node, next out-arc position)
  std::vector<std::pair<int, std::size_t>> call;
  int counter = 0;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      const auto arcs = g.out_arcs(v);
      if (pos < arcs.size()) {
        const int w = g.arc(arcs[pos++]).second;
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const int done = v;
      call.pop_back();
      if (!call.empty()) {
        const int parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          result.component[w] = result.count;
        } while (w != done);
        ++result.count;
      }
    }
  }
  return result;
}

std::vector<char> reachable_nodes(const Digraph& g, std::span<const int> sources) {
  std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
  std::vector<int> todo;
  for (int s : sources) {
    if (!seen[s]) {
      seen[s] = 1;
      todo.push_back(s);
    }
  }
  while (!todo.empty()) {
    const int v = todo.back();
    todo.pop_back();
    for (int a : g.out_arcs(v)) {
      const int w = g.arc(a).second;
      if (!seen[w]) {
        seen[w] = 1;
        todo.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace nonrep
