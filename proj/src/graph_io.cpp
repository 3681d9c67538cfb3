#include "infmax/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "real_format.hpp"
#include "graph_mutator.hpp"

namespace infmax {

namespace {

std::string_view strip_comment(std::string_view line) {
  auto pos = line.find('#');
  if (pos != std::string_view::npos) line = line.substr(0, pos);
  return line;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void parse_fail(const std::filesystem::path& path,
                             std::size_t line_no, const std::string& what) {
  throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                           ": " + what);
}

std::int64_t parse_id(std::string_view field, const std::filesystem::path& path,
                      std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || value < 0) {
    parse_fail(path, line_no,
               "expected non-negative integer id, got '" + std::string(field) +
                   "'");
  }
  return value;
}

double parse_real(std::string_view field, const std::filesystem::path& path,
                  std::size_t line_no) {
  try {
    std::size_t consumed = 0;
    double value = std::stod(std::string(field), &consumed);
    if (consumed != field.size()) throw std::invalid_argument("trailing");
    return value;
  } catch (const std::exception&) {
    parse_fail(path, line_no,
               "expected real number, got '" + std::string(field) + "'");
  }
}

struct RawArc {
  std::int64_t src, dst;
  double p, phi;
};


}  // namespace

LoadResult load_edge_list_full(const std::filesystem::path& path,
                               Directedness directedness) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open edge list: " + path.string());
  }

  std::vector<RawArc> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(strip_comment(line));
    if (fields.empty()) continue;
    if (fields.size() < 2 || fields.size() > 4) {
      parse_fail(path, line_no,
                 "expected 'src dst [p [phi]]', got " +
                     std::to_string(fields.size()) + " fields");
    }
    RawArc arc;
    arc.src = parse_id(fields[0], path, line_no);
    arc.dst = parse_id(fields[1], path, line_no);
    arc.p = fields.size() >= 3 ? parse_real(fields[2], path, line_no) : 0.1;
    arc.phi = fields.size() >= 4 ? parse_real(fields[3], path, line_no) : 1.0;
    if (arc.src == arc.dst) {
      parse_fail(path, line_no, "self-loop on node " + std::to_string(arc.src));
    }
    if (!(arc.p >= 0.0 && arc.p <= 1.0)) {
      parse_fail(path, line_no, "p outside [0,1]: " + detail::format_real(arc.p));
    }
    if (!(arc.phi >= 0.0 && arc.phi <= 1.0)) {
      parse_fail(path, line_no, "phi outside [0,1]: " + detail::format_real(arc.phi));
    }
    raw.push_back(arc);
  }

  // Compact ids to dense [0,n) in ascending original order.
  std::vector<std::int64_t> ids;
  ids.reserve(raw.size() * 2);
  for (const RawArc& a : raw) {
    ids.push_back(a.src);
    ids.push_back(a.dst);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  auto dense = [&](std::int64_t id) {
    return static_cast<NodeId>(
        std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };

  Graph::Builder builder(static_cast<NodeId>(ids.size()));
  for (const RawArc& a : raw) {
    builder.add_arc(dense(a.src), dense(a.dst), a.p, a.p, a.phi);
    if (directedness == Directedness::Undirected) {
      builder.add_arc(dense(a.dst), dense(a.src), a.p, a.p, a.phi);
    }
  }

  LoadResult result;
  bool identity = true;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] != static_cast<std::int64_t>(i)) {
      identity = false;
      break;
    }
  }
  if (!identity) {
    builder.set_original_ids(ids);
    std::ofstream map_out(path.string() + ".idmap");
    if (!map_out) {
      throw std::runtime_error("cannot write id map next to " + path.string());
    }
    map_out << "# original_id dense_id\n";
    for (std::size_t i = 0; i < ids.size(); ++i) {
      map_out << ids[i] << ' ' << i << '\n';
    }
    result.wrote_id_map = true;
  }

  result.graph = builder.build();
  result.original_ids = std::move(ids);
  result.duplicate_arcs_dropped = builder.duplicates_dropped();
  return result;
}

void load_node_attrs(Graph& g, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open attribute file: " + path.string());
  }

  std::map<std::int64_t, NodeId> to_dense;
  for (NodeId v = 0; v < g.node_count(); ++v) to_dense[g.original_id(v)] = v;

  auto& opinion = detail::GraphMutator::opinion(g);
  auto& theta = detail::GraphMutator::theta(g);

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(strip_comment(line));
    if (fields.empty()) continue;
    if (fields.size() < 2 || fields.size() > 3) {
      parse_fail(path, line_no, "expected 'id opinion [theta]'");
    }
    std::int64_t id = parse_id(fields[0], path, line_no);
    auto it = to_dense.find(id);
    if (it == to_dense.end()) {
      parse_fail(path, line_no, "unknown node id " + std::to_string(id));
    }
    double o = parse_real(fields[1], path, line_no);
    if (!(o >= -1.0 && o <= 1.0)) {
      parse_fail(path, line_no, "opinion outside [-1,1]: " + detail::format_real(o));
    }
    opinion[it->second] = o;
    if (fields.size() == 3) {
      double t = parse_real(fields[2], path, line_no);
      if (!(t >= 0.0 && t <= 1.0)) {
        parse_fail(path, line_no, "theta outside [0,1]: " + detail::format_real(t));
      }
      theta[it->second] = t;
    }
  }
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write edge list: " + path.string());
  }
  out << "# infmax-edges v1\n# src dst p phi\n";
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (const OutArc& a : g.out_arcs(u)) {
      out << g.original_id(u) << ' ' << g.original_id(a.dst) << ' '
          << detail::format_real(g.p(a.edge)) << ' ' << detail::format_real(g.phi(a.edge))
          << '\n';
    }
  }
}

void write_node_attrs(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write attribute file: " + path.string());
  }
  out << "# infmax-attrs v1\n# id opinion theta\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << g.original_id(v) << ' ' << detail::format_real(g.opinion(v)) << ' '
        << detail::format_real(g.theta(v)) << '\n';
  }
}

}  // namespace infmax
