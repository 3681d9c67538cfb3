#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "infmax/graph.hpp"

namespace infmax {

enum class Directedness { Directed, Undirected };

struct LoadResult {
  Graph graph;
  /// original_ids[dense] = id as written in the file (ascending).
  std::vector<std::int64_t> original_ids;
  std::size_t duplicate_arcs_dropped = 0;
  bool wrote_id_map = false;
};

/// Parses an edge-list file: one arc per non-comment line, columns
/// "src dst [p [phi]]" separated by whitespace, '#' starts a comment.
/// A missing p column defaults to 0.1 and a missing phi column to 1.0;
/// the threshold weight w is initialized from p. Undirected input yields
/// both arcs with identical parameters.
///
/// Node ids may be sparse; they are compacted to dense [0,n) in ascending
/// order. When the mapping is not the identity, a sidecar file
/// "<path>.idmap" with lines "original_id dense_id" is written next to the
/// input.
///
/// Throws std::runtime_error with the offending line number on malformed
/// lines, self-loops, or parameters outside [0,1].
LoadResult load_edge_list_full(const std::filesystem::path& path,
                               Directedness directedness);

inline Graph load_edge_list(const std::filesystem::path& path,
                            Directedness directedness) {
  return load_edge_list_full(path, directedness).graph;
}

/// Parses a node-attribute file: lines "id opinion [theta]" keyed by the
/// original (file) ids of `g`. Unknown ids are an error; nodes absent from
/// the file keep their defaults.
void load_node_attrs(Graph& g, const std::filesystem::path& path);

/// Writers for the same formats (used by the generators).
void write_edge_list(const Graph& g, const std::filesystem::path& path);
void write_node_attrs(const Graph& g, const std::filesystem::path& path);

}  // namespace infmax
