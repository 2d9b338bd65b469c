#ifndef GRAPHVEIL_IO_H_
#define GRAPHVEIL_IO_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "graphveil/graph.h"

namespace graphveil {

// Edge-list text format:
//
//   # comment
//   u v            one edge per line, decimal labels, spaces or tabs
//   %kinds         optional section header
//   id real|fake   one declaration per line inside the section
//
// Labels are arbitrary non-negative integers and are remapped to dense ids in
// ascending label order. Nodes declared only in the kinds section are kept as
// isolated nodes. LF and CRLF are accepted.
Graph ParseEdgeList(std::istream& edges, std::istream* kinds = nullptr);

Graph LoadEdgeList(const std::filesystem::path& path,
                   const std::optional<std::filesystem::path>& kinds = {});

// Writes edges followed by a %kinds section that declares every node, so
// isolated nodes and fake tags survive a reload. LF line endings.
std::string FormatEdgeList(const Graph& g);

void SaveGraph(const Graph& g, const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`. Throws
// IoFailure; on failure `path` is left untouched.
void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view contents);

std::string ReadFile(const std::filesystem::path& path);

}  // namespace graphveil

#endif  // GRAPHVEIL_IO_H_
