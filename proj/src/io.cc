#include "graphveil/io.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <system_error>
#include <vector>

#include "graphveil/errors.h"

namespace graphveil {
namespace {

std::string_view Trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> Tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint64_t> ParseLabel(std::string_view token) {
  std::uint64_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

// Strips comments and whitespace; returns false for lines with no content.
bool Content(std::string& line, std::string_view& out) {
  std::string_view view = line;
  if (auto hash = view.find('#'); hash != std::string_view::npos) {
    view = view.substr(0, hash);
  }
  out = Trim(view);
  return !out.empty();
}

struct RawGraph {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::map<std::uint64_t, NodeKind> kinds;
};

void ParseKindLine(std::string_view content, std::size_t line_no,
                   RawGraph& raw) {
  auto tokens = Tokens(content);
  if (tokens.size() != 2) throw MalformedLine(line_no);
  auto id = ParseLabel(tokens[0]);
  if (!id) throw MalformedLine(line_no);
  NodeKind kind;
  if (tokens[1] == "real") {
    kind = NodeKind::kReal;
  } else if (tokens[1] == "fake") {
    kind = NodeKind::kFake;
  } else {
    throw UnknownKindToken(line_no);
  }
  auto [it, inserted] = raw.kinds.emplace(*id, kind);
  if (!inserted && it->second != kind) throw MalformedLine(line_no);
}

void ParseStream(std::istream& in, bool kinds_only, RawGraph& raw) {
  std::string line;
  std::size_t line_no = 0;
  bool in_kinds = kinds_only;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view content;
    if (!Content(line, content)) continue;
    if (content.front() == '%') {
      if (content != "%kinds") throw MalformedLine(line_no);
      in_kinds = true;
      continue;
    }
    if (in_kinds) {
      ParseKindLine(content, line_no, raw);
      continue;
    }
    auto tokens = Tokens(content);
    if (tokens.size() != 2) throw MalformedLine(line_no);
    auto u = ParseLabel(tokens[0]);
    auto v = ParseLabel(tokens[1]);
    if (!u || !v) throw MalformedLine(line_no);
    if (*u == *v) throw SelfLoop(line_no);
    raw.edges.emplace_back(*u, *v);
  }
  if (in.bad()) throw IoFailure("read error");
}

}  // namespace

Graph ParseEdgeList(std::istream& edges, std::istream* kinds) {
  RawGraph raw;
  ParseStream(edges, /*kinds_only=*/false, raw);
  if (kinds != nullptr) ParseStream(*kinds, /*kinds_only=*/true, raw);

  std::vector<std::uint64_t> labels;
  labels.reserve(raw.edges.size() * 2 + raw.kinds.size());
  for (auto [u, v] : raw.edges) {
    labels.push_back(u);
    labels.push_back(v);
  }
  for (const auto& [id, kind] : raw.kinds) labels.push_back(id);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  const auto dense = [&](std::uint64_t label) {
    return static_cast<NodeId>(
        std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  std::vector<NodeKind> node_kinds(labels.size(), NodeKind::kReal);
  for (const auto& [id, kind] : raw.kinds) node_kinds[dense(id)] = kind;
  std::vector<Edge> dense_edges;
  dense_edges.reserve(raw.edges.size());
  for (auto [u, v] : raw.edges) dense_edges.emplace_back(dense(u), dense(v));
  return Graph(std::move(node_kinds), dense_edges, std::move(labels));
}

Graph LoadEdgeList(const std::filesystem::path& path,
                   const std::optional<std::filesystem::path>& kinds) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open " + path.string());
  if (!kinds) return ParseEdgeList(in);
  std::ifstream kin(*kinds);
  if (!kin) throw IoFailure("cannot open " + kinds->string());
  return ParseEdgeList(in, &kin);
}

std::string FormatEdgeList(const Graph& g) {
  std::ostringstream out;
  for (const Edge& e : g.edges()) {
    out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  }
  out << "%kinds\n";
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    out << g.label(v) << ' ' << KindName(g.kind(v)) << '\n';
  }
  return out.str();
}

void SaveGraph(const Graph& g, const std::filesystem::path& path) {
  WriteFileAtomically(path, FormatEdgeList(g));
}

void WriteFileAtomically(const std::filesystem::path& path,
                         std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoFailure("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoFailure("cannot rename onto " + path.string() + ": " +
                    ec.message());
  }
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace graphveil
