// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taulab/field.hpp"

namespace taulab {

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;

  std::size_t add_vertex(const std::string& name) {
    if (name.empty()) {
      throw Error("vertex name must not be empty");
    }
    if (vertex_index_.contains(name) || arrow_index_.contains(name)) {
      throw Error("duplicate name '" + name + "'");
    }
    vertex_index_.emplace(name, vertices_.size());
    vertices_.push_back(name);
    return vertices_.size() - 1;
  }

  std::size_t add_arrow(const std::string& name, const std::string& source,
                        const std::string& target) {
    if (name.empty()) {
      throw Error("arrow name must not be empty");
    }
    if (vertex_index_.contains(name) || arrow_index_.contains(name)) {
      throw Error("duplicate name '" + name + "'");
    }
    auto s = find_vertex(source);
    auto t = find_vertex(target);
    if (!s || !t) {
      throw Error("arrow '" + name + "' references an undeclared vertex");
    }
    arrow_index_.emplace(name, arrows_.size());
    arrows_.push_back({name, *s, *t});
    return arrows_.size() - 1;
  }

  [[nodiscard]] std::size_t vertex_count() const noexcept {
    return vertices_.size();
  }
  [[nodiscard]] std::size_t arrow_count() const noexcept {
    return arrows_.size();
  }
  [[nodiscard]] const std::vector<std::string>& vertices() const noexcept {
    return vertices_;
  }
  [[nodiscard]] const std::vector<Arrow>& arrows() const noexcept {
    return arrows_;
  }
  [[nodiscard]] const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }
  [[nodiscard]] const std::string& vertex(std::size_t i) const {
    return vertices_.at(i);
  }

  [[nodiscard]] std::optional<std::size_t> find_vertex(
      const std::string& name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }
  [[nodiscard]] std::optional<std::size_t> find_arrow(
      const std::string& name) const {
    auto it = arrow_index_.find(name);
    if (it == arrow_index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  /// Same vertices, every arrow reversed; names are kept.
  [[nodiscard]] Quiver reversed() const {
    Quiver q;
    for (const auto& v : vertices_) {
      q.add_vertex(v);
    }
    for (const auto& a : arrows_) {
      q.add_arrow(a.name, vertices_[a.target], vertices_[a.source]);
    }
    return q;
  }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t> vertex_index_;
  std::map<std::string, std::size_t> arrow_index_;
};

/// A path read left to right: `arrows[0]` first, then `arrows[1]`, and so
/// on. The empty arrow list is the trivial path at `source`.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  static Path trivial(std::size_t v) { return {v, v, {}}; }

  [[nodiscard]] std::size_t length() const noexcept { return arrows.size(); }
  [[nodiscard]] bool is_trivial() const noexcept { return arrows.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size()) {
      return a.arrows.size() <=> b.arrows.size();
    }
    if (a.arrows.empty()) {
      return a.source <=> b.source;
    }
    return a.arrows <=> b.arrows;
  }
};

/// Vertices visited by a path, endpoints included.
inline std::vector<std::size_t> path_vertices(const Quiver& q, const Path& p) {
  std::vector<std::size_t> out{p.source};
  for (auto a : p.arrows) {
    out.push_back(q.arrow(a).target);
  }
  return out;
}

/// `a` followed by `b`, or nothing when they do not compose.
inline std::optional<Path> concatenate(const Path& a, const Path& b) {
  if (a.target != b.source) {
    return std::nullopt;
  }
  Path out{a.source, b.target, a.arrows};
  out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
  return out;
}

inline Path reverse_path(const Path& p) {
  Path r{p.target, p.source, {p.arrows.rbegin(), p.arrows.rend()}};
  return r;
}

inline std::string path_name(const Quiver& q, const Path& p) {
  if (p.is_trivial()) {
    return "e" + q.vertex(p.source);
  }
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i > 0) {
      out += '.';
    }
    out += q.arrow(p.arrows[i]).name;
  }
  return out;
}

/// Arrow-name sequence ("a1.a2") to a path; throws on unknown or
/// non-composable arrows.
inline Path parse_path(const Quiver& q, const std::string& text) {
  Path p;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto dot = text.find('.', start);
    auto token = text.substr(start, dot == std::string::npos ? std::string::npos
                                                             : dot - start);
    auto a = q.find_arrow(token);
    if (!a) {
      throw Error("unknown arrow '" + token + "' in path '" + text + "'");
    }
    const auto& arrow = q.arrow(*a);
    if (p.arrows.empty()) {
      p.source = arrow.source;
    } else if (p.target != arrow.source) {
      throw Error("path '" + text + "' does not compose at arrow '" + token +
                  "'");
    }
    p.target = arrow.target;
    p.arrows.push_back(*a);
    if (dot == std::string::npos) {
      break;
    }
    start = dot + 1;
  }
  return p;
}

struct RelationTerm {
  Scalar coefficient;
  Path path;

  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

/// A linear combination of parallel paths of length at least two.
struct Relation {
  std::vector<RelationTerm> terms;

  friend bool operator==(const Relation&, const Relation&) = default;
};

}  // namespace taulab
