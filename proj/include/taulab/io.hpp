// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

// Line-based text formats for algebras and modules.
//
//   field 2
//   vertex 1
//   arrow a1 1 2
//   relation 1*a1.a2 + 1*b1.b2
//
//   dim 1 1
//   map a1 1 0
//
// `#` starts a comment. Map entries are row-major with rows indexed by the
// target vertex; a missing map is zero and a missing dim line means 0.

#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "taulab/algebra.hpp"
#include "taulab/representation.hpp"

namespace taulab {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
  std::string rest;  // text after the keyword
};

inline std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) {
      text.erase(hash);
    }
    std::istringstream ss(text);
    Line line{number, {}, {}};
    std::string w;
    while (ss >> w) {
      line.words.push_back(w);
    }
    if (line.words.empty()) {
      continue;
    }
    const auto kw = text.find(line.words.front());
    line.rest = text.substr(kw + line.words.front().size());
    out.push_back(std::move(line));
  }
  return out;
}

inline std::int64_t parse_integer(const std::string& s, std::size_t line,
                                  const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer for " + what + ", got '" + s +
                               "'");
  }
  if (used != s.size()) {
    throw ParseError(line, "expected an integer for " + what + ", got '" + s +
                               "'");
  }
  return v;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline Relation parse_relation(const Quiver& q, const Field& f,
                               const std::string& text, std::size_t line) {
  Relation r;
  std::size_t start = 0;
  while (true) {
    const auto plus = text.find('+', start);
    const auto term = trim(text.substr(
        start, plus == std::string::npos ? std::string::npos : plus - start));
    if (term.empty()) {
      throw ParseError(line, "empty term in relation");
    }
    std::int64_t coeff = 1;
    std::string path = term;
    if (const auto star = term.find('*'); star != std::string::npos) {
      coeff = parse_integer(trim(term.substr(0, star)), line, "coefficient");
      path = trim(term.substr(star + 1));
    }
    try {
      r.terms.push_back({f.reduce(coeff), parse_path(q, path)});
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
    if (plus == std::string::npos) {
      break;
    }
    start = plus + 1;
  }
  return r;
}

}  // namespace detail

inline AlgebraPtr parse_algebra(std::istream& in,
                                std::size_t max_length = kDefaultMaxLength) {
  const auto lines = detail::tokenize(in);
  std::optional<std::uint32_t> p;
  Quiver q;
  std::vector<std::pair<std::size_t, std::string>> relation_lines;
  for (const auto& l : lines) {
    const auto& kw = l.words.front();
    try {
      if (kw == "field") {
        if (l.words.size() != 2) {
          throw ParseError(l.number, "usage: field <prime>");
        }
        if (p) {
          throw ParseError(l.number, "field declared twice");
        }
        const auto v = detail::parse_integer(l.words[1], l.number, "field");
        if (v < 2 || v > 65521 ||
            !Field::is_prime(static_cast<std::uint32_t>(v))) {
          throw ParseError(l.number, "field characteristic " + l.words[1] +
                                         " is not a supported prime");
        }
        p = static_cast<std::uint32_t>(v);
      } else if (kw == "vertex") {
        if (l.words.size() != 2) {
          throw ParseError(l.number, "usage: vertex <name>");
        }
        q.add_vertex(l.words[1]);
      } else if (kw == "arrow") {
        if (l.words.size() != 4) {
          throw ParseError(l.number, "usage: arrow <name> <source> <target>");
        }
        q.add_arrow(l.words[1], l.words[2], l.words[3]);
      } else if (kw == "relation") {
        if (l.words.size() < 2) {
          throw ParseError(l.number, "usage: relation <coeff>*<path> + ...");
        }
        relation_lines.emplace_back(l.number, l.rest);
      } else {
        throw ParseError(l.number, "unknown keyword '" + kw + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(l.number, e.what());
    }
  }
  if (!p) {
    throw ParseError(0, "missing 'field <prime>' line");
  }
  if (q.vertex_count() == 0) {
    throw ParseError(0, "algebra has no vertices");
  }
  const Field f(*p);
  std::vector<Relation> rels;
  for (const auto& [number, text] : relation_lines) {
    rels.push_back(detail::parse_relation(q, f, text, number));
  }
  try {
    return build_algebra(q, rels, *p, max_length);
  } catch (const AdmissibilityError&) {
    throw;
  } catch (const Error& e) {
    // Relation validation failures: point at the first relation line.
    const std::size_t line =
        relation_lines.empty() ? 0 : relation_lines.front().first;
    std::string msg = e.what();
    for (std::size_t i = 0; i < rels.size(); ++i) {
      try {
        detail::validate_relation(q, rels[i], f);
      } catch (const Error& inner) {
        throw ParseError(relation_lines[i].first, inner.what());
      }
    }
    throw ParseError(line, msg);
  }
}

inline AlgebraPtr parse_algebra_text(const std::string& text,
                                     std::size_t max_length = kDefaultMaxLength) {
  std::istringstream in(text);
  return parse_algebra(in, max_length);
}

inline AlgebraPtr load_algebra(const std::string& path,
                               std::size_t max_length = kDefaultMaxLength) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(0, "cannot open algebra file '" + path + "'");
  }
  return parse_algebra(in, max_length);
}

inline Representation parse_module(const AlgebraPtr& a, std::istream& in) {
  const auto& q = a->quiver();
  const Field& f = a->field();
  const auto lines = detail::tokenize(in);
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  std::vector<bool> dim_seen(q.vertex_count(), false);
  std::map<std::size_t, std::pair<std::size_t, std::vector<Scalar>>> entries;
  for (const auto& l : lines) {
    const auto& kw = l.words.front();
    if (kw == "dim") {
      if (l.words.size() != 3) {
        throw ParseError(l.number, "usage: dim <vertex> <n>");
      }
      const auto v = q.find_vertex(l.words[1]);
      if (!v) {
        throw ParseError(l.number, "unknown vertex '" + l.words[1] + "'");
      }
      if (dim_seen[*v]) {
        throw ParseError(l.number, "dimension of '" + l.words[1] +
                                       "' given twice");
      }
      const auto n = detail::parse_integer(l.words[2], l.number, "dimension");
      if (n < 0 || n > 64) {
        throw ParseError(l.number, "dimension out of range");
      }
      dims[*v] = static_cast<std::size_t>(n);
      dim_seen[*v] = true;
    } else if (kw == "map") {
      if (l.words.size() < 2) {
        throw ParseError(l.number, "usage: map <arrow> <entries...>");
      }
      const auto a_idx = q.find_arrow(l.words[1]);
      if (!a_idx) {
        throw ParseError(l.number, "unknown arrow '" + l.words[1] + "'");
      }
      if (entries.contains(*a_idx)) {
        throw ParseError(l.number, "map for '" + l.words[1] + "' given twice");
      }
      std::vector<Scalar> vals;
      for (std::size_t i = 2; i < l.words.size(); ++i) {
        vals.push_back(f.reduce(
            detail::parse_integer(l.words[i], l.number, "matrix entry")));
      }
      entries.emplace(*a_idx, std::make_pair(l.number, std::move(vals)));
    } else {
      throw ParseError(l.number, "unknown keyword '" + kw + "'");
    }
  }
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& arrow = q.arrow(ai);
    const std::size_t rows = dims[arrow.target];
    const std::size_t cols = dims[arrow.source];
    auto it = entries.find(ai);
    if (it == entries.end()) {
      maps.emplace_back(f, rows, cols);
      continue;
    }
    auto& [number, vals] = it->second;
    if (vals.size() != rows * cols) {
      throw ParseError(number, "map '" + arrow.name + "' needs " +
                                   std::to_string(rows * cols) +
                                   " entries (" + std::to_string(rows) + "x" +
                                   std::to_string(cols) + "), got " +
                                   std::to_string(vals.size()));
    }
    maps.emplace_back(f, rows, cols, vals);
  }
  try {
    return {a, dims, std::move(maps)};
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

inline Representation parse_module_text(const AlgebraPtr& a,
                                        const std::string& text) {
  std::istringstream in(text);
  return parse_module(a, in);
}

inline Representation load_module(const AlgebraPtr& a,
                                  const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(0, "cannot open module file '" + path + "'");
  }
  return parse_module(a, in);
}

/// Algebra-file text that parses back to the same algebra.
inline std::string algebra_to_text(const BoundQuiverAlgebra& a) {
  std::ostringstream os;
  const auto& q = a.quiver();
  os << "field " << a.field().characteristic() << '\n';
  for (const auto& v : q.vertices()) {
    os << "vertex " << v << '\n';
  }
  for (const auto& arrow : q.arrows()) {
    os << "arrow " << arrow.name << ' ' << q.vertex(arrow.source) << ' '
       << q.vertex(arrow.target) << '\n';
  }
  for (const auto& r : a.relations()) {
    os << "relation";
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
      os << (i == 0 ? " " : " + ") << r.terms[i].coefficient << '*'
         << path_name(q, r.terms[i].path);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace taulab
