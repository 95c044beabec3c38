#include "compmach/quiver.hpp"

#include <algorithm>
#include <cctype>

#include "compmach/errors.hpp"

namespace compmach {

bool is_valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  auto head = static_cast<unsigned char>(id.front());
  if (!std::isalpha(head) && id.front() != '_') return false;
  return std::all_of(id.begin() + 1, id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

VertexIndex Quiver::add_vertex(std::string id) {
  if (!is_valid_identifier(id)) {
    throw Error("invalid vertex id '" + id + "'");
  }
  if (find_vertex(id)) {
    throw Error("duplicate vertex id '" + id + "'");
  }
  vertex_ids_.push_back(std::move(id));
  out_arrows_.emplace_back();
  in_arrows_.emplace_back();
  return vertex_ids_.size() - 1;
}

ArrowIndex Quiver::add_arrow(std::string id, std::string_view source,
                             std::string_view target) {
  if (!is_valid_identifier(id)) {
    throw Error("invalid arrow id '" + id + "'");
  }
  if (find_arrow(id)) {
    throw Error("duplicate arrow id '" + id + "'");
  }
  auto s = find_vertex(source);
  if (!s) throw Error("arrow '" + id + "': unknown source vertex");
  auto t = find_vertex(target);
  if (!t) throw Error("arrow '" + id + "': unknown target vertex");
  arrow_ids_.push_back(std::move(id));
  sources_.push_back(*s);
  targets_.push_back(*t);
  ArrowIndex a = arrow_ids_.size() - 1;
  out_arrows_[*s].push_back(a);
  in_arrows_[*t].push_back(a);
  return a;
}

std::optional<VertexIndex> Quiver::find_vertex(std::string_view id) const {
  for (VertexIndex v = 0; v < vertex_ids_.size(); ++v) {
    if (vertex_ids_[v] == id) return v;
  }
  return std::nullopt;
}

std::optional<ArrowIndex> Quiver::find_arrow(std::string_view id) const {
  for (ArrowIndex a = 0; a < arrow_ids_.size(); ++a) {
    if (arrow_ids_[a] == id) return a;
  }
  return std::nullopt;
}

bool Quiver::operator==(const Quiver& other) const {
  return vertex_ids_ == other.vertex_ids_ && arrow_ids_ == other.arrow_ids_ &&
         sources_ == other.sources_ && targets_ == other.targets_;
}

Path Path::trivial(VertexIndex base) {
  Path p;
  p.source_ = base;
  p.target_ = base;
  return p;
}

Path::Path(const Quiver& quiver, std::vector<ArrowIndex> arrows) {
  if (arrows.empty()) {
    throw Error("a non-trivial path needs at least one arrow");
  }
  for (ArrowIndex a : arrows) {
    if (a >= quiver.arrow_count()) {
      throw UnknownArrowError("path arrow index out of range");
    }
  }
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (quiver.target(arrows[i]) != quiver.source(arrows[i + 1])) {
      throw NotComposableError(
          "arrows '" + quiver.arrow_id(arrows[i]) + "' and '" +
          quiver.arrow_id(arrows[i + 1]) + "' do not chain");
    }
  }
  source_ = quiver.source(arrows.front());
  target_ = quiver.target(arrows.back());
  arrows_ = std::move(arrows);
}

bool Path::operator==(const Path& other) const {
  if (is_trivial() != other.is_trivial()) return false;
  if (is_trivial()) return source_ == other.source_;
  return arrows_ == other.arrows_;
}

bool is_acyclic(const Quiver& quiver) {
  // Kahn's algorithm: repeatedly peel vertices of in-degree zero.
  std::vector<std::size_t> in_degree(quiver.vertex_count(), 0);
  for (ArrowIndex a = 0; a < quiver.arrow_count(); ++a) {
    ++in_degree[quiver.target(a)];
  }
  std::vector<VertexIndex> stack;
  for (VertexIndex v = 0; v < quiver.vertex_count(); ++v) {
    if (in_degree[v] == 0) stack.push_back(v);
  }
  std::size_t seen = 0;
  while (!stack.empty()) {
    VertexIndex v = stack.back();
    stack.pop_back();
    ++seen;
    for (ArrowIndex a : quiver.out_arrows(v)) {
      if (--in_degree[quiver.target(a)] == 0) {
        stack.push_back(quiver.target(a));
      }
    }
  }
  return seen == quiver.vertex_count();
}

std::vector<Path> enumerate_paths(const Quiver& quiver,
                                  std::size_t min_length) {
  if (!is_acyclic(quiver)) {
    throw CyclicQuiverError(
        "cannot enumerate paths: the quiver has a directed cycle, so the "
        "path set is infinite");
  }

  std::vector<Path> result;
  if (min_length == 0) {
    for (VertexIndex v = 0; v < quiver.vertex_count(); ++v) {
      result.push_back(Path::trivial(v));
    }
  }

  // Grow level by level. Each level is kept in lexicographic order on the
  // arrow-index sequence: extending an ordered level by out-arrows in
  // declaration order keeps the next level ordered too.
  std::vector<std::vector<ArrowIndex>> level;
  for (ArrowIndex a = 0; a < quiver.arrow_count(); ++a) {
    level.push_back({a});
  }
  std::size_t length = 1;
  while (!level.empty()) {
    if (length >= min_length) {
      for (const auto& arrows : level) {
        result.emplace_back(quiver, arrows);
      }
    }
    std::vector<std::vector<ArrowIndex>> next;
    for (const auto& arrows : level) {
      for (ArrowIndex a : quiver.out_arrows(quiver.target(arrows.back()))) {
        auto extended = arrows;
        extended.push_back(a);
        next.push_back(std::move(extended));
      }
    }
    level = std::move(next);
    ++length;
  }
  return result;
}

Path concatenate(const Path& first, const Path& second) {
  if (first.target() != second.source()) {
    throw NotComposableError(
        "paths do not compose: target of the first differs from source of "
        "the second");
  }
  if (first.is_trivial()) return second;
  if (second.is_trivial()) return first;
  // Both non-trivial and the junction is checked, so splicing preserves the
  // chaining invariant without consulting the quiver.
  Path joined;
  joined.arrows_ = first.arrows();
  joined.arrows_.insert(joined.arrows_.end(), second.arrows().begin(),
                        second.arrows().end());
  joined.source_ = first.source();
  joined.target_ = second.target();
  return joined;
}

Quiver subquiver(const Quiver& quiver,
                 const std::vector<ArrowIndex>& keep_arrows) {
  std::vector<bool> keep(quiver.arrow_count(), false);
  for (ArrowIndex a : keep_arrows) {
    if (a >= quiver.arrow_count()) {
      throw UnknownArrowError("subquiver: arrow index out of range");
    }
    keep[a] = true;
  }
  std::vector<bool> used_vertex(quiver.vertex_count(), false);
  for (ArrowIndex a = 0; a < quiver.arrow_count(); ++a) {
    if (keep[a]) {
      used_vertex[quiver.source(a)] = true;
      used_vertex[quiver.target(a)] = true;
    }
  }
  Quiver sub;
  for (VertexIndex v = 0; v < quiver.vertex_count(); ++v) {
    if (used_vertex[v]) sub.add_vertex(quiver.vertex_id(v));
  }
  for (ArrowIndex a = 0; a < quiver.arrow_count(); ++a) {
    if (keep[a]) {
      sub.add_arrow(quiver.arrow_id(a), quiver.vertex_id(quiver.source(a)),
                    quiver.vertex_id(quiver.target(a)));
    }
  }
  return sub;
}

}  // namespace compmach
