#include "pathpack/cover.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pathpack {

Path Path::reversed() const {
  return Path{{vertices.rbegin(), vertices.rend()}};
}

bool is_path(const Graph& g, const Path& p) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Vertex x = p.vertices[i];
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
    if (i > 0 && !g.adjacent(p.vertices[i - 1], x)) return false;
  }
  return !p.vertices.empty();
}

Cover::Cover(int k) : k_(k) {
  if (k < 1) {
    throw std::invalid_argument("cover: k must be positive");
  }
}

Cover::Cover(int k, std::vector<Path> paths) : Cover(k) { paths_ = std::move(paths); }

int Cover::coverage() const {
  int total = 0;
  for (const auto& p : paths_) total += p.order();
  return total;
}

int Cover::count_of_order(int order) const {
  return static_cast<int>(
      std::count_if(paths_.begin(), paths_.end(), [order](const Path& p) { return p.order() == order; }));
}

bool Cover::erase(const Path& p) {
  auto it = std::find(paths_.begin(), paths_.end(), p);
  if (it == paths_.end()) return false;
  paths_.erase(it);
  return true;
}

void Cover::replace(std::size_t index, std::vector<Path> replacement) {
  auto pos = paths_.erase(paths_.begin() + static_cast<std::ptrdiff_t>(index));
  paths_.insert(pos, std::make_move_iterator(replacement.begin()),
                std::make_move_iterator(replacement.end()));
}

namespace {

std::vector<Path> cut_pieces(const Path& p, int k) {
  std::vector<Path> pieces;
  auto first = p.vertices.begin();
  auto remaining = static_cast<int>(p.vertices.size());
  while (remaining >= 2 * k) {
    pieces.push_back(Path{{first, first + k}});
    first += k;
    remaining -= k;
  }
  pieces.push_back(Path{{first, p.vertices.end()}});
  return pieces;
}

}  // namespace

void Cover::normalize() {
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    if (paths_[i].order() >= 2 * k_) {
      auto pieces = cut_pieces(paths_[i], k_);
      const std::size_t added = pieces.size();
      replace(i, std::move(pieces));
      i += added - 1;
    }
  }
}

CoverIndex::CoverIndex(int n, const Cover& c)
    : owner_(static_cast<std::size_t>(n), kFree), position_(static_cast<std::size_t>(n), -1) {
  for (std::size_t i = 0; i < c.paths().size(); ++i) {
    const auto& vs = c.paths()[i].vertices;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      owner_[static_cast<std::size_t>(vs[j])] = static_cast<int>(i);
      position_[static_cast<std::size_t>(vs[j])] = static_cast<int>(j);
    }
  }
}

std::vector<std::string> validate_cover(const Graph& g, const Cover& c) {
  std::vector<std::string> violations;
  const int n = g.order();
  const int k = c.k();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);

  for (std::size_t i = 0; i < c.paths().size(); ++i) {
    const Path& p = c.paths()[i];
    const std::string label = "path " + std::to_string(i);
    if (p.order() < k || p.order() > 2 * k - 1) {
      violations.push_back("order: " + label + " has order " + std::to_string(p.order()) +
                           " outside [" + std::to_string(k) + ", " + std::to_string(2 * k - 1) +
                           "]");
    }
    bool simple = true;
    for (std::size_t j = 0; j < p.vertices.size(); ++j) {
      const Vertex x = p.vertices[j];
      if (x < 0 || x >= n) {
        violations.push_back("non-path: " + label + " has out-of-range vertex " + std::to_string(x));
        simple = false;
        continue;
      }
      int& slot = owner[static_cast<std::size_t>(x)];
      if (slot == static_cast<int>(i)) {
        violations.push_back("non-path: " + label + " repeats vertex " + std::to_string(x));
        simple = false;
      } else if (slot != -1) {
        violations.push_back("overlap: vertex " + std::to_string(x) + " in path " +
                             std::to_string(slot) + " and " + label);
      } else {
        slot = static_cast<int>(i);
      }
      if (j > 0 && simple && p.vertices[j - 1] >= 0 && p.vertices[j - 1] < n &&
          !g.adjacent(p.vertices[j - 1], x)) {
        violations.push_back("non-path: " + label + " uses missing edge (" +
                             std::to_string(p.vertices[j - 1]) + ", " + std::to_string(x) + ")");
      }
    }
  }
  return violations;
}

Cover split_long_path(Cover c, const Path& p) {
  const int k = c.k();
  if (p.order() < 2 * k) {
    throw std::invalid_argument("split_long_path: path order " + std::to_string(p.order()) +
                                " is below 2k = " + std::to_string(2 * k));
  }
  const auto& paths = c.paths();
  auto it = std::find(paths.begin(), paths.end(), p);
  if (it == paths.end()) {
    throw std::invalid_argument("split_long_path: path is not part of the cover");
  }
  c.replace(static_cast<std::size_t>(it - paths.begin()), cut_pieces(p, k));
  return c;
}

Cover read_cover(std::istream& in, int k) {
  Cover c(k);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream row(line);
    Path p;
    long long x = 0;
    while (row >> x) p.vertices.push_back(static_cast<Vertex>(x));
    if (!row.eof()) {
      throw std::runtime_error("cover file line " + std::to_string(lineno) + ": malformed '" +
                               line + "'");
    }
    if (!p.vertices.empty()) c.push_back(std::move(p));
  }
  return c;
}

Cover load_cover(const std::string& path, int k) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open cover file '" + path + "'");
  }
  return read_cover(in, k);
}

void write_cover(std::ostream& out, const Cover& c) {
  for (const auto& p : c.paths()) {
    for (std::size_t j = 0; j < p.vertices.size(); ++j) {
      if (j > 0) out << ' ';
      out << p.vertices[j];
    }
    out << '\n';
  }
}

void save_cover(const std::string& path, const Cover& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write cover file '" + path + "'");
  }
  write_cover(out, c);
}

}  // namespace pathpack
