#include "tiverify/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tiverify/errors.hpp"

namespace tiv {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int img : images_) {
    if (img < 0 || img >= degree() || seen[img])
      throw Error("permutation images are not a bijection");
    seen[img] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(const std::string& text, int min_degree) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw Error("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cycle;
    while (true) {
      while (i < n && (std::isspace(static_cast<unsigned char>(text[i])) ||
                       text[i] == ','))
        ++i;
      if (i >= n) throw Error("unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error("unexpected character in cycle: " + text);
      int point = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        point = point * 10 + (text[i] - '0');
        ++i;
      }
      cycle.push_back(point);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }

  int degree = min_degree;
  for (const auto& cycle : cycles)
    for (int p : cycle) degree = std::max(degree, p + 1);
  if (degree == 0) degree = 1;

  std::vector<int> images(degree);
  std::vector<bool> used(degree, false);
  for (int p = 0; p < degree; ++p) images[p] = p;
  for (const auto& cycle : cycles) {
    for (size_t j = 0; j < cycle.size(); ++j) {
      int from = cycle[j];
      int to = cycle[(j + 1) % cycle.size()];
      if (used[from])
        throw Error("point " + std::to_string(from) +
                    " repeated across cycles: " + text);
      used[from] = true;
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw Error("permutation degree mismatch");
  std::vector<int> images(degree());
  for (int i = 0; i < degree(); ++i) images[i] = rhs.images_[images_[i]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(degree());
  for (int i = 0; i < degree(); ++i) images[images_[i]] = i;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::extended_to(int degree) const {
  if (degree < this->degree()) throw Error("cannot shrink a permutation");
  std::vector<int> images = images_;
  for (int i = this->degree(); i < degree; ++i) images.push_back(i);
  return Permutation(std::move(images));
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (int start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    int p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) out << ' ';
      out << p;
      first = false;
      p = images_[p];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace tiv
