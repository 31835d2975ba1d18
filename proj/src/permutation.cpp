#include "grplat/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace grplat {

Permutation::Permutation(int degree) {
  if (degree < 1) throw Error("permutation degree must be positive");
  images_.resize(degree);
  for (int i = 0; i < degree; ++i) images_[i] = i;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error("permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw Error("image sequence is not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw Error("degree mismatch in compose");
  std::vector<int> im(p.degree());
  for (int i = 0; i < p.degree(); ++i) im[i] = q[p[i]];
  return Permutation(std::move(im));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> im(p.degree());
  for (int i = 0; i < p.degree(); ++i) im[p[i]] = i;
  return Permutation(std::move(im));
}

Permutation conjugate(const Permutation& a, const Permutation& g) {
  return compose(compose(inverse(g), a), g);
}

Permutation parse_permutation(std::string_view text, int degree) {
  if (degree < 1) throw Error("permutation degree must be positive");
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw Error("malformed cycle notation: expected '('");
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw Error("malformed cycle notation: expected a point");
      long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > degree) break;
        ++pos;
      }
      if (v < 1 || v > degree) throw Error("cycle point out of range [1, degree]");
      int pt = static_cast<int>(v) - 1;
      if (used[pt]) throw Error("repeated point in cycle notation");
      used[pt] = true;
      cycle.push_back(pt);
      skip_ws();
    }
    if (pos >= text.size()) throw Error("malformed cycle notation: unclosed '('");
    ++pos;  // ')'
    for (std::size_t i = 0; i < cycle.size(); ++i)
      im[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(im));
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream out;
  std::vector<bool> seen(p.degree(), false);
  bool any = false;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    any = true;
    out << '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << (j + 1);
      seen[j] = true;
      first = false;
      j = p[j];
    } while (j != i);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t ord = 1;
  std::vector<bool> seen(p.degree(), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    int j = i;
    do {
      seen[j] = true;
      ++len;
      j = p[j];
    } while (j != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace grplat
