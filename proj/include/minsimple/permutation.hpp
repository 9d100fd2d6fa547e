#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minsimple {

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

} // namespace detail

/// Bijection on the points 0..degree-1. Composition is left-to-right:
/// (a * b) maps x to b[a[x]].
class Permutation {
public:
  explicit Permutation(unsigned degree) : images_(degree) {
    check_degree(degree);
    std::iota(images_.begin(), images_.end(), std::uint16_t{0});
  }

  explicit Permutation(const std::vector<unsigned> &images) {
    check_degree(static_cast<unsigned>(images.size()));
    images_.reserve(images.size());
    std::vector<bool> seen(images.size(), false);
    for (unsigned v : images) {
      if (v >= images.size() || seen[v])
        throw std::invalid_argument("image list is not a bijection");
      seen[v] = true;
      images_.push_back(static_cast<std::uint16_t>(v));
    }
  }

  static Permutation identity(unsigned degree) { return Permutation(degree); }

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  unsigned operator[](unsigned point) const { return images_[point]; }

  bool is_identity() const {
    for (unsigned i = 0; i < degree(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  /// Apply *this first, then rhs.
  Permutation operator*(const Permutation &rhs) const {
    require_same_degree(rhs);
    Permutation out = no_init(degree());
    for (unsigned i = 0; i < degree(); ++i)
      out.images_[i] = rhs.images_[images_[i]];
    return out;
  }

  Permutation inverse() const {
    Permutation out = no_init(degree());
    for (unsigned i = 0; i < degree(); ++i)
      out.images_[images_[i]] = static_cast<std::uint16_t>(i);
    return out;
  }

  /// g^{-1} * (*this) * g, computed in one pass.
  Permutation conjugated_by(const Permutation &g) const {
    require_same_degree(g);
    Permutation out = no_init(degree());
    for (unsigned i = 0; i < degree(); ++i)
      out.images_[g.images_[i]] = g.images_[images_[i]];
    return out;
  }

  /// [a, b] = a^{-1} b^{-1} a b.
  static Permutation commutator(const Permutation &a, const Permutation &b) {
    return a.inverse() * b.inverse() * a * b;
  }

  /// lcm of the cycle lengths.
  std::uint64_t element_order() const {
    std::uint64_t ord = 1;
    std::vector<bool> seen(degree(), false);
    for (unsigned i = 0; i < degree(); ++i) {
      if (seen[i])
        continue;
      std::uint64_t len = 0;
      for (unsigned j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      const std::uint64_t g = std::gcd(ord, len);
      if (ord / g > UINT64_MAX / len)
        throw std::overflow_error("element order exceeds 64 bits");
      ord = (ord / g) * len;
    }
    return ord;
  }

  unsigned smallest_moved_point() const {
    for (unsigned i = 0; i < degree(); ++i)
      if (images_[i] != i)
        return i;
    throw std::logic_error("identity permutation moves no point");
  }

  bool operator==(const Permutation &rhs) const { return images_ == rhs.images_; }
  bool operator!=(const Permutation &rhs) const { return images_ != rhs.images_; }
  bool operator<(const Permutation &rhs) const { return images_ < rhs.images_; }

  std::uint64_t hash(std::uint64_t seed = 0) const {
    std::uint64_t h = detail::mix64(seed ^ (0x100000001b3ULL * degree()));
    for (std::uint16_t v : images_)
      h = detail::mix64(h ^ v);
    return h;
  }

  /// Non-trivial cycles, each starting at its smallest point, ordered by
  /// that point.
  std::vector<std::vector<unsigned>> cycles() const {
    std::vector<std::vector<unsigned>> out;
    std::vector<bool> seen(degree(), false);
    for (unsigned i = 0; i < degree(); ++i) {
      if (seen[i] || images_[i] == i) {
        seen[i] = true;
        continue;
      }
      std::vector<unsigned> cyc;
      for (unsigned j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        cyc.push_back(j);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  /// Cycle notation with 0-based points, e.g. "(0 1 2)(3 4)"; "()" for the
  /// identity.
  std::string to_cycles() const {
    const auto cyc = cycles();
    if (cyc.empty())
      return "()";
    std::string out;
    for (const auto &c : cyc) {
      out += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
          out += ' ';
        out += std::to_string(c[i]);
      }
      out += ')';
    }
    return out;
  }

  static Permutation parse_cycles(unsigned degree, std::string_view text) {
    std::vector<unsigned> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    std::vector<bool> used(degree, false);
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
        ++pos;
    };
    skip_ws();
    bool any = false;
    while (pos < text.size()) {
      if (text[pos] != '(')
        throw std::invalid_argument("expected '(' in cycle notation");
      ++pos;
      std::vector<unsigned> cyc;
      skip_ws();
      while (pos < text.size() && text[pos] != ')') {
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
          throw std::invalid_argument("expected point number in cycle");
        unsigned v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          v = v * 10 + (text[pos] - '0');
          if (v > 0xffff)
            throw std::invalid_argument("point out of range");
          ++pos;
        }
        if (v >= degree)
          throw std::invalid_argument("point " + std::to_string(v) + " exceeds degree " +
                                      std::to_string(degree));
        if (used[v])
          throw std::invalid_argument("point repeated in cycle notation");
        used[v] = true;
        cyc.push_back(v);
        skip_ws();
      }
      if (pos == text.size())
        throw std::invalid_argument("unterminated cycle");
      ++pos; // ')'
      for (std::size_t i = 0; i + 1 < cyc.size(); ++i)
        images[cyc[i]] = cyc[i + 1];
      if (cyc.size() > 1)
        images[cyc.back()] = cyc.front();
      any = true;
      skip_ws();
    }
    if (!any)
      throw std::invalid_argument("empty permutation text");
    return Permutation(images);
  }

private:
  static void check_degree(unsigned degree) {
    if (degree == 0)
      throw std::invalid_argument("permutation degree must be positive");
    if (degree > 0xffff)
      throw std::invalid_argument("permutation degree exceeds 65535");
  }

  void require_same_degree(const Permutation &rhs) const {
    if (degree() != rhs.degree())
      throw std::invalid_argument("permutation degree mismatch");
  }

  static Permutation no_init(unsigned degree) {
    Permutation p;
    p.images_.resize(degree);
    return p;
  }

  Permutation() = default;

  std::vector<std::uint16_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const { return static_cast<std::size_t>(p.hash()); }
};

} // namespace minsimple
