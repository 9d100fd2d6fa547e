#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permutation.hpp"

namespace minsimple {

/// Base-and-strong-generating-set structure built by a deterministic
/// Schreier-Sims procedure. Orbits and transversals are only ever extended,
/// never recomputed, so coset representatives are stable and previously
/// verified Schreier generators stay verified.
class StabilizerChain {
public:
  explicit StabilizerChain(unsigned degree, std::vector<Permutation> gens = {},
                           std::vector<unsigned> base_hint = {})
      : degree_(degree), base_hint_(std::move(base_hint)) {
    for (const Permutation &g : gens)
      add_generator(g);
  }

  unsigned degree() const { return degree_; }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const Level &lvl : levels_)
      n *= lvl.orbit.size();
    return n;
  }

  std::size_t base_length() const { return levels_.size(); }

  unsigned base_point(std::size_t level) const { return levels_[level].base_point; }

  /// Strips p through levels starting at `from`. Returns the residue and the
  /// level at which stripping stopped (levels_.size() if it fell through).
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from = 0) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const Level &lvl = levels_[l];
      const unsigned image = p[lvl.base_point];
      const int idx = lvl.where[image];
      if (idx < 0)
        return {std::move(p), l};
      p = p * lvl.transversal[static_cast<std::size_t>(idx)].inverse();
    }
    return {std::move(p), levels_.size()};
  }

  bool contains(const Permutation &p) const {
    if (p.degree() != degree_)
      throw std::invalid_argument("degree mismatch in membership test");
    return sift(p).first.is_identity();
  }

  /// Adds a generator, restoring the strong-generation invariant.
  void add_generator(const Permutation &g) {
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
    auto [res, lev] = sift(g);
    if (res.is_identity())
      return;
    if (lev == levels_.size())
      new_level(res);
    for (std::size_t k = 0; k <= lev; ++k)
      append_generator(k, res);
    for (std::size_t k = lev + 1; k-- > 0;)
      complete_level(k);
  }

  /// Strong generators of the stabilizer of the first `level` base points:
  /// the generators stored at that level.
  std::vector<Permutation> level_generators(std::size_t level) const {
    if (level >= levels_.size())
      return {};
    return levels_[level].gens;
  }

  /// Visits every group element exactly once, in a deterministic order.
  template <typename F> void for_each_element(F &&fn) const {
    Permutation id = Permutation::identity(degree_);
    enumerate_from(levels_.size(), id, fn);
  }

  std::vector<Permutation> elements() const {
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(order()));
    for_each_element([&](const Permutation &p) { out.push_back(p); });
    return out;
  }

private:
  struct Level {
    unsigned base_point = 0;
    std::vector<Permutation> gens;
    std::vector<unsigned> orbit;          // BFS order; orbit[0] == base_point
    std::vector<Permutation> transversal; // transversal[i] maps base_point to orbit[i]
    std::vector<int> where;               // point -> index in orbit, or -1
    // Schreier generators already checked: all (orbit index, gen index)
    // pairs below these watermarks.
    std::size_t checked_orbit = 0;
    std::size_t checked_gens = 0;
  };

  void new_level(const Permutation &witness) {
    Level lvl;
    lvl.base_point = pick_base_point(witness);
    lvl.where.assign(degree_, -1);
    lvl.where[lvl.base_point] = 0;
    lvl.orbit.push_back(lvl.base_point);
    lvl.transversal.push_back(Permutation::identity(degree_));
    levels_.push_back(std::move(lvl));
  }

  unsigned pick_base_point(const Permutation &witness) const {
    for (unsigned hint : base_hint_) {
      if (witness[hint] != hint) {
        bool taken = false;
        for (const Level &lvl : levels_)
          taken = taken || lvl.base_point == hint;
        if (!taken)
          return hint;
      }
    }
    return witness.smallest_moved_point();
  }

  void append_generator(std::size_t level, const Permutation &g) {
    Level &lvl = levels_[level];
    for (const Permutation &have : lvl.gens)
      if (have == g)
        return;
    lvl.gens.push_back(g);
    extend_orbit(level);
  }

  /// Grows the orbit at `level` in place; existing entries are untouched.
  void extend_orbit(std::size_t level) {
    Level &lvl = levels_[level];
    for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
      for (const Permutation &g : lvl.gens) {
        const unsigned image = g[lvl.orbit[i]];
        if (lvl.where[image] < 0) {
          lvl.where[image] = static_cast<int>(lvl.orbit.size());
          lvl.orbit.push_back(image);
          lvl.transversal.push_back(lvl.transversal[i] * g);
        }
      }
    }
  }

  /// Verifies all unchecked Schreier generators at `level`, assuming deeper
  /// levels are complete; repairs deeper levels when a new strong generator
  /// appears.
  void complete_level(std::size_t level) {
    Level *lvl = &levels_[level];
    extend_orbit(level);
    while (lvl->checked_orbit < lvl->orbit.size() || lvl->checked_gens < lvl->gens.size()) {
      const std::size_t orbit_hi = lvl->orbit.size();
      const std::size_t gens_hi = lvl->gens.size();
      for (std::size_t oi = 0; oi < orbit_hi; ++oi) {
        for (std::size_t gi = 0; gi < gens_hi; ++gi) {
          if (oi < lvl->checked_orbit && gi < lvl->checked_gens)
            continue;
          const Permutation &g = lvl->gens[gi];
          const unsigned target = g[lvl->orbit[oi]];
          const Permutation schreier =
              lvl->transversal[oi] * g *
              lvl->transversal[static_cast<std::size_t>(lvl->where[target])].inverse();
          if (schreier.is_identity())
            continue;
          auto [res, stuck] = sift(std::move(schreier), level + 1);
          if (res.is_identity())
            continue;
          if (stuck == levels_.size())
            new_level(res);
          for (std::size_t k = level + 1; k <= stuck; ++k)
            append_generator(k, res);
          for (std::size_t k = stuck + 1; k-- > level + 1;)
            complete_level(k);
          lvl = &levels_[level]; // levels_ may have reallocated
        }
      }
      lvl->checked_orbit = orbit_hi;
      lvl->checked_gens = gens_hi;
      extend_orbit(level); // no-op unless gens changed
    }
  }

  template <typename F>
  void enumerate_from(std::size_t level, const Permutation &suffix, F &fn) const {
    if (level == 0) {
      fn(suffix);
      return;
    }
    const Level &lvl = levels_[level - 1];
    for (const Permutation &t : lvl.transversal) {
      if (level == levels_.size())
        enumerate_from(level - 1, t, fn);
      else
        enumerate_from(level - 1, suffix * t, fn);
    }
  }

  unsigned degree_;
  std::vector<unsigned> base_hint_;
  std::vector<Level> levels_;
};

} // namespace minsimple
