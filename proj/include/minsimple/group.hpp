#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permutation.hpp"
#include "stab_chain.hpp"

namespace minsimple {

/// Invariant check that survives NDEBUG builds.
#define MS_CHECK(cond, msg)                                                    \
  do {                                                                         \
    if (!(cond))                                                               \
      throw std::logic_error(std::string("invariant violated: ") + (msg));    \
  } while (0)

/// Finite permutation group given by generators. Immutable value type; the
/// stabilizer chain and order are computed once on demand and shared between
/// copies. Concurrent first use is safe.
class Group {
public:
  explicit Group(unsigned degree, std::vector<Permutation> gens = {},
                 std::vector<unsigned> base_hint = {}) {
    auto st = std::make_shared<State>();
    st->degree = degree;
    st->base_hint = std::move(base_hint);
    for (Permutation &g : gens) {
      if (g.degree() != degree)
        throw std::invalid_argument("generator degree mismatch");
      if (!g.is_identity())
        st->gens.push_back(std::move(g));
    }
    state_ = std::move(st);
  }

  /// Wraps an already-built chain; `chain` must be the closure of `gens`.
  explicit Group(unsigned degree, std::vector<Permutation> gens, StabilizerChain chain) {
    auto st = std::make_shared<State>();
    st->degree = degree;
    for (Permutation &g : gens)
      if (!g.is_identity())
        st->gens.push_back(std::move(g));
    st->chain.emplace(std::move(chain));
    st->chain_ready.store(true, std::memory_order_release);
    state_ = std::move(st);
  }

  static Group trivial(unsigned degree) { return Group(degree); }

  unsigned degree() const { return state_->degree; }

  const std::vector<Permutation> &generators() const { return state_->gens; }

  const StabilizerChain &chain() const {
    if (!state_->chain_ready.load(std::memory_order_acquire)) {
      std::call_once(state_->chain_once, [st = state_.get()] {
        st->chain.emplace(st->degree, st->gens, st->base_hint);
        st->chain_ready.store(true, std::memory_order_release);
      });
    }
    return *state_->chain;
  }

  std::uint64_t order() const { return chain().order(); }

  bool is_trivial() const { return state_->gens.empty() || order() == 1; }

  bool contains(const Permutation &p) const {
    if (p.degree() != degree())
      throw std::invalid_argument("degree mismatch in membership test");
    return chain().contains(p);
  }

  /// True when every generator of h lies in this group.
  bool contains_group(const Group &h) const {
    if (h.degree() != degree())
      return false;
    for (const Permutation &g : h.generators())
      if (!contains(g))
        return false;
    return true;
  }

  bool same_group_as(const Group &other) const {
    return degree() == other.degree() && order() == other.order() && contains_group(other);
  }

  std::vector<Permutation> elements() const { return chain().elements(); }

  template <typename F> void for_each_element(F &&fn) const {
    chain().for_each_element(std::forward<F>(fn));
  }

  Permutation identity() const { return Permutation::identity(degree()); }

  /// Order-independent fingerprint of the element set; together with the
  /// order it identifies the subgroup exactly (two independent 64-bit sums).
  std::pair<std::uint64_t, std::uint64_t> element_set_hash() const {
    std::uint64_t a = 0, b = 0;
    for_each_element([&](const Permutation &p) {
      a += p.hash(0x517cc1b727220a95ULL);
      b += p.hash(0x2545f4914f6cdd1dULL);
    });
    return {a, b};
  }

private:
  struct State {
    unsigned degree = 1;
    std::vector<Permutation> gens;
    std::vector<unsigned> base_hint;
    mutable std::once_flag chain_once;
    mutable std::optional<StabilizerChain> chain;
  };

  std::shared_ptr<const State> state_;
};

} // namespace minsimple
