#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "frattini/errors.hpp"
#include "frattini/poset.hpp"

// Chain enumeration and the boundedness predicates on chains.  Chains are
// nonempty linearly ordered subsets; full enumeration is exponential in the
// worst case, so it is guarded by an explicit element-count cap rather than
// ever truncating silently.

namespace frattini {

/// Default cap on the poset size for full chain enumeration.
inline constexpr std::size_t kDefaultChainCap = 20;

/// A nonempty, pairwise comparable subset of a poset, as ascending indices.
class Chain {
 public:
  Chain(const Poset& p, std::vector<std::size_t> members) : members_(std::move(members)) {
    if (members_.empty()) throw NotAChain("chains are nonempty by convention");
    for (std::size_t i = 0; i < members_.size(); ++i)
      for (std::size_t j = i + 1; j < members_.size(); ++j) {
        if (members_[i] == members_[j])
          throw NotAChain("repeated member " + p.id(members_[i]));
        if (!p.comparable(members_[i], members_[j]))
          throw NotAChain("incomparable members " + p.id(members_[i]) + ", " + p.id(members_[j]));
      }
  }

  const std::vector<std::size_t>& members() const { return members_; }

 private:
  std::vector<std::size_t> members_;
};

namespace detail {

template <typename Fn>
bool chain_dfs(const Poset& p, bool proper_only, std::vector<std::size_t>& current,
               std::size_t start, Fn&& fn) {
  const std::size_t n = p.size();
  for (std::size_t i = start; i < n; ++i) {
    if (proper_only && i == p.top()) continue;
    bool fits = true;
    for (std::size_t m : current)
      if (!p.comparable(i, m)) {
        fits = false;
        break;
      }
    if (!fits) continue;
    current.push_back(i);
    bool keep_going;
    if constexpr (std::is_void_v<std::invoke_result_t<Fn&, const std::vector<std::size_t>&>>) {
      fn(static_cast<const std::vector<std::size_t>&>(current));
      keep_going = true;
    } else {
      keep_going = fn(static_cast<const std::vector<std::size_t>&>(current));
    }
    if (keep_going) keep_going = chain_dfs(p, proper_only, current, i + 1, fn);
    current.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace detail

/// Visits every nonempty chain exactly once, as ascending index vectors.
/// With proper_only the top element is excluded, so only chains entirely
/// below the maximum are produced.  The callback may return void, or bool
/// with false meaning "stop enumerating".  Throws SizeCapExceeded when the
/// poset has more elements than the cap allows.
template <typename Fn>
void for_each_chain(const Poset& p, bool proper_only, Fn&& fn,
                    std::size_t element_cap = kDefaultChainCap) {
  if (p.size() > element_cap)
    throw SizeCapExceeded("chain enumeration over " + std::to_string(p.size()) +
                          " elements exceeds cap " + std::to_string(element_cap));
  std::vector<std::size_t> current;
  detail::chain_dfs(p, proper_only, current, 0, fn);
}

/// Materializes the chain stream.  Prefer for_each_chain in checkers.
inline std::vector<Chain> enumerate_chains(const Poset& p, bool proper_only,
                                           std::size_t element_cap = kDefaultChainCap) {
  std::vector<Chain> out;
  for_each_chain(
      p, proper_only,
      [&](const std::vector<std::size_t>& members) { out.emplace_back(p, members); },
      element_cap);
  return out;
}

/// True iff every member is strictly below the top and no element strictly
/// below the top bounds them all.  On finite posets this is always false: a
/// chain of proper elements is bounded by its own greatest member.
inline bool is_unbounded_proper(const Poset& p, const std::vector<std::size_t>& members) {
  for (std::size_t m : members)
    if (m == p.top()) return false;
  return generates_top(p, members);
}

inline bool is_unbounded_proper(const Poset& p, const Chain& c) {
  return is_unbounded_proper(p, c.members());
}

/// True iff some coatom lies above e (e strictly below the top extends to a
/// maximal proper element).  False for the top itself.
inline bool extends_to_coatom(const Poset& p, std::size_t e) {
  if (e == p.top()) return false;
  for (std::size_t c : coatoms(p))
    if (p.leq(e, c)) return true;
  return false;
}

}  // namespace frattini
