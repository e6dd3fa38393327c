#ifndef YBE_RETRACTION_HPP
#define YBE_RETRACTION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"

namespace ybe {

  namespace detail {
    struct VectorHash {
      std::size_t operator()(std::vector<element_type> const& v) const noexcept {
        std::size_t h = v.size();
        for (auto x : v) {
          h ^= std::size_t(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
      }
    };

    // All curried maps of all operations, duplicates removed, in order of
    // first occurrence (operation-major, then parameter).
    inline std::vector<UnaryMap> distinct_curried_maps(BinaryAlgebra const& A) {
      std::vector<UnaryMap>                             out;
      std::unordered_set<UnaryMap, UnaryMapHash>        seen;
      for (auto const& op : A.ops()) {
        for (element_type x = 0; x < A.size(); ++x) {
          auto f = op.curried(x);
          if (seen.insert(f).second) {
            out.push_back(std::move(f));
          }
        }
      }
      return out;
    }

    // One round of signature refinement of P against the maps in sigma.
    inline Partition refine_with(std::vector<UnaryMap> const& sigma,
                                 Partition const&             P) {
      std::size_t const n = P.size();
      std::unordered_map<std::vector<element_type>, element_type, VectorHash>
                                labels;
      std::vector<element_type> out(n);
      std::vector<element_type> sig(sigma.size() + 1);
      for (element_type a = 0; a < n; ++a) {
        sig[0] = P.class_of(a);
        for (std::size_t i = 0; i < sigma.size(); ++i) {
          sig[i + 1] = P.class_of(sigma[i](a));
        }
        auto [it, inserted] = labels.try_emplace(sig, element_type(labels.size()));
        out[a]              = it->second;
      }
      return Partition::from_labels(out);
    }
  }  // namespace detail

  // x ~ y iff every operation has the same curried map at x and at y.
  inline Partition sim(BinaryAlgebra const& A) {
    std::size_t const n = A.size();
    std::unordered_map<std::vector<element_type>, element_type, detail::VectorHash>
                              labels;
    std::vector<element_type> out(n);
    std::vector<element_type> key;
    key.reserve(n * A.number_of_ops());
    for (element_type x = 0; x < n; ++x) {
      key.clear();
      for (auto const& op : A.ops()) {
        for (element_type z = 0; z < n; ++z) {
          key.push_back(op.curried_at(x, z));
        }
      }
      auto [it, inserted] = labels.try_emplace(key, element_type(labels.size()));
      out[x]              = it->second;
    }
    return Partition::from_labels(out);
  }

  // a, b stay together iff they are P-related and every curried map sends
  // them to P-related elements.
  inline Partition refine_step(BinaryAlgebra const& A, Partition const& P) {
    detail::check_same_size(A, P);
    return detail::refine_with(detail::distinct_curried_maps(A), P);
  }

  struct RefinementTrace {
    // ~_0 = sim, ~_1, ..., ending with two equal partitions.
    std::vector<Partition> steps;
    // Number of proper refinements.
    std::size_t rounds = 0;
  };

  struct MaxCongruence {
    Partition       congruence;
    RefinementTrace trace;
  };

  // The largest congruence contained in sim(A), by iterating refine_step
  // from sim(A) until it stabilises.
  inline MaxCongruence max_congruence_below_sim(BinaryAlgebra const& A) {
    auto const      sigma = detail::distinct_curried_maps(A);
    RefinementTrace trace;
    trace.steps.push_back(sim(A));
    while (true) {
      auto next = detail::refine_with(sigma, trace.steps.back());
      if (!next.refines(trace.steps.back())) {
        throw InternalError("refinement step is not monotone");
      }
      bool const fixed = next == trace.steps.back();
      trace.steps.push_back(std::move(next));
      if (fixed) {
        break;
      }
      ++trace.rounds;
      // Each proper step adds a class, so at most n - 1 of them.
      if (trace.rounds >= A.size()) {
        throw InternalError("refinement did not stabilise within n - 1 rounds");
      }
    }
    auto congruence = trace.steps.back();
    if (!is_congruence(A, congruence)) {
      throw InternalError("refinement fixpoint is not a congruence");
    }
    return {std::move(congruence), std::move(trace)};
  }

  inline BinaryAlgebra retract(BinaryAlgebra const& A) {
    return quotient(A, max_congruence_below_sim(A).congruence);
  }

  struct RetractTower {
    enum class Status {
      singleton_reached,
      stabilized_above_one,
      // max_levels was hit before either of the above.
      truncated
    };

    std::vector<BinaryAlgebra> levels;
    std::vector<std::size_t>   sizes;
    Status                     status = Status::truncated;

    // For singleton_reached: index of the singleton level. For
    // stabilized_above_one: the stable size.
    std::size_t value = 0;
  };

  inline char const* to_string(RetractTower::Status s) {
    switch (s) {
      case RetractTower::Status::singleton_reached:
        return "singleton_reached";
      case RetractTower::Status::stabilized_above_one:
        return "stabilized_above_one";
      default:
        return "truncated";
    }
  }

  // Iterates retract. A level whose retract has the same size is
  // irretractable and ends the tower; the repeated level is recorded. With
  // max_levels = 0 the bound is the carrier size, which always suffices.
  inline RetractTower retract_tower(BinaryAlgebra const& A,
                                    std::size_t          max_levels = 0) {
    if (max_levels == 0) {
      max_levels = A.size();
    }
    RetractTower tower;
    tower.levels.push_back(A);
    tower.sizes.push_back(A.size());
    while (true) {
      auto const& cur = tower.levels.back();
      if (cur.size() == 1) {
        tower.status = RetractTower::Status::singleton_reached;
        tower.value  = tower.levels.size() - 1;
        return tower;
      }
      if (tower.levels.size() > max_levels) {
        tower.status = RetractTower::Status::truncated;
        return tower;
      }
      auto next = retract(cur);
      auto size = next.size();
      tower.levels.push_back(std::move(next));
      tower.sizes.push_back(size);
      if (size == tower.sizes[tower.sizes.size() - 2]) {
        tower.status = RetractTower::Status::stabilized_above_one;
        tower.value  = size;
        return tower;
      }
    }
  }

  // Either the least k with Ret^k a singleton, or the size at which the
  // tower stabilises above one element.
  struct MplResult {
    std::optional<std::size_t> level;
    std::size_t                stabilized_size = 0;

    bool is_finite() const noexcept {
      return level.has_value();
    }

    bool at_most(std::size_t k) const noexcept {
      return level && *level <= k;
    }

    friend bool operator==(MplResult const&, MplResult const&) = default;
  };

  inline std::string to_string(MplResult const& m) {
    if (m.level) {
      return "mpl=" + std::to_string(*m.level);
    }
    return "irretractable, size " + std::to_string(m.stabilized_size);
  }

  inline MplResult multipermutation_level(BinaryAlgebra const& A) {
    auto tower = retract_tower(A);
    if (tower.status == RetractTower::Status::singleton_reached) {
      return {tower.value, 1};
    }
    if (tower.status == RetractTower::Status::stabilized_above_one) {
      return {std::nullopt, tower.value};
    }
    throw InternalError("retract tower did not terminate within n levels");
  }

}  // namespace ybe

#endif  // YBE_RETRACTION_HPP
