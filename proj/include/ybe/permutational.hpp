#ifndef YBE_PERMUTATIONAL_HPP
#define YBE_PERMUTATIONAL_HPP

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "retraction.hpp"
#include "solution.hpp"

namespace ybe {

  ////////////////////////////////////////////////////////////////////////
  // Transformation monoids
  ////////////////////////////////////////////////////////////////////////

  // All curried maps gamma_x, duplicates removed, in order of first
  // occurrence (operation-major, then parameter).
  inline std::vector<UnaryMap> sigma_generators(BinaryAlgebra const& A) {
    return detail::distinct_curried_maps(A);
  }

  constexpr std::size_t default_monoid_cap = 1'000'000;

  // The image of the free monoid on the generators in the full
  // transformation monoid. Elements are in breadth-first order by word
  // length: the identity first, then the generators, then longer products.
  class TransformationMonoid {
   public:
    TransformationMonoid() = default;

    TransformationMonoid(std::size_t           n,
                         std::vector<UnaryMap> generators,
                         std::size_t           cap)
        : _n(n), _generators(std::move(generators)), _cap(cap) {
      if (cap == 0) {
        throw InvalidParameter("monoid cap must be at least 1");
      }
      add(UnaryMap::identity(n));
      for (std::size_t i = 0; i < _elements.size(); ++i) {
        for (auto const& g : _generators) {
          add(g.after(_elements[i]));
        }
      }
    }

    std::size_t degree() const noexcept {
      return _n;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    std::size_t cap() const noexcept {
      return _cap;
    }

    std::vector<UnaryMap> const& elements() const noexcept {
      return _elements;
    }

    std::vector<UnaryMap> const& generators() const noexcept {
      return _generators;
    }

    bool contains(UnaryMap const& f) const {
      return _index.count(f) != 0;
    }

    std::optional<std::size_t> index_of(UnaryMap const& f) const {
      auto it = _index.find(f);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

   private:
    void add(UnaryMap f) {
      if (_index.count(f)) {
        return;
      }
      if (_elements.size() == _cap) {
        throw CapExceeded(_cap);
      }
      _index.emplace(f, _elements.size());
      _elements.push_back(std::move(f));
    }

    std::size_t                                            _n = 0;
    std::vector<UnaryMap>                                  _generators;
    std::size_t                                            _cap = 0;
    std::vector<UnaryMap>                                  _elements;
    std::unordered_map<UnaryMap, std::size_t, UnaryMapHash> _index;
  };

  // Left multiplication by generators is enough: every product of
  // generators is reached by prepending one generator at a time.
  inline TransformationMonoid monoid_closure(std::vector<UnaryMap> gens,
                                             std::size_t n,
                                             std::size_t cap
                                             = default_monoid_cap) {
    for (auto const& g : gens) {
      if (g.degree() != n) {
        throw InvalidInput("generator degree does not match carrier size");
      }
    }
    return TransformationMonoid(n, std::move(gens), cap);
  }

  ////////////////////////////////////////////////////////////////////////
  // Towers
  ////////////////////////////////////////////////////////////////////////

  // The data of a tower expression of height k. levels[0] is the innermost
  // level, levels[k - 1] the outermost. Level i maps the previous value v to
  // word(gamma_v(z_i)) where gamma is the operation at that level.
  struct TowerSpec {
    struct Level {
      UnaryMap    word;
      std::size_t op = 0;

      friend bool operator==(Level const&, Level const&) = default;
    };

    std::vector<Level> levels;

    std::size_t height() const noexcept {
      return levels.size();
    }

    friend bool operator==(TowerSpec const&, TowerSpec const&) = default;
  };

  inline element_type omega_eval(BinaryAlgebra const&             A,
                                 TowerSpec const&                 spec,
                                 element_type                     start,
                                 std::vector<element_type> const& args) {
    if (args.size() != spec.height()) {
      throw InvalidInput("tower of height " + std::to_string(spec.height())
                         + " needs " + std::to_string(spec.height())
                         + " arguments, got " + std::to_string(args.size()));
    }
    element_type value = start;
    for (std::size_t i = 0; i < spec.height(); ++i) {
      auto const& lvl = spec.levels[i];
      if (lvl.op >= A.number_of_ops() || lvl.word.degree() != A.size()) {
        throw InvalidInput("tower level " + std::to_string(i)
                           + " does not fit the algebra");
      }
      value = lvl.word(A.op(lvl.op).curried_at(value, args[i]));
    }
    return value;
  }

  ////////////////////////////////////////////////////////////////////////
  // k-permutational
  ////////////////////////////////////////////////////////////////////////

  struct PermutationalWitness {
    TowerSpec                 spec;
    std::vector<element_type> args;
    element_type              y = 0;
    element_type              z = 0;
    // Tower values at the two starts; always different.
    element_type value_y = 0;
    element_type value_z = 0;
    // Monoid index of each level's word (0 is the identity).
    std::vector<std::size_t> word_indices;

    friend bool operator==(PermutationalWitness const&,
                           PermutationalWitness const&)
        = default;
  };

  struct PermutationalResult {
    bool                                holds = true;
    std::optional<PermutationalWitness> witness;
    // Number of words the check ranged over (1 for the no-words variant).
    std::size_t monoid_size = 1;
  };

  struct PermutationalOptions {
    std::size_t monoid_cap = default_monoid_cap;
    // Also quantify the outermost word. Never changes the answer, since a
    // map cannot separate equal values.
    bool quantify_outer_word = false;
  };

  namespace detail {

    // A single tower level, fixed except for the incoming value.
    struct LevelMove {
      std::size_t  op;
      std::size_t  word;
      element_type arg;
    };

    // Decides whether every tower of height k, with words drawn from
    // `words`, ignores its start element. The search space is ordered
    // lexicographically by
    //   (y, z, op_1, word_1, x_1, ..., op_k, word_k, x_k)
    // with y < z, operations by index, words by their position in `words`
    // and arguments by value; the reported witness is the first one in
    // that order.
    //
    // Instead of enumerating towers the check propagates pairs of values:
    // feasible[L] holds the pairs (a, b) from which levels L..k can still
    // end in two different values.
    inline PermutationalResult
    tower_check(BinaryAlgebra const&         A,
                std::size_t                  k,
                std::vector<UnaryMap> const& words,
                bool                         quantify_outer_word) {
      std::size_t const n = A.size();
      PermutationalResult res;
      res.monoid_size = words.size();
      if (k == 0) {
        res.holds = n == 1;
        if (!res.holds) {
          res.witness = PermutationalWitness{{}, {}, 0, 1, 0, 1, {}};
        }
        return res;
      }
      // step[op][x][v] = gamma_v(x)
      std::vector<std::vector<std::vector<element_type>>> step(
          A.number_of_ops(),
          std::vector<std::vector<element_type>>(n,
                                                 std::vector<element_type>(n)));
      for (std::size_t o = 0; o < A.number_of_ops(); ++o) {
        for (element_type x = 0; x < n; ++x) {
          for (element_type v = 0; v < n; ++v) {
            step[o][x][v] = A.op(o).curried_at(v, x);
          }
        }
      }
      auto words_at = [&](std::size_t level) {
        return (level + 1 == k && !quantify_outer_word) ? std::size_t(1)
                                                        : words.size();
      };
      auto apply_move = [&](LevelMove const& m, element_type v) {
        return words[m.word](step[m.op][m.arg][v]);
      };

      // feasible[L][a * n + b], L = 0..k
      std::vector<std::vector<char>> feasible(k + 1,
                                              std::vector<char>(n * n, 0));
      for (element_type a = 0; a < n; ++a) {
        for (element_type b = 0; b < n; ++b) {
          feasible[k][a * n + b] = a != b;
        }
      }
      for (std::size_t L = k; L-- > 0;) {
        auto&       cur  = feasible[L];
        auto const& next = feasible[L + 1];
        for (std::size_t o = 0; o < A.number_of_ops(); ++o) {
          for (std::size_t w = 0; w < words_at(L); ++w) {
            for (element_type x = 0; x < n; ++x) {
              LevelMove m{o, w, x};
              std::vector<element_type> img(n);
              for (element_type v = 0; v < n; ++v) {
                img[v] = apply_move(m, v);
              }
              for (element_type a = 0; a < n; ++a) {
                for (element_type b = a + 1; b < n; ++b) {
                  if (!cur[a * n + b] && next[img[a] * n + img[b]]) {
                    cur[a * n + b] = cur[b * n + a] = 1;
                  }
                }
              }
            }
          }
        }
      }

      for (element_type y = 0; y < n; ++y) {
        for (element_type z = y + 1; z < n; ++z) {
          if (!feasible[0][y * n + z]) {
            continue;
          }
          PermutationalWitness wit;
          wit.y          = y;
          wit.z          = z;
          element_type a = y, b = z;
          for (std::size_t L = 0; L < k; ++L) {
            bool found = false;
            for (std::size_t o = 0; !found && o < A.number_of_ops(); ++o) {
              for (std::size_t w = 0; !found && w < words_at(L); ++w) {
                for (element_type x = 0; !found && x < n; ++x) {
                  LevelMove m{o, w, x};
                  auto      na = apply_move(m, a);
                  auto      nb = apply_move(m, b);
                  if (feasible[L + 1][na * n + nb]) {
                    wit.spec.levels.push_back({words[w], o});
                    wit.word_indices.push_back(w);
                    wit.args.push_back(x);
                    a     = na;
                    b     = nb;
                    found = true;
                  }
                }
              }
            }
            if (!found) {
              throw InternalError("tower witness reconstruction failed");
            }
          }
          wit.value_y = a;
          wit.value_z = b;
          res.holds   = false;
          res.witness = std::move(wit);
          return res;
        }
      }
      res.holds = true;
      return res;
    }
  }  // namespace detail

  // Whether every tower of height k, with words from the monoid generated
  // by all curried maps, takes the same value at every start element.
  // Words act only through their image maps, so ranging over the monoid
  // is exact; monoid_cap only bounds memory.
  inline PermutationalResult
  is_k_permutational(BinaryAlgebra const&        A,
                     std::size_t                 k,
                     PermutationalOptions const& opts = {}) {
    if (k == 0) {
      return detail::tower_check(A, 0, {UnaryMap::identity(A.size())}, false);
    }
    auto M = monoid_closure(sigma_generators(A), A.size(), opts.monoid_cap);
    return detail::tower_check(A, k, M.elements(), opts.quantify_outer_word);
  }

  // The same check with every word fixed to the identity.
  inline PermutationalResult is_k_permutational_nowords(BinaryAlgebra const& A,
                                                        std::size_t k) {
    return detail::tower_check(A, k, {UnaryMap::identity(A.size())}, false);
  }

  ////////////////////////////////////////////////////////////////////////
  // Level-two equations
  ////////////////////////////////////////////////////////////////////////

  // For all x, y, z:
  //   s_{s_x(z)} = s_{s_y(z)},  t_{t_x(z)} = t_{t_y(z)},
  //   s_{t_x(z)} = s_{t_y(z)},  t_{s_x(z)} = t_{s_y(z)}.
  inline bool mpl2_equations_hold(Solution const& S) {
    if (!check_braid_direct(S)) {
      throw NotASolution("tables do not satisfy the braid relation");
    }
    auto const n = element_type(S.size());
    // Ids of the distinct maps s_v (rows of sigma) and t_v (columns of tau).
    std::vector<element_type> s_id(n), t_id(n);
    {
      std::unordered_map<std::vector<element_type>,
                         element_type,
                         detail::VectorHash>
          srows, tcols;
      for (element_type v = 0; v < n; ++v) {
        std::vector<element_type> row(n), col(n);
        for (element_type u = 0; u < n; ++u) {
          row[u] = S.sigma(v, u);
          col[u] = S.tau(u, v);
        }
        s_id[v] = srows.try_emplace(row, element_type(srows.size())).first->second;
        t_id[v] = tcols.try_emplace(col, element_type(tcols.size())).first->second;
      }
    }
    auto s = [&S](element_type a, element_type b) { return S.sigma(a, b); };
    auto t = [&S](element_type a, element_type b) { return S.tau(b, a); };
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = x + 1; y < n; ++y) {
        for (element_type z = 0; z < n; ++z) {
          if (s_id[s(x, z)] != s_id[s(y, z)] || t_id[t(x, z)] != t_id[t(y, z)]
              || s_id[t(x, z)] != s_id[t(y, z)]
              || t_id[s(x, z)] != t_id[s(y, z)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace ybe

#endif  // YBE_PERMUTATIONAL_HPP
