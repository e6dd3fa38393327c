#ifndef YBE_ENUMERATION_HPP
#define YBE_ENUMERATION_HPP

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "retraction.hpp"
#include "solution.hpp"

namespace ybe {

  // Largest carrier for which exhaustive enumeration is offered.
  constexpr std::size_t exhaustive_bound = 4;

  ////////////////////////////////////////////////////////////////////////
  // Canonical forms
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::vector<element_type>
    relabeled_tables(Solution const& S, std::vector<element_type> const& p) {
      std::size_t const         n = S.size();
      std::vector<element_type> out(2 * n * n);
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          out[p[x] * n + p[y]]         = p[S.sigma(x, y)];
          out[n * n + p[x] * n + p[y]] = p[S.tau(x, y)];
        }
      }
      return out;
    }

    inline std::vector<element_type> concatenated_tables(Solution const& S) {
      auto out = S.sigma_table();
      out.insert(out.end(), S.tau_table().begin(), S.tau_table().end());
      return out;
    }
  }  // namespace detail

  // Lexicographically least concatenation (sigma, tau) over all n!
  // relabelings.
  inline Solution canonical_form(Solution const& S) {
    std::size_t const         n = S.size();
    std::vector<element_type> p(n);
    std::iota(p.begin(), p.end(), element_type(0));
    auto best = detail::concatenated_tables(S);
    do {
      auto t = detail::relabeled_tables(S, p);
      if (t < best) {
        best = std::move(t);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return Solution(n,
                    {best.begin(), best.begin() + n * n},
                    {best.begin() + n * n, best.end()});
  }

  inline bool is_canonical(Solution const& S) {
    auto const C = canonical_form(S);
    return C.sigma_table() == S.sigma_table() && C.tau_table() == S.tau_table();
  }

  inline std::size_t automorphism_count(Solution const& S) {
    std::size_t const         n = S.size();
    std::vector<element_type> p(n);
    std::iota(p.begin(), p.end(), element_type(0));
    auto const  self  = detail::concatenated_tables(S);
    std::size_t count = 0;
    do {
      count += detail::relabeled_tables(S, p) == self;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
  }

  ////////////////////////////////////////////////////////////////////////
  // Backtracking search
  ////////////////////////////////////////////////////////////////////////

  // Fills sigma and tau cell by cell. Cells are visited in blocks of
  // increasing max(x, y), row-major within a block, sigma before tau at each
  // position, so that identities among small elements are decided early.
  //
  // Every instance of the three birack identities (one per identity and
  // triple) is evaluated in a fixed order until it either completes or hits
  // an unassigned cell; in the latter case it waits on that cell and is only
  // looked at again once the cell is assigned. A completed instance that
  // fails prunes the branch.
  class SolutionSearch {
   public:
    static constexpr element_type unset = element_type(-1);

    struct Cell {
      bool         tau;
      element_type x;
      element_type y;
    };

    explicit SolutionSearch(std::size_t n)
        : _n(n),
          _sigma(n * n, unset),
          _tau(n * n, unset),
          _sigma_cell(n * n),
          _tau_cell(n * n) {
      if (n == 0 || n > 64) {
        throw InvalidParameter("search carrier must have 1 to 64 elements");
      }
      for (element_type m = 0; m < n; ++m) {
        for (element_type x = 0; x <= m; ++x) {
          for (element_type y = 0; y <= m; ++y) {
            if (std::max(x, y) == m) {
              _sigma_cell[x * n + y] = element_type(_cells.size());
              _cells.push_back({false, x, y});
              _tau_cell[x * n + y] = element_type(_cells.size());
              _cells.push_back({true, x, y});
            }
          }
        }
      }
      _waiting.resize(_cells.size());
      reset();
    }

    std::size_t size() const noexcept {
      return _n;
    }

    std::vector<Cell> const& cells() const noexcept {
      return _cells;
    }

    // Visits every solution in lexicographic order of the cell values (in
    // fill order). f(sigma, tau) returns false to stop early. Returns false
    // if stopped.
    template <typename Func>
    bool for_each(Func&& f) {
      reset();
      bool const cont = dfs(0, f);
      reset();
      return cont;
    }

    // Visits every solution extending the given values of the first
    // prefix.size() cells, or none if the prefix is inconsistent.
    template <typename Func>
    bool for_each_with_prefix(std::vector<element_type> const& prefix,
                              Func&&                           f) {
      reset();
      for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (!assign(i, prefix[i])) {
          reset();
          return true;
        }
      }
      bool const cont = dfs(prefix.size(), f);
      reset();
      return cont;
    }

    // First solution of a depth-first search that tries values in random
    // order, or nullopt if node_budget nodes are visited first.
    template <typename Rng>
    std::optional<Solution> random_solution(Rng& rng, std::size_t node_budget) {
      reset();
      std::size_t             nodes = 0;
      std::optional<Solution> found;
      random_dfs(0, rng, nodes, node_budget, found);
      reset();
      return found;
    }

    // True iff no fully determined identity instance fails, for the current
    // (possibly partial) tables. Independent of the waiting lists.
    bool consistent() const {
      auto const n = element_type(_n);
      auto       s = [this](element_type a, element_type b) {
        return (a == unset || b == unset) ? unset : _sigma[a * _n + b];
      };
      // t(a, b) = tau_a(b)
      auto t = [this](element_type a, element_type b) {
        return (a == unset || b == unset) ? unset : _tau[b * _n + a];
      };
      auto clash = [](element_type l, element_type r) {
        return l != unset && r != unset && l != r;
      };
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          auto const sxy = s(x, y);
          auto const tyx = t(y, x);
          for (element_type z = 0; z < n; ++z) {
            auto const syz = s(y, z);
            auto const tzy = t(z, y);
            if (clash(s(x, syz), s(sxy, s(tyx, z)))
                || clash(t(s(tyx, z), sxy), s(t(syz, x), tzy))
                || clash(t(x, t(y, z)), t(t(x, y), t(s(y, x), z)))) {
              return false;
            }
          }
        }
      }
      return true;
    }

   private:
    // Instance encoding: identity * n^3 + (x * n + y) * n + z.
    using instance    = std::uint32_t;
    using domain_mask = std::uint64_t;

    static constexpr element_type ok = element_type(-1);

    void reset() {
      std::fill(_sigma.begin(), _sigma.end(), unset);
      std::fill(_tau.begin(), _tau.end(), unset);
      for (auto& w : _waiting) {
        w.clear();
      }
      _pushed.clear();
      _undo.clear();
      _domain_trail.clear();
      _domain_undo.clear();
      auto const full = _n == 64 ? ~domain_mask(0)
                                 : (domain_mask(1) << _n) - 1;
      _domain.assign(_cells.size(), full);
      auto const n = element_type(_n);
      for (instance i = 0; i < 3 * n * n * n; ++i) {
        auto const blocked = evaluate(i);
        assert(blocked != ok);
        _waiting[blocked].push_back(i);
        restrict_domain(blocked, i);
      }
      _domain_trail.clear();
    }

    element_type& slot(std::size_t i) {
      auto const& c = _cells[i];
      return c.tau ? _tau[c.x * _n + c.y] : _sigma[c.x * _n + c.y];
    }

    // Evaluates an instance. Returns `ok` if it completes and holds, the
    // index of the first unassigned cell it reads if it is blocked, and
    // cells().size() if it completes and fails.
    element_type evaluate(instance i) const {
      auto const   n     = element_type(_n);
      auto const   z     = element_type(i % n);
      auto const   y     = element_type((i / n) % n);
      auto const   x     = element_type((i / (n * n)) % n);
      auto const   which = i / (n * n * n);
      element_type block = ok;
      auto s = [&](element_type a, element_type b) -> element_type {
        if (block != ok) {
          return 0;
        }
        auto v = _sigma[a * n + b];
        if (v == unset) {
          block = _sigma_cell[a * n + b];
          return 0;
        }
        return v;
      };
      auto t = [&](element_type a, element_type b) -> element_type {
        if (block != ok) {
          return 0;
        }
        auto v = _tau[b * n + a];
        if (v == unset) {
          block = _tau_cell[b * n + a];
          return 0;
        }
        return v;
      };
      bool holds;
      if (which == 0) {
        holds = s(x, s(y, z)) == s(s(x, y), s(t(y, x), z));
      } else if (which == 1) {
        holds = t(s(t(y, x), z), s(x, y)) == s(t(s(y, z), x), t(z, y));
      } else {
        holds = t(x, t(y, z)) == t(t(x, y), t(s(y, x), z));
      }
      if (block != ok) {
        return block;
      }
      return holds ? ok : element_type(_cells.size());
    }

    // Assigns an unassigned cell and re-examines
    // the instances waiting on it. An instance that becomes blocked on a
    // later cell also trims that cell's domain to the values that do not
    // make it fail at once. Returns false on a failed instance or an empty
    // domain; the assignment is kept either way and must be undone with
    // unassign.
    bool assign(std::size_t cell, element_type val) {
      slot(cell) = val;
      _undo.push_back(_pushed.size());
      _domain_undo.push_back(_domain_trail.size());
      for (auto i : _waiting[cell]) {
        auto const r = evaluate(i);
        if (r == ok) {
          continue;
        }
        if (r == _cells.size()) {
          return false;
        }
        _waiting[r].push_back(i);
        _pushed.push_back(r);
        if (!restrict_domain(r, i)) {
          return false;
        }
      }
      return true;
    }

    bool restrict_domain(element_type c, instance i) {
      auto const old  = _domain[c];
      auto       mask = old;
      auto&      cell = slot(c);
      for (element_type v = 0; v < _n; ++v) {
        if (mask >> v & 1) {
          cell = v;
          if (evaluate(i) == _cells.size()) {
            mask &= ~(domain_mask(1) << v);
          }
        }
      }
      cell = unset;
      if (mask != old) {
        _domain_trail.emplace_back(c, old);
        _domain[c] = mask;
      }
      return mask != 0;
    }

    void unassign(std::size_t cell) {
      slot(cell) = unset;
      auto const mark = _undo.back();
      _undo.pop_back();
      while (_pushed.size() > mark) {
        _waiting[_pushed.back()].pop_back();
        _pushed.pop_back();
      }
      auto const dmark = _domain_undo.back();
      _domain_undo.pop_back();
      while (_domain_trail.size() > dmark) {
        _domain[_domain_trail.back().first] = _domain_trail.back().second;
        _domain_trail.pop_back();
      }
    }

    template <typename Func>
    bool dfs(std::size_t depth, Func& f) {
      if (depth == _cells.size()) {
        return f(std::as_const(_sigma), std::as_const(_tau));
      }
      for (element_type val = 0; val < _n; ++val) {
        if (!(_domain[depth] >> val & 1)) {
          continue;
        }
        bool const good = assign(depth, val);
        bool const cont = !good || dfs(depth + 1, f);
        unassign(depth);
        if (!cont) {
          return false;
        }
      }
      return true;
    }

    // Random search branches on a cell with the fewest remaining values.
    template <typename Rng>
    bool random_dfs(std::size_t              depth,
                    Rng&                     rng,
                    std::size_t&             nodes,
                    std::size_t              budget,
                    std::optional<Solution>& found) {
      if (depth == _cells.size()) {
        found.emplace(_n, _sigma, _tau);
        return true;
      }
      if (++nodes > budget) {
        return true;
      }
      std::size_t cell = _cells.size();
      int         best = 65;
      for (std::size_t c = 0; c < _cells.size(); ++c) {
        if (slot(c) == unset && std::popcount(_domain[c]) < best) {
          best = std::popcount(_domain[c]);
          cell = c;
        }
      }
      std::vector<element_type> order(_n);
      std::iota(order.begin(), order.end(), element_type(0));
      std::shuffle(order.begin(), order.end(), rng);
      for (auto val : order) {
        if (!(_domain[cell] >> val & 1)) {
          continue;
        }
        bool const good = assign(cell, val);
        bool const stop
            = good && random_dfs(depth + 1, rng, nodes, budget, found);
        unassign(cell);
        if (stop) {
          return true;
        }
      }
      return nodes > budget;
    }

    std::size_t               _n;
    std::vector<Cell>         _cells;
    std::vector<element_type> _sigma;
    std::vector<element_type> _tau;
    std::vector<element_type> _sigma_cell;
    std::vector<element_type> _tau_cell;
    // _waiting[c]: instances blocked on cell c.
    std::vector<std::vector<instance>> _waiting;
    // Cells whose waiting list was appended to, with per-depth marks.
    std::vector<element_type> _pushed;
    std::vector<std::size_t>  _undo;
    // Bit v of _domain[c]: value v is still possible for cell c.
    std::vector<domain_mask>                          _domain;
    std::vector<std::pair<element_type, domain_mask>> _domain_trail;
    std::vector<std::size_t>                          _domain_undo;
  };

  namespace detail {
    inline void check_exhaustive(std::size_t n) {
      if (n > exhaustive_bound) {
        throw CarrierTooLarge(n, exhaustive_bound);
      }
      if (n == 0) {
        throw InvalidParameter("carrier must be nonempty");
      }
    }

    // Shards are the assignments of the first few cells, in lexicographic
    // order, so concatenating shard outputs reproduces sequential order.
    inline std::vector<std::vector<element_type>> shard_prefixes(std::size_t n) {
      std::size_t const depth = std::min<std::size_t>(2 * n * n, 2);
      std::vector<std::vector<element_type>> out;
      std::vector<element_type>              cur(depth, 0);
      while (true) {
        out.push_back(cur);
        std::size_t i = depth;
        while (i > 0 && cur[i - 1] + 1 == n) {
          cur[--i] = 0;
        }
        if (i == 0) {
          return out;
        }
        ++cur[i - 1];
      }
    }

    // Runs visit(acc, sigma, tau) for every solution, one accumulator per
    // shard, shards in parallel. Returns accumulators in shard order.
    template <typename Acc, typename Visit>
    std::vector<Acc>
    run_sharded(std::size_t n, std::size_t threads, Visit const& visit) {
      auto const       prefixes = shard_prefixes(n);
      std::vector<Acc> accs(prefixes.size());
      parallel_for(prefixes.size(), threads, [&](std::size_t i) {
        SolutionSearch search(n);
        search.for_each_with_prefix(
            prefixes[i], [&](auto const& sigma, auto const& tau) {
              visit(accs[i], sigma, tau);
              return true;
            });
      });
      return accs;
    }
  }  // namespace detail

  struct EnumerationOptions {
    bool        up_to_iso = false;
    std::size_t threads   = 1;
  };

  // All solutions on {0, ..., n-1}, n <= exhaustive_bound, in search order
  // (lexicographic in fill order). With up_to_iso only canonical forms are
  // kept.
  inline std::vector<Solution>
  enumerate_solutions(std::size_t n, EnumerationOptions const& opts = {}) {
    detail::check_exhaustive(n);
    auto accs = detail::run_sharded<std::vector<Solution>>(
        n, opts.threads, [&](auto& acc, auto const& sigma, auto const& tau) {
          Solution S(n, sigma, tau);
          if (!opts.up_to_iso || is_canonical(S)) {
            acc.push_back(std::move(S));
          }
        });
    std::vector<Solution> out;
    for (auto& a : accs) {
      std::move(a.begin(), a.end(), std::back_inserter(out));
    }
    return out;
  }

  inline std::size_t count_solutions(std::size_t n, std::size_t threads = 1) {
    detail::check_exhaustive(n);
    auto accs = detail::run_sharded<std::size_t>(
        n, threads, [](auto& acc, auto const&, auto const&) { ++acc; });
    return std::accumulate(accs.begin(), accs.end(), std::size_t(0));
  }

  // Random solutions from restarted randomised depth-first searches.
  // Not uniform; duplicates possible. Usable for any n.
  inline std::vector<Solution> sample_solutions(std::size_t   n,
                                                std::size_t   count,
                                                std::uint64_t seed,
                                                std::size_t   node_budget
                                                = 1000) {
    std::mt19937_64       rng(seed);
    SolutionSearch        search(n);
    std::vector<Solution> out;
    std::size_t           failures = 0;
    while (out.size() < count) {
      auto S = search.random_solution(rng, node_budget);
      if (S) {
        out.push_back(std::move(*S));
      } else if (++failures > 100 * (count + 1)) {
        break;
      }
    }
    return out;
  }

  // Uniformly random table pairs that happen to satisfy the braid relation.
  inline std::vector<Solution> sample_random_tables(std::size_t   n,
                                                    std::size_t   trials,
                                                    std::uint64_t seed) {
    std::mt19937_64                             rng(seed);
    std::uniform_int_distribution<element_type> dist(0, element_type(n - 1));
    std::vector<Solution>                       out;
    for (std::size_t i = 0; i < trials; ++i) {
      std::vector<element_type> sigma(n * n), tau(n * n);
      for (auto& v : sigma) {
        v = dist(rng);
      }
      for (auto& v : tau) {
        v = dist(rng);
      }
      Solution S(n, std::move(sigma), std::move(tau));
      if (check_braid_direct(S)) {
        out.push_back(std::move(S));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  class SearchPredicate {
   public:
    enum class Kind {
      is_solution,
      degenerate,
      nondegenerate,
      involutive,
      irretractable,
      sim_not_congruence,
      mpl_equals,
      mpl_at_most
    };

    SearchPredicate() = default;

    explicit SearchPredicate(Kind kind, std::size_t k = 0)
        : _kind(kind), _k(k) {}

    // Accepts "name", "name(k)" or "name:k".
    static SearchPredicate parse(std::string const& text) {
      static std::map<std::string, Kind> const names
          = {{"is_solution", Kind::is_solution},
             {"degenerate", Kind::degenerate},
             {"nondegenerate", Kind::nondegenerate},
             {"involutive", Kind::involutive},
             {"irretractable", Kind::irretractable},
             {"sim_not_congruence", Kind::sim_not_congruence},
             {"mpl_equals", Kind::mpl_equals},
             {"mpl_at_most", Kind::mpl_at_most}};
      auto        cut  = text.find_first_of("(:");
      std::string name = text.substr(0, cut);
      auto        it   = names.find(name);
      if (it == names.end()) {
        throw InvalidInput("unknown predicate '" + text + "'");
      }
      bool const needs_k
          = it->second == Kind::mpl_equals || it->second == Kind::mpl_at_most;
      if (!needs_k) {
        if (cut != std::string::npos) {
          throw InvalidInput("predicate '" + name + "' takes no parameter");
        }
        return SearchPredicate(it->second);
      }
      if (cut == std::string::npos) {
        throw InvalidInput("predicate '" + name + "' needs a parameter");
      }
      auto arg = text.substr(cut + 1);
      if (text[cut] == '(') {
        if (arg.empty() || arg.back() != ')') {
          throw InvalidInput("malformed predicate '" + text + "'");
        }
        arg.pop_back();
      }
      if (arg.empty()
          || arg.find_first_not_of("0123456789") != std::string::npos) {
        throw InvalidInput("malformed predicate parameter in '" + text + "'");
      }
      return SearchPredicate(it->second, std::stoul(arg));
    }

    Kind kind() const noexcept {
      return _kind;
    }

    std::size_t parameter() const noexcept {
      return _k;
    }

    std::string name() const {
      switch (_kind) {
        case Kind::is_solution:
          return "is_solution";
        case Kind::degenerate:
          return "degenerate";
        case Kind::nondegenerate:
          return "nondegenerate";
        case Kind::involutive:
          return "involutive";
        case Kind::irretractable:
          return "irretractable";
        case Kind::sim_not_congruence:
          return "sim_not_congruence";
        case Kind::mpl_equals:
          return "mpl_equals(" + std::to_string(_k) + ")";
        default:
          return "mpl_at_most(" + std::to_string(_k) + ")";
      }
    }

    // Every predicate implies is_solution.
    bool operator()(Solution const& S) const {
      if (!check_braid_direct(S)) {
        return false;
      }
      switch (_kind) {
        case Kind::is_solution:
          return true;
        case Kind::degenerate:
          return classify(S).degenerate;
        case Kind::nondegenerate:
          return !classify(S).degenerate;
        case Kind::involutive:
          return classify(S).involutive;
        case Kind::irretractable:
          return max_congruence_below_sim(as_algebra(S))
              .congruence.is_identity();
        case Kind::sim_not_congruence: {
          auto A = as_algebra(S);
          return !is_congruence(A, sim(A));
        }
        case Kind::mpl_equals: {
          auto m = multipermutation_level(as_algebra(S));
          return m.level && *m.level == _k;
        }
        default:
          return multipermutation_level(as_algebra(S)).at_most(_k);
      }
    }

   private:
    Kind        _kind = Kind::is_solution;
    std::size_t _k    = 0;
  };

  struct SearchOptions {
    std::size_t limit = 10;
    // Candidates examined before the enumeration; kept if they are
    // solutions of the right size satisfying the predicate.
    std::vector<Solution> seeds;
    // If nonzero, draw this many random solutions instead of enumerating
    // (required above exhaustive_bound).
    std::size_t   samples  = 0;
    std::uint64_t rng_seed = 1;
  };

  inline std::vector<Solution> search(std::size_t            n,
                                      SearchPredicate const& pred,
                                      SearchOptions const&   opts = {}) {
    if (n == 0) {
      throw InvalidParameter("carrier must be nonempty");
    }
    std::vector<Solution> out;
    auto                  take = [&](Solution S) {
      if (out.size() >= opts.limit) {
        return false;
      }
      for (auto const& T : out) {
        if (T.sigma_table() == S.sigma_table()
            && T.tau_table() == S.tau_table()) {
          return true;
        }
      }
      if (pred(S)) {
        out.push_back(std::move(S));
      }
      return out.size() < opts.limit;
    };
    for (auto const& S : opts.seeds) {
      if (S.size() == n && !take(S)) {
        return out;
      }
    }
    if (opts.samples > 0) {
      for (auto& S : sample_solutions(n, opts.samples, opts.rng_seed)) {
        if (!take(std::move(S))) {
          break;
        }
      }
      return out;
    }
    if (n > exhaustive_bound) {
      if (!opts.seeds.empty()) {
        return out;
      }
      throw CarrierTooLarge(n, exhaustive_bound);
    }
    SolutionSearch s(n);
    s.for_each([&](auto const& sigma, auto const& tau) {
      return take(Solution(n, sigma, tau));
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Census
  ////////////////////////////////////////////////////////////////////////

  struct CensusReport {
    std::size_t n = 0;
    // n^(2 n^2), as a decimal string; every pair is covered by the search.
    std::string total_pairs_examined;
    std::size_t solutions_found     = 0;
    std::size_t solutions_up_to_iso = 0;
    // Predicate name -> number of solutions (all, and up to isomorphism).
    std::map<std::string, std::size_t> counts;
    std::map<std::string, std::size_t> counts_up_to_iso;
  };

  namespace detail {
    inline std::string decimal_power(std::size_t base, std::size_t exp) {
      std::vector<unsigned> digits{1};  // little endian
      for (std::size_t e = 0; e < exp; ++e) {
        unsigned carry = 0;
        for (auto& d : digits) {
          auto v = d * unsigned(base) + carry;
          d      = v % 10;
          carry  = v / 10;
        }
        while (carry) {
          digits.push_back(carry % 10);
          carry /= 10;
        }
      }
      std::string s;
      for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        s.push_back(char('0' + *it));
      }
      return s;
    }

    // Names of the predicates that hold for S (S is a solution).
    inline std::vector<std::string> census_labels(Solution const& S) {
      std::vector<std::string> out{"is_solution"};
      auto const               c = classify(S);
      out.push_back(c.degenerate ? "degenerate" : "nondegenerate");
      if (c.involutive) {
        out.push_back("involutive");
      }
      auto const A  = as_algebra(S);
      auto const mc = max_congruence_below_sim(A);
      if (mc.congruence.is_identity()) {
        out.push_back("irretractable");
      }
      if (!is_congruence(A, mc.trace.steps.front())) {
        out.push_back("sim_not_congruence");
      }
      auto const m = multipermutation_level(A);
      out.push_back(m.level ? "mpl_equals(" + std::to_string(*m.level) + ")"
                            : std::string("mpl_undefined"));
      return out;
    }
  }  // namespace detail

  inline CensusReport census(std::size_t n, std::size_t threads = 1) {
    detail::check_exhaustive(n);
    auto accs = detail::run_sharded<CensusReport>(
        n, threads, [n](auto& acc, auto const& sigma, auto const& tau) {
          Solution   S(n, sigma, tau);
          bool const canon = is_canonical(S);
          ++acc.solutions_found;
          acc.solutions_up_to_iso += canon;
          for (auto const& name : detail::census_labels(S)) {
            ++acc.counts[name];
            if (canon) {
              ++acc.counts_up_to_iso[name];
            }
          }
        });
    CensusReport out;
    out.n                    = n;
    out.total_pairs_examined = detail::decimal_power(n, 2 * n * n);
    for (auto const& a : accs) {
      out.solutions_found += a.solutions_found;
      out.solutions_up_to_iso += a.solutions_up_to_iso;
      for (auto const& [k, v] : a.counts) {
        out.counts[k] += v;
      }
      for (auto const& [k, v] : a.counts_up_to_iso) {
        out.counts_up_to_iso[k] += v;
      }
    }
    return out;
  }

}  // namespace ybe

#endif  // YBE_ENUMERATION_HPP
