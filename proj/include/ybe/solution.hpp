#ifndef YBE_SOLUTION_HPP
#define YBE_SOLUTION_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"

namespace ybe {

  // A pair of binary operations on {0, ..., n-1} defining the map
  // r(x, y) = (sigma_x(y), tau_y(x)).
  //
  // Both tables are stored with rows indexed by the first argument of r:
  //   sigma[x][y] = sigma_x(y),   tau[x][y] = tau_y(x).
  // Labels are for display only.
  class Solution {
   public:
    Solution() = default;

    Solution(std::size_t               n,
             std::vector<element_type> sigma,
             std::vector<element_type> tau,
             std::vector<std::string>  labels = {})
        : _n(n),
          _sigma(std::move(sigma)),
          _tau(std::move(tau)),
          _labels(std::move(labels)) {
      if (_n == 0) {
        throw InvalidInput("a solution needs a nonempty carrier");
      }
      check_table(_sigma, "sigma");
      check_table(_tau, "tau");
      if (!_labels.empty() && _labels.size() != _n) {
        throw InvalidInput("expected " + std::to_string(_n) + " labels, got "
                           + std::to_string(_labels.size()));
      }
      for (std::size_t i = 0; i < _labels.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          if (_labels[i] == _labels[j]) {
            throw InvalidInput("duplicate label \"" + _labels[i] + "\"");
          }
        }
      }
    }

    std::size_t size() const noexcept {
      return _n;
    }

    // sigma_x(y)
    element_type sigma(element_type x, element_type y) const {
      assert(x < _n && y < _n);
      return _sigma[x * _n + y];
    }

    // tau_y(x); note the argument order matches r(x, y).
    element_type tau(element_type x, element_type y) const {
      assert(x < _n && y < _n);
      return _tau[x * _n + y];
    }

    std::pair<element_type, element_type> r(element_type x,
                                            element_type y) const {
      return {sigma(x, y), tau(x, y)};
    }

    std::vector<element_type> const& sigma_table() const noexcept {
      return _sigma;
    }

    std::vector<element_type> const& tau_table() const noexcept {
      return _tau;
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::string label(element_type x) const {
      return _labels.empty() ? std::to_string(x) : _labels[x];
    }

    Solution with_labels(std::vector<std::string> labels) const {
      return Solution(_n, _sigma, _tau, std::move(labels));
    }

    friend bool operator==(Solution const&, Solution const&) = default;

   private:
    void check_table(std::vector<element_type> const& t,
                     char const*                      name) const {
      if (t.size() != _n * _n) {
        throw InvalidInput(std::string(name) + " has "
                           + std::to_string(t.size()) + " entries, expected "
                           + std::to_string(_n * _n));
      }
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= _n) {
          throw InvalidInput(std::string(name) + "["
                             + std::to_string(i / _n) + "]["
                             + std::to_string(i % _n) + "] = "
                             + std::to_string(t[i]) + " is out of range [0, "
                             + std::to_string(_n) + ")");
        }
      }
    }

    std::size_t               _n = 0;
    std::vector<element_type> _sigma;
    std::vector<element_type> _tau;
    std::vector<std::string>  _labels;
  };

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  // Evaluates both sides of the braid relation on every triple by literal
  // composition of r on X^3.
  inline bool check_braid_direct(Solution const& S) {
    using triple = std::array<element_type, 3>;
    auto r12     = [&S](triple t) {
      auto [a, b] = S.r(t[0], t[1]);
      return triple{a, b, t[2]};
    };
    auto r23 = [&S](triple t) {
      auto [b, c] = S.r(t[1], t[2]);
      return triple{t[0], b, c};
    };
    auto const n = element_type(S.size());
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        for (element_type z = 0; z < n; ++z) {
          triple t{x, y, z};
          if (r23(r12(r23(t))) != r12(r23(r12(t)))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  struct BirackIdentities {
    bool sigma_composition = true;  // s_x s_y = s_{s_x(y)} s_{t_y(x)}
    bool mixed             = true;  // t_{s_{t_y(x)}(z)} s_x(y) = s_{t_{s_y(z)}(x)} t_z(y)
    bool tau_composition   = true;  // t_x t_y = t_{t_x(y)} t_{s_y(x)}

    bool all() const noexcept {
      return sigma_composition && mixed && tau_composition;
    }

    friend bool operator==(BirackIdentities const&, BirackIdentities const&)
        = default;
  };

  namespace detail {
    // The three identities at one triple, written with curried maps:
    // s_x(y) = S.sigma(x, y) and t_y(x) = S.tau(x, y).
    inline bool sigma_identity_at(Solution const& S,
                                  element_type    x,
                                  element_type    y,
                                  element_type    z) {
      auto s = [&S](element_type a, element_type b) { return S.sigma(a, b); };
      auto t = [&S](element_type a, element_type b) { return S.tau(b, a); };
      return s(x, s(y, z)) == s(s(x, y), s(t(y, x), z));
    }

    inline bool mixed_identity_at(Solution const& S,
                                  element_type    x,
                                  element_type    y,
                                  element_type    z) {
      auto s = [&S](element_type a, element_type b) { return S.sigma(a, b); };
      auto t = [&S](element_type a, element_type b) { return S.tau(b, a); };
      return t(s(t(y, x), z), s(x, y)) == s(t(s(y, z), x), t(z, y));
    }

    inline bool tau_identity_at(Solution const& S,
                                element_type    x,
                                element_type    y,
                                element_type    z) {
      auto s = [&S](element_type a, element_type b) { return S.sigma(a, b); };
      auto t = [&S](element_type a, element_type b) { return S.tau(b, a); };
      return t(x, t(y, z)) == t(t(x, y), t(s(y, x), z));
    }
  }  // namespace detail

  inline BirackIdentities check_birack_identities(Solution const& S) {
    BirackIdentities out;
    auto const       n = element_type(S.size());
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        for (element_type z = 0; z < n; ++z) {
          out.sigma_composition
              = out.sigma_composition && detail::sigma_identity_at(S, x, y, z);
          out.mixed = out.mixed && detail::mixed_identity_at(S, x, y, z);
          out.tau_composition
              = out.tau_composition && detail::tau_identity_at(S, x, y, z);
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  struct Classification {
    bool left_nondegenerate  = false;
    bool right_nondegenerate = false;
    bool bijective           = false;
    bool involutive          = false;
    bool degenerate          = true;

    friend bool operator==(Classification const&, Classification const&)
        = default;
  };

  inline Classification classify(Solution const& S) {
    auto const     n = element_type(S.size());
    Classification c;
    c.left_nondegenerate  = true;
    c.right_nondegenerate = true;
    for (element_type x = 0; x < n; ++x) {
      std::vector<bool> srow(n, false), tcol(n, false);
      for (element_type y = 0; y < n; ++y) {
        if (srow[S.sigma(x, y)]) {
          c.left_nondegenerate = false;
        }
        srow[S.sigma(x, y)] = true;
        // tau_x as a map: y -> tau(y, x)
        if (tcol[S.tau(y, x)]) {
          c.right_nondegenerate = false;
        }
        tcol[S.tau(y, x)] = true;
      }
    }
    std::vector<bool> hit(std::size_t(n) * n, false);
    c.bijective  = true;
    c.involutive = true;
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        auto [a, b] = S.r(x, y);
        if (hit[a * n + b]) {
          c.bijective = false;
        }
        hit[a * n + b] = true;
        if (S.r(a, b) != std::pair{x, y}) {
          c.involutive = false;
        }
      }
    }
    c.degenerate = !(c.left_nondegenerate && c.right_nondegenerate);
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // Conversion
  ////////////////////////////////////////////////////////////////////////

  constexpr std::size_t sigma_op = 0;
  constexpr std::size_t tau_op   = 1;

  // The algebra with sigma curried on the left and tau on the right.
  inline BinaryAlgebra as_algebra(Solution const& S) {
    return BinaryAlgebra(
        S.size(),
        {OpTable("sigma", CurrySide::left, S.size(), S.sigma_table()),
         OpTable("tau", CurrySide::right, S.size(), S.tau_table())});
  }

  // Inverse of as_algebra; nullopt unless A has exactly a left-curried and
  // a right-curried operation, in that order.
  inline std::optional<Solution> as_solution(BinaryAlgebra const& A) {
    if (A.number_of_ops() != 2 || A.op(0).curry_side() != CurrySide::left
        || A.op(1).curry_side() != CurrySide::right) {
      return std::nullopt;
    }
    return Solution(A.size(), A.op(0).table(), A.op(1).table());
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructors
  ////////////////////////////////////////////////////////////////////////

  // The swap map r(x, y) = (y, x).
  inline Solution projection_solution(std::size_t n) {
    if (n == 0) {
      throw InvalidParameter("projection_solution needs n >= 1");
    }
    std::vector<element_type> sigma(n * n), tau(n * n);
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        sigma[x * n + y] = y;
        tau[x * n + y]   = x;
      }
    }
    return Solution(n, std::move(sigma), std::move(tau));
  }

  // A degenerate solution on {a, b, c, d, e} whose retract equivalence is
  // not a congruence; its maximal congruence needs two refinement rounds
  // and its multipermutation level is 2.
  inline Solution five_point_degenerate() {
    // clang-format off
    std::vector<element_type> sigma = {
      0, 4, 3, 2, 0,
      0, 0, 3, 2, 0,
      0, 4, 3, 2, 0,
      0, 0, 3, 2, 0,
      0, 4, 3, 2, 0};
    std::vector<element_type> tau = {
      0, 0, 0, 0, 0,
      1, 1, 1, 1, 1,
      2, 2, 2, 2, 2,
      3, 3, 3, 3, 3,
      4, 4, 4, 4, 4};
    // clang-format on
    return Solution(
        5, std::move(sigma), std::move(tau), {"a", "b", "c", "d", "e"});
  }

  // Irretractable degenerate solution on {0, ..., n}:
  //   sigma_x(y) = min(n, x + 1) if y = 0, else 1
  //   tau_y(x)   = 2 if x = n and y = 0, else 1
  // It satisfies the tower equations of height n when no words are
  // inserted, but is not n-permutational.
  inline Solution clamped_successor(std::size_t n) {
    if (n <= 2) {
      throw InvalidParameter("clamped_successor needs n > 2, got "
                             + std::to_string(n));
    }
    std::size_t const         m = n + 1;
    std::vector<element_type> sigma(m * m), tau(m * m);
    for (element_type x = 0; x < m; ++x) {
      for (element_type y = 0; y < m; ++y) {
        sigma[x * m + y] = y == 0 ? element_type(std::min<std::size_t>(n, x + 1))
                                  : 1;
        tau[x * m + y]   = (x == n && y == 0) ? 2 : 1;
      }
    }
    return Solution(m, std::move(sigma), std::move(tau));
  }

  // Finite chain {0, ..., N} with a twin t of N - 1 stored at index N + 1:
  //   sigma == 0
  //   tau_y(x) = t if x = N and y = 0; N - 2 if x = t; max(0, x - 1) else.
  // The refinement from the retract equivalence to the maximal congruence
  // takes about N rounds.
  inline Solution chain_with_twin(std::size_t N) {
    if (N < 3) {
      throw InvalidParameter("chain_with_twin needs N >= 3, got "
                             + std::to_string(N));
    }
    std::size_t const         m    = N + 2;
    element_type const        twin = element_type(N + 1);
    std::vector<element_type> sigma(m * m, 0), tau(m * m);
    for (element_type x = 0; x < m; ++x) {
      for (element_type y = 0; y < m; ++y) {
        element_type v;
        if (x == N && y == 0) {
          v = twin;
        } else if (x == twin) {
          v = element_type(N - 2);
        } else {
          v = x == 0 ? 0 : x - 1;
        }
        tau[x * m + y] = v;
      }
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i <= N; ++i) {
      labels.push_back(std::to_string(i));
    }
    labels.push_back("t");
    return Solution(m, std::move(sigma), std::move(tau), std::move(labels));
  }

}  // namespace ybe

#endif  // YBE_SOLUTION_HPP
