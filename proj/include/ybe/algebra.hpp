#ifndef YBE_ALGEBRA_HPP
#define YBE_ALGEBRA_HPP

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ybe {

  using element_type = std::uint32_t;

  // Which argument a binary operation is curried on. For a left-curried
  // operation the unary family is x -> gamma(x, _), for a right-curried one
  // it is y -> gamma(_, y).
  enum class CurrySide { left, right };

  inline char const* to_string(CurrySide side) {
    return side == CurrySide::left ? "left" : "right";
  }

  ////////////////////////////////////////////////////////////////////////
  // UnaryMap
  ////////////////////////////////////////////////////////////////////////

  class UnaryMap {
   public:
    UnaryMap() = default;

    explicit UnaryMap(std::vector<element_type> image)
        : _image(std::move(image)) {}

    static UnaryMap identity(std::size_t n) {
      std::vector<element_type> img(n);
      std::iota(img.begin(), img.end(), element_type(0));
      return UnaryMap(std::move(img));
    }

    static UnaryMap constant(std::size_t n, element_type value) {
      return UnaryMap(std::vector<element_type>(n, value));
    }

    std::size_t degree() const noexcept {
      return _image.size();
    }

    element_type operator()(element_type x) const {
      assert(x < _image.size());
      return _image[x];
    }

    std::vector<element_type> const& image() const noexcept {
      return _image;
    }

    bool is_identity() const noexcept {
      for (std::size_t i = 0; i < _image.size(); ++i) {
        if (_image[i] != i) {
          return false;
        }
      }
      return true;
    }

    bool is_bijection() const {
      std::vector<bool> seen(_image.size(), false);
      for (auto v : _image) {
        if (seen[v]) {
          return false;
        }
        seen[v] = true;
      }
      return true;
    }

    // (*this) after g, i.e. x -> (*this)(g(x)).
    UnaryMap after(UnaryMap const& g) const {
      assert(g.degree() == degree());
      std::vector<element_type> img(_image.size());
      for (std::size_t x = 0; x < img.size(); ++x) {
        img[x] = _image[g._image[x]];
      }
      return UnaryMap(std::move(img));
    }

    friend bool operator==(UnaryMap const&, UnaryMap const&) = default;
    friend auto operator<=>(UnaryMap const&, UnaryMap const&) = default;

   private:
    std::vector<element_type> _image;
  };

  struct UnaryMapHash {
    std::size_t operator()(UnaryMap const& f) const noexcept {
      std::size_t h = f.degree();
      for (auto v : f.image()) {
        h ^= std::size_t(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // OpTable
  ////////////////////////////////////////////////////////////////////////

  // A total binary operation on {0, ..., n-1}. The table is stored row-major
  // with rows indexed by the first argument, regardless of the curry side;
  // only curried_map looks at the curry side.
  class OpTable {
   public:
    OpTable() = default;

    OpTable(std::string name,
            CurrySide side,
            std::size_t n,
            std::vector<element_type> table)
        : _name(std::move(name)),
          _side(side),
          _n(n),
          _table(std::move(table)) {
      if (_table.size() != _n * _n) {
        throw InvalidInput("operation '" + _name + "' has "
                           + std::to_string(_table.size())
                           + " entries, expected "
                           + std::to_string(_n * _n));
      }
      for (std::size_t i = 0; i < _table.size(); ++i) {
        if (_table[i] >= _n) {
          throw InvalidInput("operation '" + _name + "' entry ["
                             + std::to_string(i / _n) + "]["
                             + std::to_string(i % _n) + "] = "
                             + std::to_string(_table[i])
                             + " is out of range");
        }
      }
    }

    std::string const& name() const noexcept {
      return _name;
    }

    CurrySide curry_side() const noexcept {
      return _side;
    }

    std::size_t size() const noexcept {
      return _n;
    }

    element_type operator()(element_type x, element_type y) const {
      assert(x < _n && y < _n);
      return _table[x * _n + y];
    }

    std::vector<element_type> const& table() const noexcept {
      return _table;
    }

    // The unary map at parameter x: gamma(x, _) or gamma(_, x).
    UnaryMap curried(element_type x) const {
      assert(x < _n);
      std::vector<element_type> img(_n);
      for (element_type z = 0; z < _n; ++z) {
        img[z] = _side == CurrySide::left ? (*this)(x, z) : (*this)(z, x);
      }
      return UnaryMap(std::move(img));
    }

    // Same as curried(x)(z) without materialising the map.
    element_type curried_at(element_type x, element_type z) const {
      return _side == CurrySide::left ? (*this)(x, z) : (*this)(z, x);
    }

    friend bool operator==(OpTable const&, OpTable const&) = default;

   private:
    std::string               _name;
    CurrySide                 _side = CurrySide::left;
    std::size_t               _n    = 0;
    std::vector<element_type> _table;
  };

  ////////////////////////////////////////////////////////////////////////
  // BinaryAlgebra
  ////////////////////////////////////////////////////////////////////////

  class BinaryAlgebra {
   public:
    BinaryAlgebra() = default;

    BinaryAlgebra(std::size_t n, std::vector<OpTable> ops)
        : _n(n), _ops(std::move(ops)) {
      if (_n == 0) {
        throw InvalidInput("an algebra needs a nonempty carrier");
      }
      std::unordered_set<std::string> names;
      for (auto const& op : _ops) {
        if (op.size() != _n) {
          throw InvalidInput("operation '" + op.name()
                             + "' has carrier size "
                             + std::to_string(op.size()) + ", expected "
                             + std::to_string(_n));
        }
        if (!names.insert(op.name()).second) {
          throw InvalidInput("duplicate operation name '" + op.name()
                             + "'");
        }
      }
    }

    std::size_t size() const noexcept {
      return _n;
    }

    std::size_t number_of_ops() const noexcept {
      return _ops.size();
    }

    OpTable const& op(std::size_t i) const {
      assert(i < _ops.size());
      return _ops[i];
    }

    std::vector<OpTable> const& ops() const noexcept {
      return _ops;
    }

    friend bool operator==(BinaryAlgebra const&, BinaryAlgebra const&)
        = default;

   private:
    std::size_t          _n = 0;
    std::vector<OpTable> _ops;
  };

  inline element_type apply(BinaryAlgebra const& A,
                            std::size_t          op_index,
                            element_type         x,
                            element_type         y) {
    return A.op(op_index)(x, y);
  }

  inline UnaryMap curried_map(BinaryAlgebra const& A,
                              std::size_t          op_index,
                              element_type         x) {
    return A.op(op_index).curried(x);
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  // An equivalence relation on {0, ..., n-1}, stored as a class index per
  // element. Class indices are canonical: they appear in order of first
  // occurrence, so equal relations have equal representations.
  class Partition {
   public:
    Partition() = default;

    // Accepts arbitrary labels and canonicalises them.
    template <typename Label>
    static Partition from_labels(std::span<Label const> labels) {
      Partition p;
      p._class_of.resize(labels.size());
      std::unordered_map<Label, element_type> seen;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted]
            = seen.try_emplace(labels[i], element_type(seen.size()));
        p._class_of[i] = it->second;
      }
      p._k = seen.size();
      return p;
    }

    static Partition from_labels(std::vector<element_type> const& labels) {
      return from_labels(std::span<element_type const>(labels));
    }

    static Partition from_classes(std::size_t                       n,
                                  std::vector<std::vector<element_type>> const&
                                      classes) {
      std::vector<std::int64_t> lbl(n, -1);
      for (std::size_t c = 0; c < classes.size(); ++c) {
        for (auto x : classes[c]) {
          if (x >= n || lbl[x] != -1) {
            throw InvalidInput("classes do not partition the carrier");
          }
          lbl[x] = std::int64_t(c);
        }
      }
      if (std::find(lbl.begin(), lbl.end(), -1) != lbl.end()) {
        throw InvalidInput("classes do not cover the carrier");
      }
      return from_labels(std::span<std::int64_t const>(lbl));
    }

    static Partition identity(std::size_t n) {
      Partition p;
      p._class_of.resize(n);
      std::iota(p._class_of.begin(), p._class_of.end(), element_type(0));
      p._k = n;
      return p;
    }

    static Partition full(std::size_t n) {
      Partition p;
      p._class_of.assign(n, 0);
      p._k = n == 0 ? 0 : 1;
      return p;
    }

    std::size_t size() const noexcept {
      return _class_of.size();
    }

    std::size_t number_of_classes() const noexcept {
      return _k;
    }

    element_type class_of(element_type x) const {
      assert(x < _class_of.size());
      return _class_of[x];
    }

    std::vector<element_type> const& class_indices() const noexcept {
      return _class_of;
    }

    bool same_class(element_type x, element_type y) const {
      return class_of(x) == class_of(y);
    }

    bool is_identity() const noexcept {
      return _k == _class_of.size();
    }

    bool is_full() const noexcept {
      return _k <= 1;
    }

    // Classes in canonical order, i.e. ordered by least element, each
    // sorted ascending.
    std::vector<std::vector<element_type>> classes() const {
      std::vector<std::vector<element_type>> out(_k);
      for (element_type x = 0; x < _class_of.size(); ++x) {
        out[_class_of[x]].push_back(x);
      }
      return out;
    }

    // True iff every class of *this lies inside a class of other.
    bool refines(Partition const& other) const {
      assert(other.size() == size());
      std::vector<std::int64_t> image(_k, -1);
      for (std::size_t x = 0; x < _class_of.size(); ++x) {
        auto& slot = image[_class_of[x]];
        if (slot == -1) {
          slot = other._class_of[x];
        } else if (slot != other._class_of[x]) {
          return false;
        }
      }
      return true;
    }

    // Smallest equivalence containing both.
    Partition join(Partition const& other) const {
      assert(other.size() == size());
      std::vector<element_type> parent(size());
      std::iota(parent.begin(), parent.end(), element_type(0));
      std::function<element_type(element_type)> find
          = [&](element_type x) -> element_type {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      };
      auto unite = [&](Partition const& p) {
        std::vector<std::int64_t> first(p._k, -1);
        for (element_type x = 0; x < size(); ++x) {
          auto c = p._class_of[x];
          if (first[c] == -1) {
            first[c] = x;
          } else {
            auto a = find(element_type(first[c]));
            auto b = find(x);
            if (a != b) {
              parent[std::max(a, b)] = std::min(a, b);
            }
          }
        }
      };
      unite(*this);
      unite(other);
      std::vector<element_type> lbl(size());
      for (element_type x = 0; x < size(); ++x) {
        lbl[x] = find(x);
      }
      return from_labels(lbl);
    }

    friend bool operator==(Partition const&, Partition const&) = default;

   private:
    std::vector<element_type> _class_of;
    std::size_t               _k = 0;
  };

  ////////////////////////////////////////////////////////////////////////
  // Congruences and quotients
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline void check_same_size(BinaryAlgebra const& A, Partition const& P) {
      if (P.size() != A.size()) {
        throw InvalidInput("partition on " + std::to_string(P.size())
                           + " elements does not match carrier of size "
                           + std::to_string(A.size()));
      }
    }

    // Computes the class-level table of op modulo P, or nullopt if P is not
    // compatible with op.
    inline std::optional<std::vector<element_type>>
    class_table(OpTable const& op, Partition const& P) {
      std::size_t const         k = P.number_of_classes();
      std::size_t const         n = op.size();
      std::vector<std::int64_t> tbl(k * k, -1);
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          auto& slot = tbl[P.class_of(x) * k + P.class_of(y)];
          auto  val  = std::int64_t(P.class_of(op(x, y)));
          if (slot == -1) {
            slot = val;
          } else if (slot != val) {
            return std::nullopt;
          }
        }
      }
      return std::vector<element_type>(tbl.begin(), tbl.end());
    }
  }  // namespace detail

  // Compatibility is checked in both arguments, whatever the curry side.
  inline bool is_congruence(BinaryAlgebra const& A, Partition const& P) {
    detail::check_same_size(A, P);
    for (auto const& op : A.ops()) {
      if (!detail::class_table(op, P)) {
        return false;
      }
    }
    return true;
  }

  inline BinaryAlgebra quotient(BinaryAlgebra const& A, Partition const& P) {
    detail::check_same_size(A, P);
    std::vector<OpTable> ops;
    ops.reserve(A.number_of_ops());
    for (auto const& op : A.ops()) {
      auto tbl = detail::class_table(op, P);
      if (!tbl) {
        throw NotACongruence("partition is not compatible with operation '"
                             + op.name() + "'");
      }
      ops.emplace_back(
          op.name(), op.curry_side(), P.number_of_classes(), std::move(*tbl));
    }
    return BinaryAlgebra(P.number_of_classes(), std::move(ops));
  }

  ////////////////////////////////////////////////////////////////////////
  // Brute-force congruence enumeration
  ////////////////////////////////////////////////////////////////////////

  constexpr std::size_t default_congruence_cap = 8;

  // Calls f on every set partition of {0, ..., n-1}, as a restricted growth
  // string, in lexicographic order.
  template <typename Func>
  void for_each_set_partition(std::size_t n, Func&& f) {
    if (n == 0) {
      return;
    }
    std::vector<element_type> rgs(n, 0);
    std::vector<element_type> mx(n, 0);  // mx[i] = max(rgs[0..i])
    while (true) {
      f(std::as_const(rgs));
      // Advance: find the rightmost position that can be incremented.
      std::size_t i = n - 1;
      while (i > 0 && rgs[i] == mx[i - 1] + 1) {
        --i;
      }
      if (i == 0) {
        return;
      }
      ++rgs[i];
      mx[i] = std::max(mx[i - 1], rgs[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        rgs[j] = 0;
        mx[j]  = mx[i];
      }
    }
  }

  // Every congruence of A contained in P. Exponential; intended as an
  // oracle for small carriers only.
  inline std::vector<Partition>
  all_congruences_below(BinaryAlgebra const& A,
                        Partition const&     P,
                        std::size_t          n_cap = default_congruence_cap) {
    detail::check_same_size(A, P);
    if (A.size() > n_cap) {
      throw CarrierTooLarge(A.size(), n_cap);
    }
    std::vector<Partition> out;
    for_each_set_partition(A.size(), [&](auto const& rgs) {
      auto Q = Partition::from_labels(rgs);
      if (Q.refines(P) && is_congruence(A, Q)) {
        out.push_back(std::move(Q));
      }
    });
    return out;
  }

  // The unique maximum of a family of partitions closed under join, or
  // nullopt if the family has no maximum.
  inline std::optional<Partition>
  maximum_partition(std::vector<Partition> const& family) {
    if (family.empty()) {
      return std::nullopt;
    }
    auto best = std::min_element(
        family.begin(), family.end(), [](auto const& a, auto const& b) {
          return a.number_of_classes() < b.number_of_classes();
        });
    for (auto const& p : family) {
      if (!p.refines(*best)) {
        return std::nullopt;
      }
    }
    return *best;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline bool extend_isomorphism(BinaryAlgebra const&       A,
                                   BinaryAlgebra const&       B,
                                   std::vector<std::int64_t>& img,
                                   std::vector<bool>&         used,
                                   std::size_t                next) {
      std::size_t const n = A.size();
      if (next == n) {
        return true;
      }
      auto const x = element_type(next);
      for (element_type c = 0; c < n; ++c) {
        if (used[c]) {
          continue;
        }
        img[x]  = c;
        used[c] = true;
        // Entries involving x whose value is already mapped, then older
        // entries whose value is x.
        bool ok = true;
        for (std::size_t o = 0; ok && o < A.number_of_ops(); ++o) {
          auto const& a = A.op(o);
          auto const& b = B.op(o);
          for (element_type u = 0; ok && u <= x; ++u) {
            for (element_type v = 0; ok && v <= x; ++v) {
              if (u != x && v != x) {
                if (a(u, v) == x
                    && b(element_type(img[u]), element_type(img[v])) != c) {
                  ok = false;
                }
                continue;
              }
              auto w = a(u, v);
              if (img[w] != -1
                  && element_type(img[w])
                         != b(element_type(img[u]), element_type(img[v]))) {
                ok = false;
              }
            }
          }
        }
        if (ok && extend_isomorphism(A, B, img, used, next + 1)) {
          return true;
        }
        img[x]  = -1;
        used[c] = false;
      }
      return false;
    }
  }  // namespace detail

  // True iff some bijection of carriers carries every operation of A onto
  // the operation of B at the same position.
  inline bool are_isomorphic(BinaryAlgebra const& A, BinaryAlgebra const& B) {
    if (A.size() != B.size() || A.number_of_ops() != B.number_of_ops()) {
      return false;
    }
    for (std::size_t o = 0; o < A.number_of_ops(); ++o) {
      if (A.op(o).curry_side() != B.op(o).curry_side()) {
        return false;
      }
      // Value histograms must agree up to relabeling.
      std::vector<std::size_t> ha(A.size(), 0), hb(A.size(), 0);
      for (auto v : A.op(o).table()) {
        ++ha[v];
      }
      for (auto v : B.op(o).table()) {
        ++hb[v];
      }
      std::sort(ha.begin(), ha.end());
      std::sort(hb.begin(), hb.end());
      if (ha != hb) {
        return false;
      }
    }
    std::vector<std::int64_t> img(A.size(), -1);
    std::vector<bool>         used(A.size(), false);
    return detail::extend_isomorphism(A, B, img, used, 0);
  }

}  // namespace ybe

#endif  // YBE_ALGEBRA_HPP
