#ifndef YBE_IO_HPP
#define YBE_IO_HPP

// JSON file formats.
//
// Solution file:
//   {"n": 5, "labels": ["a", ...], "sigma": [[...], ...], "tau": [[...], ...]}
// with sigma[x][y] = sigma_x(y) and tau[x][y] = tau_y(x); labels optional.
//
// Algebra file:
//   {"n": 3, "labels": [...], "ops": [{"name": "f", "curry": "left",
//                                      "table": [[...], ...]}, ...]}
// with table[x][y] = f(x, y) whatever the curry side.
//
// Solution list: a JSON array of solution objects.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "algebra.hpp"
#include "errors.hpp"
#include "solution.hpp"

namespace ybe::io {

  using json = nlohmann::json;

  class ParseError : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
  };

  // A parsed input file: either a solution or a general algebra. For
  // solutions `algebra` is as_algebra(*solution).
  struct Input {
    std::optional<Solution>  solution;
    BinaryAlgebra            algebra;
    std::vector<std::string> labels;

    std::string label(element_type x) const {
      return labels.empty() ? std::to_string(x) : labels[x];
    }
  };

  namespace detail {
    inline json parse_json(std::string_view text) {
      try {
        return json::parse(text.begin(), text.end());
      } catch (json::parse_error const& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
      }
    }

    inline std::size_t read_size(json const& j) {
      if (!j.is_object()) {
        throw ParseError("expected a JSON object at the top level");
      }
      if (!j.contains("n") || !j["n"].is_number_unsigned()
          || j["n"].get<std::size_t>() == 0) {
        throw ParseError("\"n\": expected a positive integer");
      }
      return j["n"].get<std::size_t>();
    }

    inline std::vector<element_type>
    read_table(json const& j, std::string const& path, std::size_t n) {
      if (!j.is_array() || j.size() != n) {
        throw ParseError(path + ": expected an array of " + std::to_string(n)
                         + " rows");
      }
      std::vector<element_type> out;
      out.reserve(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        auto const& row  = j[x];
        auto const  rpath = path + "[" + std::to_string(x) + "]";
        if (!row.is_array() || row.size() != n) {
          throw ParseError(rpath + ": expected an array of "
                           + std::to_string(n) + " integers");
        }
        for (std::size_t y = 0; y < n; ++y) {
          auto const& v     = row[y];
          auto const  epath = rpath + "[" + std::to_string(y) + "]";
          if (!v.is_number_integer()) {
            throw ParseError(epath + ": expected an integer");
          }
          auto const val = v.get<std::int64_t>();
          if (val < 0 || std::size_t(val) >= n) {
            throw ParseError(epath + ": entry " + std::to_string(val)
                             + " out of range [0, " + std::to_string(n)
                             + ")");
          }
          out.push_back(element_type(val));
        }
      }
      return out;
    }

    inline std::vector<std::string> read_labels(json const& j, std::size_t n) {
      if (!j.contains("labels")) {
        return {};
      }
      auto const& l = j["labels"];
      if (!l.is_array() || l.size() != n) {
        throw ParseError("\"labels\": expected an array of " + std::to_string(n)
                         + " strings");
      }
      std::vector<std::string> out;
      for (std::size_t i = 0; i < n; ++i) {
        if (!l[i].is_string()) {
          throw ParseError("labels[" + std::to_string(i)
                           + "]: expected a string");
        }
        auto s = l[i].get<std::string>();
        for (auto const& prev : out) {
          if (prev == s) {
            throw ParseError("labels[" + std::to_string(i) + "]: duplicate \""
                             + s + "\"");
          }
        }
        out.push_back(std::move(s));
      }
      return out;
    }

    inline Solution solution_from_json(json const& j, std::string const& where) {
      try {
        auto const n = read_size(j);
        for (auto key : {"sigma", "tau"}) {
          if (!j.contains(key)) {
            throw ParseError(std::string("missing \"") + key + "\"");
          }
        }
        return Solution(n,
                        read_table(j["sigma"], "sigma", n),
                        read_table(j["tau"], "tau", n),
                        read_labels(j, n));
      } catch (ParseError const& e) {
        throw ParseError(where + e.what());
      }
    }

    inline void append_table(std::string&                     out,
                             std::vector<element_type> const& t,
                             std::size_t                      n,
                             std::string const&               indent) {
      out += "[\n";
      for (std::size_t x = 0; x < n; ++x) {
        out += indent + "  [";
        for (std::size_t y = 0; y < n; ++y) {
          if (y) {
            out += ", ";
          }
          out += std::to_string(t[x * n + y]);
        }
        out += x + 1 < n ? "],\n" : "]\n";
      }
      out += indent + "]";
    }

    inline void append_labels(std::string&                    out,
                              std::vector<std::string> const& labels,
                              std::string const&              indent) {
      if (labels.empty()) {
        return;
      }
      out += indent + "\"labels\": [";
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) {
          out += ", ";
        }
        out += json(labels[i]).dump();
      }
      out += "],\n";
    }

    inline std::string solution_text(Solution const& S, std::string const& indent) {
      std::string out = indent + "{\n";
      out += indent + "  \"n\": " + std::to_string(S.size()) + ",\n";
      append_labels(out, S.labels(), indent + "  ");
      out += indent + "  \"sigma\": ";
      append_table(out, S.sigma_table(), S.size(), indent + "  ");
      out += ",\n" + indent + "  \"tau\": ";
      append_table(out, S.tau_table(), S.size(), indent + "  ");
      out += "\n" + indent + "}";
      return out;
    }
  }  // namespace detail

  inline Solution parse_solution(std::string_view text) {
    return detail::solution_from_json(detail::parse_json(text), "");
  }

  inline std::vector<Solution> parse_solution_list(std::string_view text) {
    auto j = detail::parse_json(text);
    if (!j.is_array()) {
      throw ParseError("expected a JSON array of solutions");
    }
    std::vector<Solution> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(detail::solution_from_json(
          j[i], "[" + std::to_string(i) + "]: "));
    }
    return out;
  }

  // Reads either file kind; solution files are recognised by "sigma".
  inline Input parse_input(std::string_view text) {
    auto  j = detail::parse_json(text);
    Input in;
    if (j.is_object() && j.contains("sigma")) {
      auto S       = detail::solution_from_json(j, "");
      in.algebra   = as_algebra(S);
      in.labels    = S.labels();
      in.solution  = std::move(S);
      return in;
    }
    auto const n = detail::read_size(j);
    if (!j.contains("ops") || !j["ops"].is_array()) {
      throw ParseError("expected \"sigma\"/\"tau\" or an \"ops\" array");
    }
    std::vector<OpTable> ops;
    for (std::size_t i = 0; i < j["ops"].size(); ++i) {
      auto const& o    = j["ops"][i];
      auto const  path = "ops[" + std::to_string(i) + "]";
      if (!o.is_object() || !o.contains("name") || !o["name"].is_string()) {
        throw ParseError(path + ": expected an object with a \"name\"");
      }
      CurrySide side = CurrySide::left;
      if (o.contains("curry")) {
        auto c = o["curry"].is_string() ? o["curry"].get<std::string>() : "";
        if (c == "right") {
          side = CurrySide::right;
        } else if (c != "left") {
          throw ParseError(path + ".curry: expected \"left\" or \"right\"");
        }
      }
      if (!o.contains("table")) {
        throw ParseError(path + ": missing \"table\"");
      }
      ops.emplace_back(o["name"].get<std::string>(),
                       side,
                       n,
                       detail::read_table(o["table"], path + ".table", n));
    }
    try {
      in.algebra = BinaryAlgebra(n, std::move(ops));
    } catch (InvalidInput const& e) {
      throw ParseError(e.what());
    }
    in.labels = detail::read_labels(j, n);
    return in;
  }

  inline std::string print_solution(Solution const& S) {
    return detail::solution_text(S, "") + "\n";
  }

  inline std::string print_solution_list(std::vector<Solution> const& list) {
    if (list.empty()) {
      return "[]\n";
    }
    std::string out = "[\n";
    for (std::size_t i = 0; i < list.size(); ++i) {
      out += detail::solution_text(list[i], "  ");
      out += i + 1 < list.size() ? ",\n" : "\n";
    }
    return out + "]\n";
  }

  inline std::string print_algebra(BinaryAlgebra const&            A,
                                   std::vector<std::string> const& labels = {}) {
    std::string out = "{\n  \"n\": " + std::to_string(A.size()) + ",\n";
    detail::append_labels(out, labels, "  ");
    out += "  \"ops\": [\n";
    for (std::size_t i = 0; i < A.number_of_ops(); ++i) {
      auto const& op = A.op(i);
      out += "    {\n      \"name\": " + json(op.name()).dump() + ",\n";
      out += "      \"curry\": \"" + std::string(to_string(op.curry_side()))
             + "\",\n      \"table\": ";
      detail::append_table(out, op.table(), A.size(), "      ");
      out += i + 1 < A.number_of_ops() ? "\n    },\n" : "\n    }\n";
    }
    return out + "  ]\n}\n";
  }

}  // namespace ybe::io

#endif  // YBE_IO_HPP
