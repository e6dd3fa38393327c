#ifndef YBE_TOOLS_CLI_HPP
#define YBE_TOOLS_CLI_HPP

// Command-line front end. Exit codes: 0 success / true, 1 checked-false,
// 2 input error, 3 resource bound exceeded.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ybe/ybe.hpp"

namespace ybe::cli {

  using ordered_json = nlohmann::ordered_json;

  enum ExitCode : int {
    exit_ok       = 0,
    exit_false    = 1,
    exit_input    = 2,
    exit_resource = 3
  };

  struct Context {
    bool          json    = false;
    std::size_t   threads = 1;
    std::ostream& out;
    std::ostream& err;
  };

  ////////////////////////////////////////////////////////////////////////
  // Input
  ////////////////////////////////////////////////////////////////////////

  inline std::size_t parse_count(std::string const& text,
                                 std::string const& what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos
        || text.size() > 18) {
      throw InvalidInput("bad " + what + " '" + text + "'");
    }
    return std::stoull(text);
  }

  // "builtin:five-point", "builtin:clamped-successor:N",
  // "builtin:chain-with-twin:N", "builtin:projection:N".
  inline Solution builtin_solution(std::string const& spec) {
    auto const colon = spec.find(':');
    auto const name  = spec.substr(0, colon);
    auto       param = [&]() -> std::size_t {
      if (colon == std::string::npos) {
        throw InvalidInput("builtin '" + name + "' needs a size, e.g. "
                           + name + ":4");
      }
      return parse_count(spec.substr(colon + 1), "builtin size");
    };
    if (name == "five-point" && colon == std::string::npos) {
      return five_point_degenerate();
    }
    if (name == "clamped-successor") {
      return clamped_successor(param());
    }
    if (name == "chain-with-twin") {
      return chain_with_twin(param());
    }
    if (name == "projection") {
      return projection_solution(param());
    }
    throw InvalidInput("unknown builtin '" + spec + "'");
  }

  inline std::string read_text(std::string const& path) {
    if (path == "-") {
      return {std::istreambuf_iterator<char>(std::cin), {}};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InvalidInput("cannot open '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(in), {}};
  }

  inline io::Input load_input(std::string const& source) {
    static std::string const prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0) {
      auto        S = builtin_solution(source.substr(prefix.size()));
      io::Input   in;
      in.algebra  = as_algebra(S);
      in.labels   = S.labels();
      in.solution = std::move(S);
      return in;
    }
    try {
      return io::parse_input(read_text(source));
    } catch (io::ParseError const& e) {
      throw io::ParseError(source + ": " + e.what());
    }
  }

  inline void write_text(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      throw InvalidInput("cannot write '" + path + "'");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Formatting
  ////////////////////////////////////////////////////////////////////////

  inline ordered_json classes_json(Partition const& P) {
    ordered_json out = ordered_json::array();
    for (auto const& c : P.classes()) {
      out.push_back(c);
    }
    return out;
  }

  inline std::string classes_text(Partition const& P, io::Input const& in) {
    std::string out;
    for (auto const& c : P.classes()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += '{';
      for (std::size_t i = 0; i < c.size(); ++i) {
        out += (i ? "," : "") + in.label(c[i]);
      }
      out += '}';
    }
    return out;
  }

  inline std::string yes_no(bool b) {
    return b ? "holds" : "fails";
  }

  inline void emit(Context& ctx, ordered_json const& j) {
    ctx.out << j.dump(2) << '\n';
  }

  inline Solution require_solution(io::Input const& in) {
    if (in.solution) {
      return *in.solution;
    }
    if (auto S = as_solution(in.algebra)) {
      return *S;
    }
    throw InvalidInput("this command needs a solution (sigma/tau) input");
  }

  inline ordered_json classification_json(Classification const& c) {
    return {{"left_nondegenerate", c.left_nondegenerate},
            {"right_nondegenerate", c.right_nondegenerate},
            {"bijective", c.bijective},
            {"involutive", c.involutive},
            {"degenerate", c.degenerate}};
  }

  inline ordered_json mpl_json(MplResult const& m) {
    ordered_json j;
    if (m.level) {
      j["mpl"] = *m.level;
    } else {
      j["mpl"]                = nullptr;
      j["irretractable_size"] = m.stabilized_size;
    }
    j["verdict"] = to_string(m);
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  inline int cmd_verify(Context& ctx, std::string const& file) {
    auto const in    = load_input(file);
    auto const S     = require_solution(in);
    bool const braid = check_braid_direct(S);
    auto const ids   = check_birack_identities(S);
    auto const cls   = classify(S);
    if (ctx.json) {
      emit(ctx,
           {{"command", "verify"},
            {"n", S.size()},
            {"braid", braid},
            {"identities",
             {{"sigma_composition", ids.sigma_composition},
              {"mixed", ids.mixed},
              {"tau_composition", ids.tau_composition}}},
            {"classification", classification_json(cls)}});
    } else {
      ctx.out << "n = " << S.size() << '\n'
              << "braid relation: " << yes_no(braid) << '\n'
              << "identity sigma_composition: " << yes_no(ids.sigma_composition)
              << '\n'
              << "identity mixed: " << yes_no(ids.mixed) << '\n'
              << "identity tau_composition: " << yes_no(ids.tau_composition)
              << '\n'
              << "left_nondegenerate=" << cls.left_nondegenerate
              << " right_nondegenerate=" << cls.right_nondegenerate
              << " bijective=" << cls.bijective
              << " involutive=" << cls.involutive
              << " degenerate=" << cls.degenerate << '\n';
    }
    return braid ? exit_ok : exit_false;
  }

  inline int cmd_info(Context& ctx, std::string const& file) {
    auto const in   = load_input(file);
    auto const& A   = in.algebra;
    auto const mc   = max_congruence_below_sim(A);
    auto const s    = mc.trace.steps.front();
    bool const scg  = is_congruence(A, s);
    auto const gens = sigma_generators(A);
    auto const mpl  = multipermutation_level(A);
    std::optional<Solution> S;
    if (in.solution) {
      S = in.solution;
    } else {
      S = as_solution(A);
    }
    bool const braid = S && check_braid_direct(*S);
    if (ctx.json) {
      ordered_json j;
      j["command"] = "info";
      j["n"]       = A.size();
      j["ops"]     = ordered_json::array();
      for (auto const& op : A.ops()) {
        j["ops"].push_back(
            {{"name", op.name()}, {"curry", to_string(op.curry_side())}});
      }
      if (S) {
        j["braid"]          = braid;
        j["classification"] = classification_json(classify(*S));
        if (braid) {
          j["mpl2_equations"] = mpl2_equations_hold(*S);
        }
      }
      j["sim"]                = classes_json(s);
      j["sim_is_congruence"]  = scg;
      j["max_congruence"]     = classes_json(mc.congruence);
      j["refinement_rounds"]  = mc.trace.rounds;
      j["sigma_generators"]   = gens.size();
      j["multipermutation"]   = mpl_json(mpl);
      emit(ctx, j);
    } else {
      ctx.out << "n = " << A.size() << ", operations:";
      for (auto const& op : A.ops()) {
        ctx.out << ' ' << op.name() << '(' << to_string(op.curry_side())
                << ')';
      }
      ctx.out << '\n';
      if (S) {
        auto const c = classify(*S);
        ctx.out << "braid relation: " << yes_no(braid) << '\n'
                << "degenerate=" << c.degenerate
                << " involutive=" << c.involutive << '\n';
        if (braid) {
          ctx.out << "level-two equations: " << yes_no(mpl2_equations_hold(*S))
                  << '\n';
        }
      }
      ctx.out << "sim: " << classes_text(s, in)
              << (scg ? "  (a congruence)" : "  (not a congruence)") << '\n'
              << "max congruence: " << classes_text(mc.congruence, in)
              << "  after " << mc.trace.rounds << " rounds\n"
              << "distinct curried maps: " << gens.size() << '\n'
              << to_string(mpl) << '\n';
    }
    return exit_ok;
  }

  inline int cmd_retract(Context&           ctx,
                         std::string const& file,
                         bool               trace,
                         std::size_t        max_levels) {
    auto const  in    = load_input(file);
    auto const& A     = in.algebra;
    auto const  mc    = max_congruence_below_sim(A);
    auto const  tower = retract_tower(A, max_levels);
    std::string verdict;
    switch (tower.status) {
      case RetractTower::Status::singleton_reached:
        verdict = "mpl=" + std::to_string(tower.value);
        break;
      case RetractTower::Status::stabilized_above_one:
        verdict = "irretractable, size " + std::to_string(tower.value);
        break;
      default:
        verdict = "undetermined after " + std::to_string(tower.sizes.size() - 1)
                  + " levels";
    }
    if (ctx.json) {
      ordered_json j;
      j["command"] = "retract";
      j["n"]       = A.size();
      j["sim"]     = classes_json(mc.trace.steps.front());
      if (trace) {
        j["trace"] = ordered_json::array();
        for (auto const& p : mc.trace.steps) {
          j["trace"].push_back({{"classes", p.number_of_classes()},
                                {"partition", classes_json(p)}});
        }
      }
      j["rounds"]         = mc.trace.rounds;
      j["max_congruence"] = classes_json(mc.congruence);
      j["tower_sizes"]    = tower.sizes;
      j["status"]         = to_string(tower.status);
      j["verdict"]        = verdict;
      emit(ctx, j);
    } else {
      ctx.out << "sim: " << classes_text(mc.trace.steps.front(), in) << '\n';
      if (trace) {
        for (std::size_t i = 0; i < mc.trace.steps.size(); ++i) {
          auto const& p = mc.trace.steps[i];
          ctx.out << "~_" << i << ": " << p.number_of_classes()
                  << " classes  " << classes_text(p, in) << '\n';
        }
      }
      ctx.out << "max congruence: " << classes_text(mc.congruence, in)
              << '\n'
              << "tower sizes:";
      for (auto s : tower.sizes) {
        ctx.out << ' ' << s;
      }
      ctx.out << '\n' << verdict << '\n';
    }
    return exit_ok;
  }

  inline int cmd_mpl(Context& ctx, std::string const& file) {
    auto const in = load_input(file);
    auto const m  = multipermutation_level(in.algebra);
    if (ctx.json) {
      auto j = mpl_json(m);
      j["command"] = "mpl";
      emit(ctx, j);
    } else {
      ctx.out << to_string(m) << '\n';
    }
    return exit_ok;
  }

  inline int cmd_kperm(Context&           ctx,
                       std::string const& file,
                       std::size_t        k,
                       bool               no_words,
                       bool               outer_words,
                       std::size_t        monoid_cap) {
    auto const  in = load_input(file);
    auto const& A  = in.algebra;
    auto const  r  = no_words
                         ? is_k_permutational_nowords(A, k)
                         : is_k_permutational(A, k, {monoid_cap, outer_words});
    if (r.witness) {
      // Replay through the evaluator; a mismatch would be a bug.
      auto const& w  = *r.witness;
      auto const  vy = omega_eval(A, w.spec, w.y, w.args);
      auto const  vz = omega_eval(A, w.spec, w.z, w.args);
      if (vy != w.value_y || vz != w.value_z || vy == vz) {
        throw InternalError("witness does not replay");
      }
    }
    if (ctx.json) {
      ordered_json j;
      j["command"]     = "kperm";
      j["k"]           = k;
      j["words"]       = !no_words;
      j["monoid_size"] = r.monoid_size;
      j["holds"]       = r.holds;
      if (r.witness) {
        auto const&  w = *r.witness;
        ordered_json levels = ordered_json::array();
        for (std::size_t i = 0; i < w.spec.height(); ++i) {
          levels.push_back({{"op", A.op(w.spec.levels[i].op).name()},
                            {"word_index", w.word_indices[i]},
                            {"word", w.spec.levels[i].word.image()}});
        }
        j["witness"] = {{"y", w.y},
                        {"z", w.z},
                        {"args", w.args},
                        {"levels", levels},
                        {"values", {w.value_y, w.value_z}}};
      }
      emit(ctx, j);
    } else {
      ctx.out << k << "-permutational" << (no_words ? " (no words)" : "")
              << ": " << (r.holds ? "true" : "false") << '\n';
      if (!no_words) {
        ctx.out << "words range over a monoid of " << r.monoid_size
                << " maps\n";
      }
      if (r.witness) {
        auto const& w = *r.witness;
        ctx.out << "witness: start " << in.label(w.y) << " vs "
                << in.label(w.z) << ", args (";
        for (std::size_t i = 0; i < w.args.size(); ++i) {
          ctx.out << (i ? "," : "") << in.label(w.args[i]);
        }
        ctx.out << ")\n";
        for (std::size_t i = 0; i < w.spec.height(); ++i) {
          auto const& lvl = w.spec.levels[i];
          ctx.out << "  level " << i + 1 << ": op " << A.op(lvl.op).name()
                  << ", word ";
          if (lvl.word.is_identity()) {
            ctx.out << "id";
          } else {
            ctx.out << '#' << w.word_indices[i] << " = [";
            for (std::size_t x = 0; x < lvl.word.degree(); ++x) {
              ctx.out << (x ? " " : "") << in.label(lvl.word(element_type(x)));
            }
            ctx.out << ']';
          }
          ctx.out << '\n';
        }
        ctx.out << "values: " << in.label(w.value_y) << " vs "
                << in.label(w.value_z) << '\n';
      }
    }
    return r.holds ? exit_ok : exit_false;
  }

  inline int cmd_enumerate(Context&                          ctx,
                           std::size_t                       n,
                           bool                              count_only,
                           bool                              up_to_iso,
                           std::optional<std::string> const& filter,
                           std::optional<std::string> const& out_file) {
    std::optional<SearchPredicate> pred;
    if (filter) {
      pred = SearchPredicate::parse(*filter);
    }
    if (!count_only && !out_file && !filter && !up_to_iso) {
      auto const r = census(n, ctx.threads);
      if (ctx.json) {
        emit(ctx,
             {{"command", "enumerate"},
              {"n", r.n},
              {"total_pairs_examined", r.total_pairs_examined},
              {"solutions_found", r.solutions_found},
              {"solutions_up_to_iso", r.solutions_up_to_iso},
              {"counts", r.counts},
              {"counts_up_to_iso", r.counts_up_to_iso}});
      } else {
        ctx.out << "n = " << r.n << '\n'
                << "table pairs covered: " << r.total_pairs_examined << '\n'
                << "solutions: " << r.solutions_found << '\n'
                << "up to isomorphism: " << r.solutions_up_to_iso << '\n';
        for (auto const& [name, c] : r.counts) {
          ctx.out << "  " << name << ": " << c << " ("
                  << (r.counts_up_to_iso.count(name)
                          ? r.counts_up_to_iso.at(name)
                          : 0)
                  << " up to iso)\n";
        }
      }
      return exit_ok;
    }
    std::size_t count = 0;
    if (count_only && !out_file && !pred) {
      count = up_to_iso ? enumerate_solutions(n, {true, ctx.threads}).size()
                        : count_solutions(n, ctx.threads);
    } else {
      auto list = enumerate_solutions(n, {up_to_iso, ctx.threads});
      if (pred) {
        std::erase_if(list, [&](auto const& S) { return !(*pred)(S); });
      }
      count = list.size();
      if (out_file) {
        write_text(*out_file, io::print_solution_list(list));
      } else if (!count_only) {
        ctx.out << io::print_solution_list(list);
        return exit_ok;
      }
    }
    if (ctx.json) {
      ordered_json j{{"command", "enumerate"}, {"n", n}, {"count", count}};
      if (filter) {
        j["filter"] = pred->name();
      }
      j["up_to_iso"] = up_to_iso;
      emit(ctx, j);
    } else {
      ctx.out << count << '\n';
    }
    return exit_ok;
  }

  inline int cmd_search(Context&                          ctx,
                        std::size_t                       n,
                        std::string const&                property,
                        std::size_t                       limit,
                        std::optional<std::string> const& seeds_file,
                        std::size_t                       samples,
                        std::uint64_t                     rng_seed,
                        std::optional<std::string> const& out_file) {
    auto const    pred = SearchPredicate::parse(property);
    SearchOptions opts;
    opts.limit    = limit;
    opts.samples  = samples;
    opts.rng_seed = rng_seed;
    if (seeds_file) {
      auto text = read_text(*seeds_file);
      auto trimmed = text.find_first_not_of(" \t\r\n");
      if (trimmed != std::string::npos && text[trimmed] == '[') {
        opts.seeds = io::parse_solution_list(text);
      } else {
        opts.seeds = {require_solution(load_input(*seeds_file))};
      }
    }
    auto const found = search(n, pred, opts);
    if (out_file) {
      write_text(*out_file, io::print_solution_list(found));
    }
    if (ctx.json) {
      ordered_json sols = ordered_json::array();
      for (auto const& S : found) {
        sols.push_back(ordered_json::parse(io::print_solution(S)));
      }
      emit(ctx,
           {{"command", "search"},
            {"n", n},
            {"property", pred.name()},
            {"found", found.size()},
            {"solutions", sols}});
    } else {
      ctx.out << found.size() << " solution(s) with " << pred.name() << '\n';
      if (!out_file && !found.empty()) {
        ctx.out << io::print_solution_list(found);
      }
    }
    return found.empty() ? exit_false : exit_ok;
  }

  inline Partition parse_partition(std::string const& text, std::size_t n) {
    std::vector<element_type> labels;
    std::string               tok;
    std::istringstream        is(text);
    while (std::getline(is, tok, ',')) {
      auto b = tok.find_first_not_of(' ');
      auto e = tok.find_last_not_of(' ');
      labels.push_back(element_type(
          parse_count(b == std::string::npos ? "" : tok.substr(b, e - b + 1),
                      "partition entry")));
    }
    if (labels.size() != n) {
      throw InvalidInput("partition has " + std::to_string(labels.size())
                         + " entries, expected " + std::to_string(n));
    }
    return Partition::from_labels(labels);
  }

  inline int cmd_quotient(Context&                          ctx,
                          std::string const&                file,
                          std::optional<std::string> const& partition,
                          std::optional<std::string> const& out_file) {
    auto const  in = load_input(file);
    auto const& A  = in.algebra;
    auto const  P  = partition ? parse_partition(*partition, A.size())
                               : max_congruence_below_sim(A).congruence;
    BinaryAlgebra Q;
    try {
      Q = quotient(A, P);
    } catch (NotACongruence const& e) {
      ctx.err << "not a congruence: " << e.what() << '\n';
      return exit_false;
    }
    std::vector<std::string> labels;
    if (!in.labels.empty()) {
      for (auto const& c : P.classes()) {
        std::string l = "{";
        for (std::size_t i = 0; i < c.size(); ++i) {
          l += (i ? "," : "") + in.labels[c[i]];
        }
        labels.push_back(l + "}");
      }
    }
    std::string text;
    auto        S = in.solution ? as_solution(Q) : std::nullopt;
    if (S) {
      text = io::print_solution(S->with_labels(labels));
    } else {
      text = io::print_algebra(Q, labels);
    }
    if (out_file) {
      write_text(*out_file, text);
      if (ctx.json) {
        emit(ctx, {{"command", "quotient"}, {"n", Q.size()}});
      } else {
        ctx.out << "quotient of size " << Q.size() << " written to "
                << *out_file << '\n';
      }
    } else {
      ctx.out << text;
    }
    return exit_ok;
  }

  inline int cmd_monoid(Context&           ctx,
                        std::string const& file,
                        std::size_t        cap,
                        bool               list) {
    auto const in   = load_input(file);
    auto const gens = sigma_generators(in.algebra);
    auto const M    = monoid_closure(gens, in.algebra.size(), cap);
    if (ctx.json) {
      ordered_json j{{"command", "monoid"},
                     {"generators", gens.size()},
                     {"size", M.size()}};
      if (list) {
        j["elements"] = ordered_json::array();
        for (auto const& f : M.elements()) {
          j["elements"].push_back(f.image());
        }
      }
      emit(ctx, j);
    } else {
      ctx.out << "distinct curried maps: " << gens.size() << '\n'
              << "monoid size: " << M.size() << '\n';
      if (list) {
        for (std::size_t i = 0; i < M.size(); ++i) {
          ctx.out << '#' << i << ':';
          for (auto v : M.elements()[i].image()) {
            ctx.out << ' ' << in.label(v);
          }
          ctx.out << '\n';
        }
      }
    }
    return exit_ok;
  }

  ////////////////////////////////////////////////////////////////////////
  // Entry point
  ////////////////////////////////////////////////////////////////////////

  inline std::size_t default_monoid_cap_from_env() {
    if (char const* v = std::getenv("YBE_MONOID_CAP")) {
      return parse_count(v, "YBE_MONOID_CAP");
    }
    return ybe::default_monoid_cap;
  }

  inline int run(std::vector<std::string> args,
                 std::ostream&            out,
                 std::ostream&            err) {
    CLI::App app{"Finite set-theoretic Yang-Baxter solutions and binary "
                 "algebras: verification, retracts, multipermutation level, "
                 "k-permutability, enumeration."};
    app.name("ybe");
    app.require_subcommand(1);
    app.fallthrough();

    Context     ctx{false, 1, out, err};
    std::size_t threads = 1;
    app.add_flag("--json", ctx.json, "Machine-readable JSON output");
    app.add_option("--threads", threads, "Worker threads")
        ->check(CLI::PositiveNumber);

    std::string file;
    int         status = exit_ok;

    auto* verify = app.add_subcommand(
        "verify", "Check the braid relation, identities and classification");
    verify->add_option("file", file, "Solution file or builtin:NAME")
        ->required();

    auto* info = app.add_subcommand("info", "Summary of an algebra");
    info->add_option("file", file)->required();

    bool        trace      = false;
    std::size_t max_levels = 0;
    auto*       retract_c  = app.add_subcommand(
        "retract", "Retract equivalence, maximal congruence and tower");
    retract_c->add_option("file", file)->required();
    retract_c->add_flag("--trace", trace, "Print every refinement step");
    retract_c->add_option("--max-levels", max_levels, "Tower height bound");

    auto* mpl = app.add_subcommand("mpl", "Multipermutation level");
    mpl->add_option("file", file)->required();

    std::size_t k           = 0;
    bool        no_words    = false;
    bool        outer_words = false;
    std::optional<std::size_t> monoid_cap;
    auto*       kperm = app.add_subcommand("kperm", "Decide k-permutability");
    kperm->add_option("file", file)->required();
    kperm->add_option("--k,-k", k, "Tower height")->required();
    kperm->add_flag("--no-words", no_words, "Fix every word to the identity");
    kperm->add_flag("--all-outer-words",
                    outer_words,
                    "Also quantify the outermost word");
    kperm->add_option("--monoid-cap", monoid_cap, "Word monoid size bound");

    std::size_t                n          = 0;
    bool                       count_only = false;
    bool                       up_to_iso  = false;
    std::optional<std::string> filter, out_file;
    auto* enumerate_c = app.add_subcommand(
        "enumerate", "Exhaustive enumeration and census of small solutions");
    enumerate_c->add_option("--n,-n", n, "Carrier size")->required();
    enumerate_c->add_flag("--count-only", count_only);
    enumerate_c->add_flag("--up-to-iso", up_to_iso);
    enumerate_c->add_option("--filter", filter, "Predicate to keep");
    enumerate_c->add_option("--out", out_file, "Write a solution list");

    std::string                property;
    std::size_t                limit   = 10;
    std::size_t                samples = 0;
    std::uint64_t              rng     = 1;
    std::optional<std::string> seeds;
    auto* search_c = app.add_subcommand("search", "Find solutions with a property");
    search_c->add_option("--n,-n", n, "Carrier size")->required();
    search_c->add_option("--property", property, "Predicate")->required();
    search_c->add_option("--limit", limit);
    search_c->add_option("--seeds", seeds, "Solution or list file to try first");
    search_c->add_option("--sample",
                         samples,
                         "Draw this many random solutions instead of "
                         "enumerating");
    search_c->add_option("--rng-seed", rng);
    search_c->add_option("--out", out_file);

    std::optional<std::string> partition;
    auto* quotient_c = app.add_subcommand(
        "quotient", "Quotient by a congruence (default: the maximal one below sim)");
    quotient_c->add_option("file", file)->required();
    quotient_c->add_option("--partition",
                           partition,
                           "Comma-separated class index per element");
    quotient_c->add_option("--out", out_file);

    bool  list   = false;
    auto* monoid = app.add_subcommand("monoid", "Monoid generated by curried maps");
    monoid->add_option("file", file)->required();
    monoid->add_option("--cap", monoid_cap);
    monoid->add_flag("--list", list);

    try {
      std::reverse(args.begin(), args.end());
      app.parse(args);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_input;
    }
    ctx.threads = threads;

    try {
      auto cap = monoid_cap ? *monoid_cap : default_monoid_cap_from_env();
      if (verify->parsed()) {
        status = cmd_verify(ctx, file);
      } else if (info->parsed()) {
        status = cmd_info(ctx, file);
      } else if (retract_c->parsed()) {
        status = cmd_retract(ctx, file, trace, max_levels);
      } else if (mpl->parsed()) {
        status = cmd_mpl(ctx, file);
      } else if (kperm->parsed()) {
        status = cmd_kperm(ctx, file, k, no_words, outer_words, cap);
      } else if (enumerate_c->parsed()) {
        status = cmd_enumerate(ctx, n, count_only, up_to_iso, filter, out_file);
      } else if (search_c->parsed()) {
        status = cmd_search(ctx, n, property, limit, seeds, samples, rng, out_file);
      } else if (quotient_c->parsed()) {
        status = cmd_quotient(ctx, file, partition, out_file);
      } else if (monoid->parsed()) {
        status = cmd_monoid(ctx, file, cap, list);
      }
    } catch (CarrierTooLarge const& e) {
      err << "error: " << e.what() << '\n';
      return exit_resource;
    } catch (CapExceeded const& e) {
      err << "error: " << e.what() << '\n';
      return exit_resource;
    } catch (NotASolution const& e) {
      err << "error: " << e.what() << '\n';
      return exit_false;
    } catch (InternalError const& e) {
      err << "internal error: " << e.what() << '\n';
      return exit_input;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_input;
    }
    return status;
  }

  inline int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(std::move(args), out, err);
  }

}  // namespace ybe::cli

#endif  // YBE_TOOLS_CLI_HPP
