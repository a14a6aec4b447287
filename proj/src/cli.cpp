#include "fourval/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fourval/engine.hpp"
#include "fourval/errors.hpp"
#include "fourval/laws.hpp"
#include "fourval/normal.hpp"
#include "fourval/parser.hpp"
#include "fourval/serialize.hpp"
#include "fourval/synthesis.hpp"
#include "fourval/updates.hpp"

namespace fourval::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

Database load_database(const std::string& path) {
  return parse_database(read_file(path));
}

bool plain_constant(const std::string& s) {
  if (s.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(s[0]))) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isdigit(c);
    });
  }
  if (!std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::islower(c) || std::isdigit(c) || c == '_';
  });
}

Universe parse_universe(const std::string& csv) {
  if (csv.empty()) return std::nullopt;
  std::set<std::string> constants;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!plain_constant(item)) {
      throw Error("invalid universe constant '" + item +
                  "' (lowercase identifier or integer)");
    }
    constants.insert(item);
  }
  if (constants.empty()) return std::nullopt;
  return constants;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Combinator parse_op_spec(const std::string& spec) {
  if (spec == "oplus") return Combinator::from_connector(BinaryConnector::KJoin);
  if (spec == "otimes") return Combinator::from_connector(BinaryConnector::KMeet);
  if (spec == "odot") return Combinator::from_connector(BinaryConnector::ODot);
  if (spec == "or") return Combinator::from_connector(BinaryConnector::Or);
  if (spec == "and") return Combinator::from_connector(BinaryConnector::And);
  if (spec.rfind("expr:", 0) == 0) {
    std::string body = trim(spec.substr(5));
    if (body.size() >= 2 && body.front() == '"' && body.back() == '"') {
      body = body.substr(1, body.size() - 2);
    }
    return Combinator::from_formula(parse_formula(body));
  }
  throw Error("unknown combinator '" + spec +
              "' (expected oplus, otimes, odot, or, and, or expr:\"...\")");
}

void print_query_result(const QueryResult& res, std::ostream& out) {
  if (res.ground) {
    out << to_char(res.value) << "\n";
    return;
  }
  for (const auto& row : res.rows) {
    bool first = true;
    for (const auto& [var, constant] : row.binding) {
      out << (first ? "" : " ") << "?" << var << "=" << constant;
      first = false;
    }
    out << " : " << to_char(row.value) << "\n";
  }
}

// Prints one line per rule; returns the number of unsafe rules.
std::size_t print_safety(const Database& db, std::ostream& out) {
  std::size_t unsafe = 0;
  for (std::size_t i = 0; i < db.rules.size(); ++i) {
    SafetyReport report = is_safe(db.rules[i]);
    out << "rule " << (i + 1) << ": ";
    if (report.safe) {
      out << "safe\n";
    } else {
      ++unsafe;
      out << "unsafe; block " << report.block_text << " is missing";
      for (const auto& v : report.missing_variables) out << " ?" << v;
      out << "\n";
    }
  }
  return unsafe;
}

ActiveDomain query_constants(const Database& db, const Universe& universe) {
  ActiveDomain dom = active_domain(db);
  if (universe) dom.insert(universe->begin(), universe->end());
  return dom;
}

TruthFunction read_truth_table(const std::string& path) {
  std::istringstream lines(read_file(path));
  std::string line;
  std::size_t arity = 0;
  std::map<std::size_t, TruthValue> rows;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    std::string row = trim(line);
    if (row.empty()) continue;
    std::vector<TruthValue> cells;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) {
      cell = trim(cell);
      auto v = cell.size() == 1 ? value_from_char(cell[0]) : std::nullopt;
      if (!v) {
        throw Error("table line " + std::to_string(line_no) + ": bad value '" +
                    cell + "'");
      }
      cells.push_back(*v);
    }
    if (cells.size() < 2) {
      throw Error("table line " + std::to_string(line_no) +
                  ": need at least one input column and one output column");
    }
    if (arity == 0) {
      arity = cells.size() - 1;
    } else if (cells.size() - 1 != arity) {
      throw Error("table line " + std::to_string(line_no) +
                  ": expected " + std::to_string(arity + 1) + " columns");
    }
    TruthValue output = cells.back();
    cells.pop_back();
    std::size_t index = TruthFunction::index_for_tuple(cells);
    if (rows.contains(index)) {
      throw Error("table line " + std::to_string(line_no) +
                  ": duplicate input tuple");
    }
    rows.emplace(index, output);
  }
  if (arity == 0) throw Error("empty truth table");
  std::size_t expected = 1;
  for (std::size_t i = 0; i < arity; ++i) expected *= 4;
  if (rows.size() != expected) {
    throw Error("incomplete truth table: " + std::to_string(rows.size()) +
                " of " + std::to_string(expected) + " tuples given");
  }
  std::vector<TruthValue> table;
  table.reserve(expected);
  for (const auto& [index, v] : rows) {
    (void)index;
    table.push_back(v);
  }
  return TruthFunction(arity, std::move(table));
}

void emit_database(const Database& db, const std::string& out_path,
                   std::ostream& out) {
  std::string text = serialize(db);
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
}

int run_repl(const std::string& path, std::istream& in, std::ostream& out) {
  Database db = load_database(path);
  VSet fixpoint;
  ActiveDomain dom;
  bool stale = true;
  auto refresh = [&] {
    if (!stale) return;
    fixpoint = semantics(db).fixpoint;
    dom = active_domain(db);
    stale = false;
  };
  std::string line;
  while (std::getline(in, line)) {
    std::string input = trim(line);
    if (input.empty() || input[0] == '%') continue;
    auto space = input.find_first_of(" \t");
    std::string command = input.substr(0, space);
    std::string rest =
        space == std::string::npos ? "" : trim(input.substr(space + 1));
    try {
      if (command == "quit") {
        break;
      } else if (command == "semantics") {
        refresh();
        out << serialize(fixpoint);
      } else if (command == "safety") {
        print_safety(db, out);
      } else if (command == "save") {
        if (rest.empty()) throw Error("save needs a path");
        write_file(rest, serialize(db));
      } else if (command == "query") {
        if (rest.empty()) throw Error("query needs a formula");
        refresh();
        print_query_result(query_vset(fixpoint, dom, parse_formula(rest)), out);
      } else if (command == "set") {
        if (rest.empty()) throw Error("set needs Fact=value");
        db = standard_update(db, parse_vpair(rest));
        stale = true;
      } else if (command == "integrate") {
        auto with = rest.rfind(" with ");
        if (with == std::string::npos) {
          throw Error("integrate needs: Fact=value with <op>");
        }
        VPair pair = parse_vpair(trim(rest.substr(0, with)));
        Combinator op = parse_op_spec(trim(rest.substr(with + 6)));
        db = integrative_update(db, pair, op);
        stale = true;
      } else {
        throw Error("unknown command '" + command +
                    "' (query, set, integrate, semantics, safety, save, quit)");
      }
    } catch (const Error& e) {
      out << "error: " << e.what() << "\n";
    }
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"deductive database over four-valued logic"};
  app.name("fourval");
  app.require_subcommand(1);

  std::string file;
  std::string formula_text;
  std::string universe_csv;
  std::string out_path;
  std::string op_spec;
  std::string pair_text;
  std::string table_path;
  std::vector<std::string> set_specs;
  std::size_t max_iters = 0;
  bool trace = false;
  bool include_unknown = false;
  bool verify = false;

  CLI::App* sem = app.add_subcommand("semantics", "compute the fixpoint of a database");
  sem->add_option("file", file, "database file")->required();
  sem->add_option("--max-iters", max_iters, "iteration cap (0: automatic)");
  sem->add_flag("--trace", trace, "print every step, not only the fixpoint");
  sem->add_option("--universe", universe_csv, "extra grounding constants c1,c2,...");

  CLI::App* qry = app.add_subcommand("query", "evaluate a formula against the fixpoint");
  qry->add_option("file", file, "database file")->required();
  qry->add_option("--formula", formula_text, "formula to evaluate")->required();
  qry->add_flag("--include-unknown", include_unknown, "also print n-valued rows");
  qry->add_option("--universe", universe_csv, "extra grounding constants c1,c2,...");

  CLI::App* saf = app.add_subcommand("check-safety", "classify every rule as safe or unsafe");
  saf->add_option("file", file, "database file")->required();

  CLI::App* nrm = app.add_subcommand("normalize", "print the |(+)-normal form of a formula");
  nrm->add_option("--formula", formula_text, "formula to normalize")->required();

  CLI::App* upd = app.add_subcommand("update", "apply standard updates to the extension");
  upd->add_option("file", file, "database file")->required();
  upd->add_option("--set", set_specs, "Fact=value (n deletes); repeatable")
      ->required()
      ->type_size(1);
  upd->add_option("--out", out_path, "write the updated database here");

  CLI::App* itg = app.add_subcommand("integrate", "combine one incoming pair with the stored value");
  itg->add_option("file", file, "database file")->required();
  itg->add_option("--pair", pair_text, "Fact=value")->required();
  itg->add_option("--op", op_spec, "oplus|otimes|odot|or|and|expr:\"...\"")->required();
  itg->add_option("--out", out_path, "write the updated database here");

  CLI::App* syn = app.add_subcommand("synth", "synthesize a formula from a truth table");
  syn->add_option("--table", table_path, "CSV: k input columns plus one output column")
      ->required();
  syn->add_flag("--verify", verify, "re-check the formula on every tuple");

  CLI::App* law = app.add_subcommand("laws", "run the kernel law suite");

  CLI::App* rpl = app.add_subcommand("repl", "interactive session on a database");
  rpl->add_option("file", file, "database file")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*sem) {
      Database db = load_database(file);
      SemanticsOptions options;
      options.max_iters = max_iters;
      options.keep_trace = trace;
      options.universe = parse_universe(universe_csv);
      SemanticsResult result = semantics(db, options);
      if (trace) {
        for (std::size_t i = 0; i < result.trace.size(); ++i) {
          out << "% step " << i << "\n" << serialize(result.trace[i]);
        }
        out << "% fixpoint after " << result.iterations << " iterations\n";
      } else {
        out << serialize(result.fixpoint);
      }
    } else if (*qry) {
      Database db = load_database(file);
      Formula f = parse_formula(formula_text);
      SemanticsOptions options;
      options.universe = parse_universe(universe_csv);
      SemanticsResult result = semantics(db, options);
      print_query_result(query_vset(result.fixpoint,
                                    query_constants(db, options.universe), f,
                                    include_unknown),
                         out);
    } else if (*saf) {
      Database db = load_database(file);
      return print_safety(db, out) == 0 ? 0 : 2;
    } else if (*nrm) {
      NormalForm nf = normalize(parse_formula(formula_text));
      out << serialize(normal_form_formula(nf)) << "\n";
    } else if (*upd) {
      Database db = load_database(file);
      for (const auto& spec : set_specs) {
        db = standard_update(db, parse_vpair(spec));
      }
      emit_database(db, out_path, out);
    } else if (*itg) {
      Database db = load_database(file);
      db = integrative_update(db, parse_vpair(pair_text), parse_op_spec(op_spec));
      emit_database(db, out_path, out);
    } else if (*syn) {
      TruthFunction w = read_truth_table(table_path);
      Formula phi = synthesize(w);
      out << serialize(phi) << "\n";
      if (verify) {
        if (!verify_synthesis(w)) {
          err << "error: synthesized formula disagrees with the table\n";
          return 1;
        }
        out << "% verified on " << w.table_size() << " tuples\n";
      }
    } else if (*law) {
      auto results = run_law_suite();
      std::size_t passed = 0;
      for (const auto& r : results) {
        if (r.passed) {
          ++passed;
          out << "ok   " << r.name << " (" << r.cases << " cases)\n";
        } else {
          out << "FAIL " << r.name << ": " << r.detail << "\n";
        }
      }
      out << passed << "/" << results.size() << " laws hold\n";
      return passed == results.size() ? 0 : 1;
    } else if (*rpl) {
      return run_repl(file, in, out);
    }
  } catch (const UnsafeRuleError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InconsistentExtensionError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace fourval::cli
