#include <chrono>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "affmult/json_io.hpp"
#include "affmult/multiplicity.hpp"
#include "affmult/rsk.hpp"
#include "affmult/tableau.hpp"
#include "affmult/verify.hpp"

namespace {

using namespace affmult;

struct Row {
  std::string method;
  BigInt value;
  long long ms = 0;
};

struct Block {
  MultiplicityQuery query;
  std::vector<Row> rows;
  bool agree = true;
};

std::vector<std::string> methods_for(const std::string& method) {
  if (method == "all") return {"crystal", "paths", "formula", "permutations"};
  return {method};
}

Block compute_block(const MultiplicityQuery& q, const std::string& method) {
  validate_query(q);
  Block blk{q, {}, true};
  MethodTable table = default_methods();
  for (const auto& name : methods_for(method)) {
    auto start = std::chrono::steady_clock::now();
    BigInt value = table.at(name)(q);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    blk.rows.push_back({name, std::move(value), ms});
  }
  for (const auto& r : blk.rows) blk.agree = blk.agree && r.value == blk.rows.front().value;
  return blk;
}

void emit_csv(const std::vector<Block>& blocks, bool no_timing, std::ostream& out) {
  out << "k,a,b,ell,n,method,value,ms\n";
  for (const auto& blk : blocks)
    for (const auto& r : blk.rows) {
      out << blk.query.k << ',' << blk.query.a << ',' << blk.query.b << ',' << blk.query.ell
          << ',' << blk.query.rank() << ',' << r.method << ',' << r.value << ',';
      if (!no_timing) out << r.ms;
      out << '\n';
    }
}

nlohmann::json block_json(const Block& blk, bool no_timing) {
  nlohmann::json values = nlohmann::json::object();
  nlohmann::json ms = nlohmann::json::object();
  for (const auto& r : blk.rows) {
    values[r.method] = bigint_json(r.value);
    ms[r.method] = r.ms;
  }
  nlohmann::json rec{{"k", blk.query.k},      {"a", blk.query.a},
                     {"b", blk.query.b},      {"ell", blk.query.ell},
                     {"n", blk.query.rank()}, {"values", values}};
  if (blk.rows.size() > 1) rec["agree"] = blk.agree;
  if (!no_timing) rec["ms"] = ms;
  return rec;
}

void emit_text(const std::vector<Block>& blocks, bool no_timing, std::ostream& out) {
  for (const auto& blk : blocks) {
    out << "k=" << blk.query.k << " a=" << blk.query.a << " b=" << blk.query.b
        << " ell=" << blk.query.ell << " n=" << blk.query.rank() << "\n";
    for (const auto& r : blk.rows) {
      out << "  " << r.method << " = " << r.value;
      if (!no_timing) out << "  [" << r.ms << " ms]";
      out << "\n";
    }
    if (blk.rows.size() > 1) out << "  agree = " << (blk.agree ? "true" : "false") << "\n";
  }
}

int emit_blocks(const std::vector<Block>& blocks, const std::string& format, bool no_timing,
                bool as_array) {
  if (format == "csv") {
    emit_csv(blocks, no_timing, std::cout);
  } else if (format == "json") {
    if (as_array) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& blk : blocks) arr.push_back(block_json(blk, no_timing));
      std::cout << arr.dump() << "\n";
    } else {
      std::cout << block_json(blocks.front(), no_timing).dump() << "\n";
    }
  } else {
    emit_text(blocks, no_timing, std::cout);
  }
  for (const auto& blk : blocks)
    if (!blk.agree) return 3;
  return 0;
}

int run_mult(const MultiplicityQuery& q, const std::string& method, const std::string& format,
             bool no_timing) {
  try {
    return emit_blocks({compute_block(q, method)}, format, no_timing, false);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_table(int k, int a, int b, int ell_max, const std::string& method,
              const std::string& format, bool no_timing) {
  try {
    std::vector<Block> blocks;
    for (int ell = std::max(a, b); ell <= ell_max; ++ell)
      blocks.push_back(compute_block({k, a, b, ell, std::nullopt}, method));
    return emit_blocks(blocks, format, no_timing, true);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_verify(int max_ell, int max_k, const std::string& perturb) {
  try {
    MethodTable table = default_methods();
    if (!perturb.empty()) {
      if (!table.count(perturb)) throw std::invalid_argument("verify: unknown method " + perturb);
      MethodFn base = table.at(perturb);
      table[perturb] = [base](const MultiplicityQuery& q) { return base(q) + 1; };
    }
    return run_verification({max_ell, max_k}, std::cout, table) ? 0 : 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

std::string word_str(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

int run_rsk(const std::string& perm, bool inverse, const std::string& m_str,
            const std::string& n_str) {
  try {
    if (inverse) {
      if (m_str.empty() || n_str.empty())
        throw std::invalid_argument("rsk: --inverse needs --m and --n");
      StandardTableau m = tableau_from_json(nlohmann::json::parse(m_str));
      StandardTableau n = tableau_from_json(nlohmann::json::parse(n_str));
      std::cout << word_str(rsk_inverse(m, n)) << "\n";
    } else {
      if (perm.empty()) throw std::invalid_argument("rsk: need --perm or --inverse");
      auto [m, n] = rsk_forward(word_from_string(perm));
      std::cout << nlohmann::json{{"m", m}, {"n", n}}.dump() << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_rectify(const std::string& outer_str, const std::string& inner_str) {
  try {
    nlohmann::json rows_json = nlohmann::json::parse(outer_str);
    Partition inner = partition_from_json(nlohmann::json::parse(inner_str));
    Filling rows = rows_json.get<Filling>();
    if (inner.length() > static_cast<int>(rows.size()))
      throw std::invalid_argument("rectify: inner shape extends past the filled rows");
    std::vector<int> outer_parts;
    for (std::size_t i = 0; i < rows.size(); ++i)
      outer_parts.push_back(inner.part(static_cast<int>(i)) + static_cast<int>(rows[i].size()));
    SkewTableau skew{Partition(std::move(outer_parts)), std::move(inner), std::move(rows)};
    auto [rect, exits] = rectify(skew);
    std::cout << nlohmann::json(rect).dump() << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplicities of maximal dominant weights by four equivalent methods"};
  app.require_subcommand(1);

  int k = 0, a = 0, b = 0, ell = 0, ell_max = 0, max_ell = 6, max_k = 5;
  std::optional<int> n;
  std::string method = "formula", format = "text";
  bool no_timing = false, inverse = false;
  std::string perm, m_str, n_str, outer_str, inner_str, perturb;

  const std::vector<std::string> method_names = {"crystal", "paths", "formula", "permutations",
                                                 "all"};
  const std::vector<std::string> format_names = {"text", "json", "csv"};

  CLI::App* mult = app.add_subcommand("mult", "Multiplicity of a single weight");
  mult->add_option("--k", k, "level")->required();
  mult->add_option("--a", a, "first weight parameter")->required();
  mult->add_option("--b", b, "second weight parameter")->required();
  mult->add_option("--ell", ell, "number of removed alpha_0")->required();
  mult->add_option("--n", n, "rank (default: smallest stable rank)");
  mult->add_option("--method", method, "computation method")
      ->check(CLI::IsMember(method_names));
  mult->add_option("--format", format, "output format")->check(CLI::IsMember(format_names));
  mult->add_flag("--no-timing", no_timing, "omit timings from the output");

  CLI::App* table = app.add_subcommand("table", "Sweep ell from max{a,b} upward");
  table->add_option("--k", k, "level")->required();
  table->add_option("--a", a, "first weight parameter")->required();
  table->add_option("--b", b, "second weight parameter")->required();
  table->add_option("--ell-max", ell_max, "largest ell in the sweep")->required();
  table->add_option("--method", method, "computation method")
      ->check(CLI::IsMember(method_names));
  table->add_option("--format", format, "output format")->check(CLI::IsMember(format_names));
  table->add_flag("--no-timing", no_timing, "omit timings from the output");

  CLI::App* verify = app.add_subcommand("verify", "Cross-method and bijection self-checks");
  verify->add_option("--max-ell", max_ell, "largest ell in the sweep")->capture_default_str();
  verify->add_option("--max-k", max_k, "largest level in the sweep")->capture_default_str();
  verify->add_option("--perturb-method", perturb)->group("");

  CLI::App* rsk = app.add_subcommand("rsk", "Row insertion and its inverse");
  rsk->add_option("--perm", perm, "comma-separated one-line permutation");
  rsk->add_flag("--inverse", inverse, "recover the permutation from a tableau pair");
  rsk->add_option("--m", m_str, "insertion tableau as JSON rows");
  rsk->add_option("--n", n_str, "recording tableau as JSON rows");

  CLI::App* rect = app.add_subcommand("rectify", "Jeu de taquin rectification of a skew filling");
  rect->add_option("--outer", outer_str, "filled rows as JSON (inner cells omitted)")->required();
  rect->add_option("--inner", inner_str, "inner shape as a JSON partition")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (mult->parsed()) return run_mult({k, a, b, ell, n}, method, format, no_timing);
    if (table->parsed()) return run_table(k, a, b, ell_max, method, format, no_timing);
    if (verify->parsed()) return run_verify(max_ell, max_k, perturb);
    if (rsk->parsed()) return run_rsk(perm, inverse, m_str, n_str);
    if (rect->parsed()) return run_rectify(outer_str, inner_str);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
