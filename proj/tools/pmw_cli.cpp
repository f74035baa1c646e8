#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pmw/codes.hpp"
#include "pmw/error.hpp"
#include "pmw/io.hpp"
#include "pmw/macwilliams.hpp"
#include "pmw/oracle.hpp"
#include "pmw/poset.hpp"
#include "pmw/relations.hpp"

using namespace pmw;
using io::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitAssert = 3;
constexpr int kExitCap = 4;

struct Options {
  std::string poset_file;
  std::string code_file;
  std::string relation = "cardinality";
  std::string subgroup_file;
  std::string partition_file;
  std::string which = "p";
  std::uint32_t q = 2;
  std::string modulus;
  std::string format = "tsv";
  bool lenient = false;
  bool assert_verdict = false;
  bool oracle = false;
  std::size_t cap_ideals = kDefaultIdealCap;
  std::size_t cap_codewords = kDefaultCodewordCap;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json big_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json big_json(const BigVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(big_json(x));
  return a;
}

std::string tsv_row(const BigVector& v) {
  std::string s;
  for (const auto& x : v) s += "\t" + x.get_str();
  return s;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

Poset load_poset(const Options& o) { return io::read_poset(slurp(o.poset_file), o.poset_file); }

Field load_field(const Options& o) {
  std::optional<std::vector<std::uint32_t>> modulus;
  if (!o.modulus.empty()) {
    std::vector<std::uint32_t> coeffs;
    std::istringstream is(o.modulus);
    long long c = 0;
    while (is >> c) {
      if (c < 0) throw UsageError("modulus coefficients must be nonnegative");
      coeffs.push_back(static_cast<std::uint32_t>(c));
    }
    if (!is.eof()) throw UsageError("--modulus expects whitespace-separated integers");
    modulus = std::move(coeffs);
  }
  return io::field_for(o.q, modulus);
}

IdealPartition load_partition(const Options& o, const Poset& poset) {
  if (o.relation == "cardinality") return partition_cardinality(poset, o.cap_ideals);
  if (o.relation == "iso") return partition_iso(poset, o.cap_ideals);
  if (o.relation == "aut") {
    if (o.subgroup_file.empty()) return partition_aut(poset, automorphisms(poset), o.cap_ideals);
    const auto group = io::read_subgroup(slurp(o.subgroup_file), poset.size(), o.subgroup_file);
    return partition_aut(poset, group, o.cap_ideals);
  }
  if (o.relation == "custom") {
    if (o.partition_file.empty()) throw UsageError("--relation custom requires --partition");
    return io::read_partition(slurp(o.partition_file), poset, o.partition_file);
  }
  throw UsageError("unknown relation '" + o.relation + "' (cardinality|aut|iso|custom)");
}

json labels(const IdealPartition& p) {
  json a = json::array();
  for (std::size_t b = 0; b < p.num_blocks(); ++b) a.push_back(io::ideal_to_json(p.representative(b)));
  return a;
}

void emit(const Options& o, const json& j, const std::string& tsv) {
  if (o.format == "json") std::cout << io::dump(j);
  else std::cout << tsv;
}

json witness_json(const MacWilliamsWitness& w, const IdealPartition& e) {
  const IdealPartition dual = dual_partition(e);
  const bool a = w.condition == Condition::A;
  const IdealPartition& home = a ? e : dual;
  const IdealPartition& other = a ? dual : e;
  return {{"condition", a ? "a" : "b"},
          {"class", io::ideal_to_json(home.representative(w.klass))},
          {"first", io::ideal_to_json(w.first)},
          {"second", io::ideal_to_json(w.second)},
          {"across", io::ideal_to_json(other.representative(w.across))},
          {"first_sum", big_json(w.first_sum)},
          {"second_sum", big_json(w.second_sum)}};
}

std::string witness_tsv(const MacWilliamsWitness& w, const IdealPartition& e) {
  const IdealPartition dual = dual_partition(e);
  const bool a = w.condition == Condition::A;
  const IdealPartition& home = a ? e : dual;
  const IdealPartition& other = a ? dual : e;
  std::ostringstream os;
  os << "witness_condition\t" << (a ? "a" : "b") << "\n"
     << "witness_class\t" << io::format_ideal(home.representative(w.klass)) << "\n"
     << "witness_members\t" << io::format_ideal(w.first) << "\t" << io::format_ideal(w.second) << "\n"
     << "witness_across\t" << io::format_ideal(other.representative(w.across)) << "\n"
     << "witness_sums\t" << w.first_sum.get_str() << "\t" << w.second_sum.get_str() << "\n";
  return os.str();
}

std::string witness_message(const MacWilliamsWitness& w, const IdealPartition& e) {
  std::string s = "relation is not of MacWilliams type\n" + witness_tsv(w, e);
  s.pop_back();
  return s;
}

int cmd_ideals(const Options& o) {
  const Poset poset = load_poset(o);
  const auto ideals = enumerate_ideals(poset, o.cap_ideals);
  json list = json::array();
  std::ostringstream tsv;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    list.push_back(io::ideal_to_json(ideals[i]));
    tsv << i << "\t" << io::format_ideal(ideals[i]) << "\n";
  }
  emit(o, {{"type", "ideals"}, {"poset", io::poset_to_json(poset)}, {"ideals", list}}, tsv.str());
  return 0;
}

int cmd_classes(const Options& o) {
  const Poset poset = load_poset(o);
  const IdealPartition e = load_partition(o, poset);
  std::ostringstream tsv;
  for (std::size_t b = 0; b < e.num_blocks(); ++b) {
    tsv << b;
    for (Mask m : e.block_ideals(b)) tsv << "\t" << io::format_ideal(m);
    tsv << "\n";
  }
  emit(o, io::partition_to_json(e), tsv.str());
  return 0;
}

// Entry recomputed from brute-force character sums over the canonical representative.
BigInt oracle_entry(const Field& f, const IdealPartition& e, const IdealPartition& dual, MatrixKind which,
                    std::size_t row, std::size_t col) {
  const Poset& poset = e.poset();
  const Poset star = poset.dual();
  CycSum total(f.characteristic());
  auto min_vector = [&](const Poset& p, Mask ideal) {
    Vector v(p.size(), 0);
    const Mask top = maximal_elements(p, ideal);
    for (int i = 0; i < p.size(); ++i)
      if (top >> i & 1u) v[i] = 1;
    return v;
  };
  if (which == MatrixKind::P) {
    const Vector u = min_vector(poset, e.representative(col));
    for (Mask k : dual.block_ideals(row)) total += oracle::char_sum_brute(poset, f, u, k);
  } else {
    const Vector v = min_vector(star, dual.representative(col));
    for (Mask k : e.block_ideals(row)) total += oracle::char_sum_brute(star, f, v, k);
  }
  auto value = total.to_integer();
  if (!value) throw Error(ErrorCode::NonIntegralQuotient, "brute-force entry is not an integer");
  return *value;
}

int cmd_matrix(const Options& o) {
  const Poset poset = load_poset(o);
  const Field field = load_field(o);
  const IdealPartition e = load_partition(o, poset);
  if (o.which != "p" && o.which != "q") throw UsageError("--which must be p or q");
  const MatrixKind which = o.which == "p" ? MatrixKind::P : MatrixKind::Q;
  if (!o.lenient) {
    const auto verdict = check_macwilliams_type(field.order(), e);
    if (!verdict.holds) throw Error(ErrorCode::NotMacWilliamsType, witness_message(*verdict.witness, e));
  }
  const ClassMatrix mat = pq_matrix(field.order(), e, which, o.lenient ? Strictness::Lenient : Strictness::Strict);
  json rows = json::array();
  std::ostringstream tsv;
  tsv << o.which;
  for (std::size_t c = 0; c < mat.cols.num_blocks(); ++c) tsv << "\t" << io::format_ideal(mat.cols.representative(c));
  tsv << "\n";
  for (std::size_t r = 0; r < mat.entries.size(); ++r) {
    rows.push_back(big_json(mat.entries[r]));
    tsv << io::format_ideal(mat.rows.representative(r)) << tsv_row(mat.entries[r]) << "\n";
  }
  if (!mat.representative_independent) tsv << "# entries depend on the representative; canonical representatives used\n";
  json j = {{"type", "matrix"},
            {"which", o.which},
            {"q", field.order()},
            {"partition", io::partition_to_json(e)},
            {"row_labels", labels(mat.rows)},
            {"col_labels", labels(mat.cols)},
            {"entries", rows},
            {"representative_independent", mat.representative_independent}};
  if (o.oracle) {
    const IdealPartition dual = dual_partition(e);
    bool agree = true;
    for (std::size_t r = 0; r < mat.entries.size(); ++r)
      for (std::size_t c = 0; c < mat.entries[r].size(); ++c)
        agree = agree && oracle_entry(field, e, dual, which, r, c) == mat.entries[r][c];
    j["oracle_agrees"] = agree;
    tsv << "oracle\t" << (agree ? "agree" : "disagree") << "\n";
  }
  emit(o, j, tsv.str());
  return 0;
}

GeneratorMatrix load_code(const Options& o, const Poset& poset) {
  GeneratorMatrix g = io::read_code(slurp(o.code_file), o.code_file);
  if (g.length() != poset.size()) throw UsageError("code length differs from the poset size");
  return g;
}

int cmd_weights(const Options& o) {
  const Poset poset = load_poset(o);
  const IdealPartition e = load_partition(o, poset);
  const GeneratorMatrix g = load_code(o, poset);
  const WeightDistribution w = weight_distribution(g, e, o.cap_codewords);
  std::ostringstream tsv;
  for (std::size_t b = 0; b < e.num_blocks(); ++b)
    tsv << io::format_ideal(e.representative(b)) << "\t" << w.counts[b].get_str() << "\n";
  json j = {{"type", "weights"},
            {"poset", io::poset_to_json(poset)},
            {"code", io::code_to_json(g)},
            {"partition", io::partition_to_json(e)},
            {"labels", labels(e)},
            {"counts", big_json(w.counts)}};
  if (o.oracle) {
    const auto dual = dual_partition(e);
    const bool agree =
        oracle::dual_dist_brute(g, e) == weight_distribution(dual_code(g), dual, o.cap_codewords);
    j["oracle_agrees"] = agree;
    tsv << "oracle\t" << (agree ? "agree" : "disagree") << "\n";
  }
  emit(o, j, tsv.str());
  return 0;
}

int cmd_verify(const Options& o) {
  const Poset poset = load_poset(o);
  const IdealPartition e = load_partition(o, poset);
  const GeneratorMatrix g = load_code(o, poset);
  const auto verdict = check_macwilliams_type(g.field().order(), e);
  if (!verdict.holds) throw Error(ErrorCode::NotMacWilliamsType, witness_message(*verdict.witness, e));
  const IdentityReport r = verify_identity(g, e, o.cap_codewords);
  std::ostringstream tsv;
  tsv << "code_size\t" << r.code_size.get_str() << "\n"
      << "dual_size\t" << r.dual_size.get_str() << "\n"
      << "dual_enumerated" << tsv_row(r.dual.counts) << "\n"
      << "dual_transform" << tsv_row(r.dual_from_transform) << "\n"
      << "code_enumerated" << tsv_row(r.code.counts) << "\n"
      << "code_transform" << tsv_row(r.code_from_transform) << "\n";
  json j = {{"type", "verify"},
            {"poset", io::poset_to_json(poset)},
            {"code", io::code_to_json(g)},
            {"partition", io::partition_to_json(e)},
            {"code_size", big_json(r.code_size)},
            {"dual_size", big_json(r.dual_size)},
            {"dual_enumerated", big_json(r.dual.counts)},
            {"dual_transform", big_json(r.dual_from_transform)},
            {"code_enumerated", big_json(r.code.counts)},
            {"code_transform", big_json(r.code_from_transform)},
            {"holds_a", r.holds_a},
            {"holds_b", r.holds_b}};
  bool pass = r.pass();
  if (o.oracle) {
    const auto brute = oracle::dual_dist_brute(g, e);
    const bool agree = brute.counts == r.dual.counts;
    j["dual_oracle"] = big_json(brute.counts);
    j["oracle_agrees"] = agree;
    tsv << "dual_oracle" << tsv_row(brute.counts) << "\n";
    pass = pass && agree;
  }
  j["result"] = pass ? "PASS" : "FAIL";
  tsv << "result\t" << (pass ? "PASS" : "FAIL") << "\n";
  emit(o, j, tsv.str());
  return o.assert_verdict && !pass ? kExitAssert : 0;
}

int cmd_check_type(const Options& o) {
  const Poset poset = load_poset(o);
  const Field field = load_field(o);
  const IdealPartition e = load_partition(o, poset);
  const auto verdict = check_macwilliams_type(field.order(), e);
  std::ostringstream tsv;
  tsv << "macwilliams_type\t" << bool_str(verdict.holds) << "\n";
  json j = {{"type", "check-type"},
            {"q", field.order()},
            {"partition", io::partition_to_json(e)},
            {"macwilliams_type", verdict.holds}};
  if (verdict.witness) {
    tsv << witness_tsv(*verdict.witness, e);
    j["witness"] = witness_json(*verdict.witness, e);
  }
  bool ok = verdict.holds;
  if (o.oracle) {
    const auto direct = oracle::definition_check(field, e);
    j["definition_check"] = direct.holds;
    tsv << "definition_check\t" << bool_str(direct.holds) << "\n";
    if (direct.holds != verdict.holds) ok = false;
  }
  emit(o, j, tsv.str());
  return o.assert_verdict && !ok ? kExitAssert : 0;
}

int cmd_classify(const Options& o) {
  const Poset poset = load_poset(o);
  const bool hier = is_hierarchical(poset);
  const auto ci = is_complement_isomorphism(poset, o.cap_ideals);
  const auto aut = automorphisms(poset);
  std::ostringstream tsv;
  tsv << "hierarchical\t" << bool_str(hier) << "\n"
      << "complement_isomorphism\t" << bool_str(ci.holds) << "\n";
  if (ci.witness)
    tsv << "complement_witness\t" << io::format_ideal(ci.witness->first) << "\t" << io::format_ideal(ci.witness->second)
        << "\n";
  tsv << "aut_order\t" << aut.size() << "\n";
  json j = {{"type", "classify"},
            {"poset", io::poset_to_json(poset)},
            {"hierarchical", hier},
            {"complement_isomorphism", ci.holds},
            {"aut_order", aut.size()}};
  if (ci.witness)
    j["complement_witness"] = {io::ideal_to_json(ci.witness->first), io::ideal_to_json(ci.witness->second)};
  emit(o, j, tsv.str());
  return 0;
}

int exit_code_for(const Error& e) {
  if (e.is_resource_cap()) return kExitCap;
  if (e.code() == ErrorCode::NonIntegralQuotient) return 1;
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MacWilliams-type equivalence relations on poset metrics"};
  app.require_subcommand(1);
  app.footer(
      "Files:\n"
      "  poset  '#' comments, a line n=<int>, then lines a<b (1-based; closure is taken)\n"
      "  code   q=<int>, optional modulus=<c_m ... c_0>, n=<int>, k=<int>, then k rows of n integers\n"
      "  subgroup  one permutation per line as 1-based images\n"
      "  partition one block per line, ideals as {a,b,...}\n"
      "Any JSON document this tool emits is accepted where a poset, code or partition is expected.\n"
      "\n"
      "Field elements are integers in [0, q): for q = p^m the base-p digits of an element are its\n"
      "polynomial coefficients, constant term first. The modulus is given as a coefficient list,\n"
      "leading coefficient first; built-in moduli exist for q = 4, 8, 9, 16, 25, 27.\n"
      "\n"
      "Exit codes: 0 success (verdicts are output data), 2 usage or parse error,\n"
      "3 false verdict under --assert, 4 resource cap exceeded, 1 internal arithmetic error.");
  Options o;

  auto add_poset = [&](CLI::App* c) { c->add_option("poset", o.poset_file, "Poset file")->required(); };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  };
  auto add_relation = [&](CLI::App* c) {
    c->add_option("--relation", o.relation, "cardinality|aut|iso|custom")
        ->check(CLI::IsMember({"cardinality", "aut", "iso", "custom"}));
    c->add_option("--subgroup", o.subgroup_file, "Subgroup of Aut(P) for --relation aut");
    c->add_option("--partition", o.partition_file, "Partition file for --relation custom");
    c->add_option("--cap-ideals", o.cap_ideals, "Maximum number of order ideals");
  };
  auto add_field = [&](CLI::App* c) {
    c->add_option("--q", o.q, "Field order");
    c->add_option("--modulus", o.modulus, "Modulus coefficients, leading first");
  };
  auto add_code = [&](CLI::App* c) {
    c->add_option("code", o.code_file, "Code file")->required();
    c->add_option("--cap-codewords", o.cap_codewords, "Maximum number of codewords enumerated");
  };

  auto* ideals = app.add_subcommand("ideals", "List the order ideals in canonical order");
  add_poset(ideals);
  add_format(ideals);
  ideals->add_option("--cap-ideals", o.cap_ideals, "Maximum number of order ideals");

  auto* classes = app.add_subcommand("classes", "List the classes of a relation on the ideals");
  add_poset(classes);
  add_format(classes);
  add_relation(classes);

  auto* matrix = app.add_subcommand("matrix", "Print the P- or Q-matrix of a relation");
  add_poset(matrix);
  add_format(matrix);
  add_relation(matrix);
  add_field(matrix);
  matrix->add_option("--which", o.which, "p or q")->check(CLI::IsMember({"p", "q"}));
  matrix->add_flag("--lenient", o.lenient, "Use canonical representatives when entries are not class constants");
  matrix->add_flag("--oracle", o.oracle, "Cross-check entries by brute-force character sums")->group("");

  auto* weights = app.add_subcommand("weights", "Weight distribution of a code over the classes");
  add_poset(weights);
  add_code(weights);
  add_format(weights);
  add_relation(weights);
  weights->add_flag("--oracle", o.oracle, "Cross-check the dual distribution by character sums")->group("");

  auto* verify = app.add_subcommand("verify", "Check both transform identities on a code");
  add_poset(verify);
  add_code(verify);
  add_format(verify);
  add_relation(verify);
  verify->add_flag("--assert", o.assert_verdict, "Exit 3 on FAIL");
  verify->add_flag("--oracle", o.oracle, "Cross-check the dual distribution by character sums")->group("");

  auto* check = app.add_subcommand("check-type", "Decide whether a relation is of MacWilliams type");
  add_poset(check);
  add_format(check);
  add_relation(check);
  add_field(check);
  check->add_flag("--assert", o.assert_verdict, "Exit 3 on a false verdict");
  check->add_flag("--oracle", o.oracle, "Also test the definition over all linear codes")->group("");

  auto* classify = app.add_subcommand("classify", "Hierarchy, complement isomorphism and |Aut(P)|");
  add_poset(classify);
  add_format(classify);
  classify->add_option("--cap-ideals", o.cap_ideals, "Maximum number of order ideals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*ideals) return cmd_ideals(o);
    if (*classes) return cmd_classes(o);
    if (*matrix) return cmd_matrix(o);
    if (*weights) return cmd_weights(o);
    if (*verify) return cmd_verify(o);
    if (*check) return cmd_check_type(o);
    if (*classify) return cmd_classify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitUsage;
}
