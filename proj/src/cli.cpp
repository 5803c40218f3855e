#include "hyperbfs/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyperbfs/errors.hpp"
#include "hyperbfs/formats.hpp"

namespace hyperbfs {

namespace {

struct ValueSetSource {
  std::string builtin;
  std::string table;

  void add_to(CLI::App& cmd) {
    auto* b = cmd.add_option("--builtin", builtin, "Built-in value set name");
    auto* t = cmd.add_option("--table", table, "Value set table file (.vs)");
    b->excludes(t);
  }
  bool given() const { return !builtin.empty() || !table.empty(); }
  ValueSet load(std::string_view fallback) const {
    if (!table.empty()) return load_value_set_file(table);
    return hyperbfs::builtin(builtin.empty() ? fallback : builtin);
  }
};

std::string render_tuple(const ValueSet& vs, const std::vector<Value>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + vs.name(values[i]);
  return out + ")";
}

std::string render_check(const ValueSet& vs, const char* label, const CheckResult& r) {
  std::string line = std::string(label) + ": " + (r.holds ? "true" : "false");
  if (r.witness) line += " witness " + render_tuple(vs, *r.witness);
  return line;
}

const char* identity_side_name(IdentitySide s) {
  switch (s) {
    case IdentitySide::PlusLeft: return "0 + v = v";
    case IdentitySide::PlusRight: return "v + 0 = v";
    case IdentitySide::TimesLeft: return "1 * v = v";
    case IdentitySide::TimesRight: return "v * 1 = v";
  }
  return "?";
}

int cmd_check(const ValueSetSource& src, std::ostream& out, std::ostream& err) {
  const auto vs = src.load("boolean");
  if (!vs.is_finite()) {
    err << "value set '" << vs.id() << "' is evaluation-only: its laws cannot be checked\n";
    return kExitEvaluationOnly;
  }
  out << "value set: " << vs.id() << "\n";
  const auto ids = check_identities(vs);
  out << "identities: " << (ids.valid ? "true" : "false");
  if (!ids.valid)
    out << " witness " << vs.name(*ids.element) << " breaks " << identity_side_name(*ids.side);
  out << "\n";
  const auto p = profile(vs);
  out << render_check(vs, "zero_sum_free", p.zero_sum_free) << "\n"
      << render_check(vs, "zero_divisor_free", p.zero_divisor_free) << "\n"
      << render_check(vs, "zero_annihilates", p.zero_annihilates) << "\n"
      << render_check(vs, "plus_assoc", p.plus_assoc) << "\n"
      << render_check(vs, "plus_comm", p.plus_comm) << "\n"
      << render_check(vs, "times_assoc", p.times_assoc) << "\n"
      << render_check(vs, "times_comm", p.times_comm) << "\n";
  const bool ok = ids.valid && p.bfs_valid();
  out << "bfs_valid: " << (ok ? "true" : "false") << "\n";
  return ok ? kExitOk : kExitFailure;
}

std::vector<Key> split_keys(const std::string& text) {
  std::vector<Key> keys;
  std::stringstream ss(text);
  for (std::string k; std::getline(ss, k, ',');)
    if (!k.empty()) keys.push_back(k);
  return keys;
}

std::string labelled_keys(const char* label, const std::vector<Key>& keys) {
  std::string out = label;
  for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "," : " ") + keys[i];
  return out;
}

struct BfsOptions {
  std::string graph;
  std::string source;
  std::string vector;
  std::string mode = "strict";
};

int cmd_bfs(const ValueSetSource& src, const BfsOptions& opt, std::ostream& out) {
  const auto vs = src.load("boolean");
  const auto g = parse_hypergraph(read_text_file(opt.graph));
  FrontierVector v;
  if (!opt.vector.empty()) {
    v = parse_vector(vs, g.vertices(), read_text_file(opt.vector));
  } else {
    const auto sources = split_keys(opt.source);
    for (const auto& s : sources)
      if (!g.vertices().contains(s)) throw KeyError("unknown source vertex '" + s + "'");
    v = indicator(vs, g.vertices(), sources);
  }
  const auto pair = build_incidence(vs, g);
  FrontierVector e, w;
  if (opt.mode == "sparse") {
    const auto cert = AnnihilatorCertificate::issue(vs);
    e = array_product_sparse(vs, cert, v, transpose(pair.e_out));
    w = array_product_sparse(vs, cert, e, pair.e_in);
  } else {
    e = bfs_edge_step(vs, v, pair.e_out);
    w = bfs_vertex_step(vs, e, pair.e_in);
  }
  out << labelled_keys("edges:", e.support()) << "\n";
  out << labelled_keys("vertices:", w.support()) << "\n";
  return kExitOk;
}

struct VerifyOptions {
  std::string theorem;
  int carrier = 0;
  HarnessBounds bounds;
  std::string out_path;
};

int cmd_verify(const ValueSetSource& src, const VerifyOptions& opt, std::ostream& out,
               std::ostream& err) {
  const bool conventions = opt.theorem == "conventions";
  std::ostringstream records;
  auto sink = [&](const VerificationReport& r) {
    const auto text = format_report(r, opt.theorem);
    if (opt.out_path.empty())
      out << text << std::flush;
    else
      records << text;
  };

  HarnessSummary summary;
  if (src.given()) {
    const auto vs = src.load("");
    if (!vs.is_finite()) {
      err << "value set '" << vs.id() << "' is evaluation-only: it cannot be verified\n";
      return kExitEvaluationOnly;
    }
    const Verifier verifier(opt.bounds);
    std::optional<VerificationReport> report;
    if (conventions)
      report = verifier.conventions(vs);
    else
      report = verifier.theorem_2_1(vs);
    summary.value_sets = 1;
    if (report) {
      summary.reports = 1;
      summary.conforming = report->bfs_conditions;
      summary.agreeing = report->all_agree();
      for (const auto& rec : report->records)
        if (rec.asserted) {
          ++summary.records;
          summary.agreements += rec.agreement();
        }
      sink(*report);
    }
  } else {
    if (opt.carrier == 0) throw BoundsError("verify needs --carrier or a value set");
    summary = conventions ? convention_harness(opt.carrier, opt.bounds, sink)
                          : theorem_2_1_harness(opt.carrier, opt.bounds, sink);
  }
  if (!opt.out_path.empty()) write_text_file(opt.out_path, records.str());

  err << "theorem " << opt.theorem << " seed " << opt.bounds.seed << ": " << summary.value_sets
      << " value sets, " << summary.conforming << " conforming, " << summary.reports
      << " reports, " << summary.agreeing << " agreements (" << summary.agreements << "/"
      << summary.records << " records)\n";
  return summary.all_agree() ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"One-step BFS on directed hypergraphs over arbitrary value sets"};
  app.require_subcommand(1);

  ValueSetSource check_src, bfs_src, verify_src;
  auto* check = app.add_subcommand("check", "Check the algebraic laws of a value set");
  check_src.add_to(*check);

  BfsOptions bfs_opt;
  auto* bfs = app.add_subcommand("bfs", "One BFS step on a hypergraph file");
  bfs_src.add_to(*bfs);
  bfs->add_option("--graph", bfs_opt.graph, "Hypergraph file (.dhg)")->required();
  auto* source = bfs->add_option("--source", bfs_opt.source, "Comma-separated source vertices");
  bfs->add_option("--vector", bfs_opt.vector, "Source vector file (.vec)")->excludes(source);
  bfs->add_option("--mode", bfs_opt.mode, "strict or sparse")
      ->check(CLI::IsMember({"strict", "sparse"}));

  VerifyOptions ver_opt;
  auto* verify = app.add_subcommand("verify", "Run a theorem harness");
  verify_src.add_to(*verify);
  verify->add_option("--theorem", ver_opt.theorem, "2.1 or conventions")
      ->required()
      ->check(CLI::IsMember({"2.1", "conventions"}));
  verify->add_option("--carrier", ver_opt.carrier, "Carrier size of enumerated value sets");
  verify->add_option("--max-vertices", ver_opt.bounds.max_vertices, "Exhaustive vertex bound");
  verify->add_option("--max-edges", ver_opt.bounds.max_edges, "Exhaustive edge bound");
  verify->add_option("--seed", ver_opt.bounds.seed, "Seed for sampled instances");
  verify->add_option("--jobs", ver_opt.bounds.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", ver_opt.out_path, "Write records to this file");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*check) return cmd_check(check_src, out, err);
    if (*bfs) return cmd_bfs(bfs_src, bfs_opt, out);
    return cmd_verify(verify_src, ver_opt, out, err);
  } catch (const CertificationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCertification;
  } catch (const NotCheckableError& e) {
    err << "error: " << e.what() << "\n";
    return kExitEvaluationOnly;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace hyperbfs
