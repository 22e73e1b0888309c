#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pfvs/pfvs.hpp"

namespace {

using namespace pfvs;

// Exit codes: 0 every check passed (guard skips allowed), 1 at least one
// verified inequality or proof obligation failed, 2 bad usage or unreadable
// input.  When one batch hits both kinds of trouble the violation wins,
// since that is the result worth acting on.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct ExitTracker {
  bool violation = false;
  bool usage = false;
  int code() const {
    return violation ? kExitViolation : usage ? kExitUsage : kExitOk;
  }
};

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;
  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) {
      std::cerr << "error: cannot open '" << path << "' for writing\n";
      std::exit(kExitUsage);
    }
    os = &file;
  }
  std::ostream& stream() { return *os; }
};

struct CommonOpts {
  std::vector<std::string> files;
  std::string format = "table";
  std::string out_path;
  SolveGuards guards;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_files) {
  if (with_files)
    cmd->add_option("files", o.files,
                    "instance files in pdg format; stdin when omitted");
  cmd->add_option("--format", o.format, "table for humans, records for tools")
      ->check(CLI::IsMember({"table", "records"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out_path, "write the report to this file");
  cmd->add_option("--guard-n", o.guards.max_n,
                  "largest n the exact solvers accept")
      ->capture_default_str();
  cmd->add_option("--guard-nodes", o.guards.max_nodes,
                  "search tree node budget")
      ->capture_default_str();
  cmd->add_option("--guard-cycles", o.guards.max_cycles,
                  "dicycle enumeration cap")
      ->capture_default_str();
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << row[c];
      if (c + 1 < row.size())
        out << std::string(width[c] - row[c].size(), ' ');
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

std::string opt_dec(const std::optional<Rat>& r) {
  return r ? rat_decimal(*r) : std::string("-");
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

// Applies fn to every named instance, or to stdin when the list is empty.
// Unreadable or malformed inputs are diagnosed on stderr and marked as
// usage trouble without stopping the rest of the batch.
template <typename Fn>
void for_each_instance(const std::vector<std::string>& files,
                       ExitTracker& exits, Fn fn) {
  auto guarded = [&](const std::string& name, auto parse) {
    std::optional<PlanarDigraph> g;
    try {
      g = parse();
    } catch (const Error& e) {
      std::cerr << name << ": " << e.what() << '\n';
      exits.usage = true;
      return;
    }
    fn(name, *g);
  };
  if (files.empty()) {
    guarded("(stdin)", [] { return read_pdg(std::cin); });
    return;
  }
  for (const std::string& path : files)
    guarded(path, [&] { return read_pdg_file(path); });
}

std::string failed_checks(const InstanceAnalysis& a) {
  std::vector<std::string> bad;
  if (!a.ly_ok) bad.push_back("fas-vs-packing");
  if (!a.theorem_ok) bad.push_back("tau-bound");
  if (!a.packing_ok) bad.push_back("packing-bound");
  if (!a.tau_star_le_tau) bad.push_back("tau-star-vs-tau");
  if (!a.tau_star_le_ng) bad.push_back("tau-star-vs-n-over-g");
  if (!a.ratio_ok) bad.push_back("ratio");
  if (!a.cover_covers_ok) bad.push_back("cover-misses-arc");
  if (!a.cover_third_ok) bad.push_back("cover-third");
  if (!a.cover_chain_ok) bad.push_back("cover-chain");
  if (!a.certificate_ok) bad.push_back("certificate");
  std::string out;
  for (std::size_t i = 0; i < bad.size(); ++i) {
    if (i) out += ',';
    out += bad[i];
  }
  return out.empty() ? std::string("-") : out;
}

int run_solve(const CommonOpts& o) {
  Output out;
  out.open(o.out_path);
  ExitTracker exits;
  bool records = o.format == "records";
  RecordWriter writer(out.stream());
  std::vector<std::vector<std::string>> rows;

  for_each_instance(o.files, exits, [&](const std::string& name,
                                        const PlanarDigraph& g) {
    Record r;
    r.set("event", "solve");
    r.set("file", name);
    std::string status = "ok", note = "-";
    std::optional<InstanceAnalysis> a;
    try {
      a = analyze_instance(g, o.guards);
    } catch (const GuardExceeded& e) {
      status = "skipped";
      note = e.what();
    }
    if (a) {
      fill_analysis_record(r, *a);
      r.set("fvs", join_ints(a->fvs));
      r.set("fas_arcs", join_ints(a->fas));
      if (!a->all_ok()) {
        status = "violation";
        note = failed_checks(*a);
        exits.violation = true;
      }
    }
    r.set("status", status);
    if (status != "ok") r.set("note", note);
    if (records) {
      writer.write(r);
      return;
    }
    if (a)
      rows.push_back({name, std::to_string(a->n), std::to_string(a->m),
                      a->girth ? std::to_string(*a->girth) : "-",
                      std::to_string(a->nu), std::to_string(a->fas_size),
                      std::to_string(a->tau), rat_decimal(a->tau_star),
                      opt_dec(a->theorem_bnd), opt_dec(a->ratio), status,
                      note});
    else
      rows.push_back({name, std::to_string(g.n()), std::to_string(g.m()),
                      "-", "-", "-", "-", "-", "-", "-", status, note});
  });

  if (records)
    writer.finish();
  else
    print_table(out.stream(),
                {"file", "n", "m", "girth", "nu", "fas", "tau", "tau*",
                 "bound", "ratio", "status", "note"},
                rows);
  return exits.code();
}

std::string tri_state(bool applicable, bool ok) {
  return !applicable ? "na" : ok ? "pass" : "fail";
}

int run_verify(const CommonOpts& o) {
  Output out;
  out.open(o.out_path);
  ExitTracker exits;
  bool records = o.format == "records";
  RecordWriter writer(out.stream());
  std::vector<std::vector<std::string>> rows;

  for_each_instance(o.files, exits, [&](const std::string& name,
                                        const PlanarDigraph& whole) {
    std::vector<PlanarDigraph> comps = split_components(whole);
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      std::string status = "ok", note = "-";
      std::optional<ProofTrace> tr;
      try {
        tr = verify_proof_instance(comps[ci], o.guards);
        if (!tr->all_ok()) {
          status = "violation";
          exits.violation = true;
        }
      } catch (const DigirthViolation& e) {
        status = "violation";
        note = e.what();
        exits.violation = true;
      } catch (const GuardExceeded& e) {
        status = "skipped";
        note = e.what();
      }

      Record r;
      r.set("event", "verify");
      r.set("file", name);
      r.set("comp", static_cast<int>(ci));
      r.set("n", comps[ci].n());
      r.set("m", comps[ci].m());
      if (tr) {
        r.set("girth", tr->girth ? std::to_string(*tr->girth) : "none");
        r.set("packing", tr->packing_size);
        r.set("phi", tr->phi_total);
        r.set("phi_expected", tr->phi_expected);
        r.set("phi_ok", tr->phi_ok);
      }
      r.set("status", status);
      if (status != "ok") r.set("note", note);
      if (records)
        writer.write(r);
      else
        rows.push_back({name, std::to_string(ci), "summary", "-",
                        tr ? std::to_string(tr->phi_total) : "-", "-", "-",
                        "-", "-", "-", status, note});
      if (!tr) continue;

      for (const NodeCheck& nc : tr->nodes) {
        if (!nc.ok()) exits.violation = true;
        Record nr;
        nr.set("event", "region");
        nr.set("file", name);
        nr.set("comp", static_cast<int>(ci));
        nr.set("node", nc.report.node);
        nr.set("k", nc.report.k);
        nr.set("phi", nc.report.phi);
        nr.set("pieces", static_cast<long>(nc.report.pieces.size()));
        nr.set("t2", nc.t2);
        nr.set("t3", nc.t3);
        nr.set("intersecting", nc.intersecting);
        nr.set("claim_bound", nc.report.claim_bound);
        nr.set("claim", tri_state(nc.claim_applicable, nc.claim_ok));
        nr.set("t3_ok", nc.t3_ok);
        nr.set("lemma1", tri_state(nc.lemma1_applicable, nc.lemma1_ok));
        nr.set("heavy_faces_ok", nc.t3_matches_h);
        nr.set("lemma2", tri_state(nc.lemma2_applicable, nc.lemma2_ok));
        nr.set("ok", nc.ok());
        if (records)
          writer.write(nr);
        else
          rows.push_back(
              {name, std::to_string(ci),
               nc.report.node == -1 ? "outer" : std::to_string(nc.report.node),
               std::to_string(nc.report.k), std::to_string(nc.report.phi),
               std::to_string(nc.t2), std::to_string(nc.t3),
               tri_state(nc.claim_applicable, nc.claim_ok),
               tri_state(nc.lemma1_applicable, nc.lemma1_ok),
               tri_state(nc.lemma2_applicable, nc.lemma2_ok),
               nc.ok() ? "ok" : "violation", "-"});
      }
    }
  });

  if (records)
    writer.finish();
  else
    print_table(out.stream(),
                {"file", "comp", "node", "k", "phi", "t2", "t3", "claim",
                 "lemma1", "lemma2", "status", "note"},
                rows);
  return exits.code();
}

int run_oracle(const CommonOpts& o) {
  Output out;
  out.open(o.out_path);
  ExitTracker exits;
  bool records = o.format == "records";
  RecordWriter writer(out.stream());
  std::vector<std::vector<std::string>> rows;

  for_each_instance(o.files, exits, [&](const std::string& name,
                                        const PlanarDigraph& g) {
    Record r;
    r.set("event", "oracle");
    r.set("file", name);
    r.set("n", g.n());
    r.set("m", g.m());
    std::string tau = "-", nu = "-", status = "ok", note = "-";
    try {
      tau = std::to_string(brute_force_tau(g));
      nu = std::to_string(brute_force_packing(g));
    } catch (const GuardExceeded& e) {
      status = "skipped";
      note = e.what();
    }
    if (tau != "-") r.set("tau", tau);
    if (nu != "-") r.set("nu", nu);
    r.set("status", status);
    if (status != "ok") r.set("note", note);
    if (records)
      writer.write(r);
    else
      rows.push_back({name, std::to_string(g.n()), std::to_string(g.m()),
                      tau, nu, status, note});
  });

  if (records)
    writer.finish();
  else
    print_table(out.stream(),
                {"file", "n", "m", "tau", "nu", "status", "note"}, rows);
  return exits.code();
}

struct SweepOpts {
  CommonOpts common;
  std::string families = "grid,cylinder-grid,stacked-cycles,random-planar-filtered";
  SweepSpec spec;
};

int run_sweep_cmd(SweepOpts& o) {
  o.spec.families.clear();
  std::stringstream ss(o.families);
  std::string fam;
  while (std::getline(ss, fam, ',')) {
    if (fam.empty()) continue;
    if (fam != "grid" && fam != "cylinder-grid" && fam != "stacked-cycles" &&
        fam != "random-planar-filtered") {
      std::cerr << "error: unknown family '" << fam << "'\n";
      return kExitUsage;
    }
    o.spec.families.push_back(fam);
  }
  o.spec.guards = o.common.guards;

  Output out;
  out.open(o.common.out_path);
  if (o.common.format == "records") {
    RecordWriter writer(out.stream());
    SweepSummary summary = run_sweep(o.spec, writer);
    writer.finish();
    return summary.ok() ? kExitOk : kExitViolation;
  }

  std::ostringstream capture;
  RecordWriter writer(capture);
  SweepSummary summary = run_sweep(o.spec, writer);
  std::vector<std::vector<std::string>> rows;
  for (const SweepCell& c : summary.cells)
    rows.push_back({c.family, std::to_string(c.n), std::to_string(c.g),
                    std::to_string(c.solved), std::to_string(c.skipped),
                    c.tau_max >= 0 ? std::to_string(c.tau_max) : "-",
                    opt_dec(c.theorem_bnd),
                    c.nu_max >= 0 ? std::to_string(c.nu_max) : "-",
                    opt_dec(c.packing_bnd), opt_dec(c.ratio_max),
                    c.violations > 0  ? "violation"
                    : c.solved == 0   ? "skipped"
                                      : "ok"});
  print_table(out.stream(),
              {"family", "n", "g", "solved", "skipped", "tau_max", "bound",
               "nu_max", "nu_bound", "ratio_max", "status"},
              rows);
  if (summary.worst_ratio)
    out.stream() << "worst ratio: " << rat_str(*summary.worst_ratio) << " = "
                 << rat_decimal(*summary.worst_ratio) << '\n';
  if (!summary.ok()) {
    // Reprint the failing instances in full so the candidate survives.
    out.stream() << "violations:\n";
    std::istringstream lines(capture.str());
    std::string line;
    while (std::getline(lines, line))
      if (line.find("status=violation") != std::string::npos)
        out.stream() << line << '\n';
  }
  return summary.ok() ? kExitOk : kExitViolation;
}

struct GenOpts {
  std::string family;
  int n = 0;
  int g = 4;
  std::uint64_t seed = 1;
  int count = 1;
  std::string out_dir;
  SolveGuards guards;
};

int run_gen(const GenOpts& o) {
  std::error_code ec;
  std::filesystem::create_directories(o.out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create '" << o.out_dir << "': " << ec.message()
              << '\n';
    return kExitUsage;
  }
  std::ofstream index_file(o.out_dir + "/index.records");
  if (!index_file) {
    std::cerr << "error: cannot write index in '" << o.out_dir << "'\n";
    return kExitUsage;
  }
  RecordWriter index(index_file);

  int produced = 0;
  long attempts = std::max(50L, 20L * o.count);
  for (long t = 0; t < attempts && produced < o.count; ++t) {
    GeneratorSpec gs;
    gs.family = o.family;
    gs.n_target = o.n;
    gs.g_target = o.g;
    gs.seed = o.seed + static_cast<std::uint64_t>(t);
    PlanarDigraph g;
    try {
      g = generate(gs);
    } catch (const InfeasibleSpec& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const RetriesExhausted&) {
      continue;
    }
    std::string base = o.family + "-n" + std::to_string(o.n) + "-g" +
                       std::to_string(o.g) + "-s" + std::to_string(gs.seed) +
                       ".pdg";
    write_pdg_file(o.out_dir + "/" + base, g);
    ++produced;

    Record r;
    r.set("event", "instance");
    r.set("file", base);
    r.set("family", o.family);
    r.set("seed", static_cast<long>(gs.seed));
    try {
      InstanceAnalysis a = analyze_instance(g, o.guards);
      fill_analysis_record(r, a);
      r.set("status", a.all_ok() ? "ok" : "violation");
    } catch (const GuardExceeded& e) {
      r.set("n", g.n());
      r.set("m", g.m());
      r.set("status", "skipped");
      r.set("note", e.what());
    }
    index.write(r);
  }
  index.finish();
  std::cout << "wrote " << produced << " instance" << (produced == 1 ? "" : "s")
            << " to " << o.out_dir << '\n';
  if (produced < o.count) {
    std::cerr << "error: only " << produced << " of " << o.count
              << " instances could be generated\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Feedback sets and dicycle packings of embedded planar digraphs"};
  app.require_subcommand(1);

  CommonOpts solve_opts;
  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "exact invariants and bound checks per instance");
  add_common(solve_cmd, solve_opts, true);

  CommonOpts verify_opts;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify-proof", "region decomposition checks per instance");
  add_common(verify_cmd, verify_opts, true);

  CommonOpts oracle_opts;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "independent brute force answers per instance");
  add_common(oracle_cmd, oracle_opts, true);

  SweepOpts sweep_opts;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "generate and check a whole grid of instances");
  add_common(sweep_cmd, sweep_opts.common, false);
  sweep_cmd->add_option("--families", sweep_opts.families,
                        "comma separated generator families")
      ->capture_default_str();
  sweep_cmd->add_option("--n-min", sweep_opts.spec.n_min)
      ->capture_default_str();
  sweep_cmd->add_option("--n-max", sweep_opts.spec.n_max)
      ->capture_default_str();
  sweep_cmd->add_option("--n-step", sweep_opts.spec.n_step)
      ->capture_default_str();
  sweep_cmd->add_option("--g-min", sweep_opts.spec.g_min)
      ->capture_default_str();
  sweep_cmd->add_option("--g-max", sweep_opts.spec.g_max)
      ->capture_default_str();
  sweep_cmd->add_option("--per-cell", sweep_opts.spec.per_cell,
                        "instances per family/n/g cell")
      ->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_opts.spec.base_seed,
                        "base seed for the whole sweep")
      ->capture_default_str();

  GenOpts gen_opts;
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "write a corpus of instances plus an index");
  gen_cmd->add_option("--family", gen_opts.family, "generator family")
      ->required();
  gen_cmd->add_option("--n", gen_opts.n, "target vertex count")->required();
  gen_cmd->add_option("--g", gen_opts.g, "target digirth")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen_opts.seed, "seed of the first instance")
      ->capture_default_str();
  gen_cmd->add_option("--count", gen_opts.count, "instances to produce")
      ->capture_default_str();
  gen_cmd->add_option("--out-dir", gen_opts.out_dir, "output directory")
      ->required();
  gen_cmd->add_option("--guard-n", gen_opts.guards.max_n)
      ->capture_default_str();
  gen_cmd->add_option("--guard-nodes", gen_opts.guards.max_nodes)
      ->capture_default_str();
  gen_cmd->add_option("--guard-cycles", gen_opts.guards.max_cycles)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve_opts);
    if (*verify_cmd) return run_verify(verify_opts);
    if (*oracle_cmd) return run_oracle(oracle_opts);
    if (*sweep_cmd) return run_sweep_cmd(sweep_opts);
    if (*gen_cmd) return run_gen(gen_opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
