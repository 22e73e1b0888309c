#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfvs/analysis.hpp"
#include "pfvs/generators.hpp"
#include "pfvs/pdg_io.hpp"
#include "pfvs/report.hpp"

namespace pfvs {

struct SweepSpec {
  std::vector<std::string> families = {"grid", "cylinder-grid",
                                       "stacked-cycles",
                                       "random-planar-filtered"};
  int n_min = 6, n_max = 14, n_step = 2;
  int g_min = 4, g_max = 5;
  int per_cell = 3;
  std::uint64_t base_seed = 1;
  SolveGuards guards;
};

struct SweepCell {
  std::string family;
  int n = 0, g = 0;
  int solved = 0, skipped = 0, violations = 0;
  int tau_max = -1, nu_max = -1;
  std::optional<Rat> theorem_bnd, packing_bnd;
  std::optional<Rat> ratio_max;
};

struct SweepSummary {
  std::vector<SweepCell> cells;
  int solved = 0, skipped = 0, violations = 0;
  std::optional<Rat> worst_ratio;

  bool ok() const { return violations == 0; }
};

inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t sweep_seed(std::uint64_t base, std::size_t family,
                                int n, int g, int rep) {
  std::uint64_t key = (static_cast<std::uint64_t>(family) << 48) ^
                      (static_cast<std::uint64_t>(n) << 32) ^
                      (static_cast<std::uint64_t>(g) << 16) ^
                      static_cast<std::uint64_t>(rep);
  return mix_seed(base ^ mix_seed(key));
}

inline void fill_analysis_record(Record& r, const InstanceAnalysis& a) {
  r.set("n", a.n);
  r.set("m", a.m);
  r.set("g_declared", a.declared_g);
  r.set("girth", a.girth ? std::to_string(*a.girth) : "none");
  r.set("nu", a.nu);
  r.set("fas", a.fas_size);
  r.set("tau", a.tau);
  r.set("tau_star", a.tau_star);
  if (a.theorem_bnd) r.set("theorem_bound", *a.theorem_bnd);
  if (a.packing_bnd) r.set("packing_bound", *a.packing_bnd);
  if (a.ratio) r.set("ratio", *a.ratio);
  r.set("cover_greedy", static_cast<long>(a.cover_greedy.size()));
  r.set("cover_min", static_cast<long>(a.cover_min.size()));
  r.set("ly_ok", a.ly_ok);
  r.set("theorem_ok", a.theorem_ok);
  r.set("packing_ok", a.packing_ok);
  r.set("ratio_ok", a.ratio_ok);
  r.set("cover_ok",
        a.cover_covers_ok && a.cover_third_ok && a.cover_chain_ok);
  r.set("certificate_ok", a.certificate_ok);
  r.set("all_ok", a.all_ok());
}

// Runs the whole grid of (family, n, g, rep) cells, emitting one record per
// instance plus one per cell and a closing summary.  The record stream
// depends only on the spec, so equal specs give equal bytes.
inline SweepSummary run_sweep(const SweepSpec& spec, RecordWriter& out) {
  SweepSummary summary;
  {
    Record cfg;
    cfg.set("event", "sweep-config");
    std::string fams;
    for (const std::string& f : spec.families) {
      if (!fams.empty()) fams += ",";
      fams += f;
    }
    cfg.set("families", fams);
    cfg.set("n_min", spec.n_min);
    cfg.set("n_max", spec.n_max);
    cfg.set("n_step", spec.n_step);
    cfg.set("g_min", spec.g_min);
    cfg.set("g_max", spec.g_max);
    cfg.set("per_cell", spec.per_cell);
    cfg.set("seed", static_cast<long>(spec.base_seed));
    out.write(cfg);
  }

  int step = spec.n_step < 1 ? 1 : spec.n_step;
  for (std::size_t fi = 0; fi < spec.families.size(); ++fi) {
    for (int n = spec.n_min; n <= spec.n_max; n += step) {
      for (int g = spec.g_min; g <= spec.g_max; ++g) {
        SweepCell cell;
        cell.family = spec.families[fi];
        cell.n = n;
        cell.g = g;
        if (n >= 3 && g >= 4) {
          cell.theorem_bnd = theorem_bound(n, g);
          cell.packing_bnd = packing_bound(n, g);
        }
        for (int rep = 0; rep < spec.per_cell; ++rep) {
          std::uint64_t seed = sweep_seed(spec.base_seed, fi, n, g, rep);
          Record r;
          r.set("event", "sweep-instance");
          r.set("family", cell.family);
          r.set("n", n);
          r.set("g", g);
          r.set("rep", rep);
          r.set("seed", static_cast<long>(seed));

          GeneratorSpec gs;
          gs.family = cell.family;
          gs.n_target = n;
          gs.g_target = g;
          gs.seed = seed;
          PlanarDigraph instance;
          try {
            instance = generate(gs);
          } catch (const Error& e) {
            ++cell.skipped;
            r.set("status", "skipped");
            r.set("reason", e.what());
            out.write(r);
            continue;
          }
          try {
            InstanceAnalysis a = analyze_instance(instance, spec.guards);
            fill_analysis_record(r, a);
            ++cell.solved;
            if (a.tau > cell.tau_max) cell.tau_max = a.tau;
            if (a.nu > cell.nu_max) cell.nu_max = a.nu;
            if (a.ratio &&
                (!cell.ratio_max || *a.ratio > *cell.ratio_max))
              cell.ratio_max = *a.ratio;
            if (a.all_ok()) {
              r.set("status", "ok");
            } else {
              ++cell.violations;
              r.set("status", "violation");
              r.set("pdg", pdg_string(instance));
            }
          } catch (const GuardExceeded& e) {
            ++cell.skipped;
            r.set("status", "skipped");
            r.set("reason", e.what());
          }
          out.write(r);
        }

        Record c;
        c.set("event", "sweep-cell");
        c.set("family", cell.family);
        c.set("n", n);
        c.set("g", g);
        c.set("solved", cell.solved);
        c.set("skipped", cell.skipped);
        c.set("violations", cell.violations);
        if (cell.tau_max >= 0) c.set("tau_max", cell.tau_max);
        if (cell.nu_max >= 0) c.set("nu_max", cell.nu_max);
        if (cell.theorem_bnd) c.set("theorem_bound", *cell.theorem_bnd);
        if (cell.packing_bnd) c.set("packing_bound", *cell.packing_bnd);
        if (cell.ratio_max) c.set("ratio_max", *cell.ratio_max);
        c.set("status", cell.violations > 0  ? "violation"
                        : cell.solved == 0   ? "skipped"
                                             : "ok");
        out.write(c);

        summary.solved += cell.solved;
        summary.skipped += cell.skipped;
        summary.violations += cell.violations;
        if (cell.ratio_max &&
            (!summary.worst_ratio || *cell.ratio_max > *summary.worst_ratio))
          summary.worst_ratio = *cell.ratio_max;
        summary.cells.push_back(std::move(cell));
      }
    }
  }

  Record s;
  s.set("event", "sweep-summary");
  s.set("cells", static_cast<long>(summary.cells.size()));
  s.set("solved", summary.solved);
  s.set("skipped", summary.skipped);
  s.set("violations", summary.violations);
  if (summary.worst_ratio) s.set("ratio_max", *summary.worst_ratio);
  s.set("all_ok", summary.ok());
  out.write(s);
  return summary;
}

}  // namespace pfvs
