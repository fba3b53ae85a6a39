#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hsr/generate.hpp"
#include "hsr/oracle.hpp"
#include "hsr/scene.hpp"
#include "hsr/scene_io.hpp"
#include "hsr/svg.hpp"
#include "hsr/sweep.hpp"

namespace {

using nlohmann::json;

json counters_json(const hsr::SweepCounters& c, std::size_t n) {
  return json{{"n", n},
              {"k", c.k},
              {"background_regions", c.background_regions},
              {"stations", c.stations},
              {"slabs", c.slabs},
              {"node_visits", c.node_visits},
              {"cursor_advances", c.cursor_advances},
              {"paints", c.paints},
              {"slab_setup_work", c.slab_setup_work},
              {"precompute_work", c.precompute_work},
              {"sequence_entries", c.sequence_entries},
              {"peak_live_entries", c.peak_live_entries},
              {"region_comparisons", c.region.comparisons},
              {"region_inserts", c.region.inserts},
              {"region_erases", c.region.erases},
              {"region_leaves_scanned", c.region.leaves_scanned},
              {"region_peak_leaves", c.region.peak_leaves},
              {"total_operations", c.total_operations()}};
}

hsr::Scene load_canonical(const std::string& path) {
  const hsr::Scene scene = hsr::read_scene_file(path);
  const hsr::ValidationReport report = hsr::validate(scene);
  if (!report.ok()) throw hsr::InvalidScene(report);
  return hsr::canonicalize(scene);
}

template <typename Write>
void to_path_or_stdout(const std::string& path, Write write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write(out);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

double log2n(std::size_t n) { return std::log2(static_cast<double>(std::max<std::size_t>(n, 2))); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Visible regions of stacked axis-parallel rectangles viewed from above"};
  app.require_subcommand(1);

  std::string kind_name = "uniform";
  std::size_t n = 0;
  std::uint64_t seed = 1;
  std::string output;

  auto* gen = app.add_subcommand("gen", "Write a generated scene");
  gen->add_option("--kind", kind_name, "uniform | nested | grid-stress")->capture_default_str();
  gen->add_option("--n", n, "Number of rectangles")->required();
  gen->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen->add_option("-o,--output", output, "Scene file (default stdout)");

  std::string input;
  bool report_background = false;
  bool coalesce = false;
  std::optional<std::size_t> slab_size;
  std::string counters_path;
  std::string svg_path;
  auto* run = app.add_subcommand("run", "Compute visible regions as CSV");
  run->add_option("scene", input, "Scene file")->required();
  run->add_option("-o,--output", output, "Regions CSV (default stdout)");
  run->add_flag("--report-background", report_background, "Also emit bounded background regions");
  run->add_flag("--coalesce", coalesce, "Merge x-adjacent regions of one owner and strip");
  run->add_option("--slab-size", slab_size, "Events per slab");
  run->add_option("--counters", counters_path, "Write operation counters as JSON");
  run->add_option("--svg", svg_path, "Also render the regions as SVG");

  std::string regions_path;
  auto* verify = app.add_subcommand("verify", "Check a regions CSV against the brute-force oracle");
  verify->add_option("scene", input, "Scene file")->required();
  verify->add_option("regions", regions_path, "Regions CSV")->required();

  auto* render = app.add_subcommand("render", "Draw a regions CSV as SVG");
  render->add_option("regions", regions_path, "Regions CSV")->required();
  render->add_option("-o,--output", output, "SVG file (default stdout)");

  int min_exp = 10;
  int max_exp = 16;
  auto* bench = app.add_subcommand("bench", "Operation counts over doubling n");
  bench->add_option("--kind", kind_name, "uniform | nested | grid-stress")->capture_default_str();
  bench->add_option("--min-exp", min_exp, "Smallest n = 2^min-exp")->capture_default_str();
  bench->add_option("--max-exp", max_exp, "Largest n = 2^max-exp")->capture_default_str();
  bench->add_option("--seed", seed, "Random seed")->capture_default_str();
  bench->add_option("--slab-size-override", slab_size, "Events per slab");
  bench->add_option("--json", counters_path, "Write per-n counters as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const auto kind = hsr::parse_scene_kind(kind_name);
      if (!kind) throw CLI::ValidationError("--kind", "unknown scene kind '" + kind_name + "'");
      const hsr::Scene scene = hsr::generate(*kind, n, seed);
      to_path_or_stdout(output, [&](std::ostream& out) { hsr::write_scene(out, scene); });
      return 0;
    }

    if (*run) {
      const hsr::Scene scene = load_canonical(input);
      hsr::SweepOptions options;
      options.report_background = report_background;
      options.slab_size = slab_size;
      options.debug_checks = hsr::debug_checks_from_env();
      if (options.debug_checks && scene.size() > hsr::kDebugCheckLimit) {
        std::cerr << "note: HSR_DEBUG_CHECKS ignored for more than " << hsr::kDebugCheckLimit
                  << " rectangles\n";
      }
      hsr::SweepResult result = hsr::run(scene, options);
      if (coalesce) result.regions = hsr::coalesce(std::move(result.regions));
      to_path_or_stdout(output, [&](std::ostream& out) { hsr::write_regions(out, result.regions); });
      if (!counters_path.empty()) {
        to_path_or_stdout(counters_path, [&](std::ostream& out) {
          out << counters_json(result.counters, scene.size()).dump(2) << '\n';
        });
      }
      if (!svg_path.empty()) {
        to_path_or_stdout(svg_path, [&](std::ostream& out) { hsr::write_svg(out, result.regions); });
      }
      std::cerr << "k=" << result.counters.k << " regions=" << result.regions.size() << '\n';
      return 0;
    }

    if (*verify) {
      const hsr::Scene scene = load_canonical(input);
      const std::vector<hsr::VisibleRegion> regions = hsr::read_regions_file(regions_path);
      const hsr::OwnerGrid grid(scene);
      const hsr::Verdict verdict = hsr::verify(grid, regions);
      if (verdict.ok) {
        std::cout << "OK: " << regions.size() << " regions match the oracle\n";
        return 0;
      }
      std::cout << "FAIL: " << verdict.message;
      if (verdict.cell) {
        const auto [i, j] = *verdict.cell;
        std::cout << " at cell x=[" << grid.xs()[i] << "," << grid.xs()[i + 1] << "] y=["
                  << grid.ys()[j] << "," << grid.ys()[j + 1] << "]";
      }
      std::cout << '\n';
      return 1;
    }

    if (*render) {
      const std::vector<hsr::VisibleRegion> regions = hsr::read_regions_file(regions_path);
      to_path_or_stdout(output, [&](std::ostream& out) { hsr::write_svg(out, regions); });
      return 0;
    }

    if (*bench) {
      const auto kind = hsr::parse_scene_kind(kind_name);
      if (!kind) throw CLI::ValidationError("--kind", "unknown scene kind '" + kind_name + "'");
      json rows = json::array();
      std::printf("%8s %12s %14s %10s %12s %8s\n", "n", "k", "operations", "ops/nlog", "peak",
                  "peak/n");
      for (int e = min_exp; e <= max_exp; ++e) {
        const std::size_t size = std::size_t{1} << e;
        const hsr::Scene scene = hsr::canonicalize(hsr::generate(*kind, size, seed));
        hsr::SweepOptions options;
        options.slab_size = slab_size;
        const hsr::SweepCounters c = hsr::sweep(scene, options, nullptr);
        const double time_ratio = static_cast<double>(c.total_operations()) /
                                  (static_cast<double>(size + c.k) * log2n(size));
        const double space_ratio =
            static_cast<double>(c.peak_live_entries) / static_cast<double>(size);
        std::printf("%8zu %12llu %14llu %10.3f %12llu %8.3f\n", size,
                    static_cast<unsigned long long>(c.k),
                    static_cast<unsigned long long>(c.total_operations()), time_ratio,
                    static_cast<unsigned long long>(c.peak_live_entries), space_ratio);
        std::fflush(stdout);
        json row = counters_json(c, size);
        row["time_ratio"] = time_ratio;
        row["space_ratio"] = space_ratio;
        rows.push_back(row);
      }
      if (!counters_path.empty()) {
        to_path_or_stdout(counters_path, [&](std::ostream& out) { out << rows.dump(2) << '\n'; });
      }
      return 0;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
