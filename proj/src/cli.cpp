// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "maskopt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "maskopt/error.hpp"
#include "maskopt/greedy.hpp"
#include "maskopt/io.hpp"
#include "maskopt/noisy.hpp"
#include "maskopt/parallel.hpp"
#include "maskopt/phantom.hpp"
#include "maskopt/selection.hpp"
#include "maskopt/serialization.hpp"
#include "maskopt/theory.hpp"

namespace maskopt::cli {

using nlohmann::json;
namespace fs = std::filesystem;

std::size_t parse_budget(const std::string& text, const SubsetFamily& family) {
  const Shape s = family.shape();
  auto fail = [&text]() -> std::size_t {
    throw InvalidArgument("cannot parse budget '" + text +
                          "' (expected N, Nrows, Ncols, Nlines or a rate like 0.25)");
  };
  if (text.empty()) return fail();
  std::size_t pos = 0;
  while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                               text[pos] == '.' || text[pos] == 'e' || text[pos] == '-')) {
    ++pos;
  }
  const std::string number = text.substr(0, pos);
  const std::string suffix = text.substr(pos);
  if (number.empty()) return fail();
  const bool is_rate = number.find_first_of(".e") != std::string::npos;
  if (is_rate) {
    if (!suffix.empty()) return fail();
    double rate = 0.0;
    try {
      rate = std::stod(number);
    } catch (...) {
      return fail();
    }
    if (!(rate > 0.0 && rate <= 1.0)) throw InvalidArgument("budget rate must lie in (0, 1]");
    return static_cast<std::size_t>(std::floor(rate * static_cast<double>(s.size())));
  }
  std::size_t count = 0;
  try {
    count = std::stoull(number);
  } catch (...) {
    return fail();
  }
  if (suffix.empty()) return count;
  if (suffix == "rows") return count * s.cols;
  if (suffix == "cols") return count * s.rows;
  if (suffix == "lines") {
    switch (family.kind()) {
      case FamilyKind::rows:
        return count * s.cols;
      case FamilyKind::cols:
        return count * s.rows;
      case FamilyKind::points:
        return count;
      case FamilyKind::rows_and_cols:
        if (s.rows != s.cols) throw InvalidArgument("'lines' budget is ambiguous for non-square grids");
        return count * s.cols;
    }
  }
  return fail();
}

namespace {

struct DecoderFlags {
  std::string kind = "bp";
  int iters = 2000;
  double lambda = 1e-4;
  double epsilon = 0.0;
  double tol = 1e-6;
  int levels = -1;
  int inner = 20;

  void attach(CLI::App* app) {
    app->add_option("--decoder", kind, "zero_fill | bp | tv")->capture_default_str();
    app->add_option("--iters", iters, "maximum solver iterations")->capture_default_str();
    app->add_option("--lambda", lambda, "regularization weight")->capture_default_str();
    app->add_option("--epsilon", epsilon, "noise tolerance on the data residual")
        ->capture_default_str();
    app->add_option("--tol", tol, "relative objective change to stop")->capture_default_str();
    app->add_option("--levels", levels, "Haar levels for bp (-1 = default)")
        ->capture_default_str();
    app->add_option("--tv-inner", inner, "dual iterations of the TV prox")->capture_default_str();
  }

  DecoderConfig build() const {
    DecoderConfig cfg;
    cfg.kind = parse_decoder_kind(kind);
    cfg.max_iters = iters;
    cfg.lambda = lambda;
    cfg.epsilon = epsilon;
    cfg.tol = tol;
    cfg.wavelet_levels = levels;
    cfg.tv_inner_iters = inner;
    cfg.validate();
    return cfg;
  }

  json to_json() const {
    return {{"decoder", kind}, {"iters", iters},  {"lambda", lambda}, {"epsilon", epsilon},
            {"tol", tol},      {"levels", levels}, {"tv_inner", inner}};
  }
};

json base_manifest(const std::string& command, int argc, const char* const* argv,
                   bool timestamp) {
  json args = json::array();
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
  json m = {{"tool", "maskopt"}, {"command", command}, {"args", std::move(args)}};
  if (timestamp) {
    m["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
  }
  return m;
}

void write_json_file(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

fs::path manifest_path_for(const fs::path& output) {
  fs::path p = output;
  p.replace_extension(".manifest.json");
  return p;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw DataError("cannot create directory " + dir.string());
}

std::vector<ComplexImage> images_of(const std::vector<NamedImage>& named) {
  std::vector<ComplexImage> out;
  out.reserve(named.size());
  for (const auto& n : named) out.push_back(n.image);
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Shape parse_shape(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw InvalidArgument("shape must look like 32x32");
  try {
    return Shape{std::stoull(text.substr(0, x)), std::stoull(text.substr(x + 1))};
  } catch (...) {
    throw InvalidArgument("shape must look like 32x32");
  }
}

PerformanceMeasure metric_from(const std::string& name) {
  PerformanceMeasure m;
  m.kind = parse_metric_kind(name);
  return m;
}

// ---------------------------------------------------------------------------

struct PhantomCommand {
  std::string kind = "wavelet_sparse";
  std::size_t rows = 32, cols = 32, count = 10;
  double sparsity = 0.01;
  int rectangles = 3;
  std::uint64_t seed = 0;
  std::string out_dir;
  bool timestamp = false;

  void attach(CLI::App* app) {
    app->add_option("--kind", kind, "piecewise_constant | wavelet_sparse")->capture_default_str();
    app->add_option("--rows", rows)->capture_default_str();
    app->add_option("--cols", cols)->capture_default_str();
    app->add_option("--count", count)->capture_default_str();
    app->add_option("--sparsity", sparsity, "nonzero Haar fraction (wavelet_sparse)")
        ->capture_default_str();
    app->add_option("--rectangles", rectangles, "rectangle count (piecewise_constant)")
        ->capture_default_str();
    app->add_option("--seed", seed)->capture_default_str();
    app->add_option("--out-dir", out_dir)->required();
    app->add_flag("--timestamp", timestamp, "record wall-clock time in the manifest");
  }

  int run(int argc, const char* const* argv, std::ostream& out) const {
    PhantomSpec spec;
    spec.kind = parse_phantom_kind(kind);
    spec.shape = Shape{rows, cols};
    spec.sparsity = sparsity;
    spec.rectangles = rectangles;
    require_power_of_two(spec.shape);
    if (count == 0) throw InvalidArgument("--count must be positive");
    ensure_dir(out_dir);
    json manifest = base_manifest("phantom", argc, argv, timestamp);
    manifest["params"] = {{"kind", kind},          {"rows", rows},
                          {"cols", cols},          {"count", count},
                          {"sparsity", sparsity},  {"rectangles", rectangles},
                          {"seed", seed}};
    json seeds = json::array();
    json files = json::array();
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t s = phantom_seed(seed, i);
      char name[32];
      std::snprintf(name, sizeof name, "phantom_%04zu.cmrimg", i);
      write_image(fs::path(out_dir) / name, make_phantom(spec, s));
      seeds.push_back(s);
      files.push_back(name);
    }
    manifest["seeds"] = std::move(seeds);
    manifest["files"] = std::move(files);
    write_json_file(fs::path(out_dir) / "manifest.json", manifest);
    out << "wrote " << count << " phantoms to " << out_dir << '\n';
    return kOk;
  }
};

struct NoiseCommand {
  std::string in_dir, out_dir;
  double sigma = 3e-4;
  std::uint64_t seed = 0;
  bool timestamp = false;

  void attach(CLI::App* app) {
    app->add_option("--in-dir", in_dir)->required();
    app->add_option("--out-dir", out_dir)->required();
    app->add_option("--sigma", sigma, "per-component noise standard deviation")
        ->capture_default_str();
    app->add_option("--seed", seed)->capture_default_str();
    app->add_flag("--timestamp", timestamp);
  }

  int run(int argc, const char* const* argv, std::ostream& out) const {
    const auto named = load_image_dir(in_dir);
    ensure_dir(out_dir);
    json manifest = base_manifest("noise", argc, argv, timestamp);
    manifest["sigma"] = sigma;
    manifest["seed"] = seed;
    json files = json::array();
    for (std::size_t j = 0; j < named.size(); ++j) {
      const std::uint64_t s = noise_seed(seed, j);
      fs::path name = named[j].name;
      name.replace_extension(".cmrimg");
      write_image(fs::path(out_dir) / name, add_noise(named[j].image, NoiseModel{sigma, s}));
      files.push_back({{"source", named[j].name}, {"file", name.string()}, {"seed", s}});
    }
    manifest["files"] = std::move(files);
    write_json_file(fs::path(out_dir) / "manifest.json", manifest);
    out << "wrote " << named.size() << " noisy images to " << out_dir << '\n';
    return kOk;
  }
};

struct GreedyCommand {
  std::string train_dir, metric = "psnr", family = "rows", budget, out_mask, out_trace;
  unsigned workers = 0;
  double noise_sigma = 0.0;
  std::uint64_t noise_seed_base = 0;
  std::string denoiser;
  double threshold = 0.0;
  bool record_candidates = false;
  bool timestamp = false;
  DecoderFlags decoder;

  void attach(CLI::App* app) {
    app->add_option("--train-dir", train_dir)->required();
    decoder.attach(app);
    app->add_option("--metric", metric, "psnr | ssim | normalized_sq")->capture_default_str();
    app->add_option("--family", family, "points | rows | cols | rows_and_cols")
        ->capture_default_str();
    app->add_option("--budget", budget, "N points, Nrows/Ncols/Nlines, or a rate like 0.25")
        ->required();
    app->add_option("--workers", workers, "evaluation threads (default MASKOPT_WORKERS or all)");
    app->add_option("--noise-sigma", noise_sigma,
                    "add complex Gaussian noise of this sigma to the training images")
        ->capture_default_str();
    app->add_option("--noise-seed", noise_seed_base)->capture_default_str();
    app->add_option("--denoiser", denoiser, "identity | wavelet (enables the noisy path)");
    app->add_option("--threshold", threshold, "wavelet soft threshold (default 3 sigma)");
    app->add_flag("--record-candidates", record_candidates, "store every candidate score");
    app->add_option("--out-mask", out_mask)->required();
    app->add_option("--out-trace", out_trace)->required();
    app->add_flag("--timestamp", timestamp);
  }

  int run(int argc, const char* const* argv, std::ostream& out) const {
    const auto named = load_image_dir(train_dir);
    const std::vector<ComplexImage> training = images_of(named);
    GreedyConfig cfg;
    cfg.decoder = decoder.build();
    cfg.metric = metric_from(metric);
    cfg.family = SubsetFamily(training.front().shape(), parse_family_kind(family));
    cfg.budget = parse_budget(budget, cfg.family);
    cfg.workers = workers > 0 ? workers : default_workers();
    cfg.record_candidates = record_candidates;

    const bool noisy = noise_sigma > 0.0 || !denoiser.empty();
    json manifest = base_manifest("greedy", argc, argv, timestamp);
    manifest["decoder"] = decoder.to_json();
    manifest["metric"] = metric;
    manifest["family"] = family;
    manifest["budget_points"] = cfg.budget;
    manifest["training"] = json::array();
    for (const auto& n : named) manifest["training"].push_back(n.name);

    GreedyResult result = [&] {
      if (!noisy) {
        manifest["regime"] = "noiseless";
        return greedy_optimize(cfg, training);
      }
      Denoiser d;
      d.kind = denoiser.empty() ? DenoiserKind::wavelet_soft_threshold
                                : parse_denoiser_kind(denoiser);
      d.threshold = threshold > 0.0 ? threshold : 3.0 * noise_sigma;
      const std::vector<ComplexImage> z =
          noise_sigma > 0.0 ? add_noise(training, NoiseModel{noise_sigma, noise_seed_base})
                            : training;
      manifest["regime"] = "noisy";
      manifest["noise"] = {{"sigma", noise_sigma}, {"seed", noise_seed_base}};
      manifest["denoiser"] = {{"kind", std::string(to_string(d.kind))},
                              {"threshold", d.threshold}};
      return greedy_optimize_noisy(cfg, z, d);
    }();

    write_mask(out_mask, result.pattern);
    std::ofstream trace_out(out_trace);
    if (!trace_out) throw DataError("cannot write " + out_trace);
    write_trace_jsonl(trace_out, result.trace);
    manifest["initial_performance"] = result.trace.initial_performance;
    manifest["final_cost"] = result.pattern.count();
    write_json_file(manifest_path_for(out_mask), manifest);
    out << "selected " << result.trace.records.size() << " subsets, cost "
        << result.pattern.count() << "/" << cfg.budget << ", mean " << metric << " "
        << (result.trace.records.empty() ? result.trace.initial_performance
                                         : result.trace.records.back().mean_performance)
        << '\n';
    return kOk;
  }
};

struct EvaluateCommand {
  std::string mask, test_dir, out_csv;
  DecoderFlags decoder;

  void attach(CLI::App* app) {
    app->add_option("--mask", mask)->required();
    app->add_option("--test-dir", test_dir)->required();
    decoder.attach(app);
    app->add_option("--out-csv", out_csv)->required();
  }

  int run(std::ostream& out) const {
    const SamplingPattern pattern = read_mask(mask);
    const auto named = load_image_dir(test_dir);
    if (named.front().image.shape() != pattern.shape()) {
      throw DataError("mask shape does not match the test images");
    }
    const DecoderConfig cfg = decoder.build();
    std::ofstream csv(out_csv);
    if (!csv) throw DataError("cannot write " + out_csv);
    csv << "file,psnr,ssim,normalized_sq\n";
    double sums[3] = {0.0, 0.0, 0.0};
    bool nsq_valid = true;
    for (const auto& n : named) {
      const ComplexImage recon = decode(cfg, pattern, subsample(fft2_unitary(n.image), pattern));
      const double p = psnr(n.image, recon);
      const double s = ssim(n.image, recon);
      double q = std::nan("");
      if (std::abs(l2_norm(n.image.data()) - 1.0) <= 1e-9) {
        q = normalized_sq(n.image, recon);
      } else {
        nsq_valid = false;
      }
      sums[0] += p;
      sums[1] += s;
      sums[2] += q;
      csv << n.name << ',' << format_double(p) << ',' << format_double(s) << ','
          << (std::isnan(q) ? std::string("nan") : format_double(q)) << '\n';
    }
    const double count = static_cast<double>(named.size());
    csv << "mean," << format_double(sums[0] / count) << ',' << format_double(sums[1] / count)
        << ',' << (nsq_valid ? format_double(sums[2] / count) : std::string("nan")) << '\n';
    out << "mean psnr " << sums[0] / count << " dB, mean ssim " << sums[1] / count << '\n';
    return kOk;
  }
};

struct SelectCommand {
  std::string generator, centers, degrees, mask_list, train_dir, metric = "psnr";
  std::string family = "rows", budget, out, out_csv;
  std::size_t draws = 5;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  bool timestamp = false;
  DecoderFlags decoder;

  void attach(CLI::App* app) {
    app->add_option("--generator", generator,
                    "coherence_poly | single_image_energy | uniform_random | low_pass");
    app->add_option("--centers", centers,
                    "comma list of central sizes: d (line families) or dx:dy");
    app->add_option("--degrees", degrees, "comma list of polynomial degrees (default 1,3,...,13)");
    app->add_option("--draws", draws, "masks drawn per grid cell")->capture_default_str();
    app->add_option("--seed", seed)->capture_default_str();
    app->add_option("--mask-list", mask_list, "comma list of mask JSON files");
    app->add_option("--train-dir", train_dir)->required();
    decoder.attach(app);
    app->add_option("--metric", metric)->capture_default_str();
    app->add_option("--family", family)->capture_default_str();
    app->add_option("--budget", budget);
    app->add_option("--workers", workers);
    app->add_option("--out", out, "winner mask JSON")->required();
    app->add_option("--out-csv", out_csv, "report CSV (default: <out>.csv)");
    app->add_flag("--timestamp", timestamp);
  }

  int run(int argc, const char* const* argv, std::ostream& os) const {
    const auto named = load_image_dir(train_dir);
    const std::vector<ComplexImage> training = images_of(named);
    const EvaluationSet set = make_evaluation_set(training);
    const DecoderConfig cfg = decoder.build();
    const PerformanceMeasure m = metric_from(metric);
    const unsigned w = workers > 0 ? workers : default_workers();
    const fs::path csv_path = out_csv.empty() ? fs::path(out).replace_extension(".csv")
                                              : fs::path(out_csv);
    json manifest = base_manifest("select", argc, argv, timestamp);
    manifest["decoder"] = decoder.to_json();
    manifest["metric"] = metric;

    if (!mask_list.empty()) {
      if (!generator.empty()) throw InvalidArgument("use either --mask-list or --generator");
      std::vector<SamplingPattern> masks;
      for (const auto& f : split(mask_list, ',')) masks.push_back(read_mask(f));
      if (masks.empty()) throw InfeasibleError("empty candidate list");
      const SelectionResult sel = select_best(masks, set, cfg, m, w);
      write_mask(out, masks[sel.winner]);
      std::ofstream csv(csv_path);
      if (!csv) throw DataError("cannot write " + csv_path.string());
      csv << "candidate_id,generator,params_json,seed,mean_score,rank\n";
      std::vector<std::size_t> order(masks.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return sel.scores[a] > sel.scores[b];
      });
      std::vector<std::size_t> rank(masks.size());
      for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r + 1;
      const auto files = split(mask_list, ',');
      for (std::size_t i = 0; i < masks.size(); ++i) {
        csv << i << ",file,\"{\"\"path\"\":\"\"" << files[i] << "\"\"}\",," << format_double(sel.scores[i])
            << ',' << rank[i] << '\n';
      }
      manifest["winner"] = sel.winner;
      write_json_file(manifest_path_for(out), manifest);
      os << "winner " << files[sel.winner] << " score " << sel.scores[sel.winner] << '\n';
      return kOk;
    }

    if (generator.empty()) throw InvalidArgument("either --generator or --mask-list is required");
    if (budget.empty()) throw InvalidArgument("--budget is required with --generator");
    const SubsetFamily fam(training.front().shape(), parse_family_kind(family));
    const std::size_t gamma = parse_budget(budget, fam);
    SweepGrid grid = default_sweep_grid(parse_mask_kind(generator), fam, gamma, draws, seed);
    if (!centers.empty()) {
      grid.centers.clear();
      for (const auto& c : split(centers, ',')) {
        const auto colon = c.find(':');
        if (colon != std::string::npos) {
          grid.centers.emplace_back(std::stoull(c.substr(0, colon)), std::stoull(c.substr(colon + 1)));
        } else {
          const std::size_t d = std::stoull(c);
          grid.centers.emplace_back(d, d);
        }
      }
    }
    if (!degrees.empty()) {
      grid.degrees.clear();
      for (const auto& d : split(degrees, ',')) grid.degrees.push_back(std::stod(d));
    }
    if (grid.generator == MaskKind::single_image_energy) grid.reference = training.front();
    const SweepResult result = parametric_sweep(grid, fam, gamma, set, cfg, m, w);
    write_mask(out, result.best);
    std::ofstream csv(csv_path);
    if (!csv) throw DataError("cannot write " + csv_path.string());
    write_sweep_csv(csv, result.report);
    manifest["budget_points"] = gamma;
    manifest["winner"] = result.report.winner_id;
    json skipped = json::array();
    for (const auto& cell : result.report.cells) {
      if (!cell.feasible) {
        skipped.push_back({{"dx", cell.center_cols}, {"dy", cell.center_rows},
                           {"D", cell.degree}, {"reason", cell.reason}});
      }
    }
    manifest["skipped_cells"] = std::move(skipped);
    write_json_file(manifest_path_for(out), manifest);
    os << "winner candidate " << result.report.winner_id << " of "
       << result.report.entries.size() << ", score "
       << result.report.entries[result.report.winner_id].mean_score << '\n';
    return kOk;
  }
};

struct BoundCommand {
  std::string family = "rows", shape = "256x256", budget;
  std::size_t m = 0;
  double delta = 0.05;
  double sigma = 0.0;
  std::string denoiser;
  double threshold = 0.0;
  double lipschitz = 1.0;
  std::size_t trials = 100;
  std::uint64_t seed = 0;

  void attach(CLI::App* app) {
    app->add_option("--family", family)->capture_default_str();
    app->add_option("--shape", shape, "RxC")->capture_default_str();
    app->add_option("--budget", budget)->required();
    app->add_option("--m", m, "number of training signals")->required();
    app->add_option("--delta", delta)->capture_default_str();
    app->add_option("--sigma", sigma, "noise sigma for the noisy bound");
    app->add_option("--denoiser", denoiser, "identity | wavelet");
    app->add_option("--threshold", threshold, "wavelet threshold (default 3 sigma)");
    app->add_option("--L", lipschitz, "Lipschitz constant of the measure")->capture_default_str();
    app->add_option("--trials", trials, "Monte-Carlo draws for the residual")
        ->capture_default_str();
    app->add_option("--seed", seed)->capture_default_str();
  }

  int run(std::ostream& out) const {
    const SubsetFamily fam(parse_shape(shape), parse_family_kind(family));
    const std::size_t gamma = parse_budget(budget, fam);
    const FeasibleSetCount count = count_feasible(fam, CostFunction{}, static_cast<long long>(gamma));
    json j = {{"log_A", count.log_cardinality},
              {"m", m},
              {"delta", delta},
              {"bound", bound_noiseless(m, count, delta)}};
    if (sigma > 0.0 || !denoiser.empty()) {
      Denoiser d;
      d.kind = denoiser.empty() ? DenoiserKind::identity : parse_denoiser_kind(denoiser);
      d.threshold = threshold > 0.0 ? threshold : 3.0 * sigma;
      const ComplexImage zero(fam.shape());
      const ResidualEstimate r = estimate_residual(d, NoiseModel{sigma, seed}, zero, trials);
      j["L"] = lipschitz;
      j["residual"] = r.mean;
      j["residual_std_error"] = r.std_error;
      j["noisy_bound"] = bound_noisy(m, count, delta, lipschitz, r.mean);
    }
    out << j.dump() << '\n';
    return kOk;
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Learning-based k-space sampling mask optimization"};
  app.require_subcommand(1);
  PhantomCommand phantom;
  NoiseCommand noise;
  GreedyCommand greedy;
  EvaluateCommand evaluate;
  SelectCommand select;
  BoundCommand bound;
  auto* phantom_app = app.add_subcommand("phantom", "write synthetic training images");
  auto* noise_app = app.add_subcommand("noise", "write noisy copies of a dataset");
  auto* greedy_app = app.add_subcommand("greedy", "greedy mask optimization");
  auto* evaluate_app = app.add_subcommand("evaluate", "score a mask on a test set");
  auto* select_app = app.add_subcommand("select", "pick the best of candidate masks");
  auto* bound_app = app.add_subcommand("bound", "generalization bound report");
  phantom.attach(phantom_app);
  noise.attach(noise_app);
  greedy.attach(greedy_app);
  evaluate.attach(evaluate_app);
  select.attach(select_app);
  bound.attach(bound_app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*phantom_app) return phantom.run(argc, argv, out);
    if (*noise_app) return noise.run(argc, argv, out);
    if (*greedy_app) return greedy.run(argc, argv, out);
    if (*evaluate_app) return evaluate.run(out);
    if (*select_app) return select.run(argc, argv, out);
    if (*bound_app) return bound.run(out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kData;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace maskopt::cli
