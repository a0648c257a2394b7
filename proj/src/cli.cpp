#include "wqc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "wqc/effective_coupling.hpp"

namespace wqc {

namespace {

namespace fs = std::filesystem;

CheckResult check_commutator_structure(const SystemSpec& spec) {
  CheckResult r{"commutator-structure", false, 0.0, 1e-12, ""};
  const Operator c2 = double_commutator_channel(spec);
  const double scale = c2.cwiseAbs().maxCoeff();
  if (scale == 0.0) {
    r.detail = "double commutator vanished (zero couplings)";
    return r;
  }
  const int dn = spec.nuclear_dim();
  // Support is allowed only on the electron flip-flop blocks
  // |01><10| and |10><01| (electron pair indices 1 and 2).
  double worst = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const bool allowed = (a == 1 && b == 2) || (a == 2 && b == 1);
      if (allowed) continue;
      worst = std::max(worst,
                       c2.block(Eigen::Index(a) * dn, Eigen::Index(b) * dn, dn, dn)
                           .cwiseAbs()
                           .maxCoeff());
    }
  }
  r.residual = worst / scale;
  r.pass = r.residual <= r.tolerance;
  r.detail = "off-pattern / max element";
  return r;
}

CheckResult check_bch_suppression(const SystemSpec& spec) {
  CheckResult r{"bch-suppression", false, 0.0, 1.0 / 14.0, ""};
  const Operator c2 = double_commutator_channel(spec);
  const double hmax =
      std::max(spectral_norm(build_dipolar(spec)), spectral_norm(build_hyperfine(spec)));
  if (!(hmax > 0.0)) {
    r.detail = "zero couplings";
    return r;
  }
  const cplx i(0.0, 1.0);
  const auto residual_at = [&](double tau) {
    const Operator u = sequence_propagator(bch_sequence(tau), spec);
    return spectral_norm(logm(u) - i * (tau * tau * tau) * c2);
  };
  double tau = 0.05 / hmax;
  double prev = residual_at(tau);
  double worst_ratio = 0.0;
  for (int halving = 0; halving < 3; ++halving) {
    tau /= 2.0;
    const double cur = residual_at(tau);
    worst_ratio = std::max(worst_ratio, cur / prev);
    prev = cur;
  }
  r.residual = worst_ratio;
  r.pass = worst_ratio <= r.tolerance;
  r.detail = "max E(tau/2)/E(tau) over 3 halvings";
  return r;
}

CheckResult check_refocusing(const SystemSpec& spec) {
  CheckResult r{"refocusing", false, 0.0, 1e-12, ""};
  const auto [parallel, cross] = split_parallel_cross(spec);
  const Operator avg = refocused_average(spec, inversion_pattern(spec.k));
  const double scale = std::max(parallel.cwiseAbs().maxCoeff(), 1e-300);
  r.residual = (avg - parallel).cwiseAbs().maxCoeff() / scale;
  r.pass = r.residual <= r.tolerance;
  if (spec.k >= 2 && cross.cwiseAbs().maxCoeff() <= scale * 1e-12) {
    r.pass = false;
    r.detail = "cross couplings vanish; nothing refocused";
  } else {
    r.detail = "refocused vs parallel, relative";
  }
  return r;
}

CheckResult check_dissipator_decay(const SystemSpec&) {
  CheckResult r{"dissipator-decay", false, 0.0, 1e-8, ""};
  Operator rho0(2, 2);
  rho0 << 0.3, cplx(0.2, -0.1), cplx(0.2, 0.1), 0.7;
  double worst = 0.0;
  const double pairs[3][2] = {{1.0, 1.0}, {1.0, 0.5}, {1.0, 2.0}};
  for (const auto& [t1, t2] : pairs) {
    const auto [g1, g2] = gammas_from_times({t1, t2});
    const SuperOp d = qubit_dissipator(g1, g2);
    for (int i = 1; i <= 50; ++i) {
      const double t = 5.0 * t1 * double(i) / 50.0;
      const Operator rho = unvec(expm(t * d) * vec(rho0), 2);
      const double pop_want = 0.7 * std::exp(-t / t1);
      const cplx coh_want = rho0(0, 1) * std::exp(-t / t2);
      worst = std::max(worst, std::abs(rho(1, 1).real() - pop_want) / pop_want);
      worst = std::max(worst, std::abs(rho(0, 1) - coh_want) / std::abs(coh_want));
    }
  }
  r.residual = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "max relative decay error, (T1,T2) in {(1,1),(1,1/2),(1,2)}";
  return r;
}

CheckResult check_serial_swap(const SystemSpec& spec) {
  CheckResult r{"serial-swap", false, 0.0, 1e-10, ""};
  if (spec.k != 1) {
    r.pass = true;
    r.detail = "skipped (defined for k = 1)";
    return r;
  }
  const SuperOp chan = channel_superop(serial_swap_sequence(spec), spec, std::nullopt, false);
  Operator swap_n = Operator::Zero(4, 4);
  swap_n(0, 0) = swap_n(3, 3) = swap_n(1, 2) = swap_n(2, 1) = 1.0;
  r.residual = 1.0 - process_fidelity(conjugation_superop(swap_n), chan);
  r.pass = r.residual <= r.tolerance;
  r.detail = "1 - F vs SWAP conjugation";
  return r;
}

CheckResult check_channel_cptp(const SystemSpec& spec) {
  CheckResult r{"channel-cptp", false, 0.0, 1e-10, ""};
  if (spec.k != 1) {
    r.pass = true;
    r.detail = "skipped (protocols defined for k = 1)";
    return r;
  }
  const NoiseParams noise{1e-4, 1e-4};
  double worst = 0.0;
  for (const auto& seq : {bch_sequence(select_tau(spec)), serial_swap_sequence(spec)}) {
    for (const bool noisy : {false, true}) {
      const SuperOp chan =
          channel_superop(seq, spec, noisy ? std::optional<NoiseParams>(noise) : std::nullopt,
                          false);
      const CptpReport rep = cptp_report(chan);
      worst = std::max({worst, rep.trace_residual, std::max(0.0, -rep.choi_min_eigenvalue)});
    }
  }
  r.residual = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "max(trace residual, Choi negativity) over both protocols";
  return r;
}

using CheckFn = CheckResult (*)(const SystemSpec&);

struct NamedCheck {
  const char* name;
  CheckFn fn;
};

constexpr NamedCheck kChecks[] = {
    {"commutator-structure", check_commutator_structure},
    {"bch-suppression", check_bch_suppression},
    {"refocusing", check_refocusing},
    {"dissipator-decay", check_dissipator_decay},
    {"serial-swap", check_serial_swap},
    {"channel-cptp", check_channel_cptp},
};

void ensure_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + dir + "': " + ec.message());
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open '" + path.string() + "' for writing");
  out << content;
  if (!out) throw ConfigError("write failed for '" + path.string() + "'");
}

void print_warnings(const SystemSpec& spec, std::ostream& err) {
  for (const auto& w : spec.validate()) err << "warning: " << w << "\n";
}

}  // namespace

std::vector<std::string> available_checks() {
  std::vector<std::string> names;
  for (const auto& c : kChecks) names.emplace_back(c.name);
  return names;
}

std::vector<CheckResult> run_checks(const SystemSpec& spec,
                                    const std::vector<std::string>& names) {
  std::vector<CheckResult> results;
  const auto run_one = [&](const std::string& name) {
    for (const auto& c : kChecks) {
      if (name == c.name) {
        try {
          results.push_back(c.fn(spec));
        } catch (const std::exception& err) {
          results.push_back({name, false, std::nan(""), 0.0, std::string("error: ") + err.what()});
        }
        return;
      }
    }
    throw ConfigError("unknown verify check '" + name + "'");
  };
  if (names.empty()) {
    for (const auto& c : kChecks) run_one(c.name);
  } else {
    for (const auto& name : names) run_one(name);
  }
  return results;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  print_warnings(config.system, err);
  const auto results = run_checks(config.system, config.verify);

  std::ostringstream report;
  bool all_pass = true;
  for (const auto& r : results) {
    report << r.name << ": " << (r.pass ? "PASS" : "FAIL")
           << " residual=" << format_double(r.residual)
           << " tol=" << format_double(r.tolerance);
    if (!r.detail.empty()) report << "  # " << r.detail;
    report << "\n";
    all_pass = all_pass && r.pass;
  }
  ensure_out_dir(config.out_dir);
  write_file(fs::path(config.out_dir) / "verify_report.txt", report.str());
  out << report.str();
  out << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
  return all_pass ? kExitSuccess : kExitCheckFailure;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  print_warnings(config.system, err);
  const SweepResult result = robustness_sweep(config.system, config.sweep.values());

  ensure_out_dir(config.out_dir);
  const fs::path csv_path = fs::path(config.out_dir) / "sweep.csv";
  const fs::path svg_path = fs::path(config.out_dir) / "sweep.svg";
  write_file(csv_path, sweep_to_csv(result));
  write_file(svg_path, svg_line_plot(result, config.system.rabi));

  for (const auto& e : result.errors) err << "sweep point failed: " << e << "\n";
  out << "wrote " << csv_path.string() << " (" << result.points.size() << " points) and "
      << svg_path.string() << "\n";
  return result.errors.empty() ? kExitSuccess : kExitCheckFailure;
}

int cmd_dump_sequence(const RunConfig& config, const std::string& which, std::ostream& out,
                      std::ostream& err) {
  print_warnings(config.system, err);
  PulseSequence seq;
  if (which == "wqc") {
    const double tau = select_tau(config.system);
    seq = bch_sequence(tau);
    out << "tau_s = " << format_double(tau) << "\n";
  } else if (which == "swap") {
    seq = serial_swap_sequence(config.system);
  } else {
    throw ConfigError("unknown sequence '" + which + "' (expected wqc or swap)");
  }
  out << "label = " << seq.label << ", total_duration_s = "
      << format_double(seq.total_duration()) << "\n";
  int idx = 0;
  for (const auto& seg : seq.segments) {
    out << idx++ << "  " << generator_name(seg.generator) << "  sign=" << (seg.sign > 0 ? "+" : "-")
        << "  duration_s=" << format_double(seg.duration) << "\n";
  }
  return kExitSuccess;
}

std::string svg_line_plot(const SweepResult& result, double omega1) {
  const double width = 640, height = 480;
  const double ml = 64, mr = 24, mt = 28, mb = 52;

  double xmin = 1e300, xmax = -1e300, ymax = 0.0;
  std::vector<std::pair<double, double>> wqc, swap;
  for (const auto& p : result.points) {
    if (!std::isfinite(p.fidelity_wqc) || !std::isfinite(p.fidelity_swap)) continue;
    const double x = std::log10(p.t1 * omega1);
    wqc.emplace_back(x, p.neg_log10_infid_wqc);
    swap.emplace_back(x, p.neg_log10_infid_swap);
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymax = std::max({ymax, p.neg_log10_infid_wqc, p.neg_log10_infid_swap});
  }
  if (wqc.empty()) {
    xmin = 0;
    xmax = 1;
    ymax = 1;
  }
  if (xmax <= xmin) xmax = xmin + 1;
  ymax = std::ceil(ymax) + 0.5;

  const auto px = [&](double x) {
    return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr);
  };
  const auto py = [&](double y) { return height - mb - y / ymax * (height - mt - mb); };
  const auto coord = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
  };
  const auto polyline = [&](const std::vector<std::pair<double, double>>& pts) {
    std::string s;
    for (const auto& [x, y] : pts) s += coord(px(x)) + "," + coord(py(y)) + " ";
    return s;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes
  svg << "<line x1=\"" << coord(ml) << "\" y1=\"" << coord(height - mb) << "\" x2=\""
      << coord(width - mr) << "\" y2=\"" << coord(height - mb)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "<line x1=\"" << coord(ml) << "\" y1=\"" << coord(mt) << "\" x2=\"" << coord(ml)
      << "\" y2=\"" << coord(height - mb) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  for (int t = static_cast<int>(std::ceil(xmin)); t <= static_cast<int>(std::floor(xmax)); ++t) {
    svg << "<line x1=\"" << coord(px(t)) << "\" y1=\"" << coord(height - mb) << "\" x2=\""
        << coord(px(t)) << "\" y2=\"" << coord(height - mb + 5)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n"
        << "<text x=\"" << coord(px(t)) << "\" y=\"" << coord(height - mb + 20)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << t << "</text>\n";
  }
  for (int t = 0; t <= static_cast<int>(ymax); ++t) {
    svg << "<line x1=\"" << coord(ml - 5) << "\" y1=\"" << coord(py(t)) << "\" x2=\"" << coord(ml)
        << "\" y2=\"" << coord(py(t)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n"
        << "<text x=\"" << coord(ml - 9) << "\" y=\"" << coord(py(t) + 4)
        << "\" font-size=\"12\" text-anchor=\"end\">" << t << "</text>\n";
  }
  svg << "<text x=\"" << coord((ml + width - mr) / 2) << "\" y=\"" << coord(height - 14)
      << "\" font-size=\"13\" text-anchor=\"middle\">log10(T1 * omega_1)</text>\n";
  svg << "<text x=\"16\" y=\"" << coord((mt + height - mb) / 2)
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << coord((mt + height - mb) / 2) << ")\">-log10(1 - F)</text>\n";

  svg << "<polyline fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"2\" points=\""
      << polyline(wqc) << "\"/>\n";
  svg << "<polyline fill=\"none\" stroke=\"#b03030\" stroke-width=\"2\" stroke-dasharray=\"6,4\" "
         "points=\""
      << polyline(swap) << "\"/>\n";

  // legend
  const double lx = ml + 16, ly = mt + 8;
  svg << "<line x1=\"" << coord(lx) << "\" y1=\"" << coord(ly) << "\" x2=\"" << coord(lx + 30)
      << "\" y2=\"" << coord(ly) << "\" stroke=\"#1f4e99\" stroke-width=\"2\"/>\n"
      << "<text x=\"" << coord(lx + 36) << "\" y=\"" << coord(ly + 4)
      << "\" font-size=\"12\">induced channel (wqc)</text>\n"
      << "<line x1=\"" << coord(lx) << "\" y1=\"" << coord(ly + 18) << "\" x2=\"" << coord(lx + 30)
      << "\" y2=\"" << coord(ly + 18)
      << "\" stroke=\"#b03030\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n"
      << "<text x=\"" << coord(lx + 36) << "\" y=\"" << coord(ly + 22)
      << "\" font-size=\"12\">serial swap</text>\n";

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace wqc
