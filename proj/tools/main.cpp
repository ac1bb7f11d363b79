// Command-line front end: rational generating functions, truncated series,
// verification suites and descent statistics for the symmetric cone
// families.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symcone/coxeter.hpp"
#include "symcone/genfunc.hpp"
#include "symcone/identities.hpp"
#include "symcone/io.hpp"
#include "symcone/oracle.hpp"
#include "symcone/parallel.hpp"

namespace {

using namespace symcone;

struct RunConfig {
  std::string format = "json";  // json, csv or text
  std::string out;              // empty = stdout
};

void emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
  f << payload;
}

IntVector parse_int_list(const std::string& text) {
  std::vector<Index> vals;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    vals.push_back(std::stoll(tok));
  }
  IntVector v(static_cast<Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v(static_cast<Index>(i)) = vals[i];
  return v;
}

conegeom::ConeSpec make_spec(const std::string& kind, Index n, const std::string& a) {
  conegeom::ConeSpec spec;
  spec.kind = parse_kind(kind);
  spec.n = n;
  spec.a = parse_int_list(a);
  conegeom::validate(spec);
  return spec;
}

struct CheckRow {
  std::string name;
  identities::VerifyResult result;
};

int emit_check_table(const RunConfig& cfg, const std::vector<CheckRow>& rows) {
  std::ostringstream os;
  bool all = true;
  std::size_t width = 4;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  for (const auto& r : rows) {
    all = all && r.result.pass;
    os << r.name << std::string(width - r.name.size() + 2, ' ')
       << (r.result.pass ? "PASS" : "FAIL") << "  " << r.result.detail << "\n";
  }
  os << (all ? "all checks passed" : "verification failed") << "\n";
  emit(cfg, os.str());
  return all ? 0 : 1;
}

std::string stats_payload(Index m, const std::string& format) {
  const auto group = coxeter::enumerate_group(Kind::B, m);
  if (format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& g : group) {
      nlohmann::json row;
      row["element"] = coxeter::window_notation(g);
      std::string d;
      for (Index j : coxeter::descent_set(g)) d += (d.empty() ? "" : " ") + std::to_string(j);
      row["descents"] = d;
      row["des"] = coxeter::stat_des(g);
      row["maj"] = coxeter::stat_maj(g);
      row["comaj"] = coxeter::stat_comaj(g);
      row["cobin"] = coxeter::stat_cobin(g);
      doc.push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
  }
  // csv (and text, which shares the layout)
  std::ostringstream os;
  os << "element,descents,des,maj,comaj,cobin\n";
  for (const auto& g : group) {
    std::string d;
    for (Index j : coxeter::descent_set(g)) d += (d.empty() ? "" : " ") + std::to_string(j);
    os << coxeter::window_notation(g) << "," << d << "," << coxeter::stat_des(g) << ","
       << coxeter::stat_maj(g) << "," << coxeter::stat_comaj(g) << ","
       << coxeter::stat_cobin(g) << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice point generating functions of symmetric simplicial cones"};
  app.require_subcommand(1);

  RunConfig cfg;
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = hardware default)");

  std::string kind = "B", a_text;
  Index n = 0, trunc = 0, m = 0, bound = 0;
  std::string weights_text;

  auto add_spec_flags = [&](CLI::App* cmd) {
    cmd->add_option("--kind", kind, "cone family: A, B or D")->required();
    cmd->add_option("--n", n, "ambient dimension")->required();
    cmd->add_option("--a", a_text, "weight vector, comma separated")->required();
  };
  auto add_output_flags = [&](CLI::App* cmd, bool with_format) {
    if (with_format)
      cmd->add_option("--format", cfg.format, "output format: json, csv or text");
    cmd->add_option("--out", cfg.out, "write output to this file instead of stdout");
  };

  auto* cmd_genfunc = app.add_subcommand("genfunc", "emit the rational sum as a JSON term list");
  add_spec_flags(cmd_genfunc);
  add_output_flags(cmd_genfunc, false);

  auto* cmd_series = app.add_subcommand("series", "expand the generating function");
  add_spec_flags(cmd_series);
  cmd_series->add_option("--N", trunc, "truncation degree")->required();
  cmd_series->add_option("--weights", weights_text, "grading weights, comma separated");
  add_output_flags(cmd_series, true);

  auto* cmd_stats = app.add_subcommand("stats", "descent statistics table for signed permutations");
  cmd_stats->add_option("--m", m, "letters")->required();
  add_output_flags(cmd_stats, true);

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->require_subcommand(1);
  add_output_flags(cmd_verify, false);

  auto* v_oracle = cmd_verify->add_subcommand("oracle", "construction vs exhaustive point counts");
  add_spec_flags(v_oracle);
  v_oracle->add_option("--N", trunc, "truncation degree")->required();

  auto* v_tri = cmd_verify->add_subcommand("triangulation", "disjoint chamber cover of the cone");
  add_spec_flags(v_tri);
  v_tri->add_option("--bound", bound, "grading bound")->required();

  auto* v_euler = cmd_verify->add_subcommand("eulerian", "descent distribution vs (2k+1)^m sums");
  v_euler->add_option("--m", m, "letters")->required();
  v_euler->add_option("--N", trunc, "truncation degree")->required();

  auto* v_comaj = cmd_verify->add_subcommand("comaj", "comajor distribution closed form");
  v_comaj->add_option("--m", m, "letters")->required();

  auto* v_chow = cmd_verify->add_subcommand("chow-gessel", "joint descent/(co)major identity");
  v_chow->add_option("--m", m, "letters")->required();
  v_chow->add_option("--N", trunc, "x-degree truncation")->required();

  Index p_b = 0, p_c = 0, p_d = 0;
  auto* v_almost = cmd_verify->add_subcommand("almost-constant",
                                              "almost-constant weights closed form");
  v_almost->add_option("--m", m, "cube dimension (ambient n - 1)")->required();
  v_almost->add_option("--b", p_b, "top weight excess")->required();
  v_almost->add_option("--c", p_c, "base weight")->required();
  v_almost->add_option("--N", trunc, "truncation degree")->required();

  auto* v_lh = cmd_verify->add_subcommand("lecture-hall", "weighted lecture hall corollary");
  v_lh->add_option("--n", n, "ambient dimension")->required();
  v_lh->add_option("--d", p_d, "slope")->required();
  v_lh->add_option("--c", p_c, "offset")->required();
  v_lh->add_option("--b", p_b, "top excess")->required();
  v_lh->add_option("--N", trunc, "truncation degree")->required();

  auto* v_ps = cmd_verify->add_subcommand("eqn-ps", "trivariate lecture hall refinement");
  v_ps->add_option("--n", n, "parts")->required();
  v_ps->add_option("--N", trunc, "x-degree truncation")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints message/help
    return code == 0 ? 0 : 2;
  }

  try {
    if (threads > 0) parallel::set_thread_count(threads);

    if (cmd_genfunc->parsed()) {
      emit(cfg, io::terms_json(genfunc::build_general(make_spec(kind, n, a_text))));
      return 0;
    }
    if (cmd_series->parsed()) {
      const auto spec = make_spec(kind, n, a_text);
      const IntVector w =
          weights_text.empty() ? conegeom::grading_weights(spec) : parse_int_list(weights_text);
      const auto s = genfunc::expand(genfunc::build_general(spec), w, trunc);
      if (cfg.format == "csv")
        emit(cfg, io::series_csv(s));
      else if (cfg.format == "text")
        emit(cfg, io::series_text(s));
      else
        emit(cfg, io::series_json(s));
      return 0;
    }
    if (cmd_stats->parsed()) {
      const std::string fmt = cmd_stats->count("--format") ? cfg.format : "csv";
      emit(cfg, stats_payload(m, fmt));
      return 0;
    }

    std::vector<CheckRow> rows;
    if (v_oracle->parsed()) {
      const auto spec = make_spec(kind, n, a_text);
      const IntVector w = conegeom::grading_weights(spec);
      const auto general = genfunc::build_general(spec);
      const auto typed = genfunc::build_typed(spec);
      const auto from_general = genfunc::expand(general, w, trunc);
      const auto from_typed = genfunc::expand(typed, w, trunc);
      const auto counted = oracle::oracle_series(spec, w, trunc);
      auto cmp = [&](const series::TruncatedSeries& x, const series::TruncatedSeries& y,
                     const std::string& name) {
        const Index d = series::first_mismatch(x, y);
        rows.push_back({name, {d < 0, d < 0 ? "equal to truncation"
                                            : "first mismatch at degree " + std::to_string(d)}});
      };
      cmp(from_general, from_typed, "general vs closed-form construction");
      cmp(from_general, counted, "expansion vs exhaustive point counts");
    } else if (v_tri->parsed()) {
      const auto spec = make_spec(kind, n, a_text);
      const auto report = conegeom::triangulation_check(spec, bound);
      std::ostringstream os;
      os << report.points_checked << " points checked, " << report.violations.size()
         << " violations";
      rows.push_back({"disjoint chamber cover", {report.ok(), os.str()}});
    } else if (v_euler->parsed()) {
      rows.push_back({"eulerian distribution", identities::verify_eulerian_identity(m, trunc)});
    } else if (v_comaj->parsed()) {
      rows.push_back({"comajor distribution", identities::verify_comaj_closed_form(m)});
    } else if (v_chow->parsed()) {
      rows.push_back({"joint distribution", identities::verify_joint_chow_gessel(m, trunc)});
    } else if (v_almost->parsed()) {
      rows.push_back(
          {"almost-constant weights", identities::verify_almost_constant(m, p_b, p_c, trunc)});
    } else if (v_lh->parsed()) {
      rows.push_back({"lecture hall corollary",
                      identities::verify_lecture_hall_corollary(n, p_d, p_c, p_b, trunc)});
    } else if (v_ps->parsed()) {
      rows.push_back({"trivariate refinement", identities::verify_eqn_ps(n, trunc)});
    }
    return emit_check_table(cfg, rows);
  } catch (const ExpansionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
