// Command-line front end: invariants of built-in or user-supplied torus
// diagrams, table/convergence sweeps, the cross-oracle verification suite,
// and operator/catalog dumps.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tcj/catalog.hpp"
#include "tcj/linwang.hpp"
#include "tcj/report.hpp"
#include "tcj/rmatrix.hpp"
#include "tcj/skein.hpp"
#include "tcj/statesum.hpp"
#include "tcj/weave.hpp"

using namespace tcj;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

TorusDiagram load_diagram(const std::string& link, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw validation_error("cannot open diagram file " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    TorusDiagram d = from_json(ss.str());
    validate_or_throw(d);
    return d;
  }
  return catalog_get(link).diagram;
}

std::vector<long> parse_longs(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

void print_result(const InvariantResult& res, const std::string& format) {
  if (format == "json") {
    std::printf(
        "{\"re\": %.12g, \"im\": %.12g, \"abs\": %.12g, \"normalized_log\": %.12g, "
        "\"n\": %ld, \"r\": %ld, \"flavor\": \"%s\", \"writhe\": %ld}\n",
        res.value.real(), res.value.imag(), std::abs(res.value), res.normalized_log,
        res.n, res.r, flavor_name(res.flavor), res.writhe_data.total);
    return;
  }
  if (format == "csv") {
    std::printf("re,im,abs,normalized_log\n%.12g,%.12g,%.12g,%.12g\n", res.value.real(),
                res.value.imag(), std::abs(res.value), res.normalized_log);
    return;
  }
  std::printf("value          = %.12g %+.12gi\n", res.value.real(), res.value.imag());
  std::printf("|value|        = %.12g\n", std::abs(res.value));
  std::printf("normalized_log = %.12g   ((2*pi/r) ln|value|)\n", res.normalized_log);
  std::printf("n = %ld, r = %ld, flavor = %s, writhe = %ld\n", res.n, res.r,
              flavor_name(res.flavor), res.writhe_data.total);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toroidal colored Jones polynomial toolkit"};
  app.require_subcommand(1);

  std::string link = "W", diagram_file, flavor = "sl2", format = "text", colors_csv;
  std::string precision = "double", only, out_file;
  long n = 2, r = 0;
  int threads = 1;
  std::size_t max_entries = std::size_t(1) << 31;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--link", link, "catalog entry name");
    cmd->add_option("--diagram", diagram_file, "diagram JSON file");
    cmd->add_option("--threads", threads, "worker threads");
    cmd->add_option("--precision", precision, "double|extended");
    cmd->add_option("--max-tensor-entries", max_entries,
                    "cap on contraction intermediates");
  };

  auto* inv = app.add_subcommand("invariant", "evaluate one invariant");
  add_common(inv);
  inv->add_option("--n", n, "color (dimension of the irreducible module)");
  inv->add_option("--r", r, "root order, default r = n");
  inv->add_option("--flavor", flavor, "sl2|sl2-framed|sl2-multi|su2");
  inv->add_option("--colors", colors_csv, "per-component colors a,b,c (multi flavor)");
  inv->add_option("--format", format, "text|json|csv");

  std::string links_csv = "green_2_1,B,ell", ns_csv = "10,20";
  auto* tab = app.add_subcommand("table", "normalized-log table at q = e^{2 pi i/n}");
  add_common(tab);
  tab->add_option("--links", links_csv, "comma-separated catalog names");
  tab->add_option("--n-list", ns_csv, "comma-separated colors");
  tab->add_option("--out", out_file, "write CSV here instead of stdout");

  std::string conv_ns = "10,20,30";
  auto* conv = app.add_subcommand("converge", "convergence sweep toward the volume");
  add_common(conv);
  conv->add_option("--n-list", conv_ns, "comma-separated colors");
  conv->add_option("--out", out_file, "write CSV here instead of stdout");

  auto* ver = app.add_subcommand("verify", "run the cross-oracle suite");
  add_common(ver);
  ver->add_option("--only", only,
                  "linwang|cabling|weave|relationship|invariance|skein");
  ver->add_option("--n", n, "max color for the cabling checks");

  auto* cat = app.add_subcommand("catalog", "list or export built-in diagrams");
  std::string export_name;
  cat->add_option("--export", export_name, "print one entry as diagram JSON");

  auto* dump = app.add_subcommand("dump-operators", "operator tensors as JSON");
  dump->add_option("--n", n, "color");
  dump->add_option("--r", r, "root order (required)");

  CLI11_PARSE(app, argc, argv);

  try {
    EvalOptions eval;
    eval.max_tensor_entries = max_entries;
    eval.extended = precision == "extended";

    if (inv->parsed()) {
      TorusDiagram d = load_diagram(link, diagram_file);
      long rr = r > 0 ? r : n;
      RootOfUnity q(rr);
      InvariantResult res;
      if (flavor == "sl2") {
        res = jT(d, n, q, eval);
      } else if (flavor == "sl2-framed") {
        res = jhat_framed(d, Coloring::uniform(d, n), q, eval);
      } else if (flavor == "sl2-multi") {
        Coloring c;
        if (colors_csv.empty()) {
          c = Coloring::uniform(d, n);
        } else {
          auto cs = parse_longs(colors_csv);
          for (std::size_t k = 0; k < cs.size(); ++k) c.colors[int(k)] = cs[k];
        }
        res = jT_multi(d, c, q, eval);
      } else if (flavor == "su2") {
        res = jT_su2(d, n, q);
      } else {
        std::fprintf(stderr, "unknown flavor %s\n", flavor.c_str());
        return kExitInput;
      }
      print_result(res, format);
      return 0;
    }

    if (tab->parsed()) {
      TableOptions opt;
      opt.links.clear();
      std::stringstream ss(links_csv);
      std::string item;
      while (std::getline(ss, item, ',')) opt.links.push_back(item);
      opt.ns = parse_longs(ns_csv);
      opt.threads = threads;
      opt.eval = eval;
      std::string csv = table_csv(opt);
      if (out_file.empty()) std::fputs(csv.c_str(), stdout);
      else std::ofstream(out_file) << csv;
      return 0;
    }

    if (conv->parsed()) {
      ConvergeOptions opt;
      opt.link = link;
      opt.ns = parse_longs(conv_ns);
      opt.threads = threads;
      opt.eval = eval;
      std::string csv = converge_csv(opt);
      if (out_file.empty()) std::fputs(csv.c_str(), stdout);
      else std::ofstream(out_file) << csv;
      return 0;
    }

    if (ver->parsed()) {
      VerifyOptions opt;
      opt.only = only;
      opt.n = n;
      opt.eval = eval;
      VerifyReport rep = run_verify(opt);
      std::fputs(rep.text().c_str(), stdout);
      return rep.all_pass ? 0 : 1;
    }

    if (cat->parsed()) {
      if (!export_name.empty()) {
        std::printf("%s\n", to_json(catalog_get(export_name).diagram).c_str());
      } else {
        for (auto& name : catalog_names()) {
          const auto& e = catalog_get(name);
          std::printf("%-18s %-17s %s\n", name.c_str(), e.provenance.c_str(),
                      e.note.c_str());
        }
      }
      return 0;
    }

    if (dump->parsed()) {
      if (r < 1) {
        std::fprintf(stderr, "dump-operators requires --r\n");
        return kExitInput;
      }
      std::printf("%s\n", dump_operators_json(n, RootOfUnity(r)).c_str());
      return 0;
    }
  } catch (const resource_error& e) {
    std::fprintf(stderr, "resource error: %s\n", e.what());
    return kExitResource;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
  return 0;
}
