// Command-line front end: hyperfield arithmetic, covectors, cell labels, meshes,
// homology of complex files, and the verification suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "phasesphere/gluing.hpp"
#include "phasesphere/homology.hpp"
#include "phasesphere/mesh.hpp"
#include "phasesphere/verify.hpp"

using namespace phasesphere;

namespace {

std::string join_sign_set(const std::vector<Sign>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + to_string(s[i]);
  return out + "}";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

CellLabel label_arg(const std::string& text, std::size_t n) {
  CellLabel x = parse_cell_label(text);
  if (x.size() != n) throw std::invalid_argument("label " + text + " does not have length n");
  return x;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for phase-hyperfield order complexes"};
  app.require_subcommand(1);
  int exit_code = 0;

  // hf sum
  auto* hf = app.add_subcommand("hf", "Hyperfield arithmetic");
  hf->require_subcommand(1);
  auto* hf_sum = hf->add_subcommand("sum", "Hyperaddition of a list of elements");
  std::string field_name = "phase", elems;
  hf_sum->add_option("--field", field_name, "phase or sign")->check(CLI::IsMember({"phase", "sign"}));
  hf_sum->add_option("--elems", elems, "Comma-separated elements: z or p/q turns; or +,-,0")->required();
  hf_sum->callback([&] {
    if (field_name == "phase") {
      std::vector<Phase> xs;
      for (auto tok : split(elems, ',')) xs.push_back(parse_phase(tok));
      std::cout << to_string(hsum_fold(std::span(xs))) << "\n";
    } else {
      std::vector<Sign> xs;
      for (auto tok : split(elems, ',')) xs.push_back(parse_sign(tok));
      std::cout << join_sign_set(sign_hsum_fold(std::span(xs))) << "\n";
    }
  });

  // covector check | enumerate
  auto* cov = app.add_subcommand("covector", "Covectors of v^perp");
  cov->require_subcommand(1);
  auto* cov_check = cov->add_subcommand("check", "Is x a covector of v?");
  std::string v_text, x_text;
  cov_check->add_option("--v", v_text, "Vector of units, e.g. 0,0,1/2")->required();
  cov_check->add_option("--x", x_text, "Phase vector, e.g. z,1/4,3/4")->required();
  cov_check->callback([&] {
    std::cout << (is_covector(parse_phase_vector(v_text), parse_phase_vector(x_text)) ? "true" : "false")
              << "\n";
  });
  auto* cov_enum = cov->add_subcommand("enumerate", "Nonzero covectors of 1_n");
  std::string enum_field = "phase";
  std::size_t enum_n = 3;
  int enum_m = 4;
  cov_enum->add_option("--field", enum_field, "phase or sign")->check(CLI::IsMember({"phase", "sign"}));
  cov_enum->add_option("--n", enum_n, "Length")->required();
  cov_enum->add_option("--m", enum_m, "Angle grid 1/m (phase only)");
  cov_enum->callback([&] {
    if (enum_field == "phase") {
      for (const auto& x : enumerate_phase_covectors(enum_n, enum_m)) std::cout << to_string(x) << "\n";
    } else {
      for (const auto& x : enumerate_sign_covectors(enum_n)) std::cout << to_string(x) << "\n";
    }
  });

  // delta member
  auto* delta = app.add_subcommand("delta", "The order complex in disc coordinates");
  delta->require_subcommand(1);
  auto* member = delta->add_subcommand("member", "Does z lie in the order complex of v^perp?");
  std::string z_text;
  member->add_option("--v", v_text, "Vector of units")->required();
  member->add_option("--z", z_text, "Disc point, e.g. 1@0;1@1/2;0@0")->required();
  member->callback([&] {
    std::cout << (delta_member(parse_phase_vector(v_text), parse_model_point(z_text)) ? "true" : "false")
              << "\n";
  });

  // pn list | meet | nu
  auto* pn = app.add_subcommand("pn", "Cell labels");
  pn->require_subcommand(1);
  std::size_t pn_n = 3;
  std::string lx, ly;
  auto* pn_list = pn->add_subcommand("list", "Every cell label with its dimension");
  pn_list->add_option("--n", pn_n)->required();
  pn_list->callback([&] {
    for (const auto& x : enumerate_Pn(pn_n)) std::cout << to_string(x) << "  nu=" << nu(x) << "\n";
  });
  auto* pn_meet = pn->add_subcommand("meet", "Greatest lower bound of two labels");
  pn_meet->add_option("--n", pn_n)->required();
  pn_meet->add_option("--x", lx)->required();
  pn_meet->add_option("--y", ly)->required();
  pn_meet->callback([&] { std::cout << to_string(meet(label_arg(lx, pn_n), label_arg(ly, pn_n))) << "\n"; });
  auto* pn_nu = pn->add_subcommand("nu", "Dimension of a label's ball");
  pn_nu->add_option("--n", pn_n)->required();
  pn_nu->add_option("--x", lx)->required();
  pn_nu->callback([&] {
    const CellLabel x = label_arg(lx, pn_n);
    if (!in_Pn(x)) throw std::invalid_argument("label is not a cell");
    std::cout << nu(x) << "\n";
  });

  // glue verify-slice
  auto* glue = app.add_subcommand("glue", "Gluing hypotheses");
  glue->require_subcommand(1);
  auto* vs = glue->add_subcommand("verify-slice", "Slice decomposition claims for one n");
  SliceClaimsOptions slice_opts;
  vs->add_option("--n", slice_opts.n)->required();
  vs->add_option("--samples", slice_opts.samples, "Samples per sampled claim (0: combinatorial only)");
  vs->add_option("--seed", slice_opts.seed);
  vs->callback([&] {
    const SliceClaimsReport r = verify_slice_claims(slice_opts);
    for (const auto& c : r.checks) {
      const char* status = !c.passed ? "FAIL" : c.cases == 0 ? "SKIP" : "PASS";
      std::cout << "[" << status << "] " << c.name << " cases=" << c.cases << "\n";
      if (!c.passed) std::cout << "    witness: " << c.witness << "\n";
    }
    std::cout << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
    if (!r.passed()) exit_code = 1;
  });

  // mesh slice | full
  auto* mesh = app.add_subcommand("mesh", "Exact triangulations");
  mesh->require_subcommand(1);
  std::size_t mesh_n = 3;
  int mesh_m = 2;
  std::string out_path;
  for (const char* kind : {"slice", "full"}) {
    auto* sub = mesh->add_subcommand(kind, std::string(kind) == "slice" ? "The slice ball" : "The whole order complex (n = 2, 3)");
    sub->add_option("--n", mesh_n)->required();
    sub->add_option("--m", mesh_m, "Even resolution")->required();
    sub->add_option("--out", out_path, "Complex file to write")->required();
    sub->callback([&, slice = std::string(kind) == "slice"] {
      SimplicialComplex k;
      if (slice) {
        k = assemble_slice(mesh_n, mesh_m);
      } else {
        FullAssembly f = assemble_full(mesh_n, mesh_m);
        if (!f.glued) throw std::runtime_error("exact gluing failed: " + f.failure);
        k = std::move(f.complex);
      }
      write_file(out_path, complex_to_json(k, static_cast<int>(mesh_n), mesh_m));
      std::cout << "dim=" << k.dim() << " vertices=" << k.num_vertices() << " facets=" << k.facets().size()
                << " euler=" << k.euler_characteristic() << "\n";
    });
  }

  // homology
  auto* hom = app.add_subcommand("homology", "Betti numbers of a complex file");
  std::string in_path, hom_field = "q";
  hom->add_option("--in", in_path)->required();
  hom->add_option("--field", hom_field, "q or f2")->check(CLI::IsMember({"q", "f2"}));
  hom->callback([&] {
    const SimplicialComplex k = complex_from_json(read_file(in_path));
    const BettiReport b = betti(k, parse_field(hom_field));
    std::cout << "field: " << to_string(b.field) << "\nbetti:";
    for (std::size_t x : b.betti) std::cout << " " << x;
    std::cout << "\neuler: " << b.euler << "\n";
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  std::string suite, report_path, ver_field;
  SuiteParams params;
  bool timings = false;
  ver->add_option("suite", suite, "Suite name or all")->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--max-n", params.max_n, "Largest n (suite default when omitted)");
  ver->add_option("--m", params.m, "Mesh or grid resolution (suite default when omitted)");
  ver->add_option("--samples", params.samples, "Sample count (suite default when omitted)");
  ver->add_option("--seed", params.seed, "Random seed");
  ver->add_option("--field", ver_field, "Restrict homology to q or f2")->check(CLI::IsMember({"q", "f2"}));
  ver->add_option("--report", report_path, "Write the structured report to this file");
  ver->add_flag("--timings", timings, "Include runtimes (reports are then not reproducible)");
  ver->callback([&] {
    if (!ver_field.empty()) params.field = parse_field(ver_field);
    const VerificationReport r = run_suite(suite, params);
    std::cout << report_text(r, timings);
    if (!report_path.empty()) write_file(report_path, report_json(r, timings));
    if (!r.passed()) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
