// Copyright 2026 The ldpcq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ldpcq/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ldpcq/alist.hpp"
#include "ldpcq/errors.hpp"
#include "ldpcq/procjson.hpp"
#include "ldpcq/sim.hpp"
#include "ldpcq/verify.hpp"
#include "ldpcq/zx.hpp"

namespace ldpcq::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << content;
}

ClassicalCode load_code(const std::string& path, bool dense) {
  const std::string text = read_file(path);
  return dense ? parse_dense(text) : parse_alist(text);
}

void print_basis(std::ostream& out, const char* name, const std::vector<BitVec>& basis) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    out << name << ' ' << k << ':';
    for (uint32_t i : basis[k].support()) out << ' ' << i;
    out << '\n';
  }
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stod(tok));
  }
  return out;
}

StateLabel parse_state_token(const std::string& tok) {
  if (tok == "plus") return StateLabel::Plus;
  if (tok == "minus") return StateLabel::Minus;
  if (tok == "zero") return StateLabel::Zero;
  if (tok == "one") return StateLabel::One;
  throw std::invalid_argument("unknown ancilla state '" + tok + "' (plus|minus|zero|one)");
}

ProductKind parse_kind(const std::string& s) {
  if (s == "tensor") return ProductKind::Tensor;
  if (s == "check") return ProductKind::Check;
  throw std::invalid_argument("unknown product kind '" + s + "' (tensor|check)");
}

int run_verify_report(const VerifyReport& rep, bool as_json, std::ostream& out) {
  if (as_json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rep.relations)
      arr.push_back({{"relation", r.relation},
                     {"status", r.passed ? "pass" : "fail"},
                     {"witness", r.actual},
                     {"expected", r.expected},
                     {"note", r.note}});
    out << arr.dump(2) << '\n';
  } else {
    out << rep.to_text();
  }
  return rep.passed() ? 0 : 1;
}

int run_inner(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"classical LDPC code transformations as quantum processes"};
  app.require_subcommand(1);
  // `spectrum --h` is part of the interface, so help is --help only.
  app.set_help_flag("--help", "print help");

  bool dense_input = false;
  app.add_flag("--dense", dense_input, "read parity checks as 0/1 rows instead of alist");

  // ---- code ----
  auto* code_cmd = app.add_subcommand("code", "inspect or transform a single code");
  code_cmd->require_subcommand(1);
  std::string code_in, code_out;
  auto* info = code_cmd->add_subcommand("info", "print n, m, rank, symmetries, redundancies");
  info->add_option("input", code_in, "parity-check file")->required();
  auto* transpose = code_cmd->add_subcommand("transpose", "exchange bits and checks");
  transpose->add_option("input", code_in)->required();
  transpose->add_option("-o,--output", code_out, "output alist")->required();
  auto* perp = code_cmd->add_subcommand("perp", "orthogonal-complement code");
  perp->add_option("input", code_in)->required();
  perp->add_option("-o,--output", code_out, "output alist")->required();

  // ---- product ----
  auto* product = app.add_subcommand("product", "combine codes");
  product->require_subcommand(1);
  std::vector<std::string> product_in;
  std::string product_out;
  std::size_t pq_q = 1;
  auto* ptensor = product->add_subcommand("tensor", "tensor product of two codes");
  ptensor->add_option("inputs", product_in, "A.alist B.alist")->expected(2)->required();
  ptensor->add_option("-o,--output", product_out)->required();
  auto* pcheck = product->add_subcommand("check", "check product of two codes");
  pcheck->add_option("inputs", product_in, "A.alist B.alist")->expected(2)->required();
  pcheck->add_option("-o,--output", product_out)->required();
  auto* ppq = product->add_subcommand("pq", "(p,q)-product of p codes");
  ppq->add_option("--q", pq_q, "subset size q")->required();
  ppq->add_option("inputs", product_in, "code files")->expected(-1)->required();
  ppq->add_option("-o,--output", product_out)->required();

  // ---- extract ----
  auto* extract = app.add_subcommand("extract", "extract the duality quantum process");
  std::string extract_in, extract_out, realization = "defect";
  extract->add_option("input", extract_in)->required();
  extract->add_option("--realization", realization, "defect|minimal")
      ->check(CLI::IsMember({"defect", "minimal"}));
  extract->add_option("-o,--output", extract_out, "process JSON")->required();

  auto* extract_product_cmd =
      app.add_subcommand("extract-product", "extract a product-merge quantum process");
  std::string ep_kind;
  std::vector<std::string> ep_in;
  std::string ep_out;
  extract_product_cmd->add_option("kind", ep_kind, "tensor|check")->required();
  extract_product_cmd->add_option("inputs", ep_in, "A.alist B.alist")->expected(2)->required();
  extract_product_cmd->add_option("-o,--output", ep_out)->required();

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "check the duality/product operator relations");
  std::vector<std::string> verify_files;
  bool verify_json = false;
  verify->add_option("files", verify_files, "code.alist [second.alist] proc.json")
      ->expected(2, 3)
      ->required();
  verify->add_flag("--json", verify_json, "machine-readable relation records");

  // ---- simulate ----
  auto* simulate = app.add_subcommand("simulate", "run a process on a product input state");
  std::string sim_proc, sim_input = "plus", sim_ancilla, sim_expect;
  simulate->add_option("process", sim_proc, "process JSON")->required();
  simulate->add_option("--input", sim_input, "plus|zero")
      ->check(CLI::IsMember({"plus", "zero"}));
  simulate->add_option("--ancilla", sim_ancilla,
                       "comma list of plus|minus|zero|one (one token broadcasts)");
  simulate->add_option("--expect", sim_expect, "amplitude file to compare against");

  // ---- spectrum ----
  auto* spectrum = app.add_subcommand("spectrum", "low eigenvalues of the code Hamiltonian");
  spectrum->set_help_flag("--help", "print help");  // frees -h for the field option
  std::string spec_in;
  double spec_j = 1.0, spec_h = 0.0;
  std::size_t spec_k = 4;
  spectrum->add_option("input", spec_in)->required();
  spectrum->add_option("--J", spec_j, "check coupling");
  spectrum->add_option("--h", spec_h, "transverse field");
  spectrum->add_option("-k,--num", spec_k, "number of low eigenvalues");

  // ---- perturbation ----
  auto* pert = app.add_subcommand("perturbation",
                                  "effective coupled-layer amplitudes and power-law fit");
  std::string pert_kind, pert_lambdas, pert_probe = "flip";
  std::vector<std::string> pert_in;
  double pert_h1 = 0.0, pert_h2 = 0.0;
  pert->add_option("kind", pert_kind, "tensor|check")->required();
  pert->add_option("inputs", pert_in, "A.alist B.alist")->expected(2)->required();
  pert->add_option("--h1", pert_h1, "layer-1 field");
  pert->add_option("--h2", pert_h2, "layer-2 field");
  pert->add_option("--lambdas", pert_lambdas, "comma list of couplings")->required();
  pert->add_option("--probe", pert_probe, "flip|plaquette")
      ->check(CLI::IsMember({"flip", "plaquette"}));

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (info->parsed()) {
    const ClassicalCode c = load_code(code_in, dense_input);
    out << "n " << c.n() << "\nm " << c.m() << "\nrank " << c.rank() << "\nk " << c.k()
        << "\nk_transpose " << c.k_transpose() << '\n';
    print_basis(out, "symmetry", c.symmetries());
    print_basis(out, "redundancy", c.redundancies());
    return 0;
  }
  if (transpose->parsed()) {
    write_file(code_out, emit_alist(transpose_code(load_code(code_in, dense_input))));
    return 0;
  }
  if (perp->parsed()) {
    write_file(code_out, emit_alist(perp_code(load_code(code_in, dense_input))));
    return 0;
  }
  if (ptensor->parsed() || pcheck->parsed()) {
    const ClassicalCode a = load_code(product_in[0], dense_input);
    const ClassicalCode b = load_code(product_in[1], dense_input);
    const ClassicalCode c =
        ptensor->parsed() ? tensor_product(a, b) : check_product(a, b);
    write_file(product_out, emit_alist(c));
    return 0;
  }
  if (ppq->parsed()) {
    std::vector<ClassicalCode> codes;
    for (const auto& f : product_in) codes.push_back(load_code(f, dense_input));
    write_file(product_out, emit_alist(pq_product(codes, pq_q)));
    return 0;
  }
  if (extract->parsed()) {
    const ClassicalCode c = load_code(extract_in, dense_input);
    const QuantumProcess p =
        realization == "defect" ? extract_defect(c) : extract_minimal_coupling(c);
    write_file(extract_out, process_to_json(p));
    out << "ancillas " << p.ancillas.size() << "\nmeasurements " << p.measurements.size() << '\n';
    return 0;
  }
  if (extract_product_cmd->parsed()) {
    const ClassicalCode a = load_code(ep_in[0], dense_input);
    const ClassicalCode b = load_code(ep_in[1], dense_input);
    write_file(ep_out, process_to_json(extract_product(a, b, parse_kind(ep_kind))));
    return 0;
  }
  if (verify->parsed()) {
    const QuantumProcess p = process_from_json(read_file(verify_files.back()));
    const ClassicalCode a = load_code(verify_files[0], dense_input);
    if (p.realization == Realization::Defect || p.realization == Realization::MinimalCoupling) {
      if (verify_files.size() != 2)
        throw std::invalid_argument("duality verification takes one code file");
      return run_verify_report(verify_duality(a, p), verify_json, out);
    }
    if (verify_files.size() != 3)
      throw std::invalid_argument("product verification takes two code files");
    const ClassicalCode b = load_code(verify_files[1], dense_input);
    const ProductKind kind =
        p.realization == Realization::TensorMerge ? ProductKind::Tensor : ProductKind::Check;
    return run_verify_report(verify_product(a, b, kind, p), verify_json, out);
  }
  if (simulate->parsed()) {
    const QuantumProcess p = process_from_json(read_file(sim_proc));
    DenseState in = sim_input == "plus" ? DenseState::uniform_plus(p.n_in)
                                        : DenseState::basis(p.n_in, 0);
    ApplyOptions opts;
    if (!sim_ancilla.empty()) {
      std::vector<std::string> toks;
      std::stringstream ss(sim_ancilla);
      std::string tok;
      while (std::getline(ss, tok, ',')) toks.push_back(tok);
      if (toks.size() != 1 && toks.size() != p.ancillas.size())
        throw std::invalid_argument("--ancilla needs one token or one per ancilla");
      for (std::size_t k = 0; k < p.ancillas.size(); ++k)
        opts.ancilla_overrides[k] =
            label_amplitudes(parse_state_token(toks.size() == 1 ? toks[0] : toks[k]));
    }
    const ApplyResult r = apply_process(p, in, opts);
    out << std::setprecision(12);
    out << "probability " << r.probability << '\n';
    if (r.annihilated) {
      out << "annihilated\n";
      return 1;
    }
    for (std::size_t idx = 0; idx < r.state.amplitudes().size(); ++idx) {
      const cdouble a = r.state.amplitude(idx);
      out << idx << ' ' << std::real(a) << ' ' << std::imag(a) << '\n';
    }
    if (!sim_expect.empty()) {
      std::istringstream es(read_file(sim_expect));
      std::vector<cdouble> want;
      double re, im;
      while (es >> re >> im) want.emplace_back(re, im);
      if (want.size() != r.state.amplitudes().size())
        throw std::invalid_argument("--expect has the wrong number of amplitudes");
      DenseState w(r.state.wires());
      w.amplitudes() = want;
      const double fid = DenseState::fidelity_up_to_phase(w, r.state);
      out << "fidelity " << fid << '\n';
      return fid >= 1.0 - 1e-9 ? 0 : 1;
    }
    return 0;
  }
  if (spectrum->parsed()) {
    const ClassicalCode c = load_code(spec_in, dense_input);
    const auto evs = exact_spectrum(build_hamiltonian(c, spec_j, spec_h), spec_k);
    out << std::setprecision(12);
    for (double e : evs) out << e << '\n';
    return 0;
  }
  if (pert->parsed()) {
    const ClassicalCode a = load_code(pert_in[0], dense_input);
    const ClassicalCode b = load_code(pert_in[1], dense_input);
    const ProductKind kind = parse_kind(pert_kind);
    const std::vector<double> lambdas = parse_double_list(pert_lambdas);
    if (lambdas.empty()) throw std::invalid_argument("--lambdas is empty");

    const std::size_t n1 = a.n(), pairs = a.n() * b.n();
    uint64_t flip_mask = 1;  // site (0,0)
    if (pert_probe == "plaquette") {
      if (a.m() == 0 || b.m() == 0)
        throw std::invalid_argument("plaquette probe needs at least one check in each code");
      flip_mask = 0;
      for (uint32_t i : a.check_support(0))
        for (uint32_t j : b.check_support(0)) flip_mask |= uint64_t{1} << (j * n1 + i);
    }
    (void)pairs;

    std::vector<PowerLawSample> samples;
    out << std::setprecision(10);
    out << "lambda amplitude\n";
    for (double lam : lambdas) {
      const EffectiveBlock blk = effective_coupled_block(a, b, kind, pert_h1, pert_h2, lam);
      const cdouble amp = blk.matrix(static_cast<Eigen::Index>(flip_mask), 0);
      out << lam << ' ' << std::real(amp) << '\n';
      samples.push_back({lam, std::real(amp)});
    }
    if (samples.size() >= 3) {
      const PowerLawFit fit = fit_power_law(samples);
      out << "fit exponent " << fit.exponent << '\n';
      out << "fit constant " << fit.constant << '\n';
      out << "fit max_rel_residual " << fit.max_rel_residual << '\n';
    }
    return 0;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_inner(args, out, err);
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const resource_error& e) {
    err << "resource error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ldpcq::cli
