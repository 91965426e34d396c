// Copyright 2026 The fermiapprox Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "report.hpp"

#include <cstdio>
#include <sstream>

#include "canonical36.hpp"
#include "rdm.hpp"
#include "reduce.hpp"

namespace fermi {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string num(Complex z) {
  return "(" + num(z.real()) + "," + num(z.imag()) + ")";
}

std::string row_of(const Matrix& m, int r) {
  std::string out;
  for (int c = 0; c < m.cols(); ++c) {
    if (c) out += ' ';
    out += num(m(r, c));
  }
  return out;
}

std::string col_of(const Matrix& m, int c) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    if (r) out += ' ';
    out += num(m(r, c));
  }
  return out;
}

void emit_header(std::ostringstream& out, const std::string& kind,
                 const FermionState& state, const std::string& source) {
  out << "report: " << kind << '\n';
  out << "source: " << source << '\n';
  out << "orbitals: " << state.orbitals() << '\n';
  out << "particles: " << state.particles() << '\n';
  out << "terms: " << state.term_count() << '\n';
  out << "norm: " << num(state.norm()) << '\n';
}

void emit_frame(std::ostringstream& out, const std::string& prefix,
                const Matrix& frame) {
  for (int c = 0; c < frame.cols(); ++c)
    out << prefix << ".col" << (c + 1) << ": " << col_of(frame, c) << '\n';
}

void emit_tree(std::ostringstream& out, const ReductionTree& node,
               const std::string& path, double weight_product) {
  out << "tree.node: path=" << path;
  switch (node.kind) {
    case ReductionTree::Kind::Leaf:
      out << " kind=leaf particles=" << node.state.particles()
          << " orbitals=" << node.state.orbitals()
          << " terms=" << node.state.term_count() << " imax=" << num(node.imax)
          << " weight=" << num(weight_product)
          << " contribution=" << num(weight_product * node.imax) << '\n';
      return;
    case ReductionTree::Kind::Factor:
      out << " kind=factor imax=" << num(node.imax) << '\n';
      emit_tree(out, *node.child, path + "/rest", weight_product);
      return;
    case ReductionTree::Kind::Branch:
      out << " kind=branch pair=(" << node.pair_i << "," << node.pair_j
          << ") weight_with=" << num(node.weight_with)
          << " weight_without=" << num(node.weight_without)
          << " imax=" << num(node.imax) << '\n';
      emit_tree(out, *node.child_without, path + "/without",
                weight_product * node.weight_without);
      emit_tree(out, *node.child_with, path + "/with",
                weight_product * node.weight_with);
      return;
  }
}

}  // namespace

std::string report_analyze(const FermionState& state,
                           const std::string& source,
                           const AnalyzeOptions& opts) {
  FermionState normalized =
      state.is_normalized(1e-10) ? state : normalize(state);
  Matrix rho = one_particle_rdm(normalized);
  NaturalOrbitalDecomposition dec = natural_orbitals(rho);

  std::ostringstream out;
  emit_header(out, "analyze", state, source);

  out << "occupations:";
  for (int i = 0; i < dec.occupations.size(); ++i)
    out << ' ' << num(dec.occupations(i));
  out << '\n';

  int rank = 0;
  for (int i = 0; i < dec.occupations.size(); ++i)
    if (dec.occupations(i) > opts.envelope_tol) ++rank;
  out << "envelope_rank: " << rank << '\n';
  out << "envelope_tol: " << num(opts.envelope_tol) << '\n';

  for (int r = 0; r < rho.rows(); ++r)
    out << "rdm.row" << (r + 1) << ": " << row_of(rho, r) << '\n';

  bool bd = state.particles() == 3 && state.orbitals() == 6;
  out << "bd_applicable: " << (bd ? "true" : "false") << '\n';
  if (bd) {
    BorlandDennisReport report = borland_dennis_check(dec, opts.bd_tol);
    out << "bd_sum_1_6: " << num(report.sum_1_6) << '\n';
    out << "bd_sum_2_5: " << num(report.sum_2_5) << '\n';
    out << "bd_sum_3_4: " << num(report.sum_3_4) << '\n';
    out << "bd_slack: " << num(report.slack) << '\n';
    out << "bd_tol: " << num(report.tol) << '\n';
    out << "bd_satisfied: " << (report.satisfied ? "true" : "false") << '\n';
  }

  std::vector<Vector> certain = find_certain_orbitals(normalized);
  out << "certain_count: " << certain.size() << '\n';
  for (std::size_t i = 0; i < certain.size(); ++i) {
    Matrix m(certain[i].size(), 1);
    m.col(0) = certain[i];
    out << "certain." << (i + 1) << ": " << col_of(m, 0) << '\n';
  }

  auto pairs = find_simultaneous_pairs(normalized);
  out << "simultaneous_pairs:";
  for (const auto& [i, j] : pairs) out << " (" << i << "," << j << ")";
  out << '\n';
  return out.str();
}

std::string report_approximate(const FermionState& state,
                               const std::string& source, int rank,
                               const OptimizerConfig& cfg) {
  FermionState normalized =
      state.is_normalized(1e-10) ? state : normalize(state);

  std::ostringstream out;
  emit_header(out, "approximate", state, source);
  out << "rank: " << rank << '\n';
  out << "restarts: " << cfg.restarts << '\n';
  out << "tol: " << num(cfg.tol) << '\n';
  out << "seed: " << cfg.seed << '\n';

  bool reduced = false;
  if (rank == normalized.particles()) {
    ReductionTree tree = decompose_full(normalized);
    if (tree.kind != ReductionTree::Kind::Leaf) {
      reduced = true;
      evaluate_tree(tree, cfg);
      out << "reduction_applied: true\n";
      out << "value: " << num(tree.imax) << '\n';
      out << "converged: true\n";
      emit_frame(out, "frame", tree.optimal_frame);
      emit_tree(out, tree, "", 1.0);
    }
  }
  if (!reduced) {
    ApproximationResult res = rank == normalized.particles()
                                  ? optimize_slater(normalized, cfg)
                                  : optimize_subspace(normalized, rank, cfg);
    out << "reduction_applied: false\n";
    out << "value: " << num(res.value) << '\n';
    out << "iterations: " << res.iterations << '\n';
    out << "restarts_used: " << res.restarts_used << '\n';
    out << "converged: " << (res.converged ? "true" : "false") << '\n';
    emit_frame(out, "frame", res.frame);
  }
  return out.str();
}

std::string report_reduce(const FermionState& state, const std::string& source,
                          const OptimizerConfig& cfg) {
  FermionState normalized =
      state.is_normalized(1e-10) ? state : normalize(state);
  ReductionTree tree = decompose_full(normalized);
  evaluate_tree(tree, cfg);

  std::ostringstream out;
  emit_header(out, "reduce", state, source);
  out << "tree.leaves: " << tree.leaf_count() << '\n';
  out << "tree.depth: " << tree.depth() << '\n';
  out << "tree.imax: " << num(tree.imax) << '\n';
  emit_tree(out, tree, "", 1.0);
  return out.str();
}

std::string report_canonical36(const FermionState& state,
                               const std::string& source,
                               const OptimizerConfig& cfg) {
  FermionState normalized =
      state.is_normalized(1e-10) ? state : normalize(state);
  ApproximationResult res = optimize_slater(normalized, cfg);
  CanonicalForm36 form = canonicalize36(normalized, res.frame);
  BlockReport blocks = verify_bd_blocks(form);
  NaturalOrbitalDecomposition dec = natural_orbitals(normalized);
  BorlandDennisReport bd = borland_dennis_check(dec);

  FermionState rebuilt = canonical_reconstruct(form);
  double err = 0.0;
  for (const OrbitalIndexSet& key : all_subsets(6, 3))
    err = std::max(err,
                   std::abs(rebuilt.amplitude(key) - normalized.amplitude(key)));

  std::ostringstream out;
  emit_header(out, "canonical36", state, source);
  out << "value: " << num(res.value) << '\n';
  out << "converged: " << (res.converged ? "true" : "false") << '\n';
  out << "coeff.A: " << num(form.A) << '\n';
  out << "coeff.B: " << num(form.B) << '\n';
  out << "coeff.C: " << num(form.C) << '\n';
  out << "coeff.D: " << num(form.D) << '\n';
  out << "coeff.E: " << num(form.E) << '\n';
  out << "reconstruction_error: " << num(err) << '\n';
  const char* labels[] = {"e1", "e2", "e3", "h1", "h2", "h3"};
  for (int c = 0; c < 6; ++c)
    out << "basis." << labels[c] << ": " << col_of(form.basis, c) << '\n';
  for (int k = 0; k < 3; ++k) {
    Matrix block = blocks.blocks[k];
    out << "block" << (k + 1) << ".row1: " << row_of(block, 0) << '\n';
    out << "block" << (k + 1) << ".row2: " << row_of(block, 1) << '\n';
    out << "block" << (k + 1) << ".trace: " << num(blocks.traces[k]) << '\n';
  }
  out << "bd_sum_1_6: " << num(bd.sum_1_6) << '\n';
  out << "bd_sum_2_5: " << num(bd.sum_2_5) << '\n';
  out << "bd_sum_3_4: " << num(bd.sum_3_4) << '\n';
  out << "bd_slack: " << num(bd.slack) << '\n';
  out << "bd_satisfied: " << (bd.satisfied ? "true" : "false") << '\n';
  return out.str();
}

std::string report_ensemble(const EnsembleReport& report,
                            const std::string& csv_path) {
  std::ostringstream out;
  out << "report: ensemble\n";
  out << "particles: " << report.particles << '\n';
  out << "orbitals: " << report.orbitals << '\n';
  out << "samples: " << report.samples << '\n';
  out << "seed: " << report.seed << '\n';
  out << "min: " << num(report.min) << '\n';
  out << "mean: " << num(report.mean) << '\n';
  out << "max: " << num(report.max) << '\n';
  out << "bound_2_over_d2: " << num(report.bound_2_over_d2) << '\n';
  out << "violations: " << report.violations << '\n';
  out << "csv: " << (csv_path.empty() ? "none" : csv_path) << '\n';
  return out.str();
}

std::string report_examples(const FermionState& state, const std::string& name,
                            const std::string& out_path) {
  std::ostringstream out;
  emit_header(out, "examples", state, name);
  out << "out: " << out_path << '\n';
  return out.str();
}

}  // namespace fermi
