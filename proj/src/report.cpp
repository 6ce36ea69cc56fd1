// Copyright 2026 The QDT Engine Authors
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

#include "qdt/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>

namespace qdt::report {

using nlohmann::json;

std::string fixed6(double x, bool explicit_sign) {
  char buf[64];
  if (std::abs(x) < 5e-7) x = 0.0;
  std::snprintf(buf, sizeof buf, explicit_sign && x != 0.0 ? "%+.6f" : "%.6f", x);
  return buf;
}

namespace {

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json amplitudes_json(std::span<const Complex> amp) {
  json out = json::array();
  for (const auto& z : amp) out.push_back(complex_json(z));
  return out;
}

std::string relation_symbol(Preference p) { return p == Preference::kPreferred ? ">" : "="; }

std::string complex_text(Complex z) {
  return fixed6(z.real()) + (z.imag() < 0 && fixed6(z.imag()) != "0.000000" ? " - " : " + ") +
         fixed6(std::abs(z.imag())) + "i";
}

}  // namespace

json problem_summary_json(const ProblemDocument& doc) {
  json actions = json::array();
  for (const auto& a : doc.ring.actions()) actions.push_back({{"name", a.name}, {"modes", a.modes}});
  json prospects = json::array();
  for (std::size_t j = 0; j < doc.lattice.size(); ++j) {
    const auto& pr = doc.lattice[j];
    prospects.push_back({{"index", j + 1},
                         {"name", pr.name()},
                         {"norm_squared", pr.norm_squared()},
                         {"projector", is_projector(pr)}});
  }
  return {{"actions", actions},
          {"dimension", doc.space().dimension()},
          {"prospects", prospects},
          {"machine", {{"shots", doc.machine.shots}, {"seed", doc.machine.seed}}}};
}

json basis_json(const ActionRing& ring) {
  json basis = json::array();
  const auto all = enumerate_elementary(ring);
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto nu = all[k].values();
    basis.push_back({{"flat_index", k},
                     {"multi_index", std::vector<std::size_t>(nu.begin(), nu.end())},
                     {"label", ring.label(all[k])}});
  }
  return {{"dimension", ring.grid_size()}, {"dims", ring.dims()}, {"basis", basis}};
}

json decision_json(const DecisionRecord& record) {
  json prospects = json::array();
  for (std::size_t j = 0; j < record.scores.size(); ++j) {
    const auto& sc = record.scores[j];
    prospects.push_back({{"index", j + 1},
                         {"name", record.names[j]},
                         {"raw_p", sc.raw_p},
                         {"raw_p0", sc.raw_p0},
                         {"raw_q", sc.raw_q},
                         {"p", sc.p},
                         {"p0", sc.p0},
                         {"q", sc.q}});
  }
  const auto ordering = order_prospects(record);
  json ranking = json::array();
  for (auto j : ordering.ranking) ranking.push_back(j + 1);
  json relations = json::array();
  for (auto r : ordering.relations) relations.push_back(relation_symbol(r));
  json ties = json::array();
  for (auto j : record.ties) ties.push_back(j + 1);
  return {{"prospects", prospects},
          {"ranking", ranking},
          {"relations", relations},
          {"ordering", to_string(ordering, record.names)},
          {"optimal", {{"index", record.optimal + 1}, {"name", record.names[record.optimal]}}},
          {"ties", ties}};
}

json run_json(const MachineRun& run, const MachineConfig& cfg) {
  json out = {{"decision", decision_json(run.record)},
              {"shots", cfg.shots},
              {"seed", cfg.seed},
              {"chosen", {{"index", run.chosen + 1}, {"name", run.output.name()}}},
              {"output_state", amplitudes_json(run.output.amplitudes())}};
  if (run.sampled) {
    out["counts"] = run.sampled->counts;
    out["frequencies"] = run.sampled->frequencies;
    out["empirical_choice"] = {{"index", run.sampled->empirical_choice + 1},
                               {"name", run.record.names[run.sampled->empirical_choice]}};
  }
  return out;
}

json explain_json(const ProblemDocument& doc) {
  const auto record = decompose(doc.strategic, doc.lattice);
  json prospects = json::array();
  for (std::size_t j = 0; j < doc.lattice.size(); ++j) {
    const auto bd = explain_prospect(doc.strategic, doc.lattice[j]);
    json diag = json::array();
    for (const auto& [n, v] : bd.diagonal) diag.push_back({{"n", n}, {"value", v}});
    json off = json::array();
    for (const auto& t : bd.off_diagonal)
      off.push_back({{"m", t.m}, {"n", t.n}, {"value", complex_json(t.value)}});
    const auto& sc = record.scores[j];
    prospects.push_back({{"index", j + 1},
                         {"name", record.names[j]},
                         {"raw_p", sc.raw_p},
                         {"raw_p0", sc.raw_p0},
                         {"raw_q", sc.raw_q},
                         {"diagonal_terms", diag},
                         {"interference_terms", off}});
  }
  return {{"prospects", prospects}};
}

// ---------------------------------------------------------------------------
// Text

void write_problem_summary(std::ostream& out, const ProblemDocument& doc) {
  out << "valid problem\n";
  out << "actions:";
  for (const auto& a : doc.ring.actions()) out << ' ' << a.name << '[' << a.modes.size() << ']';
  out << "\nmind space dimension: " << doc.space().dimension() << '\n';
  out << "prospects: " << doc.lattice.size() << '\n';
  for (std::size_t j = 0; j < doc.lattice.size(); ++j) {
    const auto& pr = doc.lattice[j];
    out << "  " << j + 1 << "  " << pr.name() << "  <pi|pi> = " << fixed6(pr.norm_squared())
        << (is_projector(pr) ? "  (projector)" : "") << '\n';
  }
  out << "machine: shots " << doc.machine.shots << ", seed " << doc.machine.seed << '\n';
}

void write_basis(std::ostream& out, const ActionRing& ring) {
  out << "dimension " << ring.grid_size() << " (";
  for (std::size_t i = 0; i < ring.dims().size(); ++i) out << (i ? " x " : "") << ring.dims()[i];
  out << ")\n";
  out << std::setw(6) << "flat" << "  " << std::left << std::setw(14) << "multi-index" << "state\n"
      << std::right;
  const auto all = enumerate_elementary(ring);
  for (std::size_t k = 0; k < all.size(); ++k)
    out << std::setw(6) << k << "  " << std::left << std::setw(14) << to_string(all[k])
        << ring.label(all[k]) << '\n'
        << std::right;
}

namespace {

std::size_t name_width(const DecisionRecord& record) {
  std::size_t w = 8;
  for (const auto& n : record.names) w = std::max(w, n.size());
  return w;
}

void table(std::ostream& out, const DecisionRecord& record, bool raw, bool normalized, bool sums) {
  const auto w = static_cast<int>(name_width(record));
  out << std::right << std::setw(4) << "#" << "  " << std::left << std::setw(w) << "prospect"
      << std::right;
  if (raw) out << std::setw(12) << "raw_p" << std::setw(12) << "raw_p0" << std::setw(12) << "raw_q";
  if (normalized) out << std::setw(12) << "p" << std::setw(12) << "p0" << std::setw(12) << "q";
  out << '\n';

  ProspectScores total;
  for (std::size_t j = 0; j < record.scores.size(); ++j) {
    const auto& sc = record.scores[j];
    out << std::setw(4) << j + 1 << "  " << std::left << std::setw(w) << record.names[j] << std::right;
    if (raw)
      out << std::setw(12) << fixed6(sc.raw_p) << std::setw(12) << fixed6(sc.raw_p0) << std::setw(12)
          << fixed6(sc.raw_q, true);
    if (normalized)
      out << std::setw(12) << fixed6(sc.p) << std::setw(12) << fixed6(sc.p0) << std::setw(12)
          << fixed6(sc.q, true);
    out << '\n';
    total.raw_p += sc.raw_p;
    total.raw_p0 += sc.raw_p0;
    total.raw_q += sc.raw_q;
    total.p += sc.p;
    total.p0 += sc.p0;
    total.q += sc.q;
  }
  if (sums) {
    out << std::setw(4) << "" << "  " << std::left << std::setw(w) << "sum" << std::right;
    if (raw)
      out << std::setw(12) << fixed6(total.raw_p) << std::setw(12) << fixed6(total.raw_p0)
          << std::setw(12) << fixed6(total.raw_q, true);
    if (normalized)
      out << std::setw(12) << fixed6(total.p) << std::setw(12) << fixed6(total.p0) << std::setw(12)
          << fixed6(total.q, true);
    out << '\n';
  }
}

void write_choice(std::ostream& out, const DecisionRecord& record) {
  out << "optimal prospect: " << record.names[record.optimal] << " (#" << record.optimal + 1 << ")\n";
  if (record.ties.size() > 1) {
    out << "tied:";
    for (auto j : record.ties) out << ' ' << record.names[j];
    out << '\n';
  }
  out << "ordering: " << to_string(order_prospects(record), record.names) << '\n';
}

}  // namespace

void write_solution(std::ostream& out, const DecisionRecord& record, bool with_raw) {
  write_choice(out, record);
  out << '\n';
  table(out, record, with_raw, true, false);
}

void write_decomposition(std::ostream& out, const DecisionRecord& record) {
  out << "raw (unnormalized): raw_p = raw_p0 + raw_q\n";
  table(out, record, true, false, true);
  out << "\nnormalized: p = p0 + q\n";
  table(out, record, false, true, true);
}

void write_run(std::ostream& out, const MachineRun& run, const MachineConfig& cfg,
               const ActionRing& ring) {
  write_solution(out, run.record, cfg.report_raw);
  if (run.sampled) {
    const auto& s = *run.sampled;
    const auto w = static_cast<int>(name_width(run.record));
    out << "\nmeasurement: " << cfg.shots << " shots, seed " << cfg.seed << '\n';
    out << std::setw(4) << "#" << "  " << std::left << std::setw(w) << "prospect" << std::right
        << std::setw(12) << "count" << std::setw(12) << "frequency" << std::setw(12) << "p" << '\n';
    for (std::size_t j = 0; j < s.counts.size(); ++j)
      out << std::setw(4) << j + 1 << "  " << std::left << std::setw(w) << run.record.names[j]
          << std::right << std::setw(12) << s.counts[j] << std::setw(12) << fixed6(s.frequencies[j])
          << std::setw(12) << fixed6(run.record.scores[j].p) << '\n';
    out << "empirical choice: " << run.record.names[s.empirical_choice] << " (#"
        << s.empirical_choice + 1 << ")\n";
  } else {
    out << "\nmeasurement: exact (0 shots)\n";
  }
  out << "\noutput state: " << run.output.name() << '\n';
  const auto amp = run.output.amplitudes();
  for (std::size_t n = 0; n < amp.size(); ++n)
    if (amp[n] != Complex{0.0, 0.0})
      out << std::setw(6) << n << "  " << ring.label(ring.multi_index(n)) << "  "
          << complex_text(amp[n]) << '\n';
}

void write_explain(std::ostream& out, const ProblemDocument& doc) {
  const auto record = decompose(doc.strategic, doc.lattice);
  const auto& ring = doc.ring;
  for (std::size_t j = 0; j < doc.lattice.size(); ++j) {
    const auto& sc = record.scores[j];
    const auto bd = explain_prospect(doc.strategic, doc.lattice[j]);
    if (j) out << '\n';
    out << "prospect " << j + 1 << ": " << record.names[j] << '\n';
    out << "  raw_p = " << fixed6(sc.raw_p) << "   raw_p0 = " << fixed6(sc.raw_p0)
        << "   raw_q = " << fixed6(sc.raw_q, true) << '\n';
    out << "  utility terms |c_n|^2 |a_n|^2:\n";
    for (const auto& [n, v] : bd.diagonal)
      out << "    n=" << n << ' ' << ring.label(ring.multi_index(n)) << "  " << fixed6(v) << '\n';
    out << "  interference terms conj(c_m) c_n a_m conj(a_n), m != n:\n";
    if (bd.off_diagonal.empty()) out << "    none\n";
    for (const auto& t : bd.off_diagonal)
      out << "    m=" << t.m << " n=" << t.n << "  " << complex_text(t.value) << '\n';
  }
}

}  // namespace qdt::report
