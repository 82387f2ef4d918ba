// Copyright 2026 The wqaoa Authors
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

#include "wqaoa/paramset.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include <nlohmann/json.hpp>

#include "wqaoa/distributions.hpp"
#include "wqaoa/errors.hpp"

namespace wqaoa {

InfParamTable InfParamTable::builtin() {
  InfParamTable t(BetaConvention::kTable);
  t.set(1, {1.0}, {std::numbers::pi / 4.0});
  t.set(2, {0.7634853305, 1.3309985577}, {0.9919355003, 0.5380862780});
  t.set(3, {0.6593755030, 1.1375827940, 1.2811880301}, {1.0999525600, 0.7350334600, 0.4217573800});
  return t;
}

void InfParamTable::set(int p, std::vector<double> gamma, std::vector<double> beta) {
  require(p >= 1, "depth must be at least 1");
  QaoaParams q{std::move(gamma), std::move(beta), convention_};
  q.validate();
  require(q.p() == p, "entry length must equal its depth");
  entries_[p] = std::move(q);
}

const QaoaParams& InfParamTable::raw(int p) const {
  auto it = entries_.find(p);
  if (it == entries_.end()) throw PreconditionError("no parameter table entry for p = " + std::to_string(p));
  return it->second;
}

QaoaParams InfParamTable::get(int p) const { return raw(p).in(BetaConvention::kClosedForm); }

InfParamTable InfParamTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open parameter table " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return inf_table_from_json(j);
}

nlohmann::json to_json(const InfParamTable& t) {
  nlohmann::json entries = nlohmann::json::object();
  for (int p = 1; p <= t.max_depth(); ++p) {
    if (!t.contains(p)) continue;
    const QaoaParams& q = t.raw(p);
    entries[std::to_string(p)] = {{"gamma", q.gamma}, {"beta", q.beta}};
  }
  return {{"convention", to_string(t.convention())}, {"entries", entries}};
}

InfParamTable inf_table_from_json(const nlohmann::json& j) {
  try {
    InfParamTable t(beta_convention_from_string(j.value("convention", std::string("table"))));
    for (const auto& [key, entry] : j.at("entries").items()) {
      t.set(std::stoi(key), entry.at("gamma").get<std::vector<double>>(),
            entry.at("beta").get<std::vector<double>>());
    }
    if (!t.contains(1)) throw ConfigError("parameter table must contain p = 1");
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("parameter table: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ConfigError(std::string("parameter table: ") + e.what());
  }
}

double average_degree(const WeightedGraph& g) {
  if (g.num_edges() == 0) throw PreconditionError("average degree of an edgeless graph");
  return 2.0 * static_cast<double>(g.num_edges()) / g.num_vertices();
}

namespace {

double branching(const WeightedGraph& g) {
  const double d = average_degree(g) - 1.0;
  if (d <= 0.0) throw PreconditionError("parameter schemes need average degree > 1");
  return d;
}

QaoaParams scaled(const QaoaParams& base, double factor) {
  QaoaParams out = base;
  for (double& v : out.gamma) v *= factor;
  return out;
}

}  // namespace

QaoaParams method_i(const WeightedGraph& g, const InfParamTable& table, int p) {
  const double b = branching(g);
  const double rms = empirical_scale(g.weights());
  return scaled(table.get(p), 1.0 / std::sqrt(b * rms * rms));
}

QaoaParams method_ii(const WeightedGraph& g, const InfParamTable& table, int p) {
  const double b = branching(g);
  const double rms = empirical_scale(g.weights());
  return scaled(table.get(p), std::atan(1.0 / std::sqrt(b)) / rms);
}

QaoaParams baseline_ref9(const WeightedGraph& g, std::span<const double> gamma_median,
                         std::span<const double> beta) {
  const double b = branching(g);
  double mean_abs = 0.0;
  for (const Edge& e : g.edges()) mean_abs += std::abs(e.w);
  mean_abs /= static_cast<double>(g.num_edges());
  if (mean_abs == 0.0) throw DegenerateScaleError("mean absolute weight is zero");
  QaoaParams out{{gamma_median.begin(), gamma_median.end()}, {beta.begin(), beta.end()}, BetaConvention::kClosedForm};
  out.validate();
  return scaled(out, std::atan(1.0 / std::sqrt(b)) / mean_abs);
}

const char* to_string(SchemeChoice s) {
  switch (s) {
    case SchemeChoice::kMethodI: return "method_i";
    case SchemeChoice::kMethodII: return "method_ii";
    case SchemeChoice::kBaselineRef9: return "baseline";
    case SchemeChoice::kFixed: return "fixed";
  }
  return "?";
}

SchemeChoice scheme_from_string(const std::string& name) {
  if (name == "method_i") return SchemeChoice::kMethodI;
  if (name == "method_ii") return SchemeChoice::kMethodII;
  if (name == "baseline") return SchemeChoice::kBaselineRef9;
  if (name == "fixed") return SchemeChoice::kFixed;
  throw ConfigError("unknown scheme: " + name);
}

QaoaParams apply_scheme(SchemeChoice scheme, const WeightedGraph& g, const SchemeInputs& in, int p) {
  require(in.table != nullptr, "scheme needs a parameter table");
  switch (scheme) {
    case SchemeChoice::kMethodI: return method_i(g, *in.table, p);
    case SchemeChoice::kMethodII: return method_ii(g, *in.table, p);
    case SchemeChoice::kBaselineRef9: {
      const InfParamTable& src = (in.median && in.median->contains(p)) ? *in.median : *in.table;
      const QaoaParams med = src.get(p);
      return baseline_ref9(g, med.gamma, med.beta);
    }
    case SchemeChoice::kFixed: return in.table->get(p);
  }
  throw PreconditionError("unknown scheme");
}

}  // namespace wqaoa
