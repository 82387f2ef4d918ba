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

#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wqaoa/graph.hpp"
#include "wqaoa/qaoa.hpp"

namespace wqaoa {

// Unweighted infinite-size optima (large-girth regular graphs) per depth.
// Stored in the convention they were loaded in; get() always returns the
// closed-form convention used by the simulator.
class InfParamTable {
 public:
  InfParamTable() = default;
  explicit InfParamTable(BetaConvention convention) : convention_(convention) {}

  // Built-in values: p = 1 is (1, pi/4) in table convention; p = 2, 3 were
  // obtained by maximising nu_p (see tools/wqaoa tree-eval --optimize).
  static InfParamTable builtin();
  static InfParamTable load(const std::string& path);

  BetaConvention convention() const { return convention_; }
  void set(int p, std::vector<double> gamma, std::vector<double> beta);
  bool contains(int p) const { return entries_.count(p) != 0; }
  int max_depth() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }
  QaoaParams get(int p) const;
  // The raw entry, in the table's own convention.
  const QaoaParams& raw(int p) const;

 private:
  BetaConvention convention_ = BetaConvention::kTable;
  std::map<int, QaoaParams> entries_;
};

nlohmann::json to_json(const InfParamTable& t);
InfParamTable inf_table_from_json(const nlohmann::json& j);

// 2|E| / n.
double average_degree(const WeightedGraph& g);

// gamma = gamma_inf / sqrt((D - 1) * mean(w^2)), D the average degree.
QaoaParams method_i(const WeightedGraph& g, const InfParamTable& table, int p);
// gamma = gamma_inf * arctan(1/sqrt(D - 1)) / sqrt(mean(w^2)).
QaoaParams method_ii(const WeightedGraph& g, const InfParamTable& table, int p);
// gamma = gamma_median * arctan(1/sqrt(D - 1)) / mean(|w|). Betas in the
// closed-form convention.
QaoaParams baseline_ref9(const WeightedGraph& g, std::span<const double> gamma_median,
                         std::span<const double> beta);

enum class SchemeChoice { kMethodI, kMethodII, kBaselineRef9, kFixed };

const char* to_string(SchemeChoice s);
SchemeChoice scheme_from_string(const std::string& name);

struct SchemeInputs {
  const InfParamTable* table = nullptr;
  // Baseline medians per depth; falls back to the table's gammas when absent.
  const InfParamTable* median = nullptr;
};

QaoaParams apply_scheme(SchemeChoice scheme, const WeightedGraph& g, const SchemeInputs& in, int p);

}  // namespace wqaoa
