// Copyright 2026 The raggedcore Authors
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

// raggedcore: validate, inspect, convert, build and benchmark array packages.
//
//   raggedcore validate <package>
//   raggedcore show <package>
//   raggedcore tojson <package> [--lines]
//   raggedcore build <form.json> <values.jsonl> <out-package>
//   raggedcore bench [--n N] [--seed S]
//   raggedcore dimuon [package] [--n N] [--seed S]
//
// Exit status: 0 ok, 1 validation/data failure, 2 usage error. With --json
// every command prints exactly one JSON object with "command" and "ok".

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "raggedcore/raggedcore.hpp"
#include "raggedcore/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace raggedcore;

namespace {

constexpr int kOk = 0;
constexpr int kDataFailure = 1;
constexpr int kUsage = 2;

struct Outcome {
  int status = kOk;
  std::string text;     // standard output in text mode
  std::string errors;   // standard error in text mode
  ordered_json report = ordered_json::object();  // extra members in --json mode
};

Outcome usage_failure(const std::string& message) {
  Outcome out;
  out.status = kUsage;
  out.errors = message;
  out.report["error"] = message;
  return out;
}

Outcome data_failure(const std::string& message) {
  Outcome out;
  out.status = kDataFailure;
  out.errors = message;
  out.report["error"] = message;
  return out;
}

bool package_path_ok(const fs::path& path) { return fs::is_directory(path); }

ordered_json values_json(const Array& array, std::int64_t begin, std::int64_t end) {
  auto out = ordered_json::array();
  for (std::int64_t i = begin; i < end; ++i) {
    out.push_back(ordered_json::parse(array.get_item(i).to_json()));
  }
  return out;
}

Outcome cmd_validate(const fs::path& path) {
  if (!package_path_ok(path)) return usage_failure("cannot read package '" + path.string() + "'");
  Outcome out;
  std::vector<std::string> problems;
  try {
    ArrayPackage package = read_package(path);
    Layout layout = assemble_layout(package.form, package.length, package.buffers);
    ValidationReport report = validate(layout);
    for (const auto& v : report.violations()) problems.push_back(v.form_key + ": " + v.rule);
    if (report.ok() && layout.length() != package.length) {
      problems.push_back(fmt::format("{}: node length {} differs from package length {}",
                                     layout.form_key(), layout.length(), package.length));
    }
  } catch (const Error& e) {
    problems.emplace_back(e.what());
  }
  out.report["violations"] = problems;
  if (problems.empty()) {
    out.text = "ok\n";
  } else {
    out.status = kDataFailure;
    out.text = "invalid\n";
    for (const auto& p : problems) out.text += "  " + p + "\n";
  }
  return out;
}

Array load(const fs::path& path) { return from_buffers(read_package(path)); }

Outcome cmd_show(const fs::path& path) {
  if (!package_path_ok(path)) return usage_failure("cannot read package '" + path.string() + "'");
  Array array = load(path);
  Outcome out;
  std::int64_t n = array.length();
  bool elide = n > 10;
  std::int64_t head_end = elide ? 5 : n;
  std::int64_t tail_begin = elide ? n - 5 : n;

  out.text = "type: " + array.type_string() + "\n";
  std::vector<std::string> rows;
  for (std::int64_t i = 0; i < head_end; ++i) rows.push_back(array.get_item(i).to_json());
  if (elide) rows.emplace_back("...");
  for (std::int64_t i = tail_begin; i < n; ++i) rows.push_back(array.get_item(i).to_json());
  std::string body = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) body += (i ? ",\n " : "") + rows[i];
  out.text += body + "]\n";

  out.report["type"] = array.type_string();
  out.report["length"] = n;
  out.report["head"] = values_json(array, 0, head_end);
  out.report["tail"] = values_json(array, tail_begin, n);
  return out;
}

Outcome cmd_tojson(const fs::path& path, bool lines) {
  if (!package_path_ok(path)) return usage_failure("cannot read package '" + path.string() + "'");
  Array array = load(path);
  Outcome out;
  if (lines) {
    for (std::int64_t i = 0; i < array.length(); ++i) out.text += array.get_item(i).to_json() + "\n";
  } else {
    out.text = array.to_json() + "\n";
  }
  out.report["values"] = ordered_json::parse(array.to_json());
  return out;
}

Outcome cmd_build(const fs::path& form_path, const fs::path& lines_path, const fs::path& out_path) {
  std::ifstream form_in(form_path);
  if (!form_in) return usage_failure("cannot read form '" + form_path.string() + "'");
  std::ifstream lines_in(lines_path);
  if (!lines_in) return usage_failure("cannot read values '" + lines_path.string() + "'");

  std::string form_text((std::istreambuf_iterator<char>(form_in)), std::istreambuf_iterator<char>());
  Form form = parse_form(form_text);
  auto builder = make_builder(form);

  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(lines_in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      append_json(*builder, line);
    } catch (const Error& e) {
      return data_failure(fmt::format("line {}: expected {}: {}", line_no, form.type_string(),
                                      e.what()));
    }
  }
  ArrayPackage package = builder->snapshot();
  write_package(package, out_path);

  Outcome out;
  out.text = fmt::format("wrote {} entries of type {} to {}\n", package.length,
                         form.type_string(), out_path.string());
  out.report["length"] = package.length;
  out.report["type"] = form.type_string();
  out.report["output"] = out_path.string();
  return out;
}

Outcome cmd_bench(std::int64_t n, std::uint64_t seed) {
  if (n < 0) return usage_failure("--n must be non-negative");
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  synth::RaggedSample sample = synth::poisson_normal(n, seed);
  Array array = unflatten(synth::float32_array(sample.content), sample.counts);
  auto t1 = clock::now();
  Array sums = sum_inner(array, PrimitiveType::float32);
  auto t2 = clock::now();

  double checksum = 0.0;
  const Buffer& data = sums.layout().data();
  for (std::int64_t i = 0; i < sums.length(); ++i) checksum += data.get<float>(i);

  auto ms = [](auto d) { return std::chrono::duration<double, std::milli>(d).count(); };
  Outcome out;
  out.text = fmt::format(
      "rows {}\ncontent {}\nchecksum {:.17g}\nbuild_ms {:.3f}\nsum_inner_ms {:.3f}\n", n,
      sample.content.size(), checksum, ms(t1 - t0), ms(t2 - t1));
  out.report["rows"] = n;
  out.report["content"] = sample.content.size();
  out.report["seed"] = seed;
  out.report["checksum"] = checksum;
  out.report["build_ms"] = ms(t1 - t0);
  out.report["sum_inner_ms"] = ms(t2 - t1);
  return out;
}

Outcome cmd_dimuon(const std::string& path, std::int64_t n, std::uint64_t seed) {
  if (!path.empty() && !package_path_ok(path)) {
    return usage_failure("cannot read package '" + path + "'");
  }
  Array events = [&] {
    if (path.empty()) {
      auto generated = synth::muon_events(n, seed);
      return synth::events_array(generated);
    }
    return load(path);
  }();
  if (auto missing = missing_dimuon_columns(events); !missing.empty()) {
    Outcome out = data_failure(fmt::format("missing columns: {}", fmt::join(missing, ", ")));
    out.report["missing"] = missing;
    return out;
  }
  DimuonResult result = dimuon_pipeline(events);
  const Buffer& masses = result.masses.layout().data();
  std::int64_t count = result.masses.length();
  double total = 0.0;
  std::vector<double> first;
  for (std::int64_t i = 0; i < count; ++i) {
    double m = masses.get<double>(i);
    total += m;
    if (i < 5) first.push_back(m);
  }
  double mean = count > 0 ? total / static_cast<double>(count) : 0.0;

  Outcome out;
  std::string listed;
  for (double m : first) listed += (listed.empty() ? "" : ", ") + fmt::format("{:.17g}", m);
  out.text = fmt::format("events {}\nselected {}\nmean_mass {:.17g}\nfirst [{}]\n",
                         events.length(), count, mean, listed);
  out.report["events"] = events.length();
  out.report["count"] = count;
  out.report["mean"] = mean;
  out.report["first"] = first;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"raggedcore: ragged array packages"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "Emit a single JSON object");
  app.fallthrough();

  std::string package;
  bool lines = false;
  std::string form_path, values_path, out_path;
  std::int64_t n = 1 << 20;
  std::int64_t dimuon_n = 100;
  std::uint64_t seed = 42;

  auto* validate_cmd = app.add_subcommand("validate", "Check a package's structure");
  validate_cmd->add_option("package", package, "Package directory")->required();
  auto* show_cmd = app.add_subcommand("show", "Print the type and a preview of the values");
  show_cmd->add_option("package", package, "Package directory")->required();
  auto* tojson_cmd = app.add_subcommand("tojson", "Print all values as JSON");
  tojson_cmd->add_option("package", package, "Package directory")->required();
  tojson_cmd->add_flag("--lines", lines, "One entry per line");
  auto* build_cmd = app.add_subcommand("build", "Build a package from a form and JSON lines");
  build_cmd->add_option("form", form_path, "Form JSON file")->required();
  build_cmd->add_option("values", values_path, "JSON-lines file, one entry per line")->required();
  build_cmd->add_option("out", out_path, "Output package directory")->required();
  auto* bench_cmd = app.add_subcommand("bench", "Poisson/normal ragged array + per-row sums");
  bench_cmd->add_option("--n", n, "Rows")->capture_default_str();
  bench_cmd->add_option("--seed", seed, "Generator seed")->capture_default_str();
  auto* dimuon_cmd = app.add_subcommand("dimuon", "Opposite-charge dimuon mass selection");
  dimuon_cmd->add_option("package", package, "Events package (synthetic events if omitted)");
  dimuon_cmd->add_option("--n", dimuon_n, "Synthetic events")->capture_default_str();
  dimuon_cmd->add_option("--seed", seed, "Generator seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::string command = app.get_subcommands().front()->get_name();
  Outcome outcome;
  try {
    if (*validate_cmd) {
      outcome = cmd_validate(package);
    } else if (*show_cmd) {
      outcome = cmd_show(package);
    } else if (*tojson_cmd) {
      outcome = cmd_tojson(package, lines);
    } else if (*build_cmd) {
      outcome = cmd_build(form_path, values_path, out_path);
    } else if (*bench_cmd) {
      outcome = cmd_bench(n, seed);
    } else if (*dimuon_cmd) {
      if (dimuon_n < 0) {
        outcome = usage_failure("--n must be non-negative");
      } else {
        outcome = cmd_dimuon(package, dimuon_n, seed);
      }
    }
  } catch (const Error& e) {
    outcome = data_failure(e.what());
  }

  if (json_mode) {
    ordered_json doc;
    doc["command"] = command;
    doc["ok"] = outcome.status == kOk;
    for (auto& [key, value] : outcome.report.items()) doc[key] = value;
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << outcome.text;
    if (!outcome.errors.empty()) std::cerr << "raggedcore " << command << ": " << outcome.errors << "\n";
  }
  return outcome.status;
}
