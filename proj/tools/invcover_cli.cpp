// Command-line front end. Talks to the library only through the C API.
#include <invcover/invcover.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

struct Failure {
  invcover_status status;
  std::string message;
};

int report_failure(invcover_status status, const std::string &message) {
  json err{{"status", invcover_status_name(status)},
           {"exit_code", static_cast<int>(status)},
           {"message", message}};
  std::cerr << err.dump() << "\n";
  return static_cast<int>(status);
}

void check(invcover_status status) {
  if (status != INVCOVER_OK) throw Failure{status, invcover_last_error()};
}

struct InstanceDeleter {
  void operator()(invcover_instance *p) const { invcover_instance_free(p); }
};
using InstancePtr = std::unique_ptr<invcover_instance, InstanceDeleter>;

InstancePtr load(const std::string &path) {
  invcover_instance *raw = nullptr;
  check(invcover_instance_load(path.c_str(), &raw));
  return InstancePtr(raw);
}

// Takes ownership of a library string; status is returned so that callers can
// still print documents that accompany a failure.
invcover_status take(invcover_status status, char *text, json &doc) {
  if (text != nullptr) {
    doc = json::parse(text);
    invcover_string_free(text);
  }
  return status;
}

json call(invcover_status status, char *text) {
  json doc;
  take(status, text, doc);
  check(status);
  return doc;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{INVCOVER_INVALID_INPUT, "cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Human rendering.

bool is_rational(const json &v) {
  return v.is_object() && v.size() == 2 && v.contains("num") && v.contains("den");
}

bool is_surd(const json &v) {
  return v.is_object() && v.size() == 2 && v.contains("a") && v.contains("b") && is_rational(v["a"]);
}

long double approx(const json &q) {
  return std::strtold(q["num"].get<std::string>().c_str(), nullptr) /
         std::strtold(q["den"].get<std::string>().c_str(), nullptr);
}

std::string exact(const json &q) {
  const auto num = q["num"].get<std::string>();
  const auto den = q["den"].get<std::string>();
  return den == "1" ? num : num + "/" + den;
}

std::string hint(long double x) {
  std::ostringstream out;
  out << std::setprecision(6) << static_cast<double>(x);
  return out.str();
}

std::string render(const json &v) {
  if (is_rational(v)) {
    const std::string text = exact(v);
    if (v["den"].get<std::string>() == "1") return text;
    return text + " (~" + hint(approx(v)) + ")";
  }
  if (is_surd(v)) {
    const bool has_b = v["b"]["num"].get<std::string>() != "0";
    if (!has_b) return render(v["a"]);
    std::string b = exact(v["b"]);
    const bool negative = b.front() == '-';
    if (negative) b.erase(0, 1);
    std::string text = exact(v["a"]) + (negative ? " - " : " + ") + b + "*sqrt2";
    return text + " (~" + hint(approx(v["a"]) + approx(v["b"]) * 1.41421356237309504880L) + ")";
  }
  if (v.is_array()) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      if (v[i].is_string()) {
        out += v[i].get<std::string>();
      } else if (v[i].is_object() && !is_rational(v[i]) && !is_surd(v[i])) {
        out += "[" + render(v[i]) + "]";
      } else {
        out += render(v[i]);
      }
    }
    return out + "}";
  }
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object()) {
    std::string out;
    for (const auto &[k, x] : v.items()) {
      if (!out.empty()) out += ", ";
      out += k + "=" + render(x);
    }
    return out;
  }
  return v.dump();
}

void print_rows(const std::vector<std::pair<std::string, std::string>> &rows) {
  std::size_t width = 0;
  for (const auto &row : rows) width = std::max(width, row.first.size());
  for (const auto &[key, value] : rows) {
    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << key << value << "\n";
  }
}

void print_flat(const json &doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto &[key, value] : doc.items()) rows.emplace_back(key, render(value));
  print_rows(rows);
}

void print_report(const json &doc) {
  std::cout << "status  " << doc["status"].get<std::string>() << "\n\n";
  print_flat(doc["quantities"]);
  std::cout << "\n";
  std::cout << std::left << std::setw(28) << "clause" << std::setw(8) << "result" << "detail\n";
  for (const auto &c : doc["clauses"]) {
    std::string result;
    std::string detail;
    if (!c["applicable"].get<bool>()) {
      result = "n/a";
      detail = c["reason"].get<std::string>();
    } else {
      result = c["holds"].get<bool>() ? "ok" : "FAIL";
      detail = render(c["lhs"]) + " " + c["relation"].get<std::string>() + " " + render(c["rhs"]);
      if (!c["reason"].get<std::string>().empty()) detail += "  [" + c["reason"].get<std::string>() + "]";
    }
    std::cout << std::left << std::setw(28) << c["name"].get<std::string>() << std::setw(8) << result
              << detail << "\n";
  }
  if (!doc["notes"].empty()) {
    std::cout << "\n";
    for (const auto &note : doc["notes"]) std::cout << "note: " << note.get<std::string>() << "\n";
  }
}

void print_search(const json &doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("mode", doc["mode"].get<std::string>());
  rows.emplace_back("instances_examined", doc["instances_examined"].dump());
  rows.emplace_back("skipped", doc["skipped"].dump());
  rows.emplace_back("best_ratio", doc["best_ratio"].is_null() ? "-" : render(doc["best_ratio"]));
  rows.emplace_back("best_index", doc["best_index"].is_null() ? "-" : doc["best_index"].dump());
  print_rows(rows);
  std::cout << "\nratio               count\n";
  for (const auto &bucket : doc["histogram"]) {
    std::cout << std::left << std::setw(20) << render(bucket["ratio"]) << bucket["count"].dump() << "\n";
  }
}

void emit(const json &doc, bool as_json, void (*human)(const json &)) {
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    human(doc);
  }
}

struct Options {
  std::string input;
  std::vector<std::string> inputs;
  bool json = false;
  bool oracle = false;
  std::optional<uint64_t> seed;
  std::optional<uint64_t> budget;
  std::optional<uint64_t> cap;
  std::optional<uint32_t> workers;
  bool exhaustive = false;
  std::string cover;
  std::string keep;
  std::string name;
  std::string out_dir;
};

invcover_options solver_options(const Options &o) {
  invcover_options opts;
  invcover_options_init(&opts);
  if (o.cap) opts.cap = *o.cap;
  opts.use_oracle = o.oracle ? 1 : 0;
  return opts;
}

std::string require_input(const Options &o) {
  if (o.input.empty()) throw Failure{INVCOVER_INVALID_INPUT, "--input PATH is required"};
  return o.input;
}

int run_simple(const std::string &command, const Options &o) {
  auto inst = load(require_input(o));
  const invcover_options opts = solver_options(o);
  char *text = nullptr;
  invcover_status status = INVCOVER_OK;
  if (command == "tau") {
    status = invcover_tau(inst.get(), &opts, &text);
  } else if (command == "tau-star") {
    status = invcover_tau_star(inst.get(), &text);
  } else if (command == "tau-g") {
    status = invcover_tau_g(inst.get(), &opts, &text);
  } else if (command == "tau-g-star") {
    status = invcover_tau_g_star(inst.get(), &text);
  } else if (command == "closure") {
    status = invcover_closure(inst.get(), &opts, &text);
  } else if (command == "cut") {
    const std::string cover = o.cover.empty() ? std::string() : read_file(o.cover);
    status = invcover_cut(inst.get(), o.cover.empty() ? nullptr : cover.c_str(), &text);
  } else if (command == "trace") {
    status = invcover_trace(inst.get(), o.keep.empty() ? nullptr : o.keep.c_str(), &text);
  }
  emit(call(status, text), o.json, print_flat);
  return 0;
}

int run_verify(const Options &o) {
  auto inst = load(require_input(o));
  const invcover_options opts = solver_options(o);
  char *text = nullptr;
  json doc;
  const invcover_status status = invcover_verify(inst.get(), &opts, &text);
  take(status, text, doc);
  if (!doc.is_null()) emit(doc, o.json, print_report);
  if (status != INVCOVER_OK) return report_failure(status, invcover_last_error());
  return 0;
}

int run_search(const Options &o) {
  invcover_search_config cfg;
  invcover_search_config_init(&cfg);
  if (o.seed) cfg.seed = *o.seed;
  if (o.budget) cfg.budget = *o.budget;
  if (o.workers) cfg.workers = *o.workers;
  if (o.cap) cfg.enumeration_cap = *o.cap;
  char *text = nullptr;
  json doc;
  if (o.exhaustive) {
    auto inst = load(require_input(o));
    const invcover_status status = invcover_exhaustive(inst.get(), &cfg, &text);
    doc = call(status, text);
  } else if (!o.inputs.empty()) {
    std::vector<InstancePtr> owned;
    std::vector<const invcover_instance *> list;
    for (const auto &path : o.inputs) {
      owned.push_back(load(path));
      list.push_back(owned.back().get());
    }
    const invcover_status status = invcover_replay(list.data(), list.size(), &text);
    doc = call(status, text);
  } else {
    const invcover_status status = invcover_search(&cfg, &text);
    doc = call(status, text);
  }
  emit(doc, o.json, print_search);
  return 0;
}

int run_fixtures(const Options &o) {
  const std::size_t count = invcover_fixture_count();
  if (o.name.empty() && o.out_dir.empty()) {
    if (o.json) {
      json names = json::array();
      for (std::size_t i = 0; i < count; ++i) names.push_back(invcover_fixture_name(i));
      std::cout << names.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < count; ++i) std::cout << invcover_fixture_name(i) << "\n";
    }
    return 0;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const std::string name = invcover_fixture_name(i);
    if (!o.name.empty() && name != o.name) continue;
    invcover_instance *raw = nullptr;
    check(invcover_fixture(name.c_str(), &raw));
    InstancePtr inst(raw);
    char *text = nullptr;
    check(invcover_instance_serialize(inst.get(), &text));
    const std::string body(text);
    invcover_string_free(text);
    if (o.out_dir.empty()) {
      std::cout << body;
    } else {
      const auto path = std::filesystem::path(o.out_dir) / (name + ".json");
      std::ofstream out(path, std::ios::binary);
      if (!out) throw Failure{INVCOVER_INVALID_INPUT, "cannot write '" + path.string() + "'"};
      out << body;
    }
    if (!o.name.empty()) return 0;
  }
  if (!o.name.empty()) throw Failure{INVCOVER_INVALID_INPUT, "unknown fixture '" + o.name + "'"};
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact vertex covers, fractional covers and invariant covers of finite hypergraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(invcover_version()));

  Options o;
  auto common = [&](CLI::App *sub, bool needs_input) {
    if (needs_input) sub->add_option("--input", o.input, "Instance JSON file")->required();
    sub->add_flag("--json", o.json, "Machine-readable output");
    return sub;
  };
  auto solver = [&](CLI::App *sub) {
    sub->add_option("--cap", o.cap, "Closure and group-enumeration cap");
    sub->add_flag("--oracle", o.oracle, "Integer optima by exhaustive enumeration");
  };

  for (const char *name : {"tau", "tau-g"}) {
    solver(common(app.add_subcommand(name, std::string("Compute ") + name), true));
  }
  common(app.add_subcommand("tau-star", "Fractional cover number with dual certificate"), true);
  common(app.add_subcommand("tau-g-star", "Invariant fractional cover number with dual certificate"), true);
  solver(common(app.add_subcommand("closure", "Orbit closure and closure-based invariant cover"), true));
  auto *cut = common(app.add_subcommand("cut", "Finite cut of a fractional cover"), true);
  cut->add_option("--cover", o.cover, "JSON file mapping ids to rationals (default: optimal cover)");
  auto *trace = common(app.add_subcommand("trace", "Finite trace on a vertex subset"), true);
  trace->add_option("--keep", o.keep, "JSON array of ids (default: cover plus fractional support)");
  auto *verify = common(app.add_subcommand("verify", "Full bounds report"), true);
  solver(verify);

  auto *search = common(app.add_subcommand("search", "Randomized, replay or exhaustive extremal search"), false);
  search->add_option("--input", o.inputs, "Instances to replay, or the template with --exhaustive");
  search->add_option("--seed", o.seed, "64-bit seed");
  search->add_option("--budget", o.budget, "Number of generated instances");
  search->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  search->add_option("--cap", o.cap, "Exhaustive enumeration cap");
  search->add_flag("--exhaustive", o.exhaustive, "Enumerate unions of edge classes of the template");

  auto *fixtures = common(app.add_subcommand("fixtures", "List or export bundled fixtures"), false);
  fixtures->add_option("--name", o.name, "Print one fixture");
  fixtures->add_option("--out", o.out_dir, "Write every fixture (or --name) into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    return report_failure(INVCOVER_INVALID_INPUT, e.what());
  }

  try {
    CLI::App *sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    if (command == "search") {
      if (o.exhaustive) {
        if (o.inputs.size() != 1) throw Failure{INVCOVER_INVALID_INPUT, "--exhaustive needs one --input"};
        o.input = o.inputs.front();
      }
      return run_search(o);
    }
    if (command == "verify") return run_verify(o);
    if (command == "fixtures") return run_fixtures(o);
    return run_simple(command, o);
  } catch (const Failure &f) {
    return report_failure(f.status, f.message);
  } catch (const std::exception &e) {
    return report_failure(INVCOVER_INTERNAL, e.what());
  }
}
