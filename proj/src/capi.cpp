#include "invcover/invcover.h"

#include "invcover/bounds.hpp"
#include "invcover/closure.hpp"
#include "invcover/covers.hpp"
#include "invcover/error.hpp"
#include "invcover/fractional.hpp"
#include "invcover/instance.hpp"
#include "invcover/report_json.hpp"
#include "invcover/search.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

struct invcover_instance {
  invcover::Instance value;
};

namespace {

using invcover::ErrorCode;
using nlohmann::json;

thread_local std::string last_error;

invcover_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidAction: return INVCOVER_INVALID_INPUT;
    case ErrorCode::Uncoverable: return INVCOVER_UNCOVERABLE;
    case ErrorCode::CapExceeded: return INVCOVER_CAP_EXCEEDED;
    case ErrorCode::InvariantViolation: return INVCOVER_INTERNAL;
  }
  return INVCOVER_INTERNAL;
}

template <typename F>
invcover_status guard(F &&body) {
  last_error.clear();
  try {
    return body();
  } catch (const invcover::Error &e) {
    last_error = std::string(invcover::to_string(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc &) {
    last_error = "out of memory";
  } catch (const std::exception &e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return INVCOVER_INTERNAL;
}

invcover_status emit(const json &doc, char **out) {
  if (out == nullptr) invcover::fail(ErrorCode::InvalidArgument, "null output pointer");
  const std::string text = doc.dump(2) + "\n";
  char *copy = static_cast<char *>(std::malloc(text.size() + 1));
  if (copy == nullptr) throw std::bad_alloc();
  std::memcpy(copy, text.c_str(), text.size() + 1);
  *out = copy;
  return INVCOVER_OK;
}

const invcover::Instance &deref(const invcover_instance *instance) {
  if (instance == nullptr) invcover::fail(ErrorCode::InvalidArgument, "null instance");
  return instance->value;
}

invcover_status adopt(invcover::Instance value, invcover_instance **out) {
  if (out == nullptr) invcover::fail(ErrorCode::InvalidArgument, "null output pointer");
  *out = new invcover_instance{std::move(value)};
  return INVCOVER_OK;
}

invcover::Caps caps_of(const invcover_options *options) {
  invcover_options defaults;
  if (options == nullptr) {
    invcover_options_init(&defaults);
    options = &defaults;
  }
  invcover::Caps caps;
  caps.closure = static_cast<std::size_t>(options->cap);
  caps.group_order = static_cast<std::size_t>(options->cap);
  caps.oracle = static_cast<std::size_t>(options->oracle_cap);
  caps.use_oracle = options->use_oracle != 0;
  return caps;
}

invcover::SearchConfig config_of(const invcover_search_config *c) {
  if (c == nullptr) invcover::fail(ErrorCode::InvalidArgument, "null search config");
  if (c->group_order_count > INVCOVER_MAX_GROUP_ORDERS) {
    invcover::fail(ErrorCode::InvalidArgument, "too many group orders");
  }
  invcover::SearchConfig cfg;
  cfg.seed = c->seed;
  cfg.budget = static_cast<std::size_t>(c->budget);
  cfg.parts = c->parts;
  cfg.rank = c->rank;
  cfg.part_size_min = c->part_size_min;
  cfg.part_size_max = c->part_size_max;
  cfg.group_orders.assign(c->group_orders, c->group_orders + c->group_order_count);
  cfg.density_permille_min = c->density_permille_min;
  cfg.density_permille_max = c->density_permille_max;
  cfg.workers = c->workers;
  cfg.enumeration_cap = static_cast<std::size_t>(c->enumeration_cap);
  return cfg;
}

json cover_values_json(const invcover::Hypergraph &h, const invcover::FractionalCover &t) {
  json out = json::object();
  for (invcover::Vertex v = 0; v < t.degree(); ++v) {
    if (sgn(t[v]) != 0) out[h.id(v)] = invcover::rational_json(t[v]);
  }
  return out;
}

json lp_json(const invcover::Hypergraph &h, const invcover::LpResult &lp) {
  json dual = json::array();
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (sgn(lp.dual[e]) != 0) {
      dual.push_back(json{{"edge", h.names(h.edge(e))}, {"y", invcover::rational_json(lp.dual[e])}});
    }
  }
  return json{{"primal", cover_values_json(h, lp.primal)}, {"dual", std::move(dual)}};
}

json orbits_json(const invcover::Hypergraph &h, const invcover::GroupAction &action,
                 const std::vector<std::size_t> &which) {
  json out = json::array();
  for (std::size_t o : which) out.push_back(h.names(action.orbits()[o]));
  return out;
}

json instance_json(const invcover::Instance &instance) {
  return json::parse(invcover::serialize_instance(instance));
}

std::size_t env_cap() {
  const char *text = std::getenv("INVCOVER_CAP");
  if (text == nullptr || *text == '\0') return invcover::kDefaultClosureCap;
  char *end = nullptr;
  const unsigned long long value = std::strtoull(text, &end, 10);
  if (end == nullptr || *end != '\0' || value == 0) return invcover::kDefaultClosureCap;
  return static_cast<std::size_t>(value);
}

}  // namespace

extern "C" {

const char *invcover_version(void) { return "1.0.0"; }

const char *invcover_status_name(invcover_status status) {
  switch (status) {
    case INVCOVER_OK: return "ok";
    case INVCOVER_INVALID_INPUT: return "invalid-input";
    case INVCOVER_UNCOVERABLE: return "uncoverable";
    case INVCOVER_CAP_EXCEEDED: return "cap-exceeded";
    case INVCOVER_INTERNAL: return "internal-invariant-violation";
  }
  return "unknown";
}

const char *invcover_last_error(void) { return last_error.c_str(); }

void invcover_string_free(char *text) { std::free(text); }

void invcover_options_init(invcover_options *options) {
  if (options == nullptr) return;
  options->cap = env_cap();
  options->oracle_cap = invcover::kDefaultOracleCap;
  options->use_oracle = 0;
}

void invcover_search_config_init(invcover_search_config *config) {
  if (config == nullptr) return;
  const invcover::SearchConfig defaults;
  *config = invcover_search_config{};
  config->seed = defaults.seed;
  config->budget = defaults.budget;
  config->parts = static_cast<uint32_t>(defaults.parts);
  config->rank = static_cast<uint32_t>(defaults.rank);
  config->part_size_min = static_cast<uint32_t>(defaults.part_size_min);
  config->part_size_max = static_cast<uint32_t>(defaults.part_size_max);
  config->group_order_count = static_cast<uint32_t>(defaults.group_orders.size());
  for (std::size_t i = 0; i < defaults.group_orders.size(); ++i) {
    config->group_orders[i] = static_cast<uint32_t>(defaults.group_orders[i]);
  }
  config->density_permille_min = static_cast<uint32_t>(defaults.density_permille_min);
  config->density_permille_max = static_cast<uint32_t>(defaults.density_permille_max);
  config->workers = static_cast<uint32_t>(defaults.workers);
  config->enumeration_cap = defaults.enumeration_cap;
}

invcover_status invcover_instance_parse(const char *text, invcover_instance **out) {
  return guard([&] {
    if (text == nullptr) invcover::fail(ErrorCode::InvalidArgument, "null JSON text");
    return adopt(invcover::parse_instance(text), out);
  });
}

invcover_status invcover_instance_load(const char *path, invcover_instance **out) {
  return guard([&] {
    if (path == nullptr) invcover::fail(ErrorCode::InvalidArgument, "null path");
    return adopt(invcover::load_instance(path), out);
  });
}

invcover_status invcover_fixture(const char *name, invcover_instance **out) {
  return guard([&] {
    if (name == nullptr) invcover::fail(ErrorCode::InvalidArgument, "null fixture name");
    return adopt(invcover::fixture(name), out);
  });
}

void invcover_instance_free(invcover_instance *instance) { delete instance; }

size_t invcover_fixture_count(void) { return invcover::fixture_names().size(); }

const char *invcover_fixture_name(size_t index) {
  static const std::vector<std::string> names = invcover::fixture_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

invcover_status invcover_instance_serialize(const invcover_instance *instance, char **out) {
  return guard([&] {
    const std::string text = invcover::serialize_instance(deref(instance));
    if (out == nullptr) invcover::fail(ErrorCode::InvalidArgument, "null output pointer");
    *out = static_cast<char *>(std::malloc(text.size() + 1));
    if (*out == nullptr) throw std::bad_alloc();
    std::memcpy(*out, text.c_str(), text.size() + 1);
    return INVCOVER_OK;
  });
}

invcover_status invcover_instance_diagnostics(const invcover_instance *instance, char **out) {
  return guard([&] {
    json entries = json::array();
    for (const auto &entry : deref(instance).diagnostics) {
      const char *severity = entry.severity == invcover::Severity::Error     ? "error"
                             : entry.severity == invcover::Severity::Warning ? "warning"
                                                                             : "info";
      entries.push_back(json{{"severity", severity}, {"kind", entry.kind}, {"message", entry.message}});
    }
    return emit(entries, out);
  });
}

invcover_status invcover_tau(const invcover_instance *instance, const invcover_options *options,
                             char **out) {
  return guard([&] {
    const auto &inst = deref(instance);
    const invcover::Caps caps = caps_of(options);
    const auto result = caps.use_oracle ? invcover::brute_force_min_cover(inst.graph, caps.oracle)
                                        : invcover::min_cover(inst.graph);
    return emit(json{{"tau", result.size},
                     {"witness", inst.graph.names(result.witness)},
                     {"solver", caps.use_oracle ? "exhaustive" : "branch-and-bound"}},
                out);
  });
}

invcover_status invcover_tau_star(const invcover_instance *instance, char **out) {
  return guard([&] {
    const auto &inst = deref(instance);
    const auto lp = invcover::tau_star(inst.graph);
    json doc = lp_json(inst.graph, lp);
    doc["tau_star"] = invcover::rational_json(lp.optimum);
    doc["certified"] = invcover::certifies_tau_star(inst.graph, lp);
    return emit(doc, out);
  });
}

invcover_status invcover_tau_g(const invcover_instance *instance, const invcover_options *options,
                               char **out) {
  return guard([&] {
    const auto &inst = deref(instance);
    const invcover::Caps caps = caps_of(options);
    const auto result =
        caps.use_oracle
            ? invcover::brute_force_min_invariant_cover(inst.graph, inst.action, caps.oracle)
            : invcover::min_invariant_cover(inst.graph, inst.action);
    return emit(json{{"tau_g", result.size},
                     {"witness", inst.graph.names(result.witness)},
                     {"orbits", orbits_json(inst.graph, inst.action, result.chosen_orbits)},
                     {"solver", caps.use_oracle ? "exhaustive" : "branch-and-bound"}},
                out);
  });
}

invcover_status invcover_tau_g_star(const invcover_instance *instance, char **out) {
  return guard([&] {
    const auto &inst = deref(instance);
    const auto lp = invcover::tau_star_invariant(inst.graph, inst.action);
    json doc = lp_json(inst.graph, lp);
    doc["tau_g_star"] = invcover::rational_json(lp.optimum);
    doc["certified"] = invcover::certifies_tau_star_invariant(inst.graph, inst.action, lp);
    return emit(doc, out);
  });
}

invcover_status invcover_closure(const invcover_instance *instance,
                                 const invcover_options *options, char **out) {
  return guard([&] {
    const auto &inst = deref(instance);
    const invcover::Caps caps = caps_of(options);
    const auto closure = invcover::orbit_closure(inst.graph, inst.action, caps.closure);
    const auto via = invcover::invariant_cover_via_closure(inst.graph, inst.action, caps.closure);
    const auto d = invcover::d_coefficient(inst.graph, inst.action);
    invcover::Instance closed{closure.closed, inst.parts, inst.action, {}};
    return emit(
        json{{"closed", instance_json(closed)},
             {"edges", closure.closed.num_edges()},
             {"generated_edges", closure.generated_edge_count},
             {"d", invcover::rational_json(d.value)},
             {"d_degenerate", d.degenerate},
             {"closure_cover", inst.graph.names(via.closure_cover)},
             {"closure_tau", via.audit.closure_cover_size},
             {"invariant_cover", inst.graph.names(via.cover.witness)},
             {"invariant_size", via.audit.invariant_size},
             {"bound_holds", via.audit.bound_holds},
             {"star_star_holds", via.audit.star_star_holds}},
        out);
  });
}

invcover_status invcover_cut(const invcover_instance *instance, const char *cover_json,
                             char **out) {
  return guard([&] {
    const auto &inst = deref(instance);
    const auto &h = inst.graph;
    invcover::FractionalCover t(h.num_vertices());
    if (cover_json == nullptr) {
      t = invcover::tau_star(h).primal;
    } else {
      json doc;
      try {
        doc = json::parse(cover_json);
      } catch (const json::parse_error &e) {
        invcover::fail(ErrorCode::InvalidArgument, std::string("malformed cover JSON: ") + e.what());
      }
      if (!doc.is_object()) invcover::fail(ErrorCode::InvalidArgument, "cover must be a JSON object");
      for (const auto &[id, value] : doc.items()) {
        auto v = h.find(id);
        if (!v) invcover::fail(ErrorCode::InvalidArgument, "cover names unknown vertex '" + id + "'");
        t.set(*v, invcover::rational_from_json(value));
      }
    }
    const auto cut = invcover::finite_cut(h, t);
    return emit(json{{"input", cover_values_json(h, t)},
                     {"input_size", invcover::rational_json(t.size())},
                     {"cut", cover_values_json(h, cut)},
                     {"cut_size", invcover::rational_json(cut.size())},
                     {"support", h.names(cut.support())},
                     {"is_fractional_cover", invcover::is_fractional_cover(h, cut)}},
                out);
  });
}

invcover_status invcover_trace(const invcover_instance *instance, const char *keep_json,
                               char **out) {
  return guard([&] {
    const auto &inst = deref(instance);
    const auto &h = inst.graph;
    invcover::VertexSet keep;
    if (keep_json == nullptr) {
      keep = invcover::min_cover(h).witness;
      const auto support = invcover::tau_star(h).primal.support();
      keep.insert(keep.end(), support.begin(), support.end());
    } else {
      json doc;
      try {
        doc = json::parse(keep_json);
      } catch (const json::parse_error &e) {
        invcover::fail(ErrorCode::InvalidArgument, std::string("malformed id list: ") + e.what());
      }
      if (!doc.is_array()) invcover::fail(ErrorCode::InvalidArgument, "trace set must be an array");
      for (const auto &id : doc) {
        if (!id.is_string()) invcover::fail(ErrorCode::InvalidArgument, "trace ids must be strings");
        auto v = h.find(id.get<std::string>());
        if (!v) invcover::fail(ErrorCode::InvalidArgument, "unknown vertex '" + id.get<std::string>() + "'");
        keep.push_back(*v);
      }
    }
    invcover::normalize(keep);
    const auto trace = invcover::finite_trace(h, keep);
    json doc{{"keep", h.names(keep)},
             {"trace", instance_json(invcover::Instance{trace, std::nullopt,
                                                        invcover::GroupAction::trivial(trace.num_vertices()),
                                                        {}})},
             {"rank", invcover::rank(trace)},
             {"uncoverable", !trace.coverable()}};
    if (trace.coverable() && h.coverable()) {
      const auto tau = invcover::min_cover(trace).size;
      const auto tau_star = invcover::tau_star(trace).optimum;
      const auto tau_h = invcover::min_cover(h).size;
      const auto tau_star_h = invcover::tau_star(h).optimum;
      doc["tau"] = tau;
      doc["tau_star"] = invcover::rational_json(tau_star);
      doc["tau_original"] = tau_h;
      doc["tau_star_original"] = invcover::rational_json(tau_star_h);
      doc["preserves_tau"] = tau == tau_h && tau_star == tau_star_h;
    }
    return emit(doc, out);
  });
}

invcover_status invcover_verify(const invcover_instance *instance, const invcover_options *options,
                                char **out) {
  return guard([&] {
    const auto &inst = deref(instance);
    const auto report =
        invcover::verify_all(inst.graph, inst.parts_or_trivial(), inst.action, caps_of(options));
    emit(invcover::report_json(report, inst.graph), out);
    switch (report.status) {
      case invcover::BoundsReport::Status::Ok: return INVCOVER_OK;
      case invcover::BoundsReport::Status::Uncoverable:
        last_error = "uncoverable: hypergraph has an empty edge";
        return INVCOVER_UNCOVERABLE;
      case invcover::BoundsReport::Status::InvalidAction:
        last_error = "invalid-action: a generator is not an automorphism";
        return INVCOVER_INVALID_INPUT;
      case invcover::BoundsReport::Status::Failed:
        last_error = "invariant-violation: a bound clause failed";
        return INVCOVER_INTERNAL;
    }
    return INVCOVER_INTERNAL;
  });
}

invcover_status invcover_search(const invcover_search_config *config, char **out) {
  return guard([&] {
    const invcover::SearchConfig cfg = config_of(config);
    json doc = invcover::search_json(invcover::search_extremal(cfg));
    doc["mode"] = "random";
    doc["config"] = invcover::search_config_json(cfg);
    return emit(doc, out);
  });
}

invcover_status invcover_replay(const invcover_instance *const *instances, size_t count,
                                char **out) {
  return guard([&] {
    std::vector<invcover::Instance> list;
    for (size_t i = 0; i < count; ++i) list.push_back(deref(instances[i]));
    json doc = invcover::search_json(invcover::replay(list));
    doc["mode"] = "replay";
    return emit(doc, out);
  });
}

invcover_status invcover_exhaustive(const invcover_instance *template_instance,
                                    const invcover_search_config *config, char **out) {
  return guard([&] {
    const invcover::SearchConfig cfg = config_of(config);
    json doc = invcover::search_json(invcover::exhaustive_small(deref(template_instance), cfg));
    doc["mode"] = "exhaustive";
    return emit(doc, out);
  });
}

}  // extern "C"
