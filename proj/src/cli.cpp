// Copyright 2026 The zetalab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zetalab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zetalab/cache.hpp"
#include "zetalab/cycles.hpp"
#include "zetalab/determinant.hpp"
#include "zetalab/transfer.hpp"
#include "zetalab/verify.hpp"
#include "zetalab/zeta.hpp"

#ifndef ZETALAB_VERSION
#define ZETALAB_VERSION "dev"
#endif

namespace zetalab::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CacheMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// What a command produced, before formatting.
struct Report {
  Json json;
  std::vector<std::vector<std::string>> table;  ///< header row first
  std::vector<std::string> text;                ///< only verify emits a text form
  int exit_code = kOk;
  std::string message;  ///< printed to stderr
};

struct Context {
  const RunConfig& cfg;
  ResultCache cache;

  Json memo(const std::string& key, const std::function<Json()>& compute) {
    if (auto hit = cache.get(key)) {
      if (cfg.cache_verify) {
        const Json fresh = compute();
        if (fresh.dump() != hit->dump()) {
          throw CacheMismatch("cache entry '" + key + "' differs from recomputation: " + hit->dump() + " vs " + fresh.dump());
        }
      }
      return *hit;
    }
    Json value = compute();
    cache.put(key, value);
    return value;
  }
};

std::optional<Rational> parse_q(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  Rational q;
  try {
    q = parse_rational(*text);
  } catch (const ParseError&) {
    throw UsageError("--q: '" + *text + "' is not a rational number");
  }
  if (q < 2) throw UsageError("--q: value must be >= 2 (only prime powers are geometrically meaningful)");
  return q;
}

std::string q_key(const std::optional<Rational>& q) { return q ? q->get_str() : "symbolic"; }

Json series_json(const USeries& s, const std::optional<Rational>& q) {
  Json arr = Json::array();
  if (q) {
    const RSeries values = specialize(s, *q);
    for (const auto& c : values.coeffs()) arr.push_back(c.get_str());
  } else {
    for (const auto& c : s.coeffs()) arr.push_back(c.to_string());
  }
  return arr;
}

std::vector<std::vector<std::string>> series_table(const Json& series) {
  std::vector<std::vector<std::string>> rows{{"power", "coefficient"}};
  for (std::size_t i = 0; i < series.size(); ++i) rows.push_back({std::to_string(i), series[i].get<std::string>()});
  return rows;
}

std::string poly_or_value(const QPoly& p, const std::optional<Rational>& q) {
  return q ? p.eval(*q).get_str() : p.to_string();
}

Json trace_entry(Context& ctx, EdgeType type, int m, const std::optional<Rational>& q) {
  const std::string key = "trace|type=" + std::to_string(static_cast<int>(type)) + "|m=" + std::to_string(m) + "|q=" + q_key(q);
  return ctx.memo(key, [&] {
    Json v;
    if (q) {
      const auto r = trace_power(type, m, *q);
      v["trace"] = r.value.get_str();
      v["region"] = {r.region.max_level(), r.region.max_offset()};
    } else {
      const auto r = trace_power(type, m);
      v["trace"] = r.value.to_string();
      v["region"] = {r.region.max_level(), r.region.max_offset()};
    }
    return v;
  });
}

std::string cycles_entry(Context& ctx, EdgeType type, int n, const std::optional<Rational>& q) {
  const std::string key = "cycles|type=" + std::to_string(static_cast<int>(type)) + "|n=" + std::to_string(n) + "|q=" + q_key(q);
  return ctx.memo(key, [&] {
           return Json(q ? weighted_count(type, n, *q).get_str() : weighted_count(type, n).to_string());
         }).get<std::string>();
}

Report cmd_complex_dump(const RunConfig& cfg) {
  const EdgeType type = edge_type_from_int(cfg.edge_type);
  Report rep;
  rep.json = Json::array();
  rep.table.push_back({"type", "level", "offset", "leg", "source_m", "source_n", "target_m", "target_n"});
  for (const auto& e : edges_in_region(type, Region(cfg.max_level, cfg.max_offset))) {
    const VertexId s = edge_source(e);
    const VertexId t = edge_target(e);
    Json rec;
    rec["type"] = cfg.edge_type;
    rec["level"] = e.level;
    rec["offset"] = e.offset;
    rec["leg"] = e.leg;
    rec["source"] = {s.m, s.n};
    rec["target"] = {t.m, t.n};
    rep.json.push_back(rec);
    rep.table.push_back({std::to_string(cfg.edge_type), std::to_string(e.level), std::to_string(e.offset),
                         std::to_string(e.leg), std::to_string(s.m), std::to_string(s.n), std::to_string(t.m),
                         std::to_string(t.n)});
  }
  return rep;
}

Report cmd_trace(Context& ctx) {
  const auto& cfg = ctx.cfg;
  if (cfg.symbolic && cfg.q) throw UsageError("--symbolic and --q are mutually exclusive");
  const auto q = parse_q(cfg.q);
  const Json entry = trace_entry(ctx, edge_type_from_int(cfg.edge_type), cfg.m, q);
  Report rep;
  rep.json["m"] = cfg.m;
  rep.json["trace"] = entry["trace"];
  rep.json["region"] = entry["region"];
  rep.table = {{"m", "trace", "region_levels", "region_offsets"},
               {std::to_string(cfg.m), entry["trace"].get<std::string>(), std::to_string(entry["region"][0].get<int>()),
                std::to_string(entry["region"][1].get<int>())}};
  return rep;
}

Report cmd_cycles(const RunConfig& cfg) {
  const auto q = parse_q(cfg.q);
  Report rep;
  rep.json = Json::array();
  rep.table.push_back({"edges", "weight", "primitive_length"});
  for (const auto& c : enumerate_cycles(edge_type_from_int(cfg.edge_type), cfg.n)) {
    Json rec;
    Json edges = Json::array();
    std::string edge_text;
    for (const auto& e : c.edges) {
      edges.push_back({e.level, e.offset, e.leg});
      if (!edge_text.empty()) edge_text += ' ';
      edge_text += std::to_string(e.level) + ":" + std::to_string(e.offset) + ":" + std::to_string(e.leg);
    }
    rec["edges"] = edges;
    rec["weight"] = poly_or_value(c.weight, q);
    rec["primitive_length"] = c.primitive_length;
    rep.json.push_back(rec);
    rep.table.push_back({edge_text, rec["weight"].get<std::string>(), std::to_string(c.primitive_length)});
  }
  return rep;
}

Report cmd_det(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const auto q = parse_q(cfg.q);
  const EdgeType type = edge_type_from_int(cfg.edge_type);
  if (cfg.order < 0) throw UsageError("--order must be >= 0");
  std::string key = "det|method=" + cfg.method + "|type=" + std::to_string(cfg.edge_type) + "|order=" +
                    std::to_string(cfg.order) + "|q=" + q_key(q);
  std::function<Json()> compute;
  if (cfg.method == "alpha") {
    if (cfg.blocks) throw UsageError("--blocks only applies to --method direct");
    if (cfg.k) {
      if (type != EdgeType::One) throw UsageError("--k with --method alpha needs --type 1");
      if (*cfg.k < 2) throw UsageError("--k must be >= 2");
      key += "|k=" + std::to_string(*cfg.k);
      compute = [&] {
        const AlphaTable table = schur_iterate(build_blocks(*cfg.k), 4 * (cfg.order + 2), std::max(cfg.order, 1));
        return series_json(det_truncated_via_alpha(table).truncated(cfg.order), q);
      };
    } else {
      compute = [&] {
        const USeries det = det_via_alpha(cfg.order);
        return series_json(type == EdgeType::One ? det : substitute_power(det, 2), q);
      };
    }
  } else if (cfg.method == "traces") {
    if (cfg.k || cfg.blocks) throw UsageError("--k/--blocks only apply to --method direct or alpha");
    compute = [&] {
      std::vector<QPoly> traces;
      for (int n = 1; n * cfg.edge_type <= cfg.order; ++n) traces.push_back(QPoly::parse(trace_entry(ctx, type, n, std::nullopt)["trace"].get<std::string>()));
      return series_json(det_from_traces(type, traces, cfg.order), q);
    };
  } else if (cfg.method == "direct") {
    if (!q) throw UsageError("--method direct needs --q");
    if (type != EdgeType::One) throw UsageError("--method direct builds the type-1 block matrix; use --type 1");
    const int k = cfg.k.value_or(std::max(cfg.order + 1, 2));
    const int blocks = cfg.blocks.value_or(k);
    if (k < 2) throw UsageError("--k must be >= 2");
    if (blocks < 1) throw UsageError("--blocks must be >= 1");
    key += "|k=" + std::to_string(k) + "|blocks=" + std::to_string(blocks);
    compute = [&, k, blocks] {
      Json arr = Json::array();
      const RSeries det = det_direct(build_blocks(k), blocks, cfg.order, *q);
      for (const auto& c : det.coeffs()) arr.push_back(c.get_str());
      return arr;
    };
  } else {
    throw UsageError("--method must be alpha, traces or direct");
  }
  const Json series = ctx.memo(key, compute);
  Report rep;
  rep.json["method"] = cfg.method;
  rep.json["series"] = series;
  rep.table = series_table(series);
  return rep;
}

Report cmd_zeta(const RunConfig& cfg) {
  const auto q = parse_q(cfg.q);
  if (cfg.order < 0) throw UsageError("--order must be >= 0");
  const RationalFunction z = cfg.which == "1" ? zeta_type1() : cfg.which == "2" ? zeta_type2() : zeta_full();
  Report rep;
  rep.json["which"] = cfg.which;
  rep.json["closed_form"] = z.s_form();
  rep.json["series"] = series_json(z.series(cfg.order), q);
  rep.table = series_table(rep.json["series"]);
  return rep;
}

Report cmd_count(Context& ctx) {
  const auto& cfg = ctx.cfg;
  if (cfg.max_m < 1) throw UsageError("--max-m must be >= 1");
  const auto q = parse_q(cfg.q);
  const CountTable from_zeta = counts_from_zeta(cfg.max_m);
  Report rep;
  rep.json = Json::array();
  if (cfg.verify) {
    rep.table.push_back({"m", "closed_form", "from_zeta", "trace", "cycles", "agree"});
  } else {
    rep.table.push_back({"m", "closed_form", "from_zeta", "agree"});
  }
  for (int m = 1; m <= cfg.max_m; ++m) {
    const std::string closed = poly_or_value(counts_closed_form(m), q);
    const std::string zeta = poly_or_value(from_zeta.entries.at(m), q);
    bool agree = closed == zeta;
    Json row;
    row["m"] = m;
    row["closed_form"] = closed;
    row["from_zeta"] = zeta;
    std::vector<std::string> csv{std::to_string(m), closed, zeta};
    if (cfg.verify) {
      const std::string trace = trace_entry(ctx, EdgeType::One, m, q)["trace"].get<std::string>();
      const std::string cycles = cycles_entry(ctx, EdgeType::One, m, q);
      agree = agree && trace == closed && cycles == closed;
      row["trace"] = trace;
      row["cycles"] = cycles;
      csv.push_back(trace);
      csv.push_back(cycles);
    }
    row["agree"] = agree;
    csv.push_back(agree ? "true" : "false");
    if (!agree && rep.exit_code == kOk) {
      rep.exit_code = kMismatch;
      rep.message = "count mismatch at m=" + std::to_string(m) + ": " + row.dump();
    }
    rep.json.push_back(row);
    rep.table.push_back(std::move(csv));
  }
  return rep;
}

Report cmd_verify(const RunConfig& cfg) {
  VerifyOptions opts;
  opts.max_m = cfg.max_m;
  opts.order = cfg.order;
  if (!cfg.q_list.empty()) {
    opts.q_values.clear();
    for (const auto& text : cfg.q_list) opts.q_values.push_back(*parse_q(text));
  }
  if (opts.max_m > opts.order) throw UsageError("verify all: --max-m must not exceed --order");
  Report rep;
  rep.json = Json::array();
  rep.table.push_back({"criterion", "pass", "detail"});
  for (const auto& r : verify_all(opts)) {
    Json rec;
    rec["criterion"] = r.name;
    rec["pass"] = r.pass;
    rec["detail"] = r.detail;
    rep.json.push_back(rec);
    rep.table.push_back({r.name, r.pass ? "true" : "false", r.detail});
    rep.text.push_back(std::string(r.pass ? "PASS " : "FAIL ") + r.name + ": " + r.detail);
    if (!r.pass && rep.exit_code == kOk) {
      rep.exit_code = kMismatch;
      rep.message = "verification failed: " + r.name + ": " + r.detail;
    }
  }
  return rep;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const Report& rep, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "csv") {
    for (const auto& row : rep.table) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << '\n';
    }
  } else if (cfg.format == "text") {
    if (rep.text.empty()) throw UsageError("--format text is only available for 'verify all'");
    for (const auto& line : rep.text) out << line << '\n';
  } else {
    out << rep.json.dump(2) << '\n';
  }
}

void fall_through(CLI::App* app) {
  app->fallthrough();
  for (auto* sub : app->get_subcommands({})) fall_through(sub);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"zetalab: edge zeta functions of the PGL(3, F_q[t]) quotient complex"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out_path, "Write output to FILE instead of stdout");
  app.add_option("--cache", cfg.cache_path, "JSON cache file (default: $ZETALAB_CACHE)");
  app.add_flag("--no-cache", cfg.no_cache, "Disable the result cache");
  app.add_flag("--cache-verify", cfg.cache_verify, "Recompute cache hits and fail on any difference");

  auto* complex = app.add_subcommand("complex", "Quotient complex queries")->require_subcommand(1);
  auto* dump = complex->add_subcommand("dump", "List the labelled edges of a region");
  dump->add_option("--type", cfg.edge_type, "Edge type")->check(CLI::IsMember({1, 2}));
  dump->add_option("--max-level", cfg.max_level, "Level bound K")->required()->check(CLI::PositiveNumber);
  dump->add_option("--max-offset", cfg.max_offset, "Offset bound N")->required()->check(CLI::PositiveNumber);

  auto* trace = app.add_subcommand("trace", "Exact trace of a power of the transfer operator");
  trace->add_option("--type", cfg.edge_type, "Edge type")->check(CLI::IsMember({1, 2}));
  trace->add_option("--m", cfg.m, "Power")->required()->check(CLI::PositiveNumber);
  trace->add_option("--q", cfg.q, "Specialise q to a rational >= 2");
  trace->add_flag("--symbolic", cfg.symbolic, "Keep q symbolic (default)");

  auto* cycles = app.add_subcommand("cycles", "Closed admissible cycles")->require_subcommand(1);
  auto* enumerate = cycles->add_subcommand("enumerate", "One representative per rotation class");
  enumerate->add_option("--type", cfg.edge_type, "Edge type")->check(CLI::IsMember({1, 2}));
  enumerate->add_option("--n", cfg.n, "Cycle length")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--q", cfg.q, "Specialise weights at q");

  auto* det = app.add_subcommand("det", "Series of det(I - uT)");
  det->add_option("--method", cfg.method, "alpha | traces | direct")->check(CLI::IsMember({"alpha", "traces", "direct"}));
  det->add_option("--order", cfg.order, "Truncation order in u")->required();
  det->add_option("--type", cfg.edge_type, "Edge type")->check(CLI::IsMember({1, 2}));
  det->add_option("--q", cfg.q, "Specialise q (required for direct)");
  det->add_option("--k", cfg.k, "Truncation level");
  det->add_option("--blocks", cfg.blocks, "Number of offset blocks N (direct)");

  auto* zeta = app.add_subcommand("zeta", "Edge zeta functions")->require_subcommand(1);
  auto* series = zeta->add_subcommand("series", "Power series of Z_1, Z_2 or Z");
  series->add_option("--which", cfg.which, "1 | 2 | full")->check(CLI::IsMember({"1", "2", "full"}));
  series->add_option("--order", cfg.order, "Truncation order in u")->required();
  series->add_option("--q", cfg.q, "Specialise q");

  auto* count = app.add_subcommand("count", "Weighted closed-cycle counts N_m");
  count->add_option("--max-m", cfg.max_m, "Largest m")->required();
  count->add_option("--q", cfg.q, "Specialise q");
  count->add_flag("--verify", cfg.verify, "Also run the trace and cycle oracles");

  auto* verify = app.add_subcommand("verify", "End-to-end identity checks")->require_subcommand(1);
  auto* all = verify->add_subcommand("all", "Run every identity");
  cfg.order = 12;  // verify all's default; det and zeta series require --order
  all->add_option("--max-m", cfg.max_m, "Largest cycle length checked");
  all->add_option("--order", cfg.order, "Series order");
  all->add_option("--q", cfg.q_list, "q values (repeat or comma separate)")->delimiter(',');
  fall_through(&app);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  if (dump->parsed()) cfg.command = "complex dump";
  else if (trace->parsed()) cfg.command = "trace";
  else if (enumerate->parsed()) cfg.command = "cycles enumerate";
  else if (det->parsed()) cfg.command = "det";
  else if (series->parsed()) cfg.command = "zeta series";
  else if (count->parsed()) cfg.command = "count";
  else if (all->parsed()) cfg.command = "verify all";

  if (cfg.cache_path.empty() && !cfg.no_cache) {
    if (const char* env = std::getenv("ZETALAB_CACHE"); env != nullptr) cfg.cache_path = env;
  }

  try {
    Context ctx{cfg, cfg.no_cache || cfg.cache_path.empty() ? ResultCache() : ResultCache(cfg.cache_path, ZETALAB_VERSION)};
    Report rep;
    if (cfg.command == "complex dump") rep = cmd_complex_dump(cfg);
    else if (cfg.command == "trace") rep = cmd_trace(ctx);
    else if (cfg.command == "cycles enumerate") rep = cmd_cycles(cfg);
    else if (cfg.command == "det") rep = cmd_det(ctx);
    else if (cfg.command == "zeta series") rep = cmd_zeta(cfg);
    else if (cfg.command == "count") rep = cmd_count(ctx);
    else if (cfg.command == "verify all") rep = cmd_verify(cfg);

    if (cfg.out_path.empty()) {
      emit(rep, cfg, out);
    } else {
      std::ostringstream buffer;
      emit(rep, cfg, buffer);
      std::ofstream file(cfg.out_path);
      if (!file) throw UsageError("--out: cannot open " + cfg.out_path);
      file << buffer.str();
    }
    ctx.cache.save();
    if (!rep.message.empty()) err << rep.message << '\n';
    return rep.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const CacheMismatch& e) {
    err << "cache mismatch: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace zetalab::cli
