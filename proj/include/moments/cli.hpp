// Project moments - Copyright 2026 the moments authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Subcommands compose over pipes: sequence output is
// valid sequence input, so `transform minor ... | verify stieltjes` works.
// Exit codes: 0 pass/success, 1 fail or counterexample, 2 usage/input error.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "moments/json_io.hpp"
#include "moments/poly_text.hpp"

namespace moments::cli {

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const std::set<std::string>& known_flags() {
  static const std::set<std::string> flags = {
      "seq",    "poly",       "depth",  "interval", "r",       "t",
      "resolution", "budget", "threads", "plain",   "decimal", "name",
      "len",    "matrix",     "domain", "d",        "xi",      "num-vars"};
  return flags;
}

struct Request {
  std::vector<std::string> words;               // subcommand path
  std::map<std::string, std::string> values;    // flag -> raw value
  bool plain = false;
  unsigned decimal = 0;

  bool has(const std::string& f) const { return values.count(f) != 0; }
  const std::string& get(const std::string& f) const {
    auto it = values.find(f);
    if (it == values.end()) throw CliError("missing required flag --" + f);
    return it->second;
  }
  std::optional<std::string> find(const std::string& f) const {
    auto it = values.find(f);
    if (it == values.end()) return std::nullopt;
    return it->second;
  }
};

inline std::uint64_t parse_uint_flag(const std::string& value, const std::string& flag) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
    throw CliError("--" + flag + " expects a nonnegative integer, got '" + value + "'");
  try {
    return std::stoull(value);
  } catch (const std::exception&) {
    throw CliError("--" + flag + " value out of range: '" + value + "'");
  }
}

inline Request parse_args(const std::vector<std::string>& args) {
  Request req;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0) {
      req.words.push_back(a);
      continue;
    }
    std::string name = a.substr(2), value;
    bool has_value = false;
    if (std::size_t eq = name.find('='); eq != std::string::npos) {
      value = name.substr(eq + 1);
      name = name.substr(0, eq);
      has_value = true;
    }
    if (!known_flags().count(name)) throw CliError("unknown flag --" + name);
    if (name == "plain") {
      if (has_value) throw CliError("--plain takes no value");
      req.plain = true;
      continue;
    }
    if (!has_value) {
      if (i + 1 >= args.size()) throw CliError("flag --" + name + " needs a value");
      value = args[++i];
    }
    req.values[name] = value;
  }
  if (req.has("decimal"))
    req.decimal = static_cast<unsigned>(parse_uint_flag(req.get("decimal"), "decimal"));
  return req;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

inline SequencePrefix sequence_from_text(const std::string& text) {
  std::size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) throw CliError("empty sequence input");
  std::istringstream in(text);
  if (text[b] == '{') return sequence_from_json(Json::parse(text));
  return sequence_from_plain_text(in);
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CliError("cannot open file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --seq resolution order: "-" or absent reads stdin; "@name:len" is catalog
// shorthand; "{...}" is inline JSON; an existing path is read as a file; a
// comma list (or single value) is an inline sequence.
inline SequencePrefix resolve_seq(const Request& req, std::istream& in) {
  std::optional<std::string> s = req.find("seq");
  if (!s || *s == "-") return sequence_from_text(read_stream(in));
  const std::string& v = *s;
  if (!v.empty() && v[0] == '@') {
    std::size_t colon = v.rfind(':');
    if (colon == std::string::npos || colon == 1)
      throw CliError("--seq catalog shorthand is @name:len, got '" + v + "'");
    std::uint64_t len = parse_uint_flag(v.substr(colon + 1), "seq");
    return catalog(v.substr(1, colon - 1), static_cast<std::size_t>(len));
  }
  if (!v.empty() && v[0] == '{') return sequence_from_json(Json::parse(v));
  if (std::filesystem::exists(v)) return sequence_from_text(read_file(v));
  SequencePrefix out;
  for (const std::string& part : split(v, ',')) out.values.push_back(Rational::parse(part));
  return out;
}

// Variable count of inline polynomial text: the largest x<k> index, or the
// highest of the x/y/z aliases that appear.
inline std::size_t infer_num_vars(const std::string& text) {
  std::size_t vars = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == 'y') vars = std::max<std::size_t>(vars, 2);
    if (c == 'z') vars = std::max<std::size_t>(vars, 3);
    if (c != 'x') continue;
    std::size_t j = i + 1, idx = 0;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9')
      idx = idx * 10 + static_cast<std::size_t>(text[j++] - '0');
    vars = std::max(vars, j > i + 1 ? idx : std::size_t{1});
    i = j - 1;
  }
  if (vars == 0)
    throw CliError("cannot infer variable count from polynomial; pass --num-vars");
  return vars;
}

inline MultiPoly poly_from_text(const std::string& text, const Request& req) {
  std::size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) throw CliError("empty polynomial input");
  if (text[b] == '{') return poly_from_json(Json::parse(text));
  std::size_t num_vars = req.has("num-vars")
                             ? static_cast<std::size_t>(
                                   parse_uint_flag(req.get("num-vars"), "num-vars"))
                             : infer_num_vars(text);
  return parse_poly(text, num_vars);
}

inline MultiPoly resolve_poly(const Request& req, std::istream& in) {
  std::optional<std::string> p = req.find("poly");
  if (!p || *p == "-") return poly_from_text(read_stream(in), req);
  if (!p->empty() && (*p)[0] != '{' && std::filesystem::exists(*p))
    return poly_from_text(read_file(*p), req);
  return poly_from_text(*p, req);
}

// --interval c,v,w (exact surd form) or the a,b shorthand for rational
// endpoints.
inline QuadraticInterval parse_interval_flag(const std::string& s) {
  std::vector<std::string> parts = split(s, ',');
  if (parts.size() == 2)
    return QuadraticInterval::from_rational_endpoints(Rational::parse(parts[0]),
                                                      Rational::parse(parts[1]));
  if (parts.size() != 3)
    throw CliError("--interval expects c,v,w or a,b, got '" + s + "'");
  return QuadraticInterval(Rational::parse(parts[0]), Rational::parse(parts[1]),
                           parse_uint_flag(parts[2], "interval"));
}

inline DomainSpec parse_domain_flag(const std::string& s, std::size_t dim) {
  if (s == "orthant") return DomainSpec::orthant(dim);
  if (s == "reals") return DomainSpec::all_reals(dim);
  if (s.rfind("box:", 0) == 0) {
    std::vector<std::string> parts = split(s.substr(4), ',');
    if (parts.size() != 2) throw CliError("--domain box needs box:lo,hi, got '" + s + "'");
    return DomainSpec::box(Rational::parse(parts[0]), Rational::parse(parts[1]), dim);
  }
  throw CliError("--domain must be orthant, reals, or box:lo,hi, got '" + s + "'");
}

inline std::vector<std::uint32_t> parse_index_list(const std::string& s,
                                                   const std::string& flag) {
  std::vector<std::uint32_t> out;
  for (const std::string& part : split(s, ','))
    out.push_back(static_cast<std::uint32_t>(parse_uint_flag(part, flag)));
  return out;
}

// --matrix rows separated by ';', entries by ','.
inline ExactMatrix parse_matrix_flag(const std::string& s) {
  std::vector<std::vector<Rational>> rows;
  for (const std::string& row : split(s, ';')) {
    rows.emplace_back();
    for (const std::string& entry : split(row, ',')) rows.back().push_back(Rational::parse(entry));
  }
  return ExactMatrix::from_rows(rows);
}

inline std::string join_values(const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i)
    s += (i ? " " : "") + values[i].to_string();
  return s;
}

inline void emit_json(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

inline void emit_sequence(std::ostream& out, const Request& req, const SequencePrefix& s,
                          Json provenance = Json()) {
  if (req.plain) {
    for (const Rational& v : s.values) out << v.to_string() << "\n";
    return;
  }
  Json j = sequence_json(s, req.decimal);
  if (provenance.is_object())
    for (auto& [key, value] : provenance.items()) j[key] = value;
  emit_json(out, j);
}

inline void emit_check_report(std::ostream& out, const Request& req, const CheckReport& r) {
  if (!req.plain) {
    emit_json(out, check_report_json(r, req.decimal));
    return;
  }
  out << "verdict: " << (r.pass ? "pass" : "fail") << "\n";
  out << "criterion: " << r.criterion << "\n";
  out << "depth: " << r.depth_checked << "\n";
  if (r.witness)
    out << "witness: m=" << r.witness->m << " value=" << r.witness->value.to_string()
        << " detail=" << r.witness->detail << "\n";
}

inline void emit_verdict(std::ostream& out, const Request& req, const PositivityVerdict& v) {
  if (!req.plain) {
    emit_json(out, verdict_json(v, req.decimal));
    return;
  }
  out << "kind: " << (v.counterexample ? "counterexample" : "no_counterexample") << "\n";
  if (v.counterexample) {
    out << "point: " << join_values(v.point) << "\n";
    out << "value: " << v.value.to_string() << "\n";
  } else {
    out << "min_sampled: " << v.min_sampled.to_string() << "\n";
    out << "min_point: " << join_values(v.min_point) << "\n";
  }
  out << "resolution: " << v.resolution << "\n";
  out << "samples: " << v.samples << "\n";
  out << "route: " << v.route << "\n";
}

inline int run_seq(const Request& req, std::istream& in, std::ostream& out) {
  if (req.words.size() < 2) throw CliError("seq needs a subcommand: gen or read");
  const std::string& sub = req.words[1];
  if (sub == "gen") {
    std::size_t len =
        static_cast<std::size_t>(parse_uint_flag(req.get("len"), "len"));
    emit_sequence(out, req, catalog(req.get("name"), len));
    return 0;
  }
  if (sub == "read") {
    emit_sequence(out, req, resolve_seq(req, in));
    return 0;
  }
  throw CliError("unknown seq subcommand '" + sub + "'");
}

inline int run_poly(const Request& req, std::istream& in, std::ostream& out) {
  if (req.words.size() < 2)
    throw CliError("poly needs a subcommand: parse, symmetrize, or print");
  const std::string& sub = req.words[1];
  MultiPoly p = resolve_poly(req, in);
  if (sub == "parse") {
    if (req.plain) out << print_poly(p) << "\n";
    else emit_json(out, poly_json(p, req.decimal));
    return 0;
  }
  if (sub == "symmetrize") {
    MultiPoly pbar = p.symmetrize();
    if (req.plain) out << print_poly(pbar) << "\n";
    else emit_json(out, poly_json(pbar, req.decimal));
    return 0;
  }
  if (sub == "print") {
    out << print_poly(p) << "\n";
    return 0;
  }
  throw CliError("unknown poly subcommand '" + sub + "'");
}

inline int run_transform(const Request& req, std::istream& in, std::ostream& out) {
  if (req.words.size() < 2)
    throw CliError("transform needs a subcommand: apply, minor, coposform, or witness");
  const std::string& sub = req.words[1];
  if (sub == "apply") {
    MultiPoly p = resolve_poly(req, in);
    SequencePrefix alpha = resolve_seq(req, in);
    SequencePrefix result = apply_tp(p, alpha);
    result.label = "T_p(" + (alpha.label.empty() ? "seq" : alpha.label) + ")";
    Json prov;
    prov["operator"] = "T_p";
    prov["poly"] = poly_json(p);
    emit_sequence(out, req, result, prov);
    return 0;
  }
  if (sub == "minor") {
    SequencePrefix alpha = resolve_seq(req, in);
    MinorSpec spec{parse_index_list(req.get("r"), "r"), parse_index_list(req.get("t"), "t")};
    SequencePrefix result = minor_sequence(alpha, spec);
    result.label = "minor(" + (alpha.label.empty() ? "seq" : alpha.label) + ")";
    Json prov;
    prov["operator"] = "minor";
    Json sj;
    sj["r"] = spec.r;
    sj["t"] = spec.t;
    prov["spec"] = std::move(sj);
    emit_sequence(out, req, result, prov);
    return 0;
  }
  if (sub == "coposform") {
    SequencePrefix alpha = resolve_seq(req, in);
    ExactMatrix a = parse_matrix_flag(req.get("matrix"));
    SequencePrefix result = copositive_form_sequence(a, alpha);
    result.label = "copositive_form(" + (alpha.label.empty() ? "seq" : alpha.label) + ")";
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(a.at(i, j).to_string());
      rows.push_back(std::move(row));
    }
    Json prov;
    prov["operator"] = "copositive_form";
    Json sj;
    sj["matrix"] = std::move(rows);
    prov["spec"] = std::move(sj);
    emit_sequence(out, req, result, prov);
    return 0;
  }
  if (sub == "witness") {
    MultiPoly p = resolve_poly(req, in);
    Rational xi = Rational::parse(req.get("xi"));
    std::size_t len = req.has("len")
                          ? static_cast<std::size_t>(parse_uint_flag(req.get("len"), "len"))
                          : static_cast<std::size_t>(p.total_degree()) + 1;
    WitnessReport w = dirac_witness(p, xi, len);
    if (req.plain) {
      out << "xi: " << w.xi.to_string() << "\n";
      out << "value: " << w.value.to_string() << "\n";
    } else {
      emit_json(out, witness_report_json(w, req.decimal));
    }
    return w.value.sign() < 0 ? 1 : 0;
  }
  throw CliError("unknown transform subcommand '" + sub + "'");
}

inline int run_verify(const Request& req, std::istream& in, std::ostream& out) {
  if (req.words.size() < 2)
    throw CliError("verify needs a subcommand: hamburger, stieltjes, totalnn, or interval");
  const std::string& sub = req.words[1];
  SequencePrefix alpha = resolve_seq(req, in);
  auto depth_or = [&](std::size_t fallback) {
    return req.has("depth")
               ? static_cast<std::size_t>(parse_uint_flag(req.get("depth"), "depth"))
               : fallback;
  };
  CheckReport report;
  if (sub == "hamburger") {
    report = check_hamburger(alpha, depth_or(max_hamburger_depth(alpha.size())));
  } else if (sub == "stieltjes") {
    report = check_stieltjes(alpha, depth_or(max_stieltjes_depth(alpha.size())));
  } else if (sub == "totalnn") {
    std::uint64_t budget =
        req.has("budget") ? parse_uint_flag(req.get("budget"), "budget") : 200000;
    report = check_total_nonneg(alpha, depth_or(max_hamburger_depth(alpha.size())), budget);
  } else if (sub == "interval") {
    QuadraticInterval iv = parse_interval_flag(req.get("interval"));
    report = check_interval(alpha, iv, depth_or(max_interval_depth(alpha.size())));
  } else {
    throw CliError("unknown verify subcommand '" + sub + "'");
  }
  emit_check_report(out, req, report);
  return report.pass ? 0 : 1;
}

inline int run_positivity(const Request& req, std::istream& in, std::ostream& out) {
  if (req.words.size() < 2)
    throw CliError("positivity needs a subcommand: check or comparemin");
  const std::string& sub = req.words[1];
  MultiPoly p = resolve_poly(req, in);
  DomainSpec dom = req.has("domain") ? parse_domain_flag(req.get("domain"), p.num_vars())
                                     : DomainSpec::orthant(p.num_vars());
  if (sub == "check") {
    std::uint64_t budget =
        req.has("budget") ? parse_uint_flag(req.get("budget"), "budget") : 1000000;
    unsigned threads =
        req.has("threads")
            ? static_cast<unsigned>(parse_uint_flag(req.get("threads"), "threads"))
            : 1;
    PositivityVerdict v = check_nonneg(p, dom, budget, threads);
    emit_verdict(out, req, v);
    return v.counterexample ? 1 : 0;
  }
  if (sub == "comparemin") {
    std::size_t res =
        req.has("resolution")
            ? static_cast<std::size_t>(parse_uint_flag(req.get("resolution"), "resolution"))
            : 33;
    CompareMinResult r = compare_min(p, dom, res);
    if (req.plain) {
      out << "min_p: " << r.min_p.to_string() << " at: " << join_values(r.min_p_point)
          << "\n";
      out << "min_pbar: " << r.min_pbar.to_string()
          << " at: " << join_values(r.min_pbar_point) << "\n";
      out << "resolution: " << r.resolution << "\n";
      out << "samples: " << r.samples << "\n";
    } else {
      emit_json(out, compare_min_json(r, req.decimal));
    }
    return 0;
  }
  throw CliError("unknown positivity subcommand '" + sub + "'");
}

inline int run_interval(const Request& req, std::ostream& out) {
  if (req.words.size() < 2 || req.words[1] != "map")
    throw CliError("interval needs the map subcommand");
  QuadraticInterval iv = parse_interval_flag(req.get("interval"));
  unsigned d = static_cast<unsigned>(parse_uint_flag(req.get("d"), "d"));
  QuadraticInterval mapped = map_interval(iv, d);
  if (req.plain) out << mapped.to_string() << "\n";
  else emit_json(out, interval_json(mapped, req.decimal));
  return 0;
}

inline const char* usage_text() {
  return "usage: moments <command> [flags]\n"
         "  seq gen --name <catalog> --len <n> | seq read [--seq <input>]\n"
         "  poly parse|symmetrize|print [--poly <input>] [--num-vars d]\n"
         "  transform apply --poly <p> [--seq <input>]\n"
         "  transform minor --r a,b,... --t a,b,... [--seq <input>]\n"
         "  transform coposform --matrix 'a,b;c,d' [--seq <input>]\n"
         "  transform witness --poly <p> --xi <q> [--len n]\n"
         "  verify hamburger|stieltjes|totalnn [--seq <input>] [--depth m] [--budget n]\n"
         "  verify interval --interval c,v,w [--seq <input>] [--depth m]\n"
         "  positivity check --poly <p> [--domain orthant|reals|box:lo,hi]\n"
         "                   [--budget n] [--threads n]\n"
         "  positivity comparemin --poly <p> --domain box:lo,hi [--resolution n]\n"
         "  interval map --interval c,v,w --d <n>\n"
         "common flags: --plain --decimal k\n"
         "sequence input: @name:len, a file path, inline JSON, a comma list, or stdin\n";
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  try {
    detail::Request req = detail::parse_args(args);
    if (req.words.empty()) {
      err << detail::usage_text();
      return 2;
    }
    const std::string& cmd = req.words[0];
    if (cmd == "seq") return detail::run_seq(req, in, out);
    if (cmd == "poly") return detail::run_poly(req, in, out);
    if (cmd == "transform") return detail::run_transform(req, in, out);
    if (cmd == "verify") return detail::run_verify(req, in, out);
    if (cmd == "positivity") return detail::run_positivity(req, in, out);
    if (cmd == "interval") return detail::run_interval(req, out);
    throw CliError("unknown command '" + cmd + "'");
  } catch (const CliError& e) {
    err << "error: " << e.what() << "\n" << detail::usage_text();
    return 2;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace moments::cli
