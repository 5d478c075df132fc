#pragma once

// Command implementations for the gcf command-line tool. Kept in a header so
// the test suite can drive run() in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstddef>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gcf/gcf.hpp"

namespace gcf::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, machine };

/// A resolved --system argument.
struct System {
  std::string name;
  Partition partition;
  std::vector<std::string> points;  // finite systems only
  std::vector<int> signs;
};

inline System load_partition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::file_error, "cannot open partition file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::file_error, "partition file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("Q") || !doc.contains("epsilon") ||
      !doc["Q"].is_array() || !doc["epsilon"].is_array()) {
    throw Error(Errc::file_error,
                "partition file '" + path + "' needs array fields \"Q\" and \"epsilon\"");
  }
  System sys{path, Partition::ordinary(), {}, {}};
  std::vector<Rational> q;
  for (std::size_t i = 0; i < doc["Q"].size(); ++i) {
    const Json& v = doc["Q"][i];
    if (!v.is_string()) {
      throw Error(Errc::parse_error, "Q[" + std::to_string(i) + "] must be a fraction string", i);
    }
    try {
      q.push_back(parse_rational(v.get<std::string>()));
    } catch (const Error& e) {
      throw Error(Errc::parse_error, "Q[" + std::to_string(i) + "]: " + e.what(), i);
    }
    sys.points.push_back(q.back().to_string());
  }
  for (std::size_t i = 0; i < doc["epsilon"].size(); ++i) {
    const Json& v = doc["epsilon"][i];
    if (!v.is_number_integer()) {
      throw Error(Errc::bad_sign, "epsilon[" + std::to_string(i) + "] must be -1 or 1", i);
    }
    sys.signs.push_back(v.get<int>());
  }
  sys.partition = validate_finite(q, sys.signs);
  return sys;
}

inline System resolve_system(const std::string& arg) {
  if (arg == "ordinary") return {arg, Partition::ordinary(), {}, {}};
  if (arg == "odd") return {arg, Partition::odd(), {}, {}};
  if (arg == "farey") return {arg, Partition::farey(), {"0", "1/2", "1"}, {-1, -1}};
  return load_partition_file(arg);
}

inline Json system_json(const System& sys) {
  Json j;
  j["name"] = sys.name;
  j["kind"] = std::string(kind_name(sys.partition.kind()));
  if (sys.partition.kind() == PartitionKind::finite) {
    j["Q"] = sys.points;
    j["epsilon"] = sys.signs;
  }
  return j;
}

inline Json digits_json(std::span<const Integer> digits) {
  Json j = Json::array();
  for (const Integer& d : digits) j.push_back(d.get_str());
  return j;
}

inline Json matrix_json(const Mat2& m) {
  return Json::array({Json::array({m.e00.get_str(), m.e01.get_str()}),
                      Json::array({m.e10.get_str(), m.e11.get_str()})});
}

inline std::string join(std::span<const Integer> digits, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0) out += sep;
    out += digits[i].get_str();
  }
  return out;
}

inline std::string_view terminal_name(TerminalKind t) {
  switch (t) {
    case TerminalKind::at_zero: return "zero";
    case TerminalKind::at_one: return "one";
    case TerminalKind::ongoing: return "ongoing";
  }
  return "ongoing";
}

/// 1/(b_1 + e_1/(b_2 + ... )) with the tail e_n*G^n x written out as
/// nothing (G^n x = 0), "+1"/"-1" (G^n x = 1), or "+..."/"-..." (ongoing).
inline std::string odd_pretty(std::span<const OddDigit> forms, TerminalKind terminal) {
  if (forms.empty()) return "";
  auto op = [](Sign s) { return s == Sign::minus ? std::string("-") : std::string("+"); };
  std::string inner = forms.back().b.get_str();
  if (terminal == TerminalKind::at_one) inner += op(forms.back().eps) + "1";
  if (terminal == TerminalKind::ongoing) inner += op(forms.back().eps) + "...";
  for (std::size_t k = forms.size() - 1; k-- > 0;) {
    inner = forms[k].b.get_str() + op(forms[k].eps) + "1/(" + inner + ")";
  }
  return "1/(" + inner + ")";
}

inline std::vector<Integer> parse_digit_list(const std::string& text, const char* what) {
  std::vector<Integer> out;
  std::string item;
  std::stringstream ss(text);
  std::size_t pos = 0;
  while (std::getline(ss, item, ',')) {
    std::string trimmed;
    for (char c : item) {
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    }
    if (trimmed.empty()) {
      if (text.find_first_not_of(" \t") == std::string::npos) break;
      throw Error(Errc::parse_error, std::string("empty entry in ") + what + " list", pos);
    }
    Integer v;
    if (v.set_str(trimmed, 10) != 0) {
      throw Error(Errc::parse_error,
                  std::string("bad digit '") + trimmed + "' in " + what + " list", pos);
    }
    out.push_back(v);
    ++pos;
  }
  return out;
}

struct Emitter {
  std::ostream& out;
  std::ostream& err;
  Format format;
  std::string command;

  int ok(Json body, const std::string& text) const {
    if (format == Format::machine) {
      Json j;
      j["command"] = command;
      j["ok"] = true;
      for (auto& [k, v] : body.items()) j[k] = v;
      out << j.dump() << '\n';
    } else {
      out << text;
    }
    return 0;
  }

  int fail(const Error& e, Json context = Json::object()) const {
    if (format == Format::machine) {
      Json j;
      j["command"] = command;
      j["ok"] = false;
      for (auto& [k, v] : context.items()) j[k] = v;
      Json ej;
      ej["code"] = std::string(errc_name(e.code()));
      ej["message"] = e.what();
      if (e.index()) ej["index"] = *e.index();
      if (e.detail()) ej["detail"] = *e.detail();
      j["error"] = ej;
      out << j.dump() << '\n';
    } else {
      err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    }
    return 1;
  }
};

inline int cmd_expand(const Emitter& em, const std::string& system, const std::string& number,
                      std::size_t max_steps) {
  try {
    const System sys = resolve_system(system);
    const RealValue x = parse_number(number);
    const Expansion e = expand(sys.partition, x, max_steps);
    Json body;
    body["system"] = system_json(sys);
    body["input"] = x.to_string();
    body["max_steps"] = max_steps;
    body["digits"] = digits_json(e.digits);
    body["terminal"] = std::string(terminal_name(e.terminal));
    body["last"] = e.last.to_string();
    std::ostringstream text;
    text << "system: " << sys.name << '\n'
         << "input: " << x.to_string() << '\n'
         << "digits: " << join(e.digits) << '\n'
         << "terminal: " << terminal_name(e.terminal);
    if (e.terminal == TerminalKind::ongoing) text << " at " << e.last.to_string();
    text << '\n';
    if (sys.partition.kind() == PartitionKind::odd) {
      std::vector<OddDigit> forms;
      Json fj = Json::array();
      text << "odd form:";
      for (const Integer& a : e.digits) {
        forms.push_back(odd_digit_form(a));
        fj.push_back({{"b", forms.back().b.get_str()}, {"eps", to_int(forms.back().eps)}});
        text << " (" << forms.back().b.get_str() << "," << (forms.back().eps == Sign::minus ? "-1" : "+1")
             << ")";
      }
      const std::string pretty = odd_pretty(forms, e.terminal);
      body["odd_form"] = fj;
      body["odd_pretty"] = pretty;
      text << '\n' << "continued fraction: " << pretty << '\n';
    }
    return em.ok(body, text.str());
  } catch (const Error& e) {
    return em.fail(e);
  }
}

inline int cmd_period(const Emitter& em, const std::string& system, const std::string& number,
                      std::size_t max_steps) {
  try {
    const System sys = resolve_system(system);
    const RealValue x = parse_number(number);
    if (x.is_rational()) {
      throw Error(Errc::not_quadratic, x.to_string() +
                                           " is rational; its expansion is finite (use `expand`)");
    }
    const PeriodReport r = detect_period(sys.partition, x.surd(), max_steps);
    const HyperbolicCert& c = r.certificate;
    Json cert;
    cert["H"] = matrix_json(c.H);
    cert["lambda"] = c.lambda.to_string();
    cert["lambda_bar"] = c.lambda_bar.to_string();
    cert["trace"] = c.H.trace().get_str();
    cert["det"] = c.H.det().get_str();
    cert["t_shift"] = c.t_shift.get_str();
    Json body;
    body["system"] = system_json(sys);
    body["input"] = x.to_string();
    body["max_steps"] = max_steps;
    body["preperiod"] = r.preperiod;
    body["period"] = r.period;
    body["preperiod_digits"] = digits_json(r.preperiod_digits);
    body["period_digits"] = digits_json(r.period_digits);
    body["certificate"] = cert;
    body["detect_index"] = r.detect_index;
    body["detect_gap"] = r.detect_gap;
    std::ostringstream text;
    text << "system: " << sys.name << '\n'
         << "input: " << x.to_string() << '\n'
         << "preperiod (" << r.preperiod << "): [" << join(r.preperiod_digits, ",") << "]\n"
         << "period (" << r.period << "): [" << join(r.period_digits, ",") << "]\n"
         << "H: " << c.H.to_string() << "  trace " << c.H.trace().get_str() << "  det "
         << c.H.det().get_str() << '\n'
         << "lambda: " << c.lambda.to_string() << "  lambda_bar: " << c.lambda_bar.to_string()
         << "  t: " << c.t_shift.get_str() << '\n'
         << "detected: H_" << r.detect_index << " = H_" << r.detect_index + r.detect_gap << '\n';
    return em.ok(body, text.str());
  } catch (const Error& e) {
    return em.fail(e);
  }
}

inline int cmd_reconstruct(const Emitter& em, const std::string& system,
                           const std::string& preperiod, const std::string& period) {
  try {
    const System sys = resolve_system(system);
    const std::vector<Integer> pre = parse_digit_list(preperiod, "preperiod");
    const std::vector<Integer> per = parse_digit_list(period, "period");
    const QuadSurd x = reconstruct(sys.partition, pre, per);
    const QuadraticPoly poly = minimal_polynomial(x);
    Json body;
    body["system"] = system_json(sys);
    body["preperiod_digits"] = digits_json(pre);
    body["period_digits"] = digits_json(per);
    body["value"] = x.to_string();
    body["minimal_polynomial"] = {
        {"coefficients", Json::array({poly.c.get_str(), poly.d.get_str(), poly.e.get_str()})},
        {"text", poly.to_string()}};
    std::ostringstream text;
    text << x.to_string() << '\n' << "minimal polynomial: " << poly.to_string() << '\n';
    return em.ok(body, text.str());
  } catch (const Error& e) {
    return em.fail(e);
  }
}

inline int cmd_validate(const Emitter& em, const std::string& path) {
  Json context;
  context["path"] = path;
  try {
    const System sys = load_partition_file(path);
    Json branches = Json::array();
    std::ostringstream text;
    text << "OK: " << sys.partition.branches().size() << " branches\n";
    for (const Branch& b : sys.partition.branches()) {
      const Mat2 g = branch_matrix(b);
      branches.push_back({{"index", b.index.get_str()},
                          {"lo", b.lo.to_string()},
                          {"hi", b.hi.to_string()},
                          {"right_closed", b.right_closed},
                          {"eps", to_int(b.eps)},
                          {"G", matrix_json(g)}});
      text << "  " << b.index.get_str() << "  (" << b.lo.to_string() << ", " << b.hi.to_string()
           << (b.right_closed ? "]" : ")") << "  eps " << (b.eps == Sign::minus ? "-1" : "+1")
           << "  G " << g.to_string() << '\n';
    }
    context["branches"] = branches;
    return em.ok(context, text.str());
  } catch (const Error& e) {
    return em.fail(e, context);
  }
}

inline int cmd_convergents(const Emitter& em, const std::string& system, const std::string& number,
                           std::size_t n) {
  try {
    const System sys = resolve_system(system);
    const RealValue x = parse_number(number);
    sys.partition.locate(x);  // domain check
    Json rows = Json::array();
    std::ostringstream text;
    text << "system: " << sys.name << '\n' << "input: " << x.to_string() << '\n';
    CylinderState cyl;
    RealValue cur = x;
    auto emit = [&](const Integer* digit) {
      const CylinderInterval g = gamma_interval(cyl);
      Json row;
      row["n"] = cyl.n;
      row["digit"] = digit ? Json(digit->get_str()) : Json(nullptr);
      row["lo"] = g.lo.to_string();
      row["hi"] = g.hi.to_string();
      row["length"] = g.length.to_string();
      rows.push_back(row);
      text << cyl.n << "  " << (digit ? digit->get_str() : std::string("-")) << "  ["
           << g.lo.to_string() << ", " << g.hi.to_string() << "]  " << g.length.to_string() << '\n';
    };
    emit(nullptr);
    for (std::size_t k = 0; k < n; ++k) {
      if (cur == RealValue(0L) || cur == RealValue(1L)) break;
      const Branch b = sys.partition.locate(cur);
      cur = mobius_apply(branch_matrix(b), cur);
      cyl = push_cylinder(cyl, b);
      emit(&b.index);
    }
    Json body;
    body["system"] = system_json(sys);
    body["input"] = x.to_string();
    body["rows"] = rows;
    return em.ok(body, text.str());
  } catch (const Error& e) {
    return em.fail(e);
  }
}

/// Entry point shared by main() and the tests. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized continued fractions: Gauss maps of unimodular partitions"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string system = "ordinary";
  std::string number;
  std::size_t max_steps = kDefaultMaxSteps;
  std::string preperiod;
  std::string period;
  std::string path;
  std::size_t count = 0;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
  };
  auto add_system = [&](CLI::App* sub) {
    sub->add_option("--system", system, "ordinary, odd, farey, or a partition file path");
  };

  CLI::App* expand_cmd = app.add_subcommand("expand", "Kneading digits of a number");
  add_system(expand_cmd);
  expand_cmd->add_option("--number", number, "u/v, u, or (a+b*sqrt(d))/c")->required();
  expand_cmd->add_option("--max-steps", max_steps)->check(CLI::PositiveNumber);
  add_format(expand_cmd);

  CLI::App* period_cmd = app.add_subcommand("period", "Eventual period of a quadratic irrational");
  add_system(period_cmd);
  period_cmd->add_option("--number", number, "(a+b*sqrt(d))/c")->required();
  period_cmd->add_option("--max-steps", max_steps)->check(CLI::PositiveNumber);
  add_format(period_cmd);

  CLI::App* recon_cmd = app.add_subcommand("reconstruct", "Quadratic irrational from periodic digits");
  add_system(recon_cmd);
  recon_cmd->add_option("--preperiod", preperiod, "comma-separated digits (may be empty)");
  recon_cmd->add_option("--period", period, "comma-separated digits")->required();
  add_format(recon_cmd);

  CLI::App* validate_cmd = app.add_subcommand("validate", "Check a partition file");
  validate_cmd->add_option("path", path, "partition file")->required();
  add_format(validate_cmd);

  CLI::App* conv_cmd = app.add_subcommand("convergents", "Cylinder intervals Gamma_0..Gamma_n");
  add_system(conv_cmd);
  conv_cmd->add_option("--number", number)->required();
  conv_cmd->add_option("-n", count, "number of steps")->required();
  add_format(conv_cmd);

  std::vector<const char*> argv{"gcf"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const Format format = format_name == "machine" ? Format::machine : Format::text;
  CLI::App* sub = app.get_subcommands().front();
  const Emitter em{out, err, format, sub->get_name()};
  if (sub == expand_cmd) return cmd_expand(em, system, number, max_steps);
  if (sub == period_cmd) return cmd_period(em, system, number, max_steps);
  if (sub == recon_cmd) return cmd_reconstruct(em, system, preperiod, period);
  if (sub == validate_cmd) return cmd_validate(em, path);
  return cmd_convergents(em, system, number, count);
}

}  // namespace gcf::cli
