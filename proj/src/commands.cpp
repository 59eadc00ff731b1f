#include "betti4/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>
#include <variant>

#include "betti4/atlas.hpp"
#include "betti4/betti.hpp"
#include "betti4/errors.hpp"
#include "betti4/oracle.hpp"
#include "betti4/random_ideal.hpp"
#include "json.hpp"

namespace betti4::cli {

namespace {

using Json = nlohmann::ordered_json;

// Runs fn(0..n-1) on up to `jobs` threads; results keep index order.
template <class Result>
std::vector<Result> parallel_map(std::size_t n, unsigned jobs, const std::function<Result(std::size_t)>& fn) {
  std::vector<Result> results(n);
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) results[i] = fn(i);
    });
  for (auto& t : pool) t.join();
  return results;
}

bool is_input_error(const Error& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const VariableOutOfRange*>(&e) ||
         dynamic_cast<const ExponentCapExceeded*>(&e) || dynamic_cast<const GeneratorCapExceeded*>(&e);
}

struct ErrorInfo {
  std::string kind;
  std::string message;
  std::optional<std::size_t> position;
  bool input_error = true;
};

ErrorInfo describe(const Error& e) {
  ErrorInfo info{e.kind(), e.what(), std::nullopt, is_input_error(e)};
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) info.position = p->position();
  return info;
}

Json error_json(const ErrorInfo& info) {
  Json j{{"kind", info.kind}, {"message", info.message}};
  if (info.position) j["position"] = *info.position;
  return j;
}

Json generators_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
  return gens;
}

Json betti_json(const BettiVector& b) {
  Json arr = Json::array();
  for (const auto v : b) arr.push_back(v);
  return arr;
}

Json multigraded_json(const std::map<Monomial, BettiVector>& graded) {
  Json obj = Json::object();
  for (const auto& [m, row] : graded) obj[m.to_string()] = betti_json(row);
  return obj;
}

std::string join_row(const BettiVector& b, int width) {
  std::ostringstream os;
  for (const auto v : b) os << std::setw(width) << v;
  return os.str();
}

// ---------------------------------------------------------------- betti

struct BettiSuccess {
  MonomialIdeal ideal;
  BettiTable table;
  bool pd2 = false;
};

using BettiOutcome = std::variant<BettiSuccess, ErrorInfo>;

BettiOutcome compute_betti(const std::string& text, const BettiOptions& opts) {
  try {
    BettiSuccess s;
    s.ideal = parse_ideal(text, opts.limits.max_exponent);
    s.table = full_table(s.ideal, opts.multigraded, opts.limits.max_generators);
    s.pd2 = pd_two_condition(s.ideal);
    return s;
  } catch (const Error& e) {
    return describe(e);
  }
}

void write_betti_json(std::ostream& out, const IdealLine& line, const BettiOutcome& outcome) {
  Json j{{"schema", kSchemaVersion}, {"line", line.line}};
  if (const auto* s = std::get_if<BettiSuccess>(&outcome)) {
    j["generators"] = generators_json(s->ideal);
    j["betti"] = betti_json(s->table.betti);
    j["pd"] = s->table.pd;
    j["pd2_condition"] = s->pd2;
    if (s->table.multigraded) j["multigraded"] = multigraded_json(*s->table.multigraded);
  } else {
    j["input"] = line.text;
    j["error"] = error_json(std::get<ErrorInfo>(outcome));
  }
  out << j.dump() << '\n';
}

void write_betti_table(std::ostream& out, const IdealLine& line, const BettiOutcome& outcome) {
  out << "line " << line.line << ": ";
  if (const auto* e = std::get_if<ErrorInfo>(&outcome)) {
    out << e->kind << ": " << e->message << "\n\n";
    return;
  }
  const auto& s = std::get<BettiSuccess>(outcome);
  out << s.ideal.to_string() << '\n';
  out << "  i    " << join_row({0, 1, 2, 3, 4}, 6) << '\n';
  out << "  beta " << join_row(s.table.betti, 6) << '\n';
  out << "  pd " << s.table.pd << ", pd2_condition " << (s.pd2 ? "true" : "false") << '\n';
  if (s.table.multigraded) {
    std::size_t width = 12;
    for (const auto& [m, row] : *s.table.multigraded) width = std::max(width, m.to_string().size());
    out << "  multigraded:\n";
    for (const auto& [m, row] : *s.table.multigraded)
      out << "    " << std::left << std::setw(static_cast<int>(width)) << m.to_string() << std::right
          << join_row(row, 4) << '\n';
  }
  out << '\n';
}

// ---------------------------------------------------------------- verify

struct VerifyCase {
  std::string label;
  MonomialIdeal ideal;
};

struct FieldComparison {
  unsigned characteristic = 0;
  bool agree = false;
  BettiTable oracle;
};

struct VerifyResult {
  std::optional<BettiTable> formula;
  std::optional<ErrorInfo> formula_error;
  std::vector<FieldComparison> fields;

  bool all_agree() const {
    return formula && std::all_of(fields.begin(), fields.end(), [](const auto& f) { return f.agree; });
  }
};

VerifyResult verify_ideal(const MonomialIdeal& ideal, std::size_t cap) {
  VerifyResult r;
  try {
    r.formula = full_table(ideal, true, cap);
  } catch (const Error& e) {
    r.formula_error = describe(e);
  }
  for (const auto& field : verification_fields()) {
    FieldComparison c;
    c.characteristic = field.characteristic();
    c.oracle = oracle_betti(ideal, field, cap, true);
    c.agree = r.formula && *r.formula == c.oracle;
    r.fields.push_back(std::move(c));
  }
  return r;
}

// Drops generators one at a time while the disagreement persists.
MonomialIdeal shrink_counterexample(MonomialIdeal ideal, std::size_t cap) {
  bool progress = true;
  while (progress && ideal.size() > 1) {
    progress = false;
    for (std::size_t drop = 0; drop < ideal.size(); ++drop) {
      std::vector<Monomial> gens;
      for (std::size_t i = 0; i < ideal.size(); ++i)
        if (i != drop) gens.push_back(ideal[i]);
      auto candidate = MonomialIdeal::minimalize(std::move(gens));
      if (!verify_ideal(candidate, cap).all_agree()) {
        ideal = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return ideal;
}

Json counterexample_json(const MonomialIdeal& ideal, std::size_t cap) {
  const MonomialIdeal small = shrink_counterexample(ideal, cap);
  const VerifyResult r = verify_ideal(small, cap);
  Json j{{"ideal", small.to_string()}};
  if (r.formula_error) j["formula_error"] = error_json(*r.formula_error);
  for (const auto& f : r.fields) {
    if (f.agree) continue;
    j["characteristic"] = f.characteristic;
    j["expected_betti"] = betti_json(f.oracle.betti);
    if (!r.formula) break;
    j["actual_betti"] = betti_json(r.formula->betti);
    const auto& expected = *f.oracle.multigraded;
    const auto& actual = *r.formula->multigraded;
    std::vector<Monomial> keys;
    for (const auto& [m, _] : expected) keys.push_back(m);
    for (const auto& [m, _] : actual) keys.push_back(m);
    std::sort(keys.begin(), keys.end());
    for (const auto& m : keys) {
      const auto e = expected.count(m) ? expected.at(m) : BettiVector{};
      const auto a = actual.count(m) ? actual.at(m) : BettiVector{};
      if (e != a) {
        j["multidegree"] = m.to_string();
        j["expected"] = betti_json(e);
        j["actual"] = betti_json(a);
        break;
      }
    }
    break;
  }
  return j;
}

// ---------------------------------------------------------------- atlas check

struct AtlasCheck {
  bool ok = true;
  std::string detail;
};

AtlasCheck check_atlas_entry(const AtlasEntry& entry) {
  AtlasCheck c;
  const MonomialIdeal ideal = entry.ideal().to_monomial_ideal();
  const Monomial top = Monomial::from_mask(entry.y_m);
  if (entry.ideal().support() != entry.y_m) {
    c.ok = false;
    c.detail = "y_m differs from lcm of generators";
    return c;
  }
  for (const auto& field : verification_fields()) {
    const BettiVector row = oracle_multigraded_at(ideal, top, field);
    if (row[2] != entry.beta2 || row[3] != entry.beta3) {
      c.ok = false;
      c.detail = "characteristic " + std::to_string(field.characteristic()) + " gives beta2=" +
                 std::to_string(row[2]) + " beta3=" + std::to_string(row[3]);
      return c;
    }
  }
  return c;
}

}  // namespace

unsigned default_jobs() {
  if (const char* env = std::getenv("BETTI4_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<IdealLine> read_ideal_lines(std::istream& in) {
  std::vector<IdealLine> lines;
  std::string text;
  std::size_t n = 0;
  while (std::getline(in, text)) {
    ++n;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (is_blank_line(text)) continue;
    lines.push_back({n, text});
  }
  return lines;
}

int run_betti(std::istream& in, std::ostream& out, std::ostream& err, const BettiOptions& opts) {
  const auto lines = read_ideal_lines(in);
  const auto outcomes = parallel_map<BettiOutcome>(
      lines.size(), opts.jobs, [&](std::size_t i) { return compute_betti(lines[i].text, opts); });

  int code = kExitOk;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (opts.format == OutputFormat::Json)
      write_betti_json(out, lines[i], outcomes[i]);
    else
      write_betti_table(out, lines[i], outcomes[i]);
    if (const auto* e = std::get_if<ErrorInfo>(&outcomes[i])) {
      err << "line " << lines[i].line << ": " << e->message << '\n';
      code = std::max(code, e->input_error ? int(kExitUsage) : int(kExitMismatch));
    }
  }
  return code;
}

int run_verify(std::istream* in, std::ostream& out, std::ostream& err, const VerifyOptions& opts) {
  std::vector<VerifyCase> cases;
  if (in) {
    for (const auto& line : read_ideal_lines(*in)) {
      try {
        cases.push_back({"line " + std::to_string(line.line),
                         parse_ideal(line.text, opts.limits.max_exponent)});
      } catch (const Error& e) {
        err << "line " << line.line << ": " << e.what() << '\n';
        return kExitUsage;
      }
    }
  }
  if (opts.include_atlas)
    for (const auto& e : atlas())
      cases.push_back({"atlas #" + std::to_string(e.id), e.ideal().to_monomial_ideal()});
  if (opts.random_count > 0) {
    if (opts.random_max_generators > opts.limits.max_generators) {
      err << "random generator bound exceeds --max-gens\n";
      return kExitUsage;
    }
    std::mt19937_64 rng(opts.seed);
    const RandomIdealModel model{opts.random_max_generators, opts.random_max_exponent};
    for (std::size_t i = 0; i < opts.random_count; ++i)
      cases.push_back({"random " + std::to_string(i), model.sample(rng)});
  }
  for (const auto& c : cases)
    if (c.ideal.size() > opts.limits.max_generators) {
      err << c.label << ": " << c.ideal.size() << " generators exceed the cap "
          << opts.limits.max_generators << '\n';
      return kExitUsage;
    }

  const auto results = parallel_map<VerifyResult>(cases.size(), opts.jobs, [&](std::size_t i) {
    return verify_ideal(cases[i].ideal, opts.limits.max_generators);
  });

  std::size_t agreeing = 0;
  std::optional<std::size_t> first_failure;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].all_agree())
      ++agreeing;
    else if (!first_failure)
      first_failure = i;
  }

  if (opts.format == OutputFormat::Json) {
    Json report{{"schema", kSchemaVersion}};
    Json rows = Json::array();
    for (std::size_t i = 0; i < cases.size(); ++i) {
      Json row{{"label", cases[i].label}, {"ideal", cases[i].ideal.to_string()}};
      if (results[i].formula) row["betti"] = betti_json(results[i].formula->betti);
      Json agree = Json::object();
      for (const auto& f : results[i].fields) agree[std::to_string(f.characteristic)] = f.agree;
      row["agree"] = agree;
      rows.push_back(row);
    }
    report["results"] = rows;
    report["total"] = cases.size();
    report["agreeing"] = agreeing;
    report["all_agree"] = !first_failure;
    if (first_failure)
      report["counterexample"] = counterexample_json(cases[*first_failure].ideal, opts.limits.max_generators);
    out << report.dump(2) << '\n';
  } else {
    std::size_t width = 10;
    for (const auto& c : cases) width = std::max(width, c.label.size());
    out << std::left << std::setw(static_cast<int>(width)) << "case" << "  Q   F2  F3  F5  betti\n";
    for (std::size_t i = 0; i < cases.size(); ++i) {
      out << std::left << std::setw(static_cast<int>(width)) << cases[i].label << "  ";
      for (const auto& f : results[i].fields) out << std::setw(4) << (f.agree ? "ok" : "FAIL");
      out << std::right;
      if (results[i].formula)
        out << join_row(results[i].formula->betti, 3);
      else
        out << ' ' << results[i].formula_error->kind;
      out << '\n';
    }
    out << "summary: " << agreeing << "/" << cases.size() << " agree\n";
    if (first_failure)
      out << "counterexample: "
          << counterexample_json(cases[*first_failure].ideal, opts.limits.max_generators).dump() << '\n';
  }
  return first_failure ? kExitMismatch : kExitOk;
}

int run_experiment(std::ostream& out, std::ostream& err, const ExperimentOptions& opts) {
  const auto& cfg = opts.config;
  if (cfg.sample_count > 0 && (cfg.max_generators == 0 || cfg.max_exponent == 0)) {
    err << "experiment bounds must be positive\n";
    return kExitUsage;
  }
  if (cfg.max_generators > opts.limits.max_generators) {
    err << "--max-generators " << cfg.max_generators << " exceeds --max-gens "
        << opts.limits.max_generators << '\n';
    return kExitUsage;
  }

  std::vector<MonomialIdeal> ideals;
  for (const auto& text : opts.injected) {
    try {
      ideals.push_back(parse_ideal(text, opts.limits.max_exponent));
    } catch (const Error& e) {
      err << "injected ideal '" << text << "': " << e.what() << '\n';
      return kExitUsage;
    }
  }
  std::mt19937_64 rng(cfg.seed);
  const RandomIdealModel model{cfg.max_generators, cfg.max_exponent};
  for (std::size_t i = 0; i < cfg.sample_count; ++i) ideals.push_back(model.sample(rng));

  using Row = std::variant<BettiTable, ErrorInfo>;
  const auto rows = parallel_map<Row>(ideals.size(), opts.jobs, [&](std::size_t i) -> Row {
    try {
      return full_table(ideals[i], false, opts.limits.max_generators);
    } catch (const Error& e) {
      return describe(e);
    }
  });

  out << "seed_index,num_gens,beta2,beta3,beta4,pd,beta3_gt_beta2\n";
  std::size_t greater = 0, less = 0, equal = 0, pd4 = 0;
  int code = kExitOk;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (const auto* e = std::get_if<ErrorInfo>(&rows[i])) {
      err << "sample " << i << " (" << ideals[i].to_string() << "): " << e->message << '\n';
      code = e->input_error ? kExitUsage : kExitMismatch;
      continue;
    }
    const auto& t = std::get<BettiTable>(rows[i]);
    const bool gt = t.betti[3] > t.betti[2];
    if (gt && t.pd != 4) {
      err << "sample " << i << " has beta3 > beta2 with pd " << t.pd << '\n';
      code = kExitMismatch;
    }
    greater += gt;
    less += t.betti[3] < t.betti[2];
    equal += t.betti[3] == t.betti[2];
    pd4 += t.pd == 4;
    out << i << ',' << ideals[i].size() << ',' << t.betti[2] << ',' << t.betti[3] << ','
        << t.betti[4] << ',' << t.pd << ',' << (gt ? "true" : "false") << '\n';
  }
  out << "# samples=" << ideals.size() << " beta3_gt_beta2=" << greater << " beta2_gt_beta3=" << less
      << " equal=" << equal << " pd4=" << pd4 << " seed=" << cfg.seed << '\n';
  return code;
}

int run_atlas(std::ostream& out, std::ostream& err, const AtlasOptions& opts) {
  std::vector<AtlasCheck> checks;
  if (opts.check)
    for (const auto& e : atlas()) checks.push_back(check_atlas_entry(e));
  const bool all_ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });

  if (opts.format == OutputFormat::Json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < atlas().size(); ++i) {
      const auto& e = atlas()[i];
      Json gens = Json::array();
      for (const auto m : e.gens) gens.push_back(to_bitstring(m));
      Json row{{"id", e.id}, {"generators", gens}, {"y_m", to_bitstring(e.y_m)},
               {"beta2", e.beta2}, {"beta3", e.beta3}};
      if (opts.check) row["check"] = checks[i].ok;
      arr.push_back(row);
    }
    out << arr.dump(2) << '\n';
  } else {
    out << " id  generators                          y_m   beta2 beta3";
    if (opts.check) out << "  check";
    out << '\n';
    for (std::size_t i = 0; i < atlas().size(); ++i) {
      const auto& e = atlas()[i];
      out << std::setw(3) << e.id << "  " << std::left << std::setw(36) << e.ideal().to_string()
          << std::setw(6) << to_bitstring(e.y_m) << std::right << std::setw(5) << e.beta2
          << std::setw(6) << e.beta3;
      if (opts.check) out << "  " << (checks[i].ok ? "ok" : "FAIL " + checks[i].detail);
      out << '\n';
    }
  }
  if (opts.check) {
    for (std::size_t i = 0; i < checks.size(); ++i)
      if (!checks[i].ok) err << "atlas #" << atlas()[i].id << ": " << checks[i].detail << '\n';
    if (!all_ok) return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace betti4::cli
