#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "multicomp/cluster.hpp"
#include "multicomp/core.hpp"
#include "multicomp/counting.hpp"
#include "multicomp/errors.hpp"
#include "multicomp/restricted.hpp"
#include "multicomp/sequences.hpp"
#include "multicomp/series.hpp"
#include "multicomp/verify.hpp"

namespace multicomp::cli {

namespace {

// Enumeration jobs larger than this are refused.
constexpr long long kMaxEnumeration = 50'000'000;
constexpr int kMaxEnumerationTerms = 12;
constexpr int kMaxClusterN = 6;

enum class Format { text, csv, json };

Format format_from_name(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return Format::text;
}

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

template <typename T, typename Emit>
std::string json_array(const std::vector<T>& items, Emit emit) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += emit(items[i]);
  }
  return out + "]";
}

std::string to_json(const ColoredComposition& c) {
  return "{\"k\":" + std::to_string(c.k()) + ",\"form\":\"colored\",\"parts\":" +
         json_array(c.parts(), [](const Part& p) {
           return "[" + std::to_string(p.value) + "," + std::to_string(p.color) + "]";
         }) +
         "}";
}

std::string to_json(const ZeroComposition& z) {
  return "{\"k\":" + std::to_string(z.k()) + ",\"form\":\"zeros\",\"terms\":" +
         json_array(z.terms(), [](int t) { return std::to_string(t); }) + "}";
}

std::string to_json(const MarkerSequence& m) {
  return "{\"k\":" + std::to_string(m.k()) + ",\"form\":\"markers\",\"n\":" + std::to_string(m.n()) +
         ",\"markers\":" + json_array(m.markers(), [](const Marker& marker) {
           return quote(marker.is_join() ? std::string("J") : "S" + std::to_string(marker.color()));
         }) +
         "}";
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------

struct EnumerateOptions {
  int k = 0;
  int n = 0;
  std::string form = "colored";
  std::string restrict = "none";
  std::string format = "text";
};

int cmd_enumerate(const EnumerateOptions& o, std::ostream& out) {
  const Form form = form_from_name(o.form);
  const Restriction restriction = restriction_from_name(o.restrict);
  if (o.k < 1 || o.n < 1) throw UsageError("--k and --n must be >= 1");
  if (count_total(o.k, o.n) > kMaxEnumeration)
    throw UsageError("refusing to enumerate " + to_string(count_total(o.k, o.n)) + " compositions (limit " +
                     std::to_string(kMaxEnumeration) + ")");
  const Format format = format_from_name(o.format);

  if (format == Format::csv) out << "colored,zeros,markers\n";
  if (format == Format::json) out << "[";
  bool first = true;
  auto stream = enumerate_restricted(o.k, o.n, restriction);
  while (auto c = stream.next()) {
    switch (format) {
      case Format::text:
        out << render(form == Form::colored  ? AnyComposition(*c)
                      : form == Form::zeros  ? AnyComposition(to_zero_form(*c))
                                             : AnyComposition(to_markers(*c)))
            << '\n';
        break;
      case Format::csv:
        out << csv_field(render(*c)) << ',' << csv_field(render(to_zero_form(*c))) << ','
            << csv_field(render(to_markers(*c))) << '\n';
        break;
      case Format::json:
        out << (first ? "\n" : ",\n");
        out << (form == Form::colored ? to_json(*c)
                : form == Form::zeros ? to_json(to_zero_form(*c))
                                      : to_json(to_markers(*c)));
        break;
    }
    first = false;
  }
  if (format == Format::json) out << "\n]\n";
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct TriangleOptions {
  int k = 0;
  std::string stat = "all";
  int rows = 0;
  std::string format = "text";
};

int cmd_triangle(const TriangleOptions& o, std::ostream& out) {
  if (o.k < 1 || o.rows < 1) throw UsageError("--k and --rows must be >= 1");
  const Triangle t = triangle(o.k, statistic_from_name(o.stat), o.rows);
  switch (format_from_name(o.format)) {
    case Format::text:
      out << triangle_text(t);
      break;
    case Format::csv:
      out << triangle_csv(t);
      break;
    case Format::json:
      out << triangle_json(t) << '\n';
      break;
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct SequenceOptions {
  std::string name;
  int k = 0;
  int terms = 0;
  std::string via = "recurrence";
  std::string format = "text";
};

BigInt count_enumerated(int k, int n, Restriction r) {
  BigInt count = 0;
  auto stream = enumerate_restricted(k, n, r);
  while (stream.next()) ++count;
  return count;
}

// Anti-diagonal of the zeros statistic, counted on the compositions themselves.
BigInt pell_by_enumeration(int k, int n) {
  BigInt count = 0;
  for (int i = 0; i <= n - 1; ++i) {
    CompositionStream stream(k, n - i);
    while (auto c = stream.next())
      if (zero_count(*c) == i) ++count;
  }
  return count;
}

std::vector<BigInt> pell_gf(int k, std::size_t order) {
  std::vector<BigInt> den(static_cast<std::size_t>(k) + 1, BigInt(-1));
  den[0] = 1;
  den[1] = -2;
  return expand_rational({0, 1}, den, order).integer_coefficients();
}

int cmd_sequence(const SequenceOptions& o, std::ostream& out) {
  if (o.k < 1 || o.terms < 1) throw UsageError("--k and --terms must be >= 1");
  if (o.via == "enumeration" && o.terms > kMaxEnumerationTerms)
    throw UsageError("--via enumeration is limited to --terms <= " + std::to_string(kMaxEnumerationTerms));
  if (o.name == "pell" && o.k < 2) throw UsageError("pell needs --k >= 2");

  const std::map<std::string, std::pair<Restriction, Family>> families{
      {"total", {Restriction::none, Family::total}},
      {"c12", {Restriction::one_two, Family::one_two}},
      {"codd", {Restriction::odd, Family::odd}},
      {"cnoones", {Restriction::no_ones, Family::no_ones}},
  };

  // Restricted families are indexed from n = 1, jacobsthal and pell from n = 0.
  const bool from_zero = o.name == "jacobsthal" || o.name == "pell";
  const auto order = static_cast<std::size_t>(o.terms) + 1;
  std::vector<BigInt> values;
  std::vector<BigInt> series;
  if (o.via == "gf") {
    if (o.name == "jacobsthal")
      series = expand_rational({0, 1}, {1, -1, -o.k}, order).integer_coefficients();
    else if (o.name == "pell")
      series = pell_gf(o.k, order);
    else
      series = gf_coefficients(families.at(o.name).second, o.k, order).integer_coefficients();
  }
  for (int t = 0; t < o.terms; ++t) {
    const int n = from_zero ? t : t + 1;
    if (o.via == "gf") {
      values.push_back(series[static_cast<std::size_t>(n)]);
    } else if (o.name == "jacobsthal") {
      values.push_back(o.via == "recurrence" ? jacobsthal_k(o.k, n)
                                             : count_enumerated(o.k, n + 1, Restriction::no_ones));
    } else if (o.name == "pell") {
      values.push_back(o.via == "recurrence" ? pell_k(o.k, n) : pell_by_enumeration(o.k, n));
    } else {
      const Restriction r = families.at(o.name).first;
      values.push_back(o.via == "recurrence" ? count_restricted(o.k, n, r) : count_enumerated(o.k, n, r));
    }
  }

  switch (format_from_name(o.format)) {
    case Format::text:
      for (const BigInt& v : values) out << to_string(v) << '\n';
      break;
    case Format::csv:
      out << "n,value\n";
      for (int t = 0; t < o.terms; ++t)
        out << (from_zero ? t : t + 1) << ',' << to_string(values[static_cast<std::size_t>(t)]) << '\n';
      break;
    case Format::json:
      out << json_array(values, [](const BigInt& v) { return to_string(v); }) << '\n';
      break;
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string suite = "all";
  Bounds bounds;
  std::string format = "text";
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  if (o.bounds.max_n < 1 || o.bounds.max_k < 1) throw UsageError("--max-n and --max-k must be >= 1");
  const Report report = run_suite(suite_from_name(o.suite), o.bounds);
  switch (format_from_name(o.format)) {
    case Format::text:
      out << "suite " << report.suite << " (max-n " << o.bounds.max_n << ", max-k " << o.bounds.max_k << ")\n";
      for (const CheckResult& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.passed) out << ": counterexample " << c.detail;
        out << '\n';
      }
      for (const std::string& note : report.notes) out << "note: " << note << '\n';
      out << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
      break;
    case Format::csv:
      out << "check,status,detail\n";
      for (const CheckResult& c : report.checks)
        out << csv_field(c.name) << ',' << (c.passed ? "pass" : "fail") << ',' << csv_field(c.detail) << '\n';
      break;
    case Format::json: {
      nlohmann::json doc;
      doc["suite"] = report.suite;
      doc["max_n"] = o.bounds.max_n;
      doc["max_k"] = o.bounds.max_k;
      doc["checks"] = nlohmann::json::array();
      for (const CheckResult& c : report.checks)
        doc["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      doc["notes"] = report.notes;
      doc["passed"] = report.passed();
      out << doc.dump() << '\n';
      break;
    }
  }
  return report.passed() ? kSuccess : kVerificationFailed;
}

// ---------------------------------------------------------------------------

struct ClusterOptions {
  int g = 0;
  int n = 0;
  int q = 0;
  std::string emit = "coefficients";
  std::string format = "text";
};

std::string identity_json(const IdentitySum& s) {
  return "{\"lhs\":" + quote(to_string(s.lhs)) + ",\"rhs\":" + quote(to_string(s.rhs)) + "}";
}

int cmd_cluster(const ClusterOptions& o, std::ostream& out) {
  if (o.g < 2) throw UsageError("--g must be >= 2");
  if (o.n < 1) throw UsageError("--n must be >= 1");
  if (power(BigInt(o.g), static_cast<unsigned>(o.n - 1)) > kMaxEnumeration)
    throw UsageError("too many g-compositions to list");
  const Format format = format_from_name(o.format);
  const std::string head = "{\"g\":" + std::to_string(o.g) + ",\"n\":" + std::to_string(o.n);

  if (o.emit == "b") {
    if (o.n > kMaxClusterN) throw UsageError("--emit b is limited to --n <= " + std::to_string(kMaxClusterN));
    const int q = o.q > 0 ? o.q : o.g * o.n + 2;
    const StatePolynomial b = cluster_coefficients(o.g, o.n, q).back();
    switch (format) {
      case Format::text:
        out << render(b);
        break;
      case Format::csv:
        out << "monomial,value\n";
        for (const auto& [m, c] : b.terms()) out << render(m) << ',' << to_string(c) << '\n';
        break;
      case Format::json: {
        std::string terms;
        for (const auto& [m, c] : b.terms()) {
          if (!terms.empty()) terms += ',';
          terms += "{\"monomial\":" + quote(render(m)) + ",\"value\":" + quote(to_string(c)) + "}";
        }
        out << head << ",\"q\":" << q << ",\"terms\":[" << terms << "]}\n";
        break;
      }
    }
    return kSuccess;
  }

  const IdentitySum sum = identity_sum(o.g, o.n);
  if (o.emit == "identity") {
    switch (format) {
      case Format::text:
        out << "lhs " << to_string(sum.lhs) << "\nrhs " << to_string(sum.rhs) << '\n';
        break;
      case Format::csv:
        out << "lhs,rhs\n" << to_string(sum.lhs) << ',' << to_string(sum.rhs) << '\n';
        break;
      case Format::json:
        out << head << ",\"identity\":" << identity_json(sum) << "}\n";
        break;
    }
    return kSuccess;
  }

  const std::vector<GComposition> compositions = g_compositions(o.g, o.n);
  switch (format) {
    case Format::text:
      for (const GComposition& l : compositions)
        out << render(to_zero_composition(l)) << ' ' << to_string(closed_form_cg(l)) << '\n';
      break;
    case Format::csv:
      out << "composition,value\n";
      for (const GComposition& l : compositions)
        out << render(to_zero_composition(l)) << ',' << to_string(closed_form_cg(l)) << '\n';
      break;
    case Format::json:
      out << head << ",\"coefficients\":" << json_array(compositions, [](const GComposition& l) {
        return "{\"composition\":" + json_array(l.parts(), [](int p) { return std::to_string(p); }) +
               ",\"value\":" + quote(to_string(closed_form_cg(l))) + "}";
      }) << ",\"identity\":" << identity_json(sum) << "}\n";
      break;
  }
  return kSuccess;
}

void add_format(CLI::App* app, std::string& format) {
  app->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate, count and verify multicompositions", "multicomp"};
  app.require_subcommand(1);

  EnumerateOptions enumerate_opts;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the k-compositions of n");
  enumerate_cmd->add_option("--k", enumerate_opts.k, "Number of colors")->required();
  enumerate_cmd->add_option("--n", enumerate_opts.n, "Sum")->required();
  enumerate_cmd->add_option("--form", enumerate_opts.form, "Representation")
      ->check(CLI::IsMember({"colored", "zeros", "markers"}));
  enumerate_cmd->add_option("--restrict", enumerate_opts.restrict, "Part restriction")
      ->check(CLI::IsMember({"none", "one-two", "odd", "no-ones"}));
  add_format(enumerate_cmd, enumerate_opts.format);

  TriangleOptions triangle_opts;
  auto* triangle_cmd = app.add_subcommand("triangle", "Counting triangle for one statistic");
  triangle_cmd->add_option("--k", triangle_opts.k, "Number of colors")->required();
  triangle_cmd->add_option("--stat", triangle_opts.stat, "Statistic")
      ->check(CLI::IsMember({"all", "positive", "zeros"}));
  triangle_cmd->add_option("--rows", triangle_opts.rows, "Number of rows")->required();
  add_format(triangle_cmd, triangle_opts.format);

  SequenceOptions sequence_opts;
  auto* sequence_cmd = app.add_subcommand("sequence", "Initial terms of a counting sequence");
  sequence_cmd->add_option("--name", sequence_opts.name, "Sequence")
      ->required()
      ->check(CLI::IsMember({"total", "c12", "codd", "cnoones", "jacobsthal", "pell"}));
  sequence_cmd->add_option("--k", sequence_opts.k, "Number of colors")->required();
  sequence_cmd->add_option("--terms", sequence_opts.terms, "Number of terms")->required();
  sequence_cmd->add_option("--via", sequence_opts.via, "Computation route")
      ->check(CLI::IsMember({"recurrence", "gf", "enumeration"}));
  add_format(sequence_cmd, sequence_opts.format);

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites");
  verify_cmd->add_option("--suite", verify_opts.suite, "Suite")
      ->check(CLI::IsMember({"core", "triangles", "diagonals", "cluster", "all"}));
  verify_cmd->add_option("--max-n", verify_opts.bounds.max_n, "Largest n checked");
  verify_cmd->add_option("--max-k", verify_opts.bounds.max_k, "Largest k checked");
  add_format(verify_cmd, verify_opts.format);

  ClusterOptions cluster_opts;
  auto* cluster_cmd = app.add_subcommand("cluster", "Cluster coefficients under g-exclusion");
  cluster_cmd->add_option("--g", cluster_opts.g, "Exclusion order")->required();
  cluster_cmd->add_option("--n", cluster_opts.n, "Particle number")->required();
  cluster_cmd->add_option("--q", cluster_opts.q, "Number of states (default gn+2)");
  cluster_cmd->add_option("--emit", cluster_opts.emit, "What to print")
      ->check(CLI::IsMember({"coefficients", "identity", "b"}));
  add_format(cluster_cmd, cluster_opts.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*enumerate_cmd) return cmd_enumerate(enumerate_opts, out);
    if (*triangle_cmd) return cmd_triangle(triangle_opts, out);
    if (*sequence_cmd) return cmd_sequence(sequence_opts, out);
    if (*verify_cmd) return cmd_verify(verify_opts, out);
    if (*cluster_cmd) return cmd_cluster(cluster_opts, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace multicomp::cli
